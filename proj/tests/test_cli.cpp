#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Subprocess smoke tests for the command-line tool. ORR_TOOL_PATH is
// injected by the build so the tests always exercise the freshly built
// binary.

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

int run_tool(const std::string& args) {
    std::string cmd = std::string(ORR_TOOL_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string tmp_path(const char* name) {
    return std::string("cli_test_") + name + ".txt";
}

}  // namespace

TEST_CASE("find: ORR success exits 0 and writes a certificate") {
    auto out = tmp_path("find");
    CHECK(run_tool("find --group cyclic:7 --out " + out) == 0);
    auto text = slurp(out);
    CHECK(text.find("format_version: 1\n") == 0);
    CHECK(text.find("group: Z7\n") != std::string::npos);
    CHECK(text.find("strategy: PrimeCyclic\n") != std::string::npos);
    CHECK(text.find("verdict: ORR\n") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("find: alternating group via the order-3 route") {
    auto out = tmp_path("find_a5");
    CHECK(run_tool("find --group alt:5 --out " + out) == 0);
    auto text = slurp(out);
    CHECK(text.find("strategy: Order3Partner\n") != std::string::npos);
    CHECK(text.find("lemma: 3-cycle\n") != std::string::npos);
    CHECK(text.find("lemma_applicable: true\n") != std::string::npos);
    CHECK(text.find("verdict: ORR\n") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("verify: reports ground truth for good and degenerate sets") {
    auto out = tmp_path("verify");
    CHECK(run_tool("verify --group cyclic:7 --x 1 --y 2 --out " + out) == 0);
    CHECK(slurp(out).find("verdict: ORR\n") != std::string::npos);

    CHECK(run_tool("verify --group cyclic:6 --x 4 --y 1 --out " + out) == 0);
    auto z6 = slurp(out);
    CHECK(z6.find("verdict: neither\n") != std::string::npos);
    CHECK(z6.find("lemma_exception_clause: true\n") != std::string::npos);
    CHECK(z6.find("stabilizer_order: 4\n") != std::string::npos);
    CHECK(z6.find("stabilizer_witness: ") != std::string::npos);

    // outside the 4-cycle lemma hypotheses, yet rigid and proper
    CHECK(run_tool("verify --group cyclic:12 --x 9 --y 1 --out " + out) == 0);
    auto z12 = slurp(out);
    CHECK(z12.find("verdict: ORR\n") != std::string::npos);
    CHECK(z12.find("lemma_exception_clause: true\n") != std::string::npos);
    CHECK(z12.find("stabilizer_order: 1\n") != std::string::npos);

    CHECK(run_tool("verify --group alt:5 --x \"(0 1)(2 3)\" --y \"(0 2 4)\" --out " + out) == 0);
    CHECK(slurp(out).find("verdict: DRR-only\n") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("suzuki-report with census") {
    auto out = tmp_path("szreport");
    CHECK(run_tool("suzuki-report --q 8 --census --out " + out) == 0);
    auto text = slurp(out);
    CHECK(text.find("group_order: 29120\n") != std::string::npos);
    CHECK(text.find("n2: 455\n") != std::string::npos);
    CHECK(text.find("n4: 3640\n") != std::string::npos);
    CHECK(text.find("total_upper: 508\n") != std::string::npos);
    CHECK(text.find("inequality_holds: true\n") != std::string::npos);
    CHECK(text.find("census_order_2: 455\n") != std::string::npos);
    CHECK(text.find("census_order_4: 3640\n") != std::string::npos);
    CHECK(text.find("census_matches_n2: true\n") != std::string::npos);
    CHECK(text.find("census_matches_n4: true\n") != std::string::npos);

    CHECK(run_tool("suzuki-report --q 32 --census --out " + out) == 0);
    CHECK(slurp(out).find("census: unavailable") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("export: both formats, byte-identical across runs") {
    auto o1 = tmp_path("exp1");
    auto o2 = tmp_path("exp2");
    CHECK(run_tool("export --group cyclic:5 --x 1 --y 2 --format edgelist --out " + o1) == 0);
    CHECK(run_tool("export --group cyclic:5 --x 1 --y 2 --format edgelist --out " + o2) == 0);
    auto e1 = slurp(o1);
    CHECK(e1 == slurp(o2));
    CHECK(e1.find("0 1\n0 2\n") == 0);

    CHECK(run_tool("export --group alt:5 --x \"(0 1 2)\" --y \"(0 1 2 3 4)\" --format dot --out " +
                   o1) == 0);
    auto dot = slurp(o1);
    CHECK(dot.find("digraph cayley {") == 0);
    // 60 node lines + 120 arc lines + 2 braces
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 182);
    std::remove(o1.c_str());
    std::remove(o2.c_str());
}

TEST_CASE("exit code 2 on input errors") {
    CHECK(run_tool("find --group nosuch:5") == 2);
    CHECK(run_tool("find --group cyclic:6") == 2);            // not prime >= 5
    CHECK(run_tool("verify --group cyclic:7 --x 0 --y 2") == 2);
    CHECK(run_tool("verify --group cyclic:7 --x 3 --y 3") == 2);
    CHECK(run_tool("verify --group alt:5 --x \"(0 1)\" --y \"(0 1 2)\"") == 2);  // odd perm
    CHECK(run_tool("export --group cyclic:5 --x 1 --y 2 --format png") == 2);
    CHECK(run_tool("bogus-subcommand") == 2);
    CHECK(run_tool("") == 2);  // a subcommand is required
}

TEST_CASE("exit code 3 on resource limits") {
    CHECK(run_tool("find --group suzuki:32") == 3);  // enumeration over the limit
    // the Z6 degenerate digraph needs branching, so one search node is not enough
    CHECK(run_tool("--effort 1 verify --group cyclic:6 --x 4 --y 1") == 3);
    CHECK(run_tool("--enum-limit 10 find --group cyclic:13") == 3);
}

TEST_CASE("corpus subset runs are clean") {
    CHECK(run_tool("corpus --only cyclic:5") == 0);
    CHECK(run_tool("corpus --only alt:5") == 0);
    CHECK(run_tool("corpus --only psl2:7") == 0);
}
