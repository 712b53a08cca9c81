#include <doctest.h>

#include <set>

#include "orr/perm_group.hpp"

using namespace orr;

namespace {

// Independent closure oracle: multiply until no new elements appear.
std::size_t naive_closure_size(const std::vector<Permutation>& gens) {
    std::set<std::vector<int>> seen;
    std::vector<Permutation> frontier{Permutation::identity(gens.front().degree())};
    seen.insert(frontier.front().images());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                Permutation t = mul(g, s);
                if (seen.insert(t.images()).second) next.push_back(std::move(t));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

std::vector<Permutation> a5_gens() {
    return {Permutation::from_cycles(5, "(0 1 2)"), Permutation::from_cycles(5, "(0 1 2 3 4)")};
}

}  // namespace

TEST_CASE("trivial and cyclic groups") {
    auto G1 = group_from_generators({Permutation::identity(4)});
    CHECK(G1.order() == 1);
    std::vector<int> rot{1, 2, 3, 4, 0};
    auto Z5 = group_from_generators({Permutation(rot)});
    CHECK(Z5.order() == 5);
}

TEST_CASE("A5 order, membership, generation") {
    auto G = group_from_generators(a5_gens());
    CHECK(G.order() == 60);
    CHECK(G.contains(Permutation::identity(5)));
    CHECK_FALSE(G.contains(Permutation::from_cycles(5, "(0 1)")));  // odd
    CHECK(G.contains(Permutation::from_cycles(5, "(0 1)(2 3)")));
    CHECK(generates(G, a5_gens()[0], a5_gens()[1]));
    CHECK_FALSE(generates(G, a5_gens()[0], a5_gens()[0].inverse()));
}

TEST_CASE("generates is symmetric and respects <x,z> = <x,xz>") {
    auto G = group_from_generators(a5_gens());
    auto x = a5_gens()[0];
    auto z = a5_gens()[1];
    CHECK(generates(G, x, z) == generates(G, z, x));
    CHECK(generates(G, x, z) == generates(G, x, mul(x, z)));
    auto w = Permutation::from_cycles(5, "(0 1)(2 3)");
    CHECK(generates(G, x, w) == generates(G, x, mul(x, w)));
}

TEST_CASE("Schreier-Sims order matches naive closure on small groups") {
    std::vector<std::vector<Permutation>> cases = {
        a5_gens(),
        {Permutation::from_cycles(4, "(0 1 2)"), Permutation::from_cycles(4, "(1 2 3)")},  // A4
        {Permutation::from_cycles(6, "(0 1 2 3 4 5)")},                                    // Z6
        {Permutation::from_cycles(7, "(0 1)"), Permutation::from_cycles(7, "(0 1 2 3 4 5 6)")},
        {Permutation::from_cycles(8, "(0 1 2 3)(4 5 6 7)"),
         Permutation::from_cycles(8, "(0 4)(1 7)(2 6)(3 5)")},
    };
    for (const auto& gens : cases) {
        auto G = group_from_generators(gens);
        CHECK(G.order() == naive_closure_size(gens));
    }
}

TEST_CASE("enumeration is deterministic BFS from the identity") {
    auto G = group_from_generators(a5_gens());
    auto E1 = enumerate_elements(G);
    auto E2 = enumerate_elements(G);
    REQUIRE(E1.size() == 60);
    CHECK(E1[0].is_identity());
    for (std::size_t i = 0; i < E1.size(); ++i) CHECK(E1[i] == E2[i]);
    // first two non-identity entries are the generators themselves
    CHECK(E1[1] == a5_gens()[0]);
    CHECK(E1[2] == a5_gens()[1]);
    // reverse lookup
    for (int i = 0; i < 60; ++i) CHECK(E1.index(E1[i]) == i);
    CHECK(E1.index(Permutation::from_cycles(5, "(0 1)")) == -1);
}

TEST_CASE("enumeration limit is enforced") {
    auto G = group_from_generators(a5_gens());
    CHECK_THROWS_AS(enumerate_elements(G, 59), EnumerationLimitExceeded);
    CHECK(enumerate_elements(G, 60).size() == 60);
}

TEST_CASE("every generator passes contains") {
    auto gens = a5_gens();
    auto G = group_from_generators(gens);
    for (const auto& g : gens) CHECK(G.contains(g));
}

TEST_CASE("error cases") {
    CHECK_THROWS_AS(group_from_generators({}), std::invalid_argument);
    CHECK_THROWS_AS(
        group_from_generators({Permutation::identity(3), Permutation::identity(4)}),
        std::invalid_argument);
    auto G = group_from_generators(a5_gens());
    CHECK_THROWS_AS(G.contains(Permutation::identity(6)), std::invalid_argument);
    CHECK_THROWS_AS(generates(G, Permutation::from_cycles(5, "(0 1)"), a5_gens()[0]),
                    std::invalid_argument);
}
