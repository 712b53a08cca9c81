#pragma once

// Built-in group families (cyclic, alternating, PSL(2,q), Sz(q), explicit
// permutation groups), group spec parsing, and the find_orr dispatcher
// implementing the three constructive cases of the ORR search.

#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>

#include "orr/gf2m.hpp"
#include "orr/orr_search.hpp"
#include "orr/perm_group.hpp"
#include "orr/suzuki.hpp"

namespace orr {

// ----- Specs --------------------------------------------------------------

struct GroupSpec {
    enum class Kind { Cyclic, Alternating, Psl2, Suzuki, Explicit };
    Kind kind = Kind::Cyclic;
    long parameter = 0;  // p / n / q / q / degree
    std::vector<std::string> generator_texts;  // Explicit only, cycle notation

    // "cyclic:7", "alt:5", "psl2:8", "suzuki:8", "perm:5:(0 1 2);(0 1 2 3 4)"
    static GroupSpec parse(const std::string& text);
    std::string name() const;
};

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline GroupSpec GroupSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("group spec: expected kind:parameter in \"" + text + "\"");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    GroupSpec spec;
    auto parse_long = [&](const std::string& s) {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument("group spec: bad number \"" + s + "\"");
        return v;
    };
    if (kind == "cyclic") {
        spec.kind = Kind::Cyclic;
        spec.parameter = parse_long(rest);
        if (spec.parameter < 2) throw std::invalid_argument("cyclic: order must be >= 2");
    } else if (kind == "alt") {
        spec.kind = Kind::Alternating;
        spec.parameter = parse_long(rest);
        if (spec.parameter < 3) throw std::invalid_argument("alt: need n >= 3");
    } else if (kind == "psl2") {
        spec.kind = Kind::Psl2;
        spec.parameter = parse_long(rest);
        if (spec.parameter < 4) throw std::invalid_argument("psl2: need prime power q >= 4");
    } else if (kind == "suzuki") {
        spec.kind = Kind::Suzuki;
        spec.parameter = parse_long(rest);
        SuzukiParameters::from_q(static_cast<std::uint64_t>(spec.parameter));  // validates
    } else if (kind == "perm") {
        spec.kind = Kind::Explicit;
        auto colon2 = rest.find(':');
        if (colon2 == std::string::npos)
            throw std::invalid_argument("perm spec: expected perm:degree:cycles;cycles;...");
        spec.parameter = parse_long(rest.substr(0, colon2));
        std::string gens = rest.substr(colon2 + 1);
        std::size_t pos = 0;
        while (pos <= gens.size()) {
            auto semi = gens.find(';', pos);
            std::string one = gens.substr(pos, semi == std::string::npos ? semi : semi - pos);
            if (!one.empty()) spec.generator_texts.push_back(one);
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        if (spec.generator_texts.empty())
            throw std::invalid_argument("perm spec: no generators given");
    } else {
        throw std::invalid_argument("group spec: unknown kind \"" + kind + "\"");
    }
    return spec;
}

inline std::string GroupSpec::name() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Cyclic: out << "Z" << parameter; break;
        case Kind::Alternating: out << "A" << parameter; break;
        case Kind::Psl2: out << "PSL(2," << parameter << ")"; break;
        case Kind::Suzuki: out << "Sz(" << parameter << ")"; break;
        case Kind::Explicit: out << "perm(" << parameter << ")"; break;
    }
    return out.str();
}

// ----- Constructions ------------------------------------------------------

// Regular representation of Z_n: the residue k is rotation by k.
inline std::vector<Permutation> cyclic_generators(long n) {
    std::vector<int> img(n);
    for (long i = 0; i < n; ++i) img[i] = static_cast<int>((i + 1) % n);
    return {Permutation(std::move(img))};
}

inline std::vector<Permutation> alternating_generators(long n) {
    if (n < 3) throw std::invalid_argument("alternating_generators: need n >= 3");
    std::vector<int> three(n);
    std::iota(three.begin(), three.end(), 0);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    std::vector<int> big(n);
    std::iota(big.begin(), big.end(), 0);
    if (n % 2 == 1) {
        for (long i = 0; i < n; ++i) big[i] = static_cast<int>((i + 1) % n);
    } else {
        big[0] = 0;
        for (long i = 1; i < n; ++i) big[i] = static_cast<int>(i % (n - 1) + 1);
    }
    return {Permutation(std::move(three)), Permutation(std::move(big))};
}

// PSL(2,q) acting on the projective line (q+1 points, infinity last).
// Supported fields: prime q >= 5, and q = 2^m for odd m (the GF(2^m) table).
inline std::vector<Permutation> psl2_generators(long q) {
    const int inf = static_cast<int>(q);
    if (is_prime(q) && q >= 5) {
        auto mod = [&](long v) { return static_cast<int>(((v % q) + q) % q); };
        std::vector<int> t(q + 1), w(q + 1);
        for (long z = 0; z < q; ++z) t[z] = mod(z + 1);
        t[inf] = inf;
        // w: z -> -1/z
        w[0] = inf;
        w[inf] = 0;
        for (long z = 1; z < q; ++z) {
            long invz = 1;
            for (long e = q - 2, b = z; e; e >>= 1, b = (b * b) % q)
                if (e & 1) invz = (invz * b) % q;
            w[z] = mod(-invz);
        }
        return {Permutation(std::move(t)), Permutation(std::move(w))};
    }
    // even prime powers from the modulus table
    for (int m : {3, 5, 7, 9, 11, 13}) {
        if (q != (1L << m)) continue;
        BinaryField f(m);
        std::vector<int> t(q + 1), s(q + 1), w(q + 1);
        for (long z = 0; z < q; ++z) t[z] = static_cast<int>(z ^ 1);
        t[inf] = inf;
        for (long z = 0; z < q; ++z)
            s[z] = static_cast<int>(f.mul(2, static_cast<std::uint32_t>(z)));
        s[inf] = inf;
        w[0] = inf;
        w[inf] = 0;
        for (long z = 1; z < q; ++z) w[z] = static_cast<int>(f.inv(static_cast<std::uint32_t>(z)));
        return {Permutation(std::move(t)), Permutation(std::move(s)), Permutation(std::move(w))};
    }
    throw std::invalid_argument(
        "psl2_generators: supported q are primes >= 5 and 2^m with odd m in [3,13]");
}

inline unsigned long long psl2_order(long q) {
    unsigned long long uq = static_cast<unsigned long long>(q);
    return uq * (uq * uq - 1) / std::gcd(2L, q - 1);
}

// ----- Realized groups ----------------------------------------------------

struct RealizedGroup {
    GroupSpec spec;
    std::string name;
    PermutationGroup group;
    std::shared_ptr<const GroupElements> elements;  // null when order-only
    std::optional<SuzukiParameters> suzuki;
};

struct GroupCertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline RealizedGroup realize(const GroupSpec& spec,
                             std::size_t enum_limit = kDefaultEnumerationLimit,
                             bool enumerate = true) {
    std::vector<Permutation> gens;
    unsigned long long expected_order = 0;
    std::optional<SuzukiParameters> suzuki;
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic:
            gens = cyclic_generators(spec.parameter);
            expected_order = static_cast<unsigned long long>(spec.parameter);
            break;
        case GroupSpec::Kind::Alternating: {
            gens = alternating_generators(spec.parameter);
            unsigned long long fact = 1;
            for (long i = 2; i <= spec.parameter; ++i) fact *= i;
            expected_order = fact / 2;
            break;
        }
        case GroupSpec::Kind::Psl2:
            gens = psl2_generators(spec.parameter);
            expected_order = psl2_order(spec.parameter);
            break;
        case GroupSpec::Kind::Suzuki: {
            suzuki = SuzukiParameters::from_q(static_cast<std::uint64_t>(spec.parameter));
            gens = suzuki_generators(*suzuki);
            expected_order = suzuki->group_order();
            break;
        }
        case GroupSpec::Kind::Explicit: {
            for (const auto& text : spec.generator_texts)
                gens.push_back(Permutation::from_cycles(static_cast<int>(spec.parameter), text));
            break;
        }
    }
    PermutationGroup G = PermutationGroup::from_generators(std::move(gens));
    if (expected_order != 0 && G.order() != expected_order)
        throw GroupCertificationError(spec.name() + ": constructed order " +
                                      std::to_string(G.order()) + " != expected " +
                                      std::to_string(expected_order));
    RealizedGroup out{spec, spec.name(), std::move(G), nullptr, suzuki};
    if (enumerate)
        out.elements = std::make_shared<const GroupElements>(
            enumerate_elements(out.group, enum_limit));
    return out;
}

// ----- Strategy dispatcher ------------------------------------------------

// Case split of the main construction: prime cyclic via the scalar
// criterion, order-3 element with a partner of order >= 4, and the Suzuki
// order-4 / order-r pair. Every returned certificate is backed by the exact
// stabilizer search.
inline OrrCertificate find_orr(const RealizedGroup& G,
                               std::uint64_t effort_limit = kDefaultEffortLimit) {
    if (!G.elements)
        throw std::invalid_argument("find_orr: group was realized without enumeration");
    if (G.elements->size() < 5)
        throw std::invalid_argument("find_orr: the construction needs |G| >= 5");

    if (G.spec.kind == GroupSpec::Kind::Cyclic) {
        const long p = G.spec.parameter;
        if (!is_prime(p) || p < 5)
            throw std::invalid_argument("find_orr: cyclic groups must have prime order >= 5");
        if (!zp_scalar_criterion(p, 1, 2))
            throw std::logic_error("find_orr: scalar criterion failed for S={1,2}");
        const Permutation& t = (*G.elements)[1];  // rotation by 1
        OrrCertificate cert = evaluate_connection_set(G.group, G.elements, t, power(t, 2),
                                                      G.name, effort_limit);
        cert.strategy = Strategy::PrimeCyclic;
        return cert;
    }

    // nonabelian route: first element of order 3, if any
    for (std::size_t i = 0; i < G.elements->size(); ++i) {
        const Permutation& x = (*G.elements)[i];
        if (order_of(x) != 3) continue;
        PartnerResult partner = find_partner_order_ge4(G.group, *G.elements, x);
        LemmaCheck check = lemma3_applicable(G.group, x, partner.partner);
        if (!check.applicable)
            throw std::logic_error("find_orr: 3-cycle lemma hypotheses failed unexpectedly");
        OrrCertificate cert = evaluate_connection_set(G.group, G.elements, x, partner.partner,
                                                      G.name, effort_limit);
        cert.strategy = Strategy::Order3Partner;
        cert.lemma = check;
        cert.search_depth = partner.search_depth;
        return cert;
    }

    if (G.suzuki) {
        SuzukiPair pair = find_suzuki_pair(G.group, *G.elements, *G.suzuki);
        LemmaCheck check = lemma4_applicable(G.group, pair.x, pair.y);
        if (!check.applicable)
            throw std::logic_error("find_orr: 4-cycle lemma hypotheses failed unexpectedly");
        OrrCertificate cert = evaluate_connection_set(G.group, G.elements, pair.x, pair.y,
                                                      G.name, effort_limit);
        cert.strategy = Strategy::SuzukiOrder4;
        cert.lemma = check;
        cert.search_depth = pair.x_depth;
        return cert;
    }

    throw std::invalid_argument(
        "find_orr: no element of order 3 and not a Suzuki descriptor; group is outside the "
        "supported families");
}

}  // namespace orr
