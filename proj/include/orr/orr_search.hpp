#pragma once

// The constructive ORR strategy: lemma hypothesis checks, the prime-cyclic
// scalar criterion, partner searches for order-3 and Suzuki order-4 pairs,
// the mixed involution/odd-order DRR pair, and the top-level dispatcher
// that produces a machine-checkable certificate.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include "orr/autgrp.hpp"
#include "orr/cayley.hpp"
#include "orr/perm_group.hpp"
#include "orr/permutation.hpp"
#include "orr/suzuki.hpp"

namespace orr {

// ----- Lemma hypothesis checks --------------------------------------------

struct LemmaCheck {
    int which = 3;  // 3 or 4
    bool order_x_ok = false;
    bool order_y_ok = false;
    bool order_xy_ok = true;  // only constrained by the 4-cycle lemma
    bool generation_ok = false;
    bool exception_clause = false;  // the Z6 / Z12 degenerate case
    bool applicable = false;
};

// |x|=3, |y|>=4, <x,y>=G, and not the (|y|=6, x=y^4) exception.
inline LemmaCheck lemma3_applicable(const PermutationGroup& G, const Permutation& x,
                                    const Permutation& y) {
    LemmaCheck c;
    c.which = 3;
    const long oy = order_of(y);
    c.order_x_ok = (order_of(x) == 3);
    c.order_y_ok = (oy >= 4);
    c.generation_ok = generates(G, x, y);
    c.exception_clause = (oy == 6 && x == power(y, 4));
    c.applicable = c.order_x_ok && c.order_y_ok && c.generation_ok && !c.exception_clause;
    return c;
}

// |x|=4, |y|>=5, |xy|>=3, <x,y>=G, and not the (|y|=12, x=y^9) exception.
inline LemmaCheck lemma4_applicable(const PermutationGroup& G, const Permutation& x,
                                    const Permutation& y) {
    LemmaCheck c;
    c.which = 4;
    const long oy = order_of(y);
    c.order_x_ok = (order_of(x) == 4);
    c.order_y_ok = (oy >= 5);
    c.order_xy_ok = (order_of(mul(x, y)) >= 3);
    c.generation_ok = generates(G, x, y);
    c.exception_clause = (oy == 12 && x == power(y, 9));
    c.applicable =
        c.order_x_ok && c.order_y_ok && c.order_xy_ok && c.generation_ok && !c.exception_clause;
    return c;
}

// ----- Prime cyclic case --------------------------------------------------

// True iff lambda = 1 is the only solution of {lambda x, lambda y} = {x, y}
// in F_p^*; Cay(Z_p, {x,y}) is then an ORR.
inline bool zp_scalar_criterion(long p, long x, long y) {
    if (p < 5) throw std::invalid_argument("zp_scalar_criterion: p must be a prime >= 5");
    if (x <= 0 || x >= p || y <= 0 || y >= p || x == y)
        throw std::invalid_argument("zp_scalar_criterion: need distinct nonzero residues");
    for (long lambda = 2; lambda < p; ++lambda) {
        long lx = (lambda * x) % p;
        long ly = (lambda * y) % p;
        if ((lx == x && ly == y) || (lx == y && ly == x)) return false;
    }
    return true;
}

// ----- Partner searches ---------------------------------------------------

struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PartnerResult {
    Permutation partner;
    std::size_t search_depth;  // enumeration index of the returned element
};

// First y in enumeration order with |y| >= 4 and <x, y> = G. Exists for
// every nonabelian simple G by the Guralnick-Kantor generation corollary.
inline PartnerResult find_partner_order_ge4(const PermutationGroup& G,
                                            const GroupElements& elements,
                                            const Permutation& x) {
    if (order_of(x) != 3)
        throw std::invalid_argument("find_partner_order_ge4: |x| must be 3");
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const Permutation& y = elements[i];
        if (order_of(y) < 4) continue;
        if (generates(G, x, y)) return {y, i};
    }
    throw SearchExhausted(
        "find_partner_order_ge4: no generating partner of order >= 4 "
        "(input is not a nonabelian simple group with this property)");
}

struct SuzukiPair {
    Permutation x;  // order 4
    Permutation y;  // order r, primitive prime divisor of q^4 - 1
    std::uint64_t r;
    std::size_t x_depth;
    std::size_t y_depth;
};

// The counting argument's pair for Sz(q): y is the first element of order r, x the
// first order-4 element with |xy| >= 3 generating with y.
inline SuzukiPair find_suzuki_pair(const PermutationGroup& G, const GroupElements& elements,
                                   const SuzukiParameters& params) {
    auto r = zsigmondy_ppd(2, 4u * static_cast<unsigned>(params.field_exponent()));
    if (!r) throw std::logic_error("find_suzuki_pair: q^4-1 has no primitive prime divisor");

    std::optional<std::size_t> yi;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (static_cast<std::uint64_t>(order_of(elements[i])) == *r) {
            yi = i;
            break;
        }
    if (!yi)
        throw SearchExhausted("find_suzuki_pair: no element of order r found");
    const Permutation& y = elements[*yi];

    for (std::size_t i = 0; i < elements.size(); ++i) {
        const Permutation& x = elements[i];
        if (order_of(x) != 4) continue;
        if (order_of(mul(x, y)) < 3) continue;
        if (generates(G, x, y)) return {x, y, *r, i, *yi};
    }
    throw SearchExhausted("find_suzuki_pair: exhausted (contradicts the counting argument)");
}

struct MixedPair {
    Permutation x;  // involution
    Permutation y;  // odd prime order
    std::size_t x_depth;
    std::size_t y_depth;
};

inline bool is_odd_prime(long n) {
    if (n < 3 || n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// First (involution, odd-prime-order) generating pair in enumeration order.
inline MixedPair find_drr_mixed_pair(const PermutationGroup& G, const GroupElements& elements) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const Permutation& x = elements[i];
        if (order_of(x) != 2) continue;
        for (std::size_t j = 0; j < elements.size(); ++j) {
            const Permutation& y = elements[j];
            if (!is_odd_prime(order_of(y))) continue;
            if (generates(G, x, y)) return {x, y, i, j};
        }
    }
    throw SearchExhausted(
        "find_drr_mixed_pair: exhausted (input is abelian or has no such generating pair)");
}

// ----- Certificates and the dispatcher ------------------------------------

enum class Strategy { PrimeCyclic, Order3Partner, SuzukiOrder4, Direct };

inline const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::PrimeCyclic: return "PrimeCyclic";
        case Strategy::Order3Partner: return "Order3Partner";
        case Strategy::SuzukiOrder4: return "SuzukiOrder4";
        case Strategy::Direct: return "Direct";
    }
    return "?";
}

enum class Verdict { Orr, DrrOnly, Neither };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Orr: return "ORR";
        case Verdict::DrrOnly: return "DRR-only";
        case Verdict::Neither: return "neither";
    }
    return "?";
}

struct OrrCertificate {
    std::string group_name;
    unsigned long long group_order = 0;
    Strategy strategy = Strategy::Direct;
    std::string x_text;  // connection set, printable form
    std::string y_text;
    long x_order = 0;
    long y_order = 0;
    std::optional<LemmaCheck> lemma;
    bool proper = false;
    bool generating = false;
    StabilizerTranscript stabilizer;
    unsigned long long aut_order = 0;
    std::size_t search_depth = 0;  // enumeration depth of the partner search
    Verdict verdict = Verdict::Neither;
};

// Evaluates a concrete connection set on an enumerated group; shared by the
// dispatcher and the CLI verify command.
inline OrrCertificate evaluate_connection_set(
    const PermutationGroup& G, std::shared_ptr<const GroupElements> elements,
    const Permutation& x, const Permutation& y, std::string group_name,
    std::uint64_t effort_limit = kDefaultEffortLimit) {
    OrrCertificate cert;
    cert.group_name = std::move(group_name);
    cert.group_order = G.order();
    cert.x_text = x.cycle_string();
    cert.y_text = y.cycle_string();
    cert.x_order = order_of(x);
    cert.y_order = order_of(y);

    ConnectionSet s(x, y);
    CayleyDigraph gamma = build_cayley(std::move(elements), s);
    cert.proper = is_proper(s);
    cert.generating = is_strongly_connected(gamma);
    cert.stabilizer = stabilizer_order(gamma, 0, effort_limit);
    cert.aut_order = cert.stabilizer.order * gamma.vertex_count();

    const bool drr = cert.generating && cert.stabilizer.order == 1;
    cert.verdict = !drr ? Verdict::Neither : (cert.proper ? Verdict::Orr : Verdict::DrrOnly);

    if (cert.x_order == 3) cert.lemma = lemma3_applicable(G, x, y);
    else if (cert.x_order == 4) cert.lemma = lemma4_applicable(G, x, y);
    return cert;
}

// Deterministic structured-text serialization; key order is fixed so the
// output is diffable and usable as a golden file.
inline std::string serialize_certificate(const OrrCertificate& c) {
    std::ostringstream out;
    auto yesno = [](bool b) { return b ? "true" : "false"; };
    out << "format_version: 1\n";
    out << "group: " << c.group_name << '\n';
    out << "group_order: " << c.group_order << '\n';
    out << "strategy: " << strategy_name(c.strategy) << '\n';
    out << "x: " << c.x_text << '\n';
    out << "y: " << c.y_text << '\n';
    out << "x_order: " << c.x_order << '\n';
    out << "y_order: " << c.y_order << '\n';
    out << "proper: " << yesno(c.proper) << '\n';
    out << "generating: " << yesno(c.generating) << '\n';
    if (c.lemma) {
        out << "lemma: " << (c.lemma->which == 3 ? "3-cycle" : "4-cycle") << '\n';
        out << "lemma_order_x_ok: " << yesno(c.lemma->order_x_ok) << '\n';
        out << "lemma_order_y_ok: " << yesno(c.lemma->order_y_ok) << '\n';
        if (c.lemma->which == 4)
            out << "lemma_order_xy_ok: " << yesno(c.lemma->order_xy_ok) << '\n';
        out << "lemma_generation_ok: " << yesno(c.lemma->generation_ok) << '\n';
        out << "lemma_exception_clause: " << yesno(c.lemma->exception_clause) << '\n';
        out << "lemma_applicable: " << yesno(c.lemma->applicable) << '\n';
    } else {
        out << "lemma: none\n";
    }
    out << "stabilizer_order: " << c.stabilizer.order << '\n';
    if (c.stabilizer.witness)
        out << "stabilizer_witness: " << c.stabilizer.witness->cycle_string() << '\n';
    out << "aut_order: " << c.aut_order << '\n';
    out << "search_nodes: " << c.stabilizer.stats.nodes << '\n';
    out << "search_depth: " << c.search_depth << '\n';
    out << "verdict: " << verdict_name(c.verdict) << '\n';
    return out.str();
}

}  // namespace orr
