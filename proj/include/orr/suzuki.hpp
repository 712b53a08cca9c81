#pragma once

// The Suzuki groups Sz(q), q = 2^(2n+1) >= 8, in their natural 2-transitive
// action of degree q^2+1 on the Suzuki-Tits ovoid, plus primitive prime
// divisors and the Sylow-2 counting arithmetic used by the order-4 pair
// search.
//
// The construction is certified at build time: group order, 2-transitivity
// and (for enumerable q) the order-2/order-4 element census are all checked
// against the closed-form values before the generators are returned.

#include <cstdint>
#include <map>
#include <optional>

#include "orr/gf2m.hpp"
#include "orr/perm_group.hpp"
#include "orr/permutation.hpp"

namespace orr {

struct SuzukiParameters {
    int n;                // q = 2^(2n+1), n >= 1
    std::uint64_t q;
    std::uint64_t theta;  // twist exponent 2^(n+1); theta^2 = 2q on exponents

    static SuzukiParameters from_q(std::uint64_t q) {
        std::uint64_t v = 8;
        for (int n = 1; n <= 6; ++n, v <<= 2) {
            if (v == q) return SuzukiParameters{n, q, 1ull << (n + 1)};
        }
        throw std::invalid_argument("SuzukiParameters: q must be 2^(2n+1) >= 8");
    }

    std::uint64_t group_order() const { return q * q * (q * q + 1) * (q - 1); }
    int field_exponent() const { return 2 * n + 1; }
};

// a^theta; applying it twice equals squaring (t^(2q) = t^2 since t^q = t).
inline std::uint32_t frobenius_twist(const BinaryField& f, std::uint32_t a,
                                     const SuzukiParameters& params) {
    if (f.m() != params.field_exponent())
        throw std::invalid_argument("frobenius_twist: field exponent does not match q");
    return f.pow(a, params.theta);
}

// ----- Counting arithmetic ------------------------------------------------

struct SuzukiCountingReport {
    std::uint64_t q = 0;
    std::uint64_t group_order = 0;   // q^2 (q^2+1) (q-1)
    std::uint64_t sylow2_count = 0;  // q^2 + 1
    std::uint64_t n2 = 0;            // elements of order 2: (q^2+1)(q-1)
    std::uint64_t n4 = 0;            // elements of order 4: (q^2+1)(q^2-q)
    std::uint64_t i_upper = 0;       // |I| = n2 + 1
    std::uint64_t j_upper = 0;       // |J| <= |M| = 4(q + sqrt(2q) + 1)
    std::uint64_t total_upper = 0;   // n2 + 4(q + sqrt(2q) + 1) + 1
    bool inequality_holds = false;   // total_upper < n4
};

inline SuzukiCountingReport suzuki_counting_report(const SuzukiParameters& p) {
    SuzukiCountingReport r;
    r.q = p.q;
    r.group_order = p.group_order();
    r.sylow2_count = p.q * p.q + 1;
    r.n2 = r.sylow2_count * (p.q - 1);
    r.n4 = r.sylow2_count * (p.q * p.q - p.q);
    const std::uint64_t sqrt2q = p.theta;  // 2^(n+1), exact
    r.i_upper = r.n2 + 1;
    r.j_upper = 4 * (p.q + sqrt2q + 1);
    r.total_upper = r.n2 + r.j_upper + 1;
    r.inequality_holds = r.total_upper < r.n4;
    return r;
}

// ----- Zsigmondy primitive prime divisors ---------------------------------

// Smallest prime r with r | p^m - 1 and r not dividing p^k - 1 for k < m.
// Inputs must keep p^m - 1 inside 64 bits (p^m < 2^63).
inline std::optional<std::uint64_t> zsigmondy_ppd(std::uint64_t p, unsigned m) {
    if (p < 2 || m < 1) throw std::invalid_argument("zsigmondy_ppd: need p >= 2, m >= 1");
    std::uint64_t pm = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (pm > (1ull << 62) / p) throw std::overflow_error("zsigmondy_ppd: p^m out of range");
        pm *= p;
    }
    std::uint64_t value = pm - 1;

    // Trial-division prime factors of p^m - 1, ascending, so the first
    // primitive one is the smallest.
    std::uint64_t v = value;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d) continue;
        while (v % d == 0) v /= d;
        // primitive iff multiplicative order of p mod d is exactly m
        bool primitive = true;
        std::uint64_t pk = 1;
        for (unsigned k = 1; k < m; ++k) {
            pk = (pk * p) % d;
            if (pk == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return d;
    }
    if (v > 1) {
        std::uint64_t pk = 1;
        bool primitive = true;
        for (unsigned k = 1; k < m; ++k) {
            pk = (pk * p) % v;
            if (pk == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return v;
    }
    return std::nullopt;
}

// ----- The ovoid action ---------------------------------------------------

namespace detail {

// Vertex numbering on the ovoid: 0 is the point at infinity, the affine
// point (a, b) sits at 1 + a*q + b.
inline int ovoid_point(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return static_cast<int>(1 + a * q + b);
}

inline std::uint32_t ovoid_form(const BinaryField& f, const SuzukiParameters& p,
                                std::uint32_t a, std::uint32_t b) {
    // f(a,b) = a^(theta+2) + a b + b^theta; vanishes only at the origin
    return f.pow(a, p.theta + 2) ^ f.mul(a, b) ^ f.pow(b, p.theta);
}

}  // namespace detail

// Generators of Sz(q) of degree q^2 + 1: two ovoid translations, a torus
// element for a primitive field element, and the involution swapping the
// point at infinity with the origin.
inline std::vector<Permutation> suzuki_generator_candidates(const SuzukiParameters& p) {
    const BinaryField f(p.field_exponent());
    const std::uint32_t q = static_cast<std::uint32_t>(p.q);
    const int n_pts = static_cast<int>(p.q * p.q + 1);

    auto translation = [&](std::uint32_t alpha, std::uint32_t beta) {
        std::vector<int> img(n_pts);
        img[0] = 0;
        const std::uint32_t alpha_theta = f.pow(alpha, p.theta);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                img[detail::ovoid_point(a, b, q)] =
                    detail::ovoid_point(a ^ alpha, b ^ beta ^ f.mul(a, alpha_theta), q);
        return Permutation(std::move(img));
    };

    auto torus = [&](std::uint32_t kappa) {
        std::vector<int> img(n_pts);
        img[0] = 0;
        const std::uint32_t k1 = f.pow(kappa, p.theta + 1);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                img[detail::ovoid_point(a, b, q)] =
                    detail::ovoid_point(f.mul(kappa, a), f.mul(k1, b), q);
        return Permutation(std::move(img));
    };

    auto omega = [&] {
        std::vector<int> img(n_pts);
        img[0] = detail::ovoid_point(0, 0, q);
        img[detail::ovoid_point(0, 0, q)] = 0;
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                if (a == 0 && b == 0) continue;
                const std::uint32_t fi = f.inv(detail::ovoid_form(f, p, a, b));
                img[detail::ovoid_point(a, b, q)] =
                    detail::ovoid_point(f.mul(b, fi), f.mul(a, fi), q);
            }
        return Permutation(std::move(img));
    };

    // x (= 0b10) generates GF(2^m)^* for every modulus in the table at the
    // sizes we support; certified below along with everything else.
    return {translation(1, 0), translation(0, 1), torus(2), omega()};
}

inline constexpr std::uint64_t kSuzukiConstructionCap = 32;  // max q for construction
inline constexpr std::uint64_t kSuzukiEnumerationCap = 8;    // max q for full enumeration

struct SuzukiCertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Size of the orbit of the ordered pair (0, 1) under the group generated by
// gens; equals deg*(deg-1) exactly when the action is 2-transitive.
inline std::uint64_t ordered_pair_orbit_size(const std::vector<Permutation>& gens, int degree) {
    std::vector<char> seen(static_cast<std::size_t>(degree) * degree, 0);
    std::vector<std::pair<int, int>> stack{{0, 1}};
    seen[1] = 1;  // pair (0,1) -> index 0*degree + 1
    std::uint64_t count = 1;
    while (!stack.empty()) {
        auto [u, v] = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            int gu = g(u), gv = g(v);
            std::size_t key = static_cast<std::size_t>(gu) * degree + gv;
            if (!seen[key]) {
                seen[key] = 1;
                ++count;
                stack.emplace_back(gu, gv);
            }
        }
    }
    return count;
}

// Exact element-order histogram over a fully enumerated group.
inline std::map<long, long> element_order_census(const GroupElements& elements) {
    std::map<long, long> census;
    for (const auto& g : elements.elements) ++census[order_of(g)];
    return census;
}

// Certified generators: order, 2-transitivity and (when enumerable) the
// order-2/order-4 census are all verified before returning.
inline std::vector<Permutation> suzuki_generators(const SuzukiParameters& p) {
    if (p.q > kSuzukiConstructionCap)
        throw std::invalid_argument("suzuki_generators: q exceeds construction cap");
    auto gens = suzuki_generator_candidates(p);

    PermutationGroup G = PermutationGroup::from_generators(gens);
    if (G.order() != p.group_order())
        throw SuzukiCertificationError("Sz(q) certification: wrong group order");
    const int degree = static_cast<int>(p.q * p.q + 1);
    if (ordered_pair_orbit_size(gens, degree) !=
        static_cast<std::uint64_t>(degree) * (degree - 1))
        throw SuzukiCertificationError("Sz(q) certification: action is not 2-transitive");
    if (p.q <= kSuzukiEnumerationCap) {
        auto census = element_order_census(enumerate_elements(G));
        auto report = suzuki_counting_report(p);
        if (census[2] != static_cast<long>(report.n2) || census[4] != static_cast<long>(report.n4))
            throw SuzukiCertificationError("Sz(q) certification: order-2/order-4 census mismatch");
    }
    return gens;
}

}  // namespace orr
