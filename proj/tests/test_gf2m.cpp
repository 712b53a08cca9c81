#include <doctest.h>

#include "orr/gf2m.hpp"
#include "orr/suzuki.hpp"

using namespace orr;

TEST_CASE("GF(8): x * x^2 = x + 1 under modulus x^3+x+1") {
    BinaryField f(3);
    CHECK(f.mul(0b010, 0b100) == 0b011);
}

TEST_CASE("multiplicative identities and inverses") {
    for (int m : {3, 5}) {
        BinaryField f(m);
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(1, a) == a);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.pow(a, f.size() - 1) == 1);  // a^(q-1) = 1
            }
        }
        CHECK_THROWS_AS(f.inv(0), std::domain_error);
    }
}

TEST_CASE("field axioms hold exhaustively in GF(8) and GF(32)") {
    for (int m : {3, 5}) {
        BinaryField f(m);
        const std::uint32_t q = f.size();
        bool assoc = true, distrib = true, comm = true;
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                if (f.mul(a, b) != f.mul(b, a)) comm = false;
                for (std::uint32_t c = 0; c < q; ++c) {
                    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) assoc = false;
                    if (f.mul(a, b ^ c) != (f.mul(a, b) ^ f.mul(a, c))) distrib = false;
                }
            }
        CHECK(assoc);
        CHECK(distrib);
        CHECK(comm);
    }
}

TEST_CASE("moduli table covers exactly the supported exponents") {
    for (int m : {3, 5, 7, 9, 11, 13}) CHECK((gf2m_modulus(m) >> m) == 1u);
    for (int m : {1, 2, 4, 6, 8, 15}) CHECK_THROWS_AS(gf2m_modulus(m), std::invalid_argument);
}

TEST_CASE("frobenius twist: theta = 4 on GF(8), twist twice is squaring") {
    auto params = SuzukiParameters::from_q(8);
    BinaryField f(3);
    CHECK(frobenius_twist(f, 0, params) == 0);
    CHECK(frobenius_twist(f, 1, params) == 1);
    for (std::uint32_t a = 0; a < 8; ++a) {
        CHECK(frobenius_twist(f, a, params) == f.pow(a, 4));
        CHECK(frobenius_twist(f, frobenius_twist(f, a, params), params) == f.mul(a, a));
    }
    BinaryField f5(5);
    auto params32 = SuzukiParameters::from_q(32);
    for (std::uint32_t a = 0; a < 32; ++a)
        CHECK(frobenius_twist(f5, frobenius_twist(f5, a, params32), params32) == f5.mul(a, a));
    CHECK_THROWS_AS(frobenius_twist(f5, 1, params), std::invalid_argument);
}
