#pragma once

// GF(2^m) arithmetic in polynomial basis for odd m in [3, 13].
// Elements are coefficient bit-vectors packed into uint32_t; addition is
// XOR, multiplication reduces by a fixed irreducible modulus per m.

#include <cstdint>
#include <stdexcept>

namespace orr {

// Fixed irreducible moduli (low-weight, verified irreducible over GF(2)):
//   m=3:  x^3+x+1            m=5:  x^5+x^2+1
//   m=7:  x^7+x+1            m=9:  x^9+x^4+1
//   m=11: x^11+x^2+1         m=13: x^13+x^4+x^3+x+1
inline std::uint32_t gf2m_modulus(int m) {
    switch (m) {
        case 3: return 0b1011u;
        case 5: return 0b100101u;
        case 7: return 0b10000011u;
        case 9: return 0b1000010001u;
        case 11: return 0b100000000101u;
        case 13: return 0b10000000011011u;
        default:
            throw std::invalid_argument("gf2m_modulus: m must be odd and in [3, 13]");
    }
}

class BinaryField {
public:
    explicit BinaryField(int m) : m_(m), modulus_(gf2m_modulus(m)) {}

    int m() const { return m_; }
    std::uint32_t size() const { return 1u << m_; }  // q = 2^m

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0;
        const std::uint32_t high = 1u << m_;
        while (b) {
            if (b & 1u) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & high) a ^= modulus_;
        }
        return r;
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("BinaryField::inv: zero has no inverse");
        return pow(a, size() - 2);  // a^(q-2), Lagrange
    }

private:
    int m_;
    std::uint32_t modulus_;
};

inline std::uint32_t field_mul(const BinaryField& f, std::uint32_t a, std::uint32_t b) {
    return f.mul(a, b);
}
inline std::uint32_t field_inv(const BinaryField& f, std::uint32_t a) { return f.inv(a); }
inline std::uint32_t field_pow(const BinaryField& f, std::uint32_t a, std::uint64_t e) {
    return f.pow(a, e);
}

}  // namespace orr
