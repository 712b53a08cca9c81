#pragma once

// Permutations on {0, ..., degree-1} stored as image arrays.
//
// Composition convention: compose(p, q) applies p first, i.e. the result
// maps i to q(p(i)).  The group product mul(a, b) is the same operation,
// so a word like "yx" (step x, then step y) is mul(y, x).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace orr {

class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<char> seen(images_.size(), 0);
        for (int v : images_) {
            if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
                throw std::invalid_argument("Permutation: image array is not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int degree) {
        std::vector<int> img(degree);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    // Disjoint cycles of 0-based points, e.g. "(0 1 2)(3 4)". Fixed points
    // may be omitted. An empty string denotes the identity.
    static Permutation from_cycles(int degree, const std::string& text);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    // Smallest moved point, or -1 for the identity.
    int first_moved() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[i] != i) return i;
        return -1;
    }

    Permutation inverse() const {
        std::vector<int> img(images_.size());
        for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
        return Permutation(std::move(img));
    }

    std::string cycle_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// compose(p, q): i -> q(p(i)), p applied first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[i] = q(p(i));
    return Permutation(std::move(img));
}

// Group product a.b (same as compose; kept as a separate name so group
// equations read like the algebra they implement).
inline Permutation mul(const Permutation& a, const Permutation& b) { return compose(a, b); }

inline Permutation power(const Permutation& p, long e) {
    if (e < 0) return power(p.inverse(), -e);
    Permutation acc = Permutation::identity(p.degree());
    Permutation base = p;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

// Least k >= 1 with p^k = identity; lcm of the cycle lengths.
inline long order_of(const Permutation& p) {
    std::vector<char> seen(p.degree(), 0);
    long ord = 1;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

inline Permutation Permutation::from_cycles(int degree, const std::string& text) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("from_cycles: expected '(' in \"" + text + "\"");
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (pos >= text.size())
                throw std::invalid_argument("from_cycles: unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            if (end == pos)
                throw std::invalid_argument("from_cycles: expected point number");
            int pt = std::stoi(text.substr(pos, end - pos));
            if (pt < 0 || pt >= degree)
                throw std::invalid_argument("from_cycles: point out of range");
            cyc.push_back(pt);
            pos = end;
            skip_ws();
            if (pos < text.size() && text[pos] == ',') ++pos;  // commas tolerated
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (img[from] != from)
                throw std::invalid_argument("from_cycles: cycles are not disjoint");
            img[from] = to;
        }
        skip_ws();
    }
    return Permutation(std::move(img));
}

inline std::string Permutation::cycle_string() const {
    std::ostringstream out;
    std::vector<char> seen(images_.size(), 0);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        any = true;
        out << '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out << ' ';
            out << j;
            first = false;
            j = images_[j];
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : p.images()) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace orr
