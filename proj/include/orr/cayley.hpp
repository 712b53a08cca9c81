#pragma once

// Cayley digraphs of out-valency 2: construction from a group enumeration
// and a 2-element connection set, structural predicates, short path/cycle
// enumeration, and deterministic DOT / edge-list export.
//
// Vertex 0 is always the identity. The out-neighbours of the vertex holding
// element u are x.u and y.u (left multiplication), so a path labelled
// x then y from the identity ends at the element yx.

#include <array>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "orr/perm_group.hpp"
#include "orr/permutation.hpp"

namespace orr {

struct ConnectionSet {
    Permutation x;
    Permutation y;

    ConnectionSet(Permutation x_, Permutation y_) : x(std::move(x_)), y(std::move(y_)) {
        if (x.degree() != y.degree())
            throw std::invalid_argument("ConnectionSet: degree mismatch");
        if (x == y) throw std::invalid_argument("ConnectionSet: x and y must differ");
        if (x.is_identity() || y.is_identity())
            throw std::invalid_argument("ConnectionSet: identity is not allowed");
    }
};

// Plain digraph view used by the automorphism machinery; adjacency lists
// are kept sorted so arc queries are binary searches.
struct Digraph {
    int n = 0;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;

    bool has_arc(int u, int v) const {
        return std::binary_search(out[u].begin(), out[u].end(), v);
    }
};

class CayleyDigraph {
public:
    CayleyDigraph(std::shared_ptr<const GroupElements> elements, ConnectionSet s)
        : elements_(std::move(elements)), s_(std::move(s)) {
        const int n = static_cast<int>(elements_->size());
        const int xi = elements_->index(s_.x);
        const int yi = elements_->index(s_.y);
        if (xi < 0 || yi < 0)
            throw std::invalid_argument("build_cayley: connection set element not in the group");
        x_succ_.resize(n);
        y_succ_.resize(n);
        view_.n = n;
        view_.out.assign(n, {});
        view_.in.assign(n, {});
        for (int u = 0; u < n; ++u) {
            int xv = elements_->index(mul(s_.x, (*elements_)[u]));
            int yv = elements_->index(mul(s_.y, (*elements_)[u]));
            x_succ_[u] = xv;
            y_succ_[u] = yv;
            view_.out[u] = {xv, yv};
            if (view_.out[u][0] > view_.out[u][1]) std::swap(view_.out[u][0], view_.out[u][1]);
            view_.in[xv].push_back(u);
            view_.in[yv].push_back(u);
        }
        for (auto& lst : view_.in) std::sort(lst.begin(), lst.end());
    }

    int vertex_count() const { return view_.n; }
    int x_successor(int u) const { return x_succ_[u]; }
    int y_successor(int u) const { return y_succ_[u]; }
    const ConnectionSet& connection_set() const { return s_; }
    const GroupElements& elements() const { return *elements_; }
    const Digraph& view() const { return view_; }

private:
    std::shared_ptr<const GroupElements> elements_;
    ConnectionSet s_;
    std::vector<int> x_succ_, y_succ_;
    Digraph view_;
};

inline CayleyDigraph build_cayley(std::shared_ptr<const GroupElements> elements,
                                  ConnectionSet s) {
    return CayleyDigraph(std::move(elements), std::move(s));
}

// S cap S^{-1} empty; equivalent to the digraph having no reciprocal arcs.
inline bool is_proper(const ConnectionSet& s) {
    const Permutation xi = s.x.inverse();
    const Permutation yi = s.y.inverse();
    return s.x != xi && s.x != yi && s.y != xi && s.y != yi;
}

inline bool is_strongly_connected(const CayleyDigraph& g) {
    const Digraph& d = g.view();
    auto reaches_all = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(d.n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == d.n;
    };
    return reaches_all(d.out) && reaches_all(d.in);
}

// ----- Paths and cycles ---------------------------------------------------

struct PathEntry {
    std::string word;  // product notation, later steps on the left: "yxx" = yx^2
    int endpoint;
};

// All 2^len directed paths of length len starting at v, x-branch before
// y-branch at each step (so the words run x^len, yx^(len-1), ..., y^len).
inline std::vector<PathEntry> enumerate_paths(const CayleyDigraph& g, int v, int len) {
    if (len < 1 || len > 4) throw std::invalid_argument("enumerate_paths: len must be in [1,4]");
    std::vector<PathEntry> out;
    out.reserve(1u << len);
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
        int u = v;
        std::string word;
        for (int i = 0; i < len; ++i) {
            bool take_y = (bits >> (len - 1 - i)) & 1u;
            u = take_y ? g.y_successor(u) : g.x_successor(u);
            word.insert(word.begin(), take_y ? 'y' : 'x');
        }
        out.push_back(PathEntry{std::move(word), u});
    }
    return out;
}

// All directed cycles of length k (3 or 4) through v: closed walks with
// pairwise distinct vertices, returned as rooted vertex sequences starting
// at v, in the same deterministic branch order as enumerate_paths.
inline std::vector<std::vector<int>> directed_cycles_through(const CayleyDigraph& g, int v,
                                                             int k) {
    if (k != 3 && k != 4) throw std::invalid_argument("directed_cycles_through: k must be 3 or 4");
    std::vector<std::vector<int>> cycles;
    for (unsigned bits = 0; bits < (1u << k); ++bits) {
        std::vector<int> walk{v};
        int u = v;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            bool take_y = (bits >> (k - 1 - i)) & 1u;
            u = take_y ? g.y_successor(u) : g.x_successor(u);
            if (i + 1 < k) {
                for (int w : walk)
                    if (w == u) {
                        ok = false;
                        break;
                    }
                walk.push_back(u);
            }
        }
        if (ok && u == v) cycles.push_back(std::move(walk));
    }
    return cycles;
}

// ----- Export -------------------------------------------------------------

inline std::string export_edgelist(const CayleyDigraph& g) {
    std::ostringstream out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        out << u << ' ' << g.x_successor(u) << '\n';
        out << u << ' ' << g.y_successor(u) << '\n';
    }
    return out.str();
}

inline std::string export_dot(const CayleyDigraph& g) {
    std::ostringstream out;
    out << "digraph cayley {\n";
    for (int u = 0; u < g.vertex_count(); ++u) out << "  " << u << ";\n";
    for (int u = 0; u < g.vertex_count(); ++u) {
        out << "  " << u << " -> " << g.x_successor(u) << ";\n";
        out << "  " << u << " -> " << g.y_successor(u) << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace orr
