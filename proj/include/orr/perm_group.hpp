#pragma once

// Permutation groups with exact order and membership via a deterministic
// Schreier-Sims stabilizer chain, plus full element enumeration in the
// fixed breadth-first order used for Cayley digraph vertex indexing.

#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "orr/permutation.hpp"

namespace orr {

class PermutationGroup {
public:
    static PermutationGroup from_generators(std::vector<Permutation> gens) {
        if (gens.empty())
            throw std::invalid_argument("PermutationGroup: empty generator list");
        const int deg = gens.front().degree();
        for (const auto& g : gens)
            if (g.degree() != deg)
                throw std::invalid_argument("PermutationGroup: generator degree mismatch");
        PermutationGroup G;
        G.degree_ = deg;
        G.generators_ = std::move(gens);
        G.build_chain();
        return G;
    }

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    unsigned long long order() const {
        unsigned long long ord = 1;
        for (const auto& lvl : levels_) ord *= lvl.orbit.size();
        return ord;
    }

    bool contains(const Permutation& p) const {
        if (p.degree() != degree_)
            throw std::invalid_argument("contains: degree mismatch");
        return sift(p).first.is_identity();
    }

private:
    struct Level {
        int base_point = -1;
        std::vector<Permutation> gens;          // strong generators fixing earlier base points
        std::vector<int> orbit;                 // discovery order, orbit[0] == base_point
        std::vector<std::optional<Permutation>> transversal;  // per point: rep taking base to it
    };

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Level> levels_;

    // Sift p through the chain; returns the residue and the level at which
    // it stopped (levels_.size() when it fell through every level).
    std::pair<Permutation, int> sift(Permutation p) const {
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            if (p.is_identity()) return {std::move(p), static_cast<int>(i)};
            const Level& lvl = levels_[i];
            int image = p(lvl.base_point);
            if (!lvl.transversal[image].has_value()) return {std::move(p), static_cast<int>(i)};
            p = mul(p, lvl.transversal[image]->inverse());
        }
        return {std::move(p), static_cast<int>(levels_.size())};
    }

    // Generators acting at level i: strong generators stored at level i or
    // deeper all fix the base points b_0..b_{i-1}.
    std::vector<const Permutation*> gens_at(int level) const {
        std::vector<const Permutation*> out;
        for (std::size_t j = level; j < levels_.size(); ++j)
            for (const auto& g : levels_[j].gens) out.push_back(&g);
        return out;
    }

    void recompute_orbit(int level) {
        Level& lvl = levels_[level];
        const auto gens = gens_at(level);
        lvl.orbit.clear();
        lvl.transversal.assign(degree_, std::nullopt);
        lvl.orbit.push_back(lvl.base_point);
        lvl.transversal[lvl.base_point] = Permutation::identity(degree_);
        for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
            int pt = lvl.orbit[i];
            for (const Permutation* s : gens) {
                int img = (*s)(pt);
                if (!lvl.transversal[img].has_value()) {
                    lvl.transversal[img] = mul(*lvl.transversal[pt], *s);
                    lvl.orbit.push_back(img);
                }
            }
        }
    }

    void add_strong_generator(int level, Permutation g) {
        if (level == static_cast<int>(levels_.size())) {
            Level lvl;
            lvl.base_point = g.first_moved();
            levels_.push_back(std::move(lvl));
        }
        levels_[level].gens.push_back(std::move(g));
        recompute_orbit(level);  // keep transversals usable for sifting
    }

    void build_chain() {
        levels_.clear();
        for (const auto& g : generators_) {
            if (g.is_identity()) continue;
            auto [res, lvl] = sift(g);
            if (!res.is_identity()) add_strong_generator(lvl, std::move(res));
        }
        if (levels_.empty()) return;  // trivial group

        // Verify Schreier generators level by level from the bottom of the
        // chain; a failed sift adds a strong generator and restarts there.
        int i = static_cast<int>(levels_.size()) - 1;
        while (i >= 0) {
            recompute_orbit(i);
            bool restarted = false;
            const auto level_gens = gens_at(i);
            for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !restarted; ++oi) {
                const int pt = levels_[i].orbit[oi];
                for (std::size_t gi = 0; gi < level_gens.size(); ++gi) {
                    const Level& lvl = levels_[i];
                    const Permutation& s = *level_gens[gi];
                    Permutation forward = mul(*lvl.transversal[pt], s);
                    Permutation schreier = mul(forward, lvl.transversal[s(pt)]->inverse());
                    if (schreier.is_identity()) continue;
                    // The Schreier generator fixes base points 0..i, so it
                    // must sift to identity below level i.
                    Permutation residue = std::move(schreier);
                    int drop = i + 1;
                    for (; drop < static_cast<int>(levels_.size()); ++drop) {
                        if (residue.is_identity()) break;
                        Level& low = levels_[drop];
                        int image = residue(low.base_point);
                        if (!low.transversal[image].has_value()) break;
                        residue = mul(residue, low.transversal[image]->inverse());
                    }
                    if (residue.is_identity()) continue;
                    add_strong_generator(drop, std::move(residue));
                    i = drop;
                    restarted = true;
                    break;
                }
            }
            if (!restarted) --i;
        }
    }
};

inline PermutationGroup group_from_generators(std::vector<Permutation> gens) {
    return PermutationGroup::from_generators(std::move(gens));
}

// True iff <x, y> is the whole of G. Both elements must lie in G.
inline bool generates(const PermutationGroup& G, const Permutation& x, const Permutation& y) {
    if (!G.contains(x) || !G.contains(y))
        throw std::invalid_argument("generates: element outside the group");
    return PermutationGroup::from_generators({x, y}).order() == G.order();
}

// All |G| elements in the deterministic order used for vertex indexing:
// breadth-first from the identity, left-multiplying by the generators in
// their given order.
struct GroupElements {
    std::vector<Permutation> elements;  // elements[0] is the identity
    std::unordered_map<Permutation, int, PermutationHash> index_of;

    std::size_t size() const { return elements.size(); }
    const Permutation& operator[](std::size_t i) const { return elements[i]; }

    // Index of p, or -1 when p is not in the group.
    int index(const Permutation& p) const {
        auto it = index_of.find(p);
        return it == index_of.end() ? -1 : it->second;
    }
};

inline constexpr std::size_t kDefaultEnumerationLimit = 100000;

struct EnumerationLimitExceeded : std::runtime_error {
    explicit EnumerationLimitExceeded(unsigned long long order, std::size_t limit)
        : std::runtime_error("group of order " + std::to_string(order) +
                             " exceeds enumeration limit " + std::to_string(limit)) {}
};

inline GroupElements enumerate_elements(const PermutationGroup& G,
                                        std::size_t limit = kDefaultEnumerationLimit) {
    if (G.order() > limit) throw EnumerationLimitExceeded(G.order(), limit);
    GroupElements out;
    Permutation id = Permutation::identity(G.degree());
    out.index_of.emplace(id, 0);
    out.elements.push_back(std::move(id));
    for (std::size_t head = 0; head < out.elements.size(); ++head) {
        for (const auto& s : G.generators()) {
            Permutation next = mul(s, out.elements[head]);
            if (out.index_of.find(next) == out.index_of.end()) {
                out.index_of.emplace(next, static_cast<int>(out.elements.size()));
                out.elements.push_back(std::move(next));
            }
        }
    }
    return out;
}

}  // namespace orr
