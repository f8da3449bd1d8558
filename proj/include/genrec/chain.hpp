#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "genrec/perm.hpp"

namespace genrec {

/// Base and strong generating set, built by deterministic Schreier–Sims.
///
/// Level i holds the orbit of base[i] under the group fixing
/// base[0..i−1] pointwise, together with coset representatives
/// (rep u for point β satisfies u(base[i]) = β). The terminal group is
/// trivial: every Schreier generator sifts to the identity.
class StabilizerChain {
public:
    struct Level {
        int base_point = -1;
        std::vector<Permutation> gens;   // strong generators fixing earlier base points
        std::vector<int> orbit;          // BFS discovery order, orbit[0] == base_point
        std::vector<int> rep_index;      // point -> index into reps, or -1
        std::vector<Permutation> reps;   // reps[rep_index[β]](base_point) == β
    };

    /// base_hint points are installed as the leading base points in order
    /// (kept even when redundant, so tuple stabilizers fall out of the
    /// level structure directly).
    static StabilizerChain build(int degree, const std::vector<Permutation>& gens,
                                 const std::vector<int>& base_hint = {});

    int degree() const { return degree_; }
    std::size_t level_count() const { return levels_.size(); }
    const Level& level(std::size_t i) const { return levels_[i]; }
    std::vector<int> base() const;

    std::uint64_t order() const { return order_from_level(0); }
    std::uint64_t order_from_level(std::size_t i) const;

    bool contains(const Permutation& g) const;

    /// Strong generators of the subgroup fixing base[0..level−1] pointwise.
    std::vector<Permutation> stabilizer_gens(std::size_t level) const;

    /// Enumerate all elements (deterministic order). Throws BudgetExceeded
    /// when the order exceeds the limit.
    std::vector<Permutation> elements(std::uint64_t limit) const;

    /// Visit all elements without materializing them; stops early when the
    /// visitor returns false. Throws BudgetExceeded past the limit.
    void for_each_element(std::uint64_t limit, const std::function<bool(const Permutation&)>& visit) const;

private:
    int degree_ = 0;
    std::vector<Level> levels_;

    // sift from the given level; returns residue and the level at which
    // the transversal lookup failed (level_count() if fully sifted).
    std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;

    void recompute_level(std::size_t i);
    friend class ChainBuilder;
};

} // namespace genrec
