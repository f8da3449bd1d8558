#include "genrec/chain.hpp"

#include <algorithm>

namespace genrec {

void StabilizerChain::recompute_level(std::size_t i) {
    Level& lv = levels_[i];
    lv.orbit.clear();
    lv.reps.clear();
    lv.rep_index.assign(static_cast<std::size_t>(degree_), -1);

    lv.orbit.push_back(lv.base_point);
    lv.rep_index[static_cast<std::size_t>(lv.base_point)] = 0;
    lv.reps.push_back(Permutation::identity(degree_));

    // BFS in discovery order, generators in list order: deterministic.
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
        const int beta = lv.orbit[head];
        for (const Permutation& s : lv.gens) {
            const int gamma = s(beta);
            if (lv.rep_index[static_cast<std::size_t>(gamma)] < 0) {
                lv.rep_index[static_cast<std::size_t>(gamma)] = static_cast<int>(lv.reps.size());
                lv.reps.push_back(compose(lv.reps[static_cast<std::size_t>(
                                              lv.rep_index[static_cast<std::size_t>(beta)])],
                                          s));
                lv.orbit.push_back(gamma);
            }
        }
    }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t from) const {
    for (std::size_t k = from; k < levels_.size(); ++k) {
        const Level& lv = levels_[k];
        const int beta = g(lv.base_point);
        const int idx = lv.rep_index[static_cast<std::size_t>(beta)];
        if (idx < 0) return {std::move(g), k};
        g = compose(g, lv.reps[static_cast<std::size_t>(idx)].inverse());
    }
    return {std::move(g), levels_.size()};
}

StabilizerChain StabilizerChain::build(int degree, const std::vector<Permutation>& gens,
                                       const std::vector<int>& base_hint) {
    StabilizerChain chain;
    chain.degree_ = degree;

    std::vector<Permutation> working;
    for (const Permutation& g : gens) {
        if (g.degree() != degree)
            raise(Errc::degree_mismatch, "chain: generator degree mismatch");
        if (g.is_identity()) continue;
        if (std::find(working.begin(), working.end(), g) == working.end())
            working.push_back(g);
    }

    auto add_level = [&](int point) {
        Level lv;
        lv.base_point = point;
        chain.levels_.push_back(std::move(lv));
    };

    for (int p : base_hint) {
        if (p < 0 || p >= degree)
            raise(Errc::out_of_range, "chain: base point out of range");
        bool dup = false;
        for (const Level& lv : chain.levels_)
            if (lv.base_point == p) { dup = true; break; }
        if (!dup) add_level(p);
    }

    auto fixes_prefix = [&](const Permutation& g, std::size_t upto) {
        for (std::size_t k = 0; k < upto; ++k)
            if (g(chain.levels_[k].base_point) != chain.levels_[k].base_point) return false;
        return true;
    };

    // Make sure every generator moves some base point.
    auto place_generator = [&](const Permutation& g) {
        if (fixes_prefix(g, chain.levels_.size())) {
            const int moved = g.smallest_moved_point();
            if (moved >= 0) add_level(moved);
        }
    };
    for (const Permutation& g : working) place_generator(g);

    if (chain.levels_.empty()) {
        // Trivial group: keep an empty chain (order 1).
        return chain;
    }

    // Distribute generators to the levels whose base prefix they fix.
    for (const Permutation& g : working) {
        for (std::size_t k = 0; k < chain.levels_.size() && fixes_prefix(g, k); ++k)
            chain.levels_[k].gens.push_back(g);
    }
    for (std::size_t k = 0; k < chain.levels_.size(); ++k) chain.recompute_level(k);

    // Work upward from the deepest level; every Schreier generator must
    // sift to the identity before a level counts as verified.
    std::size_t i = chain.levels_.size();
    while (i > 0) {
        const std::size_t lev = i - 1;
        bool complete = true;

        const Level& lv = chain.levels_[lev];
        for (std::size_t oi = 0; oi < lv.orbit.size() && complete; ++oi) {
            const int beta = lv.orbit[oi];
            const Permutation& u_beta =
                lv.reps[static_cast<std::size_t>(lv.rep_index[static_cast<std::size_t>(beta)])];
            for (std::size_t si = 0; si < lv.gens.size(); ++si) {
                const Permutation& s = lv.gens[si];
                const int gamma = s(beta);
                const Permutation& u_gamma =
                    lv.reps[static_cast<std::size_t>(lv.rep_index[static_cast<std::size_t>(gamma)])];
                Permutation schreier = compose(compose(u_beta, s), u_gamma.inverse());
                if (schreier.is_identity()) continue;

                auto [residue, stop] = chain.sift(std::move(schreier), lev + 1);
                if (residue.is_identity()) continue;

                if (stop == chain.levels_.size() && fixes_prefix(residue, chain.levels_.size())) {
                    add_level(residue.smallest_moved_point());
                    chain.levels_.back().rep_index.assign(static_cast<std::size_t>(degree), -1);
                }
                std::size_t deepest = lev;
                for (std::size_t k = lev + 1; k < chain.levels_.size() && fixes_prefix(residue, k); ++k) {
                    chain.levels_[k].gens.push_back(residue);
                    deepest = k;
                }
                for (std::size_t k = lev + 1; k <= deepest; ++k) chain.recompute_level(k);
                i = deepest + 1;
                complete = false;
                break;
            }
        }
        if (complete) --i;
    }
    return chain;
}

std::vector<int> StabilizerChain::base() const {
    std::vector<int> b;
    b.reserve(levels_.size());
    for (const Level& lv : levels_) b.push_back(lv.base_point);
    return b;
}

std::uint64_t StabilizerChain::order_from_level(std::size_t i) const {
    std::uint64_t n = 1;
    for (std::size_t k = i; k < levels_.size(); ++k)
        n *= static_cast<std::uint64_t>(levels_[k].orbit.size());
    return n;
}

bool StabilizerChain::contains(const Permutation& g) const {
    if (g.degree() != degree_)
        raise(Errc::degree_mismatch, "contains: degree mismatch");
    auto [residue, stop] = sift(g, 0);
    (void)stop;
    return residue.is_identity();
}

std::vector<Permutation> StabilizerChain::stabilizer_gens(std::size_t level) const {
    if (level >= levels_.size()) return {};
    return levels_[level].gens;
}

void StabilizerChain::for_each_element(std::uint64_t limit,
                                       const std::function<bool(const Permutation&)>& visit) const {
    if (order() > limit)
        raise(Errc::budget_exceeded, "element enumeration exceeds budget");
    // g = (((id * u_last) ...) * u_0): right-to-left accumulation over levels.
    std::function<bool(std::size_t, const Permutation&)> rec =
        [&](std::size_t lev, const Permutation& acc) -> bool {
        if (lev == 0) return visit(acc);
        const Level& lv = levels_[lev - 1];
        for (int beta : lv.orbit) {
            const Permutation& u =
                lv.reps[static_cast<std::size_t>(lv.rep_index[static_cast<std::size_t>(beta)])];
            if (!rec(lev - 1, lev == levels_.size() ? u : compose(acc, u))) return false;
        }
        return true;
    };
    if (levels_.empty()) {
        visit(Permutation::identity(degree_));
        return;
    }
    rec(levels_.size(), Permutation::identity(degree_));
}

std::vector<Permutation> StabilizerChain::elements(std::uint64_t limit) const {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(order(), limit)));
    for_each_element(limit, [&](const Permutation& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

} // namespace genrec
