#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genrec/chain.hpp"
#include "genrec/perm.hpp"

namespace genrec {

/// An orbit on points or tuples: representative, exact size, and the
/// q-degree once a family-level fit has filled it in.
struct OrbitClass {
    std::vector<int> representative;
    std::uint64_t size = 0;
    std::optional<int> qdegree;
};

/// A permutation group given by generators, with a lazily built and
/// shared stabilizer chain. Immutable after construction.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> generators);

    static PermGroup trivial(int degree);

    /// {"name": ..., "degree": m, "generators": [cycle strings]}
    static PermGroup from_json(const std::string& text, std::string* name_out = nullptr);
    /// Bare text format: first line "degree m", then one generator per line.
    static PermGroup from_perms_text(const std::string& text);
    /// Dispatches on leading '{'.
    static PermGroup from_file(const std::string& path, std::string* name_out = nullptr);

    std::string to_json(const std::string& name) const;

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    bool is_trivial() const { return gens_.empty(); }

    /// Generator list, never empty: the identity stands in for the
    /// trivial group.
    std::vector<Permutation> generators_or_identity() const;

    const StabilizerChain& chain() const;
    StabilizerChain chain_with_base(const std::vector<int>& base_hint) const;

    std::uint64_t order() const { return chain().order(); }
    bool contains(const Permutation& g) const { return chain().contains(g); }

    OrbitClass orbit(int x) const;
    std::vector<int> orbit_set(int x) const;  // sorted
    /// Orbits of the whole point set, each sorted, ordered by least element.
    std::vector<std::vector<int>> orbit_partition() const;
    /// Orbit partition of a g-invariant subset of points.
    std::vector<std::vector<int>> orbit_partition_on(const std::vector<int>& domain) const;

    /// Exact orbit size of a tuple via base change; never walks tuple space.
    OrbitClass orbit_of_tuple(std::span<const int> tuple, int cap = 8) const;

    PermGroup pointwise_stabilizer(std::span<const int> pts) const;

    std::vector<int> fixed_points() const;

    bool is_transitive() const;
    bool is_two_transitive() const;

    /// Minimal block systems of the action on a g-invariant transitive
    /// domain: for each y, the minimal system whose block contains
    /// {x0, y}; trivial systems dropped, duplicates removed.
    std::vector<std::vector<std::vector<int>>> minimal_block_systems(const std::vector<int>& domain) const;

    /// Elements of this group commuting with every generator of h, by full
    /// enumeration. Throws BudgetExceeded when order() > budget.
    PermGroup centralizer_of(const PermGroup& h, std::uint64_t budget = 1000000) const;

    bool is_abelian() const;

private:
    int degree_;
    std::vector<Permutation> gens_;

    struct ChainCache;
    std::shared_ptr<ChainCache> cache_;
};

/// The permutation induced by g on a family of disjoint sets (blocks,
/// lines): block i maps to the block containing the image of its points.
/// Throws NotABlockSystem if an image is not exactly a listed set.
Permutation induced_permutation(const Permutation& g, const std::vector<std::vector<int>>& sets);

/// The group induced on the sets by every generator.
PermGroup induced_action(const PermGroup& g, const std::vector<std::vector<int>>& sets);

} // namespace genrec
