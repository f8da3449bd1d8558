#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genrec/detect.hpp"
#include "genrec/geometry.hpp"
#include "genrec/group.hpp"

namespace genrec {

/// Outcome of one axiom check. A failing report always carries an
/// independently re-checkable witness.
struct AxiomReport {
    std::string axiom;
    bool pass = false;
    std::vector<int> witness;     // point indices (0-based internally)
    std::uint64_t checked = 0;    // configurations examined
    bool sampled = false;
    std::uint64_t seed = 0;
    std::string note;
};

/// Exhaustive: every unordered pair of distinct points lies on exactly one
/// line.
AxiomReport check_unique_line(const IncidenceGeometry& geom);

/// For distinct x,y,z,w with ℓ_xy ≠ ℓ_zw meeting, ℓ_yz meets ℓ_xw.
/// Exhaustive when the ordered-distinct-4-tuple count fits the budget,
/// else a seeded uniform sample of that many tuples.
AxiomReport check_veblen(const IncidenceGeometry& geom, std::uint64_t budget = 2000000,
                         std::uint64_t seed = 20240901);

/// Four points, no three collinear (greedy first, then exhaustive).
AxiomReport check_quadrilateral(const IncidenceGeometry& geom);

/// The pencil at x viewed as the quotient structure: blocks {ℓ∖{x}},
/// invariance under G_x, and the order of the induced action on the
/// pencil.
struct PencilQuotientReport {
    int point = -1;
    bool pass = false;
    int pencil_size = 0;
    std::vector<std::uint64_t> block_sizes;  // distinct sizes, ascending
    std::uint64_t stabilizer_order = 0;      // |G_x|
    std::uint64_t image_order = 0;           // |G_x| / |kernel|
    std::uint64_t kernel_order = 0;
    bool matches_minimal_system = false;
    int other_minimal_systems = 0;
    std::string note;
};

PencilQuotientReport pencil_quotient_report(const PermGroup& g, const IncidenceGeometry& geom, int x);

/// Greedy tuple of k points whose orbit is largest, sanity-checked against
/// random tuples. Requires k ≤ n+2 for the geometry's dimension n.
std::vector<int> general_position_tuple(const PermGroup& g, const IncidenceGeometry& geom, int k,
                                        std::uint64_t seed = 20240901);

/// Largest k-tuple orbit: greedy extension through largest stabilizer
/// orbits (provably maximal once the stabilizer is trivial), then
/// `samples` random distinct tuples as a floor check.
struct MaxOrbitResult {
    std::vector<int> tuple;
    std::uint64_t orbit_size = 0;
    bool greedy_was_max = true;  // no random tuple beat the greedy one
};

MaxOrbitResult max_tuple_orbit(const PermGroup& g, int k, int samples, std::uint64_t seed);

enum class CheckStatus { pass, fail, degenerate, skipped };
const char* check_status_name(CheckStatus s);

/// Sharpness, torus surrogate, fixed points, self-centralizing — the
/// frame-stabilizer battery. q = 2 turns the torus checks degenerate.
struct FrameStabilizerReport {
    std::vector<int> frame;          // n+2 points in general position
    int q = 0;
    int n = 0;
    CheckStatus sharp = CheckStatus::skipped;            // |G_frame| == 1
    CheckStatus torus_order = CheckStatus::skipped;      // |H| == (q−1)^n
    CheckStatus torus_abelian = CheckStatus::skipped;
    CheckStatus fixed_points = CheckStatus::skipped;     // fp(H) == first n+1
    CheckStatus self_centralizing = CheckStatus::skipped;
    std::uint64_t frame_stab_order = 0;
    std::uint64_t torus_order_value = 0;
    std::uint64_t centralizer_order = 0;
    std::string note;
    bool passed() const;  // no outright failures
};

FrameStabilizerReport frame_stabilizer_report(const PermGroup& g, const IncidenceGeometry& geom,
                                              std::uint64_t centralizer_budget = 1000000,
                                              std::uint64_t seed = 20240901);

} // namespace genrec
