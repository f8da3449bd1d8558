#pragma once

#include <cstdint>
#include <vector>

#include "genrec/geometry.hpp"
#include "genrec/group.hpp"

namespace genrec {

/// How lines are read off from two-point suborbit sizes.
///
/// single_q_gap: sizes are scanned as [2, s1, …, sk] (the leading 2 stands
/// for the pair {a,b}, the line's forced nucleus); the largest consecutive
/// ratio, if ≥ γ, separates the small side from the large one. multi_q_degree
/// replaces the γ heuristic with q-degree fits when a whole family is
/// available (see rankfit).
struct LineDetectionPolicy {
    long long gamma_num = 3;
    long long gamma_den = 1;
    enum class Mode { single_q_gap, multi_q_degree } mode = Mode::single_q_gap;
    long long max_fraction_num = 1;  // line size ≤ max_fraction · m
    long long max_fraction_den = 2;
    std::uint64_t seed = 20240901;   // used by build_geometry's spot check
};

/// Orbits of the stabilizer of {a, b} on the remaining points, sorted by
/// size ascending (ties by least representative). Requires 2-transitivity.
std::vector<OrbitClass> two_point_suborbits(const PermGroup& g, int a, int b);

/// {a, b} together with the small suborbits. Errors: NoGap, DegenerateLine,
/// LineTooLarge (see the policy).
std::vector<int> detect_line(const PermGroup& g, int a, int b, const LineDetectionPolicy& policy);

/// Suborbit sizes matched across a family of groups (one per q, same
/// suborbit count, sorted ascending); positions whose size fits a
/// polynomial of degree ≤ 1 in q form the small side. Returns the line in
/// the group at index target.
std::vector<int> detect_line_by_degree(const std::vector<const PermGroup*>& family,
                                       const std::vector<int>& qs, std::size_t target, int a, int b);

/// Detect one line, generate the rest as its orbit under g, spot-check 20
/// random pairs against direct detection (InconsistentLines on any
/// disagreement), and index the result.
IncidenceGeometry build_geometry(const PermGroup& g, const LineDetectionPolicy& policy);

} // namespace genrec
