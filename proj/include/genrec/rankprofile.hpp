#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genrec/axioms.hpp"
#include "genrec/builtin.hpp"
#include "genrec/detect.hpp"
#include "genrec/polyfit.hpp"

namespace genrec {

struct RankScanOptions {
    LineDetectionPolicy policy;
    int holdout = 2;           // prime powers appended beyond the grid
    int orbit_samples = 15;    // random tuples backing each greedy orbit
    std::uint64_t seed = 20240901;
};

/// Statistics measurable per q. generic_orbit/generic_complement carry the
/// tuple length k.
struct StatSpec {
    enum class Kind {
        points,
        group_order,
        line_size,
        collinear_triples,
        triangles,
        generic_orbit,
        generic_complement,
    } kind = Kind::points;
    int k = 0;

    std::string name() const;
    static StatSpec parse(const std::string& token);
};

std::vector<StatSpec> default_statistics();

struct StatFit {
    std::string name;
    FitResult fit;
};

struct RankProfile {
    std::string family;
    int n = 0;
    std::vector<int> q_values;   // user grid (fit set), ascending
    std::vector<int> q_holdout;  // appended holdout prime powers
    std::vector<StatFit> stats;
    /// raw measurements, one map per q in q_values ++ q_holdout order
    std::vector<std::map<std::string, BigInt>> values;

    std::string table() const;
};

RankProfile rank_profile(const std::string& family, int n, const std::vector<int>& q_list,
                         const std::vector<StatSpec>& statistics, const RankScanOptions& opt);

/// One k-step of the generic-transitivity certificate.
struct CertStep {
    int k = 0;
    /// "split": the largest orbit misses general-position tuples at every q;
    /// "symbolic": largest orbit == general-position count, complement
    /// assembled symbolically from the m/span fits;
    /// "orbit_fit": fitted largest-orbit polynomial (k beyond the frame).
    std::string route;
    bool generically_transitive = false;
    bool certified = false;
    std::vector<BigInt> largest_orbit;     // per user q
    std::vector<BigInt> general_position;  // per user q, empty if unavailable
    std::optional<FitResult> orbit_fit;
    std::string complement_poly;  // symbolic complement when available
    int complement_degree = -1;
    std::string note;
};

struct ExtremalityCertificate {
    std::string family;
    int n_param = 0;
    int rank_n = 0;  // degree of the point-count polynomial
    std::vector<int> q_values;
    std::vector<int> q_holdout;
    FitResult points_fit;
    std::vector<FitResult> span_fits;  // σ_1 … σ_{r−1}
    std::optional<FitResult> hyperplane_union_fit;
    std::vector<CertStep> steps;
    int generic_transitivity_degree = 0;
    bool extremal = false;
    bool fully_certified = true;  // every step settled by an exact route

    std::string table() const;
};

ExtremalityCertificate extremality_certificate(const std::string& family, int n,
                                               const std::vector<int>& q_list,
                                               const RankScanOptions& opt);

/// Span profile of a geometry: sizes of the flats spanned by a greedy
/// independent sequence, plus the union of the hyperplanes spanned by the
/// basis' co-1 subsets (the k = r+1 general-position obstruction).
struct SpanProfile {
    std::vector<int> basis;
    std::vector<std::uint64_t> span_sizes;  // σ_1 … σ_r, σ_r == m
    std::uint64_t hyperplane_union = 0;
};

SpanProfile measure_spans(const IncidenceGeometry& geom);

} // namespace genrec
