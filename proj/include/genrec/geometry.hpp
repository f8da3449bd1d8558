#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genrec/error.hpp"

namespace genrec {

/// Points 0..m−1 plus lines as canonically sorted point-index lists, with
/// pair→line and point→pencil indexes. Every line has ≥ 3 and < m points
/// and every pair of points lies on at least one line; uniqueness of the
/// line through a pair is a checked property, not an assumption.
class IncidenceGeometry {
public:
    IncidenceGeometry(int num_points, std::vector<std::vector<int>> lines);

    int num_points() const { return m_; }
    int num_lines() const { return static_cast<int>(lines_.size()); }
    const std::vector<std::vector<int>>& lines() const { return lines_; }
    const std::vector<int>& line(int i) const { return lines_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& pencil(int x) const { return pencils_[static_cast<std::size_t>(x)]; }

    /// Index of a line through both points (the first found), or -1.
    int line_through(int a, int b) const;
    bool on_line(int line_index, int p) const;

    /// Smallest flat containing the seed: closure under joining pairs.
    std::vector<int> closure(std::vector<int> seed) const;

    /// Meet point of two distinct lines, or -1 (valid once unique-line holds).
    int line_meet(int l1, int l2) const;
    /// Full meet table (num_lines × num_lines, diagonal -2).
    std::vector<std::vector<int>> meet_table() const;

    struct ProjectiveParams {
        int q = 0;  // line size − 1
        int n = 0;  // dimension with |X| = (q^{n+1}−1)/(q−1)
    };
    /// Present when all lines share one size q+1 with q ≥ 2 a prime power
    /// and the point count matches (q^{n+1}−1)/(q−1) for some n ≥ 2.
    std::optional<ProjectiveParams> projective_params() const;

    bool constant_line_size(int* size_out = nullptr) const;

private:
    int m_ = 0;
    std::vector<std::vector<int>> lines_;
    std::vector<int> pair_line_;  // m*m, first incident line or -1
    std::vector<std::vector<int>> pencils_;
};

} // namespace genrec
