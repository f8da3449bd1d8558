#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "genrec/field.hpp"
#include "genrec/perm.hpp"

namespace genrec {

/// (n+1)×(n+1) matrix over GF(q), row-major.
struct Matrix {
    int dim = 0;
    std::vector<int> a;

    static Matrix identity(int dim);
    int& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
    int at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }
    bool operator==(const Matrix& o) const { return dim == o.dim && a == o.a; }
};

Matrix mat_mul(const Field& f, const Matrix& A, const Matrix& B);
int mat_det(const Field& f, Matrix A);
std::vector<int> mat_apply(const Field& f, const Matrix& A, const std::vector<int>& v);
/// Solve A x = b; throws BadParams when A is singular.
std::vector<int> mat_solve(const Field& f, Matrix A, std::vector<int> b);
/// Scale so the first nonzero entry (row-major) is 1.
Matrix mat_projective_normalize(const Field& f, Matrix A);

/// PG(n, q): all normalized points in a fixed canonical order
/// (lexicographic on coordinate vectors), with index lookup both ways.
class PGSpace {
public:
    PGSpace(Field field, int n);

    const Field& field() const { return field_; }
    int dim() const { return n_; }
    int point_count() const { return static_cast<int>(points_.size()); }
    const std::vector<int>& coords(int index) const { return points_[static_cast<std::size_t>(index)]; }

    /// First nonzero coordinate scaled to 1; idempotent and scale-invariant.
    std::vector<int> normalize(std::vector<int> v) const;
    int index_of(const std::vector<int>& v_any_scale) const;

    /// The q+1 points of the line through two distinct points, as sorted
    /// point indices. Throws EqualPoints.
    std::vector<int> line(int a, int b) const;
    /// All lines of the space, each sorted, in canonical order.
    std::vector<std::vector<int>> all_lines() const;

    std::string label(int index) const;  // "(c0:c1:...:cn)"

    /// Point permutation induced by an invertible matrix.
    Permutation matrix_action(const Matrix& M) const;
    /// Coordinate-wise Frobenius x -> x^p as a point permutation.
    Permutation frobenius_action() const;

private:
    Field field_;
    int n_;
    std::vector<std::vector<int>> points_;
    std::unordered_map<std::uint64_t, int> index_;

    std::uint64_t key(const std::vector<int>& v) const;
};

} // namespace genrec
