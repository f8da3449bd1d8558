#include "genrec/projective.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace genrec {

Matrix Matrix::identity(int dim) {
    Matrix m;
    m.dim = dim;
    m.a.assign(static_cast<std::size_t>(dim) * dim, 0);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

Matrix mat_mul(const Field& f, const Matrix& A, const Matrix& B) {
    if (A.dim != B.dim)
        raise(Errc::bad_params, "matrix dimension mismatch");
    Matrix C;
    C.dim = A.dim;
    C.a.assign(static_cast<std::size_t>(A.dim) * A.dim, 0);
    for (int i = 0; i < A.dim; ++i)
        for (int k = 0; k < A.dim; ++k) {
            const int aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < A.dim; ++j)
                C.at(i, j) = f.add(C.at(i, j), f.mul(aik, B.at(k, j)));
        }
    return C;
}

int mat_det(const Field& f, Matrix A) {
    int det = 1;
    const int n = A.dim;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (A.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(A.a[static_cast<std::size_t>(pivot) * n + j],
                                                  A.a[static_cast<std::size_t>(col) * n + j]);
            det = f.neg(det);
        }
        det = f.mul(det, A.at(col, col));
        const int inv = f.inv(A.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            const int factor = f.mul(A.at(r, col), inv);
            if (factor == 0) continue;
            for (int j = col; j < n; ++j)
                A.at(r, j) = f.sub(A.at(r, j), f.mul(factor, A.at(col, j)));
        }
    }
    return det;
}

std::vector<int> mat_apply(const Field& f, const Matrix& A, const std::vector<int>& v) {
    std::vector<int> out(static_cast<std::size_t>(A.dim), 0);
    for (int i = 0; i < A.dim; ++i) {
        int acc = 0;
        for (int j = 0; j < A.dim; ++j) acc = f.add(acc, f.mul(A.at(i, j), v[static_cast<std::size_t>(j)]));
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::vector<int> mat_solve(const Field& f, Matrix A, std::vector<int> b) {
    const int n = A.dim;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (A.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0)
            raise(Errc::bad_params, "singular linear system");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(A.a[static_cast<std::size_t>(pivot) * n + j],
                                                  A.a[static_cast<std::size_t>(col) * n + j]);
            std::swap(b[static_cast<std::size_t>(pivot)], b[static_cast<std::size_t>(col)]);
        }
        const int inv = f.inv(A.at(col, col));
        for (int j = col; j < n; ++j) A.at(col, j) = f.mul(A.at(col, j), inv);
        b[static_cast<std::size_t>(col)] = f.mul(b[static_cast<std::size_t>(col)], inv);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const int factor = A.at(r, col);
            if (factor == 0) continue;
            for (int j = col; j < n; ++j)
                A.at(r, j) = f.sub(A.at(r, j), f.mul(factor, A.at(col, j)));
            b[static_cast<std::size_t>(r)] = f.sub(b[static_cast<std::size_t>(r)],
                                                   f.mul(factor, b[static_cast<std::size_t>(col)]));
        }
    }
    return b;
}

Matrix mat_projective_normalize(const Field& f, Matrix A) {
    for (int v : A.a) {
        if (v != 0) {
            const int inv = f.inv(v);
            for (int& x : A.a) x = f.mul(inv, x);
            return A;
        }
    }
    raise(Errc::bad_params, "zero matrix");
}

PGSpace::PGSpace(Field field, int n) : field_(std::move(field)), n_(n) {
    if (n < 1)
        raise(Errc::bad_params, "projective dimension must be >= 1");
    const int q = field_.q();
    // enumerate normalized vectors: leading 1 at position i, free tail
    std::vector<std::vector<int>> pts;
    for (int lead = 0; lead <= n; ++lead) {
        const int tail = n - lead;
        long long count = 1;
        for (int i = 0; i < tail; ++i) count *= q;
        for (long long t = 0; t < count; ++t) {
            std::vector<int> v(static_cast<std::size_t>(n) + 1, 0);
            v[static_cast<std::size_t>(lead)] = 1;
            long long rest = t;
            for (int i = lead + 1; i <= n; ++i) {
                v[static_cast<std::size_t>(i)] = static_cast<int>(rest % q);
                rest /= q;
            }
            pts.push_back(std::move(v));
        }
    }
    std::sort(pts.begin(), pts.end());
    points_ = std::move(pts);
    for (std::size_t i = 0; i < points_.size(); ++i)
        index_[key(points_[i])] = static_cast<int>(i);
}

std::uint64_t PGSpace::key(const std::vector<int>& v) const {
    std::uint64_t k = 0;
    for (int c : v) k = k * static_cast<std::uint64_t>(field_.q()) + static_cast<std::uint64_t>(c);
    return k;
}

std::vector<int> PGSpace::normalize(std::vector<int> v) const {
    for (int c : v) {
        if (c != 0) {
            if (c != 1) {
                const int inv = field_.inv(c);
                for (int& x : v) x = field_.mul(inv, x);
            }
            return v;
        }
    }
    raise(Errc::bad_params, "zero vector is not a projective point");
}

int PGSpace::index_of(const std::vector<int>& v) const {
    const auto it = index_.find(key(normalize(v)));
    if (it == index_.end())
        raise(Errc::internal, "point lookup failed");
    return it->second;
}

std::vector<int> PGSpace::line(int a, int b) const {
    if (a == b)
        raise(Errc::equal_points, "line through equal points");
    const std::vector<int>& va = coords(a);
    const std::vector<int>& vb = coords(b);
    std::set<int> pts{b};
    for (int lam = 0; lam < field_.q(); ++lam) {
        std::vector<int> v(va.size());
        for (std::size_t i = 0; i < va.size(); ++i)
            v[i] = field_.add(va[i], field_.mul(lam, vb[i]));
        pts.insert(index_of(v));
    }
    return {pts.begin(), pts.end()};
}

std::vector<std::vector<int>> PGSpace::all_lines() const {
    std::set<std::vector<int>> lines;
    const int m = point_count();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            std::vector<int> l = line(a, b);
            if (l.front() == a)  // visit each line once via its two least points
                lines.insert(std::move(l));
        }
    return {lines.begin(), lines.end()};
}

std::string PGSpace::label(int index) const {
    std::ostringstream out;
    out << '(';
    const std::vector<int>& v = coords(index);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ':';
        out << v[i];
    }
    out << ')';
    return out.str();
}

Permutation PGSpace::matrix_action(const Matrix& M) const {
    std::vector<int> images(static_cast<std::size_t>(point_count()));
    for (int i = 0; i < point_count(); ++i)
        images[static_cast<std::size_t>(i)] = index_of(mat_apply(field_, M, coords(i)));
    return Permutation(std::move(images));  // bijection validated there
}

Permutation PGSpace::frobenius_action() const {
    std::vector<int> images(static_cast<std::size_t>(point_count()));
    for (int i = 0; i < point_count(); ++i) {
        std::vector<int> v = coords(i);
        for (int& c : v) c = field_.frob(c);
        images[static_cast<std::size_t>(i)] = index_of(v);
    }
    return Permutation(std::move(images));
}

} // namespace genrec
