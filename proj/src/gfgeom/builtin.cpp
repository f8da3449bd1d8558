#include "genrec/builtin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace genrec {

namespace {

constexpr int kMaxDegree = 20000;

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Generators of GL_d(q) / SL_d(q) acting on column vectors.
//
// w: signed basis cycle e_i -> e_{i+1}, e_d -> (−1)^{d−1} e_1 (det 1).
// t: transvection I + E_{12} (det 1).
// t_w: I + ω E_{12} (det 1), needed for SL when e > 1.
// D: diag(ω, 1, …, 1) (det ω).
// h: diag(ω, ω⁻¹, 1, …, 1) (det 1).
//
// ⟨w, t, D⟩ = GL_d(q): D-conjugation fills the root subgroup I + λE_{12},
// w-conjugates and commutators give all root subgroups, hence SL_d(q);
// det(D) generates GF(q)^*. ⟨w, t, t_w, h⟩ = SL_d(q) the same way with
// h-conjugation replacing D. Orders are verified against the product
// formula at construction regardless.

Matrix gen_cycle(const Field& f, int d) {
    Matrix m;
    m.dim = d;
    m.a.assign(static_cast<std::size_t>(d) * d, 0);
    for (int i = 0; i + 1 < d; ++i) m.at(i + 1, i) = 1;
    m.at(0, d - 1) = (d % 2 == 1) ? 1 : f.neg(1);  // (−1)^{d−1}
    return m;
}

Matrix gen_transvection(const Field& f, int d, int lambda) {
    Matrix m = Matrix::identity(d);
    (void)f;
    m.at(0, 1) = lambda;
    return m;
}

Matrix gen_diag_scale(const Field& f, int d) {
    Matrix m = Matrix::identity(d);
    m.at(0, 0) = f.primitive_element();
    return m;
}

Matrix gen_diag_sl(const Field& f, int d) {
    Matrix m = Matrix::identity(d);
    m.at(0, 0) = f.primitive_element();
    m.at(1, 1) = f.inv(f.primitive_element());
    return m;
}

std::vector<Matrix> linear_generators(const Field& f, int d, bool det_one_only) {
    std::vector<Matrix> out;
    if (d >= 2) {
        out.push_back(gen_cycle(f, d));
        out.push_back(gen_transvection(f, d, 1));
        if (det_one_only) {
            if (f.e() > 1) out.push_back(gen_transvection(f, d, f.primitive_element()));
            if (f.q() > 3) out.push_back(gen_diag_sl(f, d));
        } else if (f.q() > 2) {
            out.push_back(gen_diag_scale(f, d));
        }
    } else {
        if (!det_one_only && f.q() > 2) out.push_back(gen_diag_scale(f, d));
    }
    return out;
}

BuiltinGroup make_projective(const std::string& family, int n, int q) {
    if (n < 1)
        raise(Errc::bad_params, "projective dimension must be >= 1");
    const Field f = Field::make(q);
    const PGSpace pg(f, n);
    if (pg.point_count() > kMaxDegree)
        raise(Errc::bad_params, "degree too large");
    const int d = n + 1;

    const bool psl = family == "psl";
    std::vector<Permutation> perms;
    for (const Matrix& M : linear_generators(f, d, psl)) perms.push_back(pg.matrix_action(M));
    if (family == "pgammal" && f.e() > 1) perms.push_back(pg.frobenius_action());

    BuiltinGroup b{family + "(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")",
                   family,
                   n,
                   q,
                   PermGroup(pg.point_count(), std::move(perms)),
                   {},
                   0,
                   "cycle companion of x^" + std::to_string(d) + (d % 2 ? "-1" : "+1") +
                       ", transvection I+E12, diagonal scaling"};
    for (int i = 0; i < pg.point_count(); ++i) b.labels.push_back(pg.label(i));
    if (family == "pgl") b.expected_order = pgl_order(d, q);
    else if (family == "psl") b.expected_order = psl_order(d, q);
    else b.expected_order = pgammal_order(d, q);
    return b;
}

BuiltinGroup make_affine(int d, int q) {
    if (d < 1)
        raise(Errc::bad_params, "affine dimension must be >= 1");
    const Field f = Field::make(q);
    const std::uint64_t m64 = ipow(static_cast<std::uint64_t>(q), d);
    if (m64 > kMaxDegree)
        raise(Errc::bad_params, "degree too large");
    const int m = static_cast<int>(m64);

    // vectors in lexicographic order on (c_0, …, c_{d−1})
    auto decode = [&](int idx) {
        std::vector<int> v(static_cast<std::size_t>(d));
        for (int i = d - 1; i >= 0; --i) {
            v[static_cast<std::size_t>(i)] = idx % q;
            idx /= q;
        }
        return v;
    };
    auto encode = [&](const std::vector<int>& v) {
        int idx = 0;
        for (int i = 0; i < d; ++i) idx = idx * q + v[static_cast<std::size_t>(i)];
        return idx;
    };

    std::vector<Permutation> perms;
    {
        // translation x -> x + e_1
        std::vector<int> images(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            std::vector<int> v = decode(i);
            v[0] = f.add(v[0], 1);
            images[static_cast<std::size_t>(i)] = encode(v);
        }
        perms.emplace_back(std::move(images));
    }
    for (const Matrix& M : linear_generators(f, d, false)) {
        std::vector<int> images(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            images[static_cast<std::size_t>(i)] = encode(mat_apply(f, M, decode(i)));
        perms.emplace_back(std::move(images));
    }

    BuiltinGroup b{"agl(n=" + std::to_string(d) + ",q=" + std::to_string(q) + ")",
                   "agl",
                   d,
                   q,
                   PermGroup(m, std::move(perms)),
                   {},
                   agl_order(d, q),
                   "translation by e1, cycle companion, transvection, diagonal scaling"};
    for (int i = 0; i < m; ++i) {
        std::ostringstream out;
        out << '(';
        const std::vector<int> v = decode(i);
        for (int j = 0; j < d; ++j) {
            if (j) out << ',';
            out << v[static_cast<std::size_t>(j)];
        }
        out << ')';
        b.labels.push_back(out.str());
    }
    return b;
}

BuiltinGroup make_symmetric(const std::string& family, int m) {
    if (m < 1 || m > 20)
        raise(Errc::bad_params, "sym/alt degree must be in 1..20");
    std::vector<Permutation> perms;
    if (family == "sym") {
        if (m >= 2) {
            std::vector<int> tr(static_cast<std::size_t>(m));
            std::iota(tr.begin(), tr.end(), 0);
            std::swap(tr[0], tr[1]);
            perms.emplace_back(std::move(tr));
        }
        if (m >= 3) {
            std::vector<int> cyc(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % m;
            perms.emplace_back(std::move(cyc));
        }
    } else {
        if (m >= 3) {
            std::vector<int> three(static_cast<std::size_t>(m));
            std::iota(three.begin(), three.end(), 0);
            three[0] = 1;
            three[1] = 2;
            three[2] = 0;
            perms.emplace_back(std::move(three));
        }
        if (m >= 4) {
            std::vector<int> cyc(static_cast<std::size_t>(m));
            std::iota(cyc.begin(), cyc.end(), 0);
            if (m % 2 == 1) {
                for (int i = 0; i < m; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % m;
            } else {
                for (int i = 1; i < m; ++i) cyc[static_cast<std::size_t>(i)] = 1 + (i % (m - 1));
            }
            perms.emplace_back(std::move(cyc));
        }
    }
    BuiltinGroup b{family + "(" + std::to_string(m) + ")",
                   family,
                   m,
                   0,
                   PermGroup(m, std::move(perms)),
                   {},
                   family == "sym" ? factorial(m) : (m >= 2 ? factorial(m) / 2 : 1),
                   "transposition/3-cycle and long cycle"};
    for (int i = 1; i <= m; ++i) b.labels.push_back(std::to_string(i));
    return b;
}

} // namespace

std::uint64_t factorial(int m) {
    std::uint64_t r = 1;
    for (int i = 2; i <= m; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t pgl_order(int dim, int q) {
    const std::uint64_t qd = ipow(static_cast<std::uint64_t>(q), dim);
    std::uint64_t r = (qd - 1) / (static_cast<std::uint64_t>(q) - 1);
    for (int i = 1; i < dim; ++i) r *= qd - ipow(static_cast<std::uint64_t>(q), i);
    return r;
}

std::uint64_t psl_order(int dim, int q) {
    return pgl_order(dim, q) / std::gcd(static_cast<std::uint64_t>(dim),
                                        static_cast<std::uint64_t>(q - 1));
}

std::uint64_t pgammal_order(int dim, int q) {
    int p = 0, e = 0;
    Field::is_prime_power(q, &p, &e);
    return pgl_order(dim, q) * static_cast<std::uint64_t>(e);
}

std::uint64_t agl_order(int d, int q) {
    const std::uint64_t qd = ipow(static_cast<std::uint64_t>(q), d);
    std::uint64_t r = qd;
    for (int i = 0; i < d; ++i) r *= qd - ipow(static_cast<std::uint64_t>(q), i);
    return r;
}

bool is_builtin_family(const std::string& family) {
    return family == "pgl" || family == "psl" || family == "pgammal" || family == "agl" ||
           family == "sym" || family == "alt";
}

BuiltinGroup builtin_group(const std::string& family, int n, int q) {
    BuiltinGroup b = [&] {
        if (family == "pgl" || family == "psl" || family == "pgammal")
            return make_projective(family, n, q);
        if (family == "agl") return make_affine(n, q);
        if (family == "sym" || family == "alt") return make_symmetric(family, n);
        raise(Errc::unknown_family, "unknown family: " + family);
    }();
    if (b.group.order() != b.expected_order)
        raise(Errc::internal, b.name + ": constructed order " + std::to_string(b.group.order()) +
                                  " != expected " + std::to_string(b.expected_order));
    return b;
}

} // namespace genrec
