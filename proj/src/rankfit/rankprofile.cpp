#include "genrec/rankprofile.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "genrec/parallel.hpp"

namespace genrec {

std::string StatSpec::name() const {
    switch (kind) {
        case Kind::points: return "points";
        case Kind::group_order: return "group_order";
        case Kind::line_size: return "line_size";
        case Kind::collinear_triples: return "collinear_triples";
        case Kind::triangles: return "triangles";
        case Kind::generic_orbit: return "generic_orbit_" + std::to_string(k);
        case Kind::generic_complement: return "generic_complement_" + std::to_string(k);
    }
    return "?";
}

StatSpec StatSpec::parse(const std::string& token) {
    StatSpec s;
    if (token == "points") s.kind = Kind::points;
    else if (token == "group_order" || token == "order") s.kind = Kind::group_order;
    else if (token == "line_size" || token == "linesize") s.kind = Kind::line_size;
    else if (token == "collinear_triples" || token == "collinear3") s.kind = Kind::collinear_triples;
    else if (token == "triangles") s.kind = Kind::triangles;
    else if (token.rfind("generic_orbit_", 0) == 0) {
        s.kind = Kind::generic_orbit;
        s.k = std::stoi(token.substr(14));
    } else if (token.rfind("generic_complement_", 0) == 0) {
        s.kind = Kind::generic_complement;
        s.k = std::stoi(token.substr(19));
    } else {
        raise(Errc::bad_params, "unknown statistic: " + token);
    }
    if ((s.kind == Kind::generic_orbit || s.kind == Kind::generic_complement) && (s.k < 1 || s.k > 8))
        raise(Errc::bad_params, "generic orbit length must be 1..8");
    return s;
}

std::vector<StatSpec> default_statistics() {
    using K = StatSpec::Kind;
    return {{K::points, 0}, {K::group_order, 0}, {K::line_size, 0},
            {K::collinear_triples, 0}, {K::triangles, 0}};
}

namespace {

BigInt bigint_pow(const BigInt& b, int e) {
    BigInt r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

bool needs_geometry(const std::vector<StatSpec>& stats) {
    for (const StatSpec& s : stats)
        if (s.kind == StatSpec::Kind::line_size || s.kind == StatSpec::Kind::collinear_triples)
            return true;
    return false;
}

std::vector<int> holdout_qs(const std::string& family, int n, const std::vector<int>& q_list,
                            int count) {
    if (count <= 0) return {};
    const int maxq = *std::max_element(q_list.begin(), q_list.end());
    if (family == "psl") {
        // stay on the branch of constant gcd(d, q−1), where the orders are
        // polynomial in q
        const int d = n + 1;
        const int g0 = std::gcd(d, q_list.front() - 1);
        for (int q : q_list)
            if (std::gcd(d, q - 1) != g0)
                raise(Errc::bad_params,
                      "psl grid mixes gcd(d,q-1) branches; orders are not polynomial across it");
        return next_prime_powers(maxq, count, d, g0);
    }
    return next_prime_powers(maxq, count);
}

struct QData {
    int q = 0;
    std::optional<BuiltinGroup> built;
    std::optional<IncidenceGeometry> geom;
};

QData measure_q(const std::string& family, int n, int q, bool with_geometry,
                const LineDetectionPolicy& policy) {
    QData d;
    d.q = q;
    d.built = builtin_group(family, n, q);
    if (with_geometry) d.geom = build_geometry(d.built->group, policy);
    return d;
}

BigInt measure_stat(const QData& d, const StatSpec& s, const RankScanOptions& opt) {
    const PermGroup& g = d.built->group;
    switch (s.kind) {
        case StatSpec::Kind::points:
            return BigInt(g.degree());
        case StatSpec::Kind::group_order:
            return BigInt(g.order());
        case StatSpec::Kind::line_size:
            return BigInt(d.geom->line(0).size());
        case StatSpec::Kind::collinear_triples: {
            const int li = d.geom->line_through(0, 1);
            int c = -1;
            for (int p : d.geom->line(li))
                if (p != 0 && p != 1) { c = p; break; }
            const std::array<int, 3> t{0, 1, c};
            return BigInt(g.orbit_of_tuple(t).size);
        }
        case StatSpec::Kind::triangles:
            return BigInt(max_tuple_orbit(g, 3, opt.orbit_samples, opt.seed).orbit_size);
        case StatSpec::Kind::generic_orbit:
            return BigInt(max_tuple_orbit(g, s.k, opt.orbit_samples, opt.seed).orbit_size);
        case StatSpec::Kind::generic_complement:
            return bigint_pow(BigInt(g.degree()), s.k) -
                   BigInt(max_tuple_orbit(g, s.k, opt.orbit_samples, opt.seed).orbit_size);
    }
    raise(Errc::internal, "unhandled statistic");
}

} // namespace

RankProfile rank_profile(const std::string& family, int n, const std::vector<int>& q_list,
                         const std::vector<StatSpec>& statistics, const RankScanOptions& opt) {
    if (q_list.empty())
        raise(Errc::bad_params, "empty q list");
    if (statistics.empty())
        raise(Errc::bad_params, "no statistics requested");
    std::vector<int> qs = q_list;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

    RankProfile prof;
    prof.family = family;
    prof.n = n;
    prof.q_values = qs;
    prof.q_holdout = holdout_qs(family, n, qs, opt.holdout);

    std::vector<int> all_q = qs;
    all_q.insert(all_q.end(), prof.q_holdout.begin(), prof.q_holdout.end());

    const bool with_geometry = needs_geometry(statistics);
    std::vector<std::map<std::string, BigInt>> values(all_q.size());
    parallel_for(all_q.size(), [&](std::size_t i) {
        const QData d = measure_q(family, n, all_q[i], with_geometry, opt.policy);
        for (const StatSpec& s : statistics) values[i][s.name()] = measure_stat(d, s, opt);
    });
    prof.values = values;

    for (const StatSpec& s : statistics) {
        std::vector<QSample> samples;
        for (std::size_t i = 0; i < all_q.size(); ++i)
            samples.push_back({all_q[i], values[i][s.name()]});
        prof.stats.push_back({s.name(), qdegree_fit(samples, static_cast<int>(prof.q_holdout.size()))});
    }
    return prof;
}

std::string RankProfile::table() const {
    std::ostringstream out;
    std::vector<int> all_q = q_values;
    all_q.insert(all_q.end(), q_holdout.begin(), q_holdout.end());

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"q"};
    for (const StatFit& s : stats) head.push_back(s.name);
    rows.push_back(head);
    for (std::size_t i = 0; i < all_q.size(); ++i) {
        std::vector<std::string> row{std::to_string(all_q[i]) +
                                     (i >= q_values.size() ? "*" : "")};
        for (const StatFit& s : stats) row.push_back(values[i].at(s.name).str());
        rows.push_back(row);
    }
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << '\n';
    }
    out << "(* = holdout)\n\n";
    for (const StatFit& s : stats) {
        out << s.name << ": degree " << s.fit.degree << ", "
            << (s.fit.holdout_ok ? "holdout ok" : "HOLDOUT MISMATCH") << ", "
            << s.fit.poly.to_string() << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// extremality certificate

SpanProfile measure_spans(const IncidenceGeometry& geom) {
    SpanProfile sp;
    const int m = geom.num_points();
    std::vector<int> flat;  // sorted closure of the basis so far
    while (static_cast<int>(flat.size()) < m) {
        int next = -1;
        for (int p = 0; p < m; ++p)
            if (!std::binary_search(flat.begin(), flat.end(), p)) { next = p; break; }
        sp.basis.push_back(next);
        std::vector<int> seed = sp.basis;
        flat = geom.closure(seed);
        sp.span_sizes.push_back(flat.size());
    }
    // union of the hyperplanes through the co-1 subsets of the basis
    std::vector<char> in_union(static_cast<std::size_t>(m), 0);
    for (std::size_t drop = 0; drop < sp.basis.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < sp.basis.size(); ++i)
            if (i != drop) sub.push_back(sp.basis[i]);
        for (int p : geom.closure(sub)) in_union[static_cast<std::size_t>(p)] = 1;
    }
    sp.hyperplane_union = static_cast<std::uint64_t>(
        std::count(in_union.begin(), in_union.end(), static_cast<char>(1)));
    return sp;
}

ExtremalityCertificate extremality_certificate(const std::string& family, int n,
                                               const std::vector<int>& q_list,
                                               const RankScanOptions& opt) {
    std::vector<int> qs = q_list;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    if (qs.empty())
        raise(Errc::bad_params, "empty q list");

    ExtremalityCertificate cert;
    cert.family = family;
    cert.n_param = n;
    cert.q_values = qs;
    cert.q_holdout = holdout_qs(family, n, qs, opt.holdout);

    struct PerQ {
        QData data;
        SpanProfile spans;
        std::vector<std::uint64_t> largest;  // L_k for k = 1..kmax (greedy+samples)
    };

    // First pass: user grid with geometry, spans, and sampled largest orbits.
    // k ranges to n+3 with n read from the span profile below; measure up to
    // a cap first, then trim.
    std::vector<PerQ> user(qs.size());
    std::vector<PerQ> hold(cert.q_holdout.size());

    parallel_for(qs.size(), [&](std::size_t i) {
        PerQ& pq = user[i];
        pq.data = measure_q(family, n, qs[i], true, opt.policy);
        pq.spans = measure_spans(*pq.data.geom);
    });
    parallel_for(cert.q_holdout.size(), [&](std::size_t i) {
        PerQ& pq = hold[i];
        pq.data = measure_q(family, n, cert.q_holdout[i], true, opt.policy);
        pq.spans = measure_spans(*pq.data.geom);
    });

    const std::size_t r = user.front().spans.span_sizes.size();  // basis size
    for (const PerQ& pq : user)
        if (pq.spans.span_sizes.size() != r)
            raise(Errc::bad_params, "span profile rank varies across the grid");

    // fits of m and the span sizes
    auto fit_values = [&](auto&& get) {
        std::vector<QSample> samples;
        for (std::size_t i = 0; i < qs.size(); ++i) samples.push_back({qs[i], get(user[i])});
        for (std::size_t i = 0; i < hold.size(); ++i)
            samples.push_back({cert.q_holdout[i], get(hold[i])});
        return qdegree_fit(samples, static_cast<int>(hold.size()));
    };

    cert.points_fit = fit_values([](const PerQ& pq) { return BigInt(pq.data.built->group.degree()); });
    cert.rank_n = cert.points_fit.degree;
    if (!cert.points_fit.holdout_ok)
        raise(Errc::bad_params, "point counts are not polynomial on this grid");
    const int rank_n = cert.rank_n;

    for (std::size_t i = 1; i + 1 <= r - 1; ++i)
        cert.span_fits.push_back(
            fit_values([i](const PerQ& pq) { return BigInt(pq.spans.span_sizes[i - 1]); }));
    cert.hyperplane_union_fit =
        fit_values([](const PerQ& pq) { return BigInt(pq.spans.hyperplane_union); });

    const int kmax = rank_n + 3;
    parallel_for(qs.size(), [&](std::size_t i) {
        PerQ& pq = user[i];
        pq.largest.resize(static_cast<std::size_t>(kmax));
        for (int k = 1; k <= kmax; ++k)
            pq.largest[static_cast<std::size_t>(k - 1)] =
                max_tuple_orbit(pq.data.built->group, k, opt.orbit_samples, opt.seed).orbit_size;
    });

    // symbolic building blocks
    const RatPoly m_poly = cert.points_fit.poly;
    std::vector<RatPoly> sigma_polys{RatPoly()};  // σ_0 = 0
    for (const FitResult& f : cert.span_fits) sigma_polys.push_back(f.poly);
    // σ_r−… : span_fits covers σ_1..σ_{r−1}; σ_r == m

    auto general_position_count = [&](const PerQ& pq, int k) -> std::optional<BigInt> {
        // N_k = ∏_{i<k} (m − σ_i), with the hyperplane-union factor at k=r+1
        const BigInt m(pq.data.built->group.degree());
        if (k <= static_cast<int>(r)) {
            BigInt acc(1);
            for (int i = 0; i < k; ++i) {
                const BigInt sigma = i == 0 ? BigInt(0) : BigInt(pq.spans.span_sizes[static_cast<std::size_t>(i - 1)]);
                acc *= m - sigma;
            }
            return acc;
        }
        if (k == static_cast<int>(r) + 1) {
            BigInt acc(1);
            for (int i = 0; i < static_cast<int>(r); ++i) {
                const BigInt sigma = i == 0 ? BigInt(0) : BigInt(pq.spans.span_sizes[static_cast<std::size_t>(i - 1)]);
                acc *= m - sigma;
            }
            acc *= m - BigInt(pq.spans.hyperplane_union);
            return acc;
        }
        return std::nullopt;
    };

    auto symbolic_complement = [&](int k) -> RatPoly {
        RatPoly acc = RatPoly::constant(BigRat(1));
        for (int i = 0; i < std::min<int>(k, static_cast<int>(r)); ++i)
            acc = acc * (m_poly - sigma_polys[static_cast<std::size_t>(i)]);
        if (k == static_cast<int>(r) + 1) acc = acc * (m_poly - cert.hyperplane_union_fit->poly);
        return m_poly.pow(k) - acc;
    };

    int degree_reached = 0;
    for (int k = 1; k <= kmax; ++k) {
        CertStep step;
        step.k = k;
        for (const PerQ& pq : user)
            step.largest.push_back(BigInt(pq.largest[static_cast<std::size_t>(k - 1)]));

        bool have_n = true;
        std::vector<BigInt> nvals;
        for (const PerQ& pq : user) {
            const auto nk = general_position_count(pq, k);
            if (!nk) { have_n = false; break; }
            nvals.push_back(*nk);
        }
        if (have_n) step.general_position = nvals;

        bool settled = false;
        if (have_n) {
            bool all_equal = true, all_less = true;
            for (std::size_t i = 0; i < user.size(); ++i) {
                if (step.largest[i] != nvals[i]) all_equal = false;
                if (step.largest[i] >= nvals[i]) all_less = false;
            }
            if (all_equal) {
                const RatPoly comp = symbolic_complement(k);
                step.route = "symbolic";
                step.complement_poly = comp.to_string();
                step.complement_degree = comp.degree();
                bool fits_ok = cert.points_fit.holdout_ok && cert.hyperplane_union_fit->holdout_ok;
                for (const FitResult& f : cert.span_fits) fits_ok = fits_ok && f.holdout_ok;
                step.generically_transitive = comp.degree() < k * rank_n;
                step.certified = fits_ok;
                if (!fits_ok) step.note = "span fits failed holdout";
                settled = true;
            } else if (all_less) {
                step.route = "split";
                step.generically_transitive = false;
                step.certified = true;
                std::ostringstream note;
                note << "largest orbit misses general-position tuples at every q; fractions:";
                for (std::size_t i = 0; i < user.size(); ++i) {
                    const BigRat frac(step.largest[i], nvals[i]);
                    note << ' ' << numerator(frac).str() << '/' << denominator(frac).str();
                }
                step.note = note.str();
                settled = true;
            }
        }

        if (!settled) {
            // fit the largest orbit itself; its degree is capped by deg|G|
            step.route = "orbit_fit";
            std::vector<QSample> samples;
            for (std::size_t i = 0; i < user.size(); ++i) samples.push_back({qs[i], step.largest[i]});
            for (std::size_t i = 0; i < hold.size(); ++i) {
                // holdout largest orbits: greedy only (no sampling pass)
                const std::uint64_t l =
                    max_tuple_orbit(hold[i].data.built->group, k, 0, opt.seed).orbit_size;
                samples.push_back({cert.q_holdout[i], BigInt(l)});
            }
            FitResult fit = qdegree_fit(samples, static_cast<int>(hold.size()));
            step.orbit_fit = fit;
            if (!fit.holdout_ok) {
                step.certified = false;
                step.generically_transitive = false;
                step.note = "largest-orbit counts not polynomial on this grid";
            } else if (fit.degree < k * rank_n ||
                       (fit.degree == k * rank_n && fit.poly.leading() < 1)) {
                // complement keeps the full degree k·n
                step.certified = true;
                step.generically_transitive = false;
                const RatPoly comp = m_poly.pow(k) - fit.poly;
                step.complement_poly = comp.to_string();
                step.complement_degree = comp.degree();
            } else {
                const RatPoly comp = m_poly.pow(k) - fit.poly;
                step.complement_poly = comp.to_string();
                step.complement_degree = comp.degree();
                step.certified = true;
                step.generically_transitive = comp.degree() < k * rank_n;
            }
        }

        const bool stop = !step.generically_transitive;
        if (!step.certified) cert.fully_certified = false;
        cert.steps.push_back(std::move(step));
        if (stop) break;
        degree_reached = k;
    }

    cert.generic_transitivity_degree = degree_reached;
    cert.extremal = cert.fully_certified && degree_reached == rank_n + 2;
    return cert;
}

std::string ExtremalityCertificate::table() const {
    std::ostringstream out;
    out << family << " n=" << n_param << ", rank(X) = " << rank_n << " (points: "
        << points_fit.poly.to_string() << ")\n";
    for (const CertStep& s : steps) {
        out << "k=" << s.k << " [" << s.route << "] "
            << (s.generically_transitive ? "generically transitive" : "NOT generically transitive")
            << (s.certified ? "" : " (uncertified)");
        if (s.complement_degree >= 0)
            out << ", complement degree " << s.complement_degree << " vs k*n=" << s.k * rank_n;
        if (s.orbit_fit)
            out << ", largest-orbit degree " << s.orbit_fit->degree;
        if (!s.note.empty()) out << " — " << s.note;
        out << '\n';
    }
    out << "degree of generic transitivity: " << generic_transitivity_degree
        << (extremal ? " (extremal: n+2)" : " (not extremal)") << '\n';
    return out.str();
}

} // namespace genrec
