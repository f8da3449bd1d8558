#include "genrec/detect.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "genrec/polyfit.hpp"

namespace genrec {

std::vector<OrbitClass> two_point_suborbits(const PermGroup& g, int a, int b) {
    if (a == b)
        raise(Errc::equal_points, "suborbits need two distinct points");
    const int m = g.degree();
    if (a < 0 || b < 0 || a >= m || b >= m)
        raise(Errc::out_of_range, "point out of range");
    if (!g.is_two_transitive())
        raise(Errc::not_two_transitive, "group is not 2-transitive");

    const PermGroup stab = g.pointwise_stabilizer(std::array<int, 2>{a, b});
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(m) - 2);
    for (int p = 0; p < m; ++p)
        if (p != a && p != b) rest.push_back(p);

    std::vector<OrbitClass> out;
    for (auto& orb : stab.orbit_partition_on(rest)) {
        OrbitClass oc;
        oc.size = orb.size();
        oc.representative = {orb.front()};
        out.push_back(std::move(oc));
    }
    std::sort(out.begin(), out.end(), [](const OrbitClass& x, const OrbitClass& y) {
        if (x.size != y.size) return x.size < y.size;
        return x.representative < y.representative;
    });
    return out;
}

namespace {

// Index into sizes[] of the first orbit on the large side, per the
// [2, s1, …, sk] ratio scan. Throws NoGap / DegenerateLine.
std::size_t gap_cut(const std::vector<std::uint64_t>& sizes, const LineDetectionPolicy& policy) {
    // ratios r_i = scan[i+1] / scan[i] with scan = [2, s1, …, sk]
    std::vector<std::uint64_t> scan{2};
    scan.insert(scan.end(), sizes.begin(), sizes.end());
    std::size_t best = scan.size();  // no admissible gap yet
    // pick the largest ratio ≥ γ; ties go to the earliest (smallest line)
    for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
        const bool admissible =
            static_cast<unsigned long long>(scan[i + 1]) * policy.gamma_den >=
            static_cast<unsigned long long>(policy.gamma_num) * scan[i];
        if (!admissible) continue;
        if (best == scan.size() ||
            scan[i + 1] * scan[best] > scan[best + 1] * scan[i])  // r_i > r_best
            best = i;
    }
    if (best == scan.size())
        raise(Errc::no_gap, "no suborbit size ratio reaches gamma");
    if (best == 0)
        raise(Errc::degenerate_line, "every suborbit is large; line would be {a,b}");
    return best;  // orbits 0..best−1 of sizes[] are small
}

} // namespace

std::vector<int> detect_line(const PermGroup& g, int a, int b, const LineDetectionPolicy& policy) {
    if (policy.gamma_num <= policy.gamma_den)
        raise(Errc::bad_params, "gamma must exceed 1");
    if (policy.mode != LineDetectionPolicy::Mode::single_q_gap)
        raise(Errc::bad_params, "multi-q degree mode needs a family; use detect_line_by_degree");

    const auto suborbits = two_point_suborbits(g, a, b);
    std::vector<std::uint64_t> sizes;
    sizes.reserve(suborbits.size());
    for (const auto& oc : suborbits) sizes.push_back(oc.size);

    const std::size_t cut = gap_cut(sizes, policy);

    const PermGroup stab = g.pointwise_stabilizer(std::array<int, 2>{a, b});
    std::set<int> line{a, b};
    for (std::size_t i = 0; i < cut; ++i)
        for (int p : stab.orbit_set(suborbits[i].representative.front())) line.insert(p);

    if (static_cast<unsigned long long>(line.size()) * policy.max_fraction_den >
        static_cast<unsigned long long>(policy.max_fraction_num) * g.degree())
        raise(Errc::line_too_large, "small side exceeds the line-size cap");
    return {line.begin(), line.end()};
}

std::vector<int> detect_line_by_degree(const std::vector<const PermGroup*>& family,
                                       const std::vector<int>& qs, std::size_t target, int a, int b) {
    if (family.size() != qs.size() || family.size() < 3)
        raise(Errc::insufficient_samples, "degree mode needs >= 3 groups with q values");
    std::vector<std::vector<OrbitClass>> all;
    all.reserve(family.size());
    for (const PermGroup* g : family) all.push_back(two_point_suborbits(*g, a, b));
    const std::size_t k = all.front().size();
    for (const auto& so : all)
        if (so.size() != k)
            raise(Errc::inconsistent_lines, "suborbit counts differ across the family");

    const PermGroup& tg = *family[target];
    const PermGroup stab = tg.pointwise_stabilizer(std::array<int, 2>{a, b});
    std::set<int> line{a, b};
    bool any_small = false;
    for (std::size_t pos = 0; pos < k; ++pos) {
        std::vector<QSample> samples;
        for (std::size_t i = 0; i < family.size(); ++i)
            samples.push_back({qs[i], BigInt(all[i][pos].size)});
        const FitResult fit = qdegree_fit(samples, 0);
        if (fit.degree <= 1) {
            any_small = true;
            for (int p : stab.orbit_set(all[target][pos].representative.front())) line.insert(p);
        }
    }
    if (!any_small)
        raise(Errc::degenerate_line, "no suborbit of q-degree <= 1");
    return {line.begin(), line.end()};
}

IncidenceGeometry build_geometry(const PermGroup& g, const LineDetectionPolicy& policy) {
    const std::vector<int> seed_line = detect_line(g, 0, 1, policy);
    const int m = g.degree();

    // all lines are translates of the seed line (2-transitivity)
    std::set<std::vector<int>> lines;
    std::vector<std::vector<int>> queue{seed_line};
    lines.insert(seed_line);
    while (!queue.empty()) {
        const std::vector<int> l = std::move(queue.back());
        queue.pop_back();
        for (const Permutation& s : g.generators()) {
            std::vector<int> img;
            img.reserve(l.size());
            for (int p : l) img.push_back(s(p));
            std::sort(img.begin(), img.end());
            if (lines.insert(img).second) queue.push_back(std::move(img));
        }
    }

    IncidenceGeometry geom(m, {lines.begin(), lines.end()});

    // spot check: direct detection agrees with the translates
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int trial = 0; trial < 20; ++trial) {
        const int a = pick(rng);
        int b = pick(rng);
        while (b == a) b = pick(rng);
        const std::vector<int> found = detect_line(g, a, b, policy);
        bool match = false;
        for (int li : geom.pencil(a))
            if (geom.line(li) == found) { match = true; break; }
        if (!match)
            raise(Errc::inconsistent_lines, "detected line is not a translate of the seed line");
    }
    return geom;
}

} // namespace genrec
