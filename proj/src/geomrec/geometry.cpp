#include "genrec/geometry.hpp"

#include <algorithm>
#include <set>

#include "genrec/field.hpp"

namespace genrec {

IncidenceGeometry::IncidenceGeometry(int num_points, std::vector<std::vector<int>> lines)
    : m_(num_points) {
    if (m_ < 3)
        raise(Errc::bad_params, "geometry needs at least 3 points");
    std::set<std::vector<int>> canon;
    for (std::vector<int>& l : lines) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (static_cast<int>(l.size()) < 3)
            raise(Errc::bad_params, "line with fewer than 3 points");
        if (static_cast<int>(l.size()) >= m_)
            raise(Errc::bad_params, "line covering all points");
        if (l.front() < 0 || l.back() >= m_)
            raise(Errc::out_of_range, "line point out of range");
        canon.insert(std::move(l));
    }
    lines_.assign(canon.begin(), canon.end());

    pair_line_.assign(static_cast<std::size_t>(m_) * m_, -1);
    pencils_.assign(static_cast<std::size_t>(m_), {});
    for (std::size_t li = 0; li < lines_.size(); ++li) {
        const auto& l = lines_[li];
        for (int p : l) pencils_[static_cast<std::size_t>(p)].push_back(static_cast<int>(li));
        for (std::size_t i = 0; i < l.size(); ++i)
            for (std::size_t j = i + 1; j < l.size(); ++j) {
                auto& slot = pair_line_[static_cast<std::size_t>(l[i]) * m_ + l[j]];
                if (slot < 0) {
                    slot = static_cast<int>(li);
                    pair_line_[static_cast<std::size_t>(l[j]) * m_ + l[i]] = static_cast<int>(li);
                }
            }
    }
    // Total linear space: every pair covered.
    for (int a = 0; a < m_; ++a)
        for (int b = a + 1; b < m_; ++b)
            if (pair_line_[static_cast<std::size_t>(a) * m_ + b] < 0)
                raise(Errc::bad_params, "pair of points on no line");
}

int IncidenceGeometry::line_through(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= m_ || b >= m_) return -1;
    return pair_line_[static_cast<std::size_t>(a) * m_ + b];
}

bool IncidenceGeometry::on_line(int line_index, int p) const {
    const auto& l = lines_[static_cast<std::size_t>(line_index)];
    return std::binary_search(l.begin(), l.end(), p);
}

std::vector<int> IncidenceGeometry::closure(std::vector<int> seed) const {
    std::vector<char> in(static_cast<std::size_t>(m_), 0);
    std::vector<int> flat;
    for (int p : seed)
        if (!in[static_cast<std::size_t>(p)]) {
            in[static_cast<std::size_t>(p)] = 1;
            flat.push_back(p);
        }
    // join pairs until stable; new points only need joining against all others
    for (std::size_t i = 0; i < flat.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const int li = line_through(flat[i], flat[j]);
            if (li < 0) continue;
            for (int p : lines_[static_cast<std::size_t>(li)])
                if (!in[static_cast<std::size_t>(p)]) {
                    in[static_cast<std::size_t>(p)] = 1;
                    flat.push_back(p);
                }
        }
    std::sort(flat.begin(), flat.end());
    return flat;
}

int IncidenceGeometry::line_meet(int l1, int l2) const {
    const auto& a = lines_[static_cast<std::size_t>(l1)];
    const auto& b = lines_[static_cast<std::size_t>(l2)];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return a[i];
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return -1;
}

std::vector<std::vector<int>> IncidenceGeometry::meet_table() const {
    const int L = num_lines();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(L),
                                    std::vector<int>(static_cast<std::size_t>(L), -1));
    for (int i = 0; i < L; ++i) {
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -2;
        for (int j = i + 1; j < L; ++j) {
            const int p = line_meet(i, j);
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p;
            t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = p;
        }
    }
    return t;
}

bool IncidenceGeometry::constant_line_size(int* size_out) const {
    if (lines_.empty()) return false;
    const std::size_t s = lines_.front().size();
    for (const auto& l : lines_)
        if (l.size() != s) return false;
    if (size_out) *size_out = static_cast<int>(s);
    return true;
}

std::optional<IncidenceGeometry::ProjectiveParams> IncidenceGeometry::projective_params() const {
    int size = 0;
    if (!constant_line_size(&size)) return std::nullopt;
    const int q = size - 1;
    if (q < 2 || !Field::is_prime_power(q)) return std::nullopt;
    // m == 1 + q + q^2 + … + q^n for some n >= 2
    long long acc = 1 + q;
    long long powq = q;
    for (int n = 2; n <= 32; ++n) {
        powq *= q;
        acc += powq;
        if (acc == m_) return ProjectiveParams{q, n};
        if (acc > m_) break;
    }
    return std::nullopt;
}

} // namespace genrec
