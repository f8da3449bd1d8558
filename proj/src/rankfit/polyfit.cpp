#include "genrec/polyfit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "genrec/field.hpp"

namespace genrec {

RatPoly RatPoly::variable() { return RatPoly({BigRat(0), BigRat(1)}); }

BigRat RatPoly::eval(const BigInt& x) const {
    BigRat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * BigRat(x) + c_[i];
    return acc;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<BigRat> out(std::max(c_.size(), o.c_.size()), BigRat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<BigRat> out(std::max(c_.size(), o.c_.size()), BigRat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (c_.empty() || o.c_.empty()) return RatPoly();
    std::vector<BigRat> out(c_.size() + o.c_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::pow(int k) const {
    RatPoly acc = RatPoly::constant(BigRat(1));
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

RatPoly RatPoly::interpolate(const std::vector<QSample>& pts) {
    if (pts.empty()) return RatPoly();
    const std::size_t n = pts.size();
    // Newton divided differences.
    std::vector<BigRat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = BigRat(pts[i].count);
    std::vector<BigRat> coef{dd[0]};
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i)
            dd[i] = (dd[i + 1] - dd[i]) / BigRat(pts[i + level].q - pts[i].q);
        dd.resize(n - level);
        coef.push_back(dd[0]);
    }
    // expand Newton form: sum_k coef[k] * prod_{j<k}(x − x_j)
    RatPoly poly;
    RatPoly basis = RatPoly::constant(BigRat(1));
    for (std::size_t k = 0; k < coef.size(); ++k) {
        poly = poly + basis * RatPoly::constant(coef[k]);
        basis = basis * RatPoly({BigRat(-pts[k].q), BigRat(1)});
    }
    return poly;
}

std::string RatPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigRat& v = c_[i];
        if (v == 0) continue;
        const bool neg = v < 0;
        BigRat mag = neg ? BigRat(-v) : v;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const bool unit = (mag == 1) && i > 0;
        if (!unit) {
            out << numerator(mag).str();
            if (denominator(mag) != 1) out << '/' << denominator(mag).str();
        }
        if (i > 0) {
            if (!unit) out << '*';
            out << 'q';
            if (i > 1) out << '^' << i;
        }
    }
    if (first) return "0";
    return out.str();
}

FitResult qdegree_fit(std::vector<QSample> samples, int holdout) {
    std::sort(samples.begin(), samples.end(),
              [](const QSample& a, const QSample& b) { return a.q < b.q; });
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].q == samples[i - 1].q)
            raise(Errc::bad_params, "duplicate q value in samples");
    if (holdout < 0)
        raise(Errc::bad_params, "holdout must be >= 0");
    if (static_cast<int>(samples.size()) < holdout + 1)
        raise(Errc::insufficient_samples, "need at least one non-holdout sample");

    FitResult r;
    r.fit_samples.assign(samples.begin(), samples.end() - holdout);
    r.holdout_samples.assign(samples.end() - holdout, samples.end());
    r.poly = RatPoly::interpolate(r.fit_samples);
    r.degree = r.poly.degree();
    for (const QSample& s : r.holdout_samples)
        if (r.poly.eval(BigInt(s.q)) != BigRat(s.count)) {
            r.holdout_ok = false;
            break;
        }
    return r;
}

std::vector<int> next_prime_powers(int after, int count, int gcd_with, int gcd_constraint) {
    std::vector<int> out;
    for (int q = after + 1; static_cast<int>(out.size()) < count; ++q) {
        if (q > 1000000)
            raise(Errc::internal, "prime power search ran away");
        if (!Field::is_prime_power(q)) continue;
        if (gcd_with > 0 && std::gcd(gcd_with, q - 1) != gcd_constraint) continue;
        out.push_back(q);
    }
    return out;
}

} // namespace genrec
