#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "genrec/error.hpp"

namespace genrec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// One exact count at one prime power.
struct QSample {
    int q = 0;
    BigInt count;
};

/// Polynomial with exact rational coefficients, ascending powers.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(const BigRat& v) { return RatPoly({v}); }
    static RatPoly variable();  // q

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<BigRat>& coeffs() const { return c_; }
    BigRat leading() const { return c_.empty() ? BigRat(0) : c_.back(); }
    BigRat eval(const BigInt& x) const;
    bool is_zero() const { return c_.empty(); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly pow(int k) const;

    /// Exact Newton interpolation through the given (x, value) pairs.
    static RatPoly interpolate(const std::vector<QSample>& pts);

    std::string to_string() const;  // human form, e.g. "q^2 + q + 1"

private:
    std::vector<BigRat> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Interpolation with mandatory holdout: the last `holdout` samples (by q)
/// are withheld, the fit runs on the rest, and every withheld sample is
/// re-checked exactly. A failed re-check is reported, not thrown.
struct FitResult {
    RatPoly poly;
    int degree = -1;
    bool holdout_ok = true;
    std::vector<QSample> fit_samples;
    std::vector<QSample> holdout_samples;
};

FitResult qdegree_fit(std::vector<QSample> samples, int holdout);

/// Next `count` prime powers strictly above `after`; when gcd_constraint
/// > 0, only q with gcd(gcd_with, q−1) == gcd_constraint qualify.
std::vector<int> next_prime_powers(int after, int count, int gcd_with = 0, int gcd_constraint = 0);

} // namespace genrec
