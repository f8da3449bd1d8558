#pragma once

#include <cstdint>
#include <vector>

#include "genrec/error.hpp"

namespace genrec {

/// GF(q) with q = p^e. Elements are indices 0..q−1; the index encodes the
/// polynomial representation in base p (digit i = coefficient of x^i), so
/// 0 and 1 are the field's zero and one for every q.
///
/// For extension fields the modulus is the monic irreducible of degree e
/// over GF(p) whose non-leading coefficient vector, read as a base-p
/// integer, is smallest (deterministic; not Conway polynomials).
class Field {
public:
    static Field make(int q);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    /// Coefficients c_0..c_e of the modulus (c_e == 1); for e == 1 this is
    /// the trivial x − 0 convention, i.e. {0, 1}.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long k) const;
    int frob(int a) const { return pow(a, p_); }  // x -> x^p

    /// A fixed multiplicative generator (smallest index that generates).
    int primitive_element() const { return omega_; }

    static bool is_prime_power(int q, int* p_out = nullptr, int* e_out = nullptr);

private:
    Field() = default;

    int p_ = 0, e_ = 0, q_ = 0;
    int omega_ = 0;
    std::vector<int> modulus_;
    // cached tables when q is small
    std::vector<int> add_table_, mul_table_, inv_table_;
    bool tables_ = false;

    int raw_add(int a, int b) const;
    int raw_mul(int a, int b) const;
};

} // namespace genrec
