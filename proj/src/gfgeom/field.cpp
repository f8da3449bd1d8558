#include "genrec/field.hpp"

#include <algorithm>

namespace genrec {

namespace {

// polynomials over GF(p) as coefficient vectors, lowest degree first

std::vector<int> poly_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    a = poly_trim(std::move(a));
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int lead = a.back();  // m is monic
        for (int i = 0; i <= dm; ++i) {
            int& c = a[static_cast<std::size_t>(i + shift)];
            c = ((c - lead * m[static_cast<std::size_t>(i)]) % p + p) % p;
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return poly_trim(std::move(out));
}

std::vector<int> decode(int a, int p) {
    std::vector<int> c;
    while (a > 0) {
        c.push_back(a % p);
        a /= p;
    }
    return c;
}

int encode(const std::vector<int>& c, int p) {
    int a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
    return a;
}

// trial division: no factor of degree 1..deg/2
bool is_irreducible(const std::vector<int>& m, int p) {
    const int deg = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        // all monic polynomials of degree d
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int lowpart = 0; lowpart < count; ++lowpart) {
            std::vector<int> f = decode(lowpart, p);
            f.resize(static_cast<std::size_t>(d) + 1, 0);
            f[static_cast<std::size_t>(d)] = 1;
            if (poly_mod(m, f, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

bool Field::is_prime_power(int q, int* p_out, int* e_out) {
    if (q < 2) return false;
    int p = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    if (p == 0) p = q;  // q itself prime
    int e = 0, r = q;
    while (r % p == 0) { r /= p; ++e; }
    if (r != 1) return false;
    if (p_out) *p_out = p;
    if (e_out) *e_out = e;
    return true;
}

int Field::raw_add(int a, int b) const {
    if (e_ == 1) return (a + b) % p_;
    int out = 0, mult = 1;
    while (a > 0 || b > 0) {
        out += ((a % p_) + (b % p_)) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

int Field::raw_mul(int a, int b) const {
    if (e_ == 1) return (a * b) % p_;
    const std::vector<int> prod = poly_mod(poly_mul(decode(a, p_), decode(b, p_), p_), modulus_, p_);
    return encode(prod, p_);
}

Field Field::make(int q) {
    int p = 0, e = 0;
    if (!is_prime_power(q, &p, &e))
        raise(Errc::not_prime_power, std::to_string(q) + " is not a prime power");

    Field f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = q;

    if (e == 1) {
        f.modulus_ = {0, 1};
    } else {
        // smallest non-leading coefficient vector, read as a base-p integer
        int count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        bool found = false;
        for (int low = 1; low < count && !found; ++low) {
            std::vector<int> m = decode(low, p);
            m.resize(static_cast<std::size_t>(e) + 1, 0);
            m[static_cast<std::size_t>(e)] = 1;
            if (is_irreducible(m, p)) {
                f.modulus_ = m;
                found = true;
            }
        }
        if (!found)
            raise(Errc::internal, "no irreducible modulus found");
    }

    if (q <= 512) {
        f.tables_ = true;
        f.add_table_.resize(static_cast<std::size_t>(q) * q);
        f.mul_table_.resize(static_cast<std::size_t>(q) * q);
        f.inv_table_.assign(static_cast<std::size_t>(q), 0);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                f.add_table_[static_cast<std::size_t>(a) * q + b] = f.raw_add(a, b);
                const int m = f.raw_mul(a, b);
                f.mul_table_[static_cast<std::size_t>(a) * q + b] = m;
                if (m == 1) f.inv_table_[static_cast<std::size_t>(a)] = b;
            }
    }

    // smallest multiplicative generator
    for (int a = 2; a < q; ++a) {
        int x = a, ord = 1;
        while (x != 1) {
            x = f.mul(x, a);
            ++ord;
        }
        if (ord == q - 1) {
            f.omega_ = a;
            break;
        }
    }
    if (q == 2) f.omega_ = 1;
    if (q > 2 && f.omega_ == 0)
        raise(Errc::internal, "no primitive element found");
    return f;
}

int Field::add(int a, int b) const {
    return tables_ ? add_table_[static_cast<std::size_t>(a) * q_ + b] : raw_add(a, b);
}

int Field::neg(int a) const {
    if (a == 0) return 0;
    if (e_ == 1) return p_ - a;
    int out = 0, mult = 1, x = a;
    while (x > 0) {
        const int d = x % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        x /= p_;
        mult *= p_;
    }
    return out;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
    return tables_ ? mul_table_[static_cast<std::size_t>(a) * q_ + b] : raw_mul(a, b);
}

int Field::inv(int a) const {
    if (a == 0)
        raise(Errc::bad_params, "inverse of zero");
    if (tables_) return inv_table_[static_cast<std::size_t>(a)];
    return pow(a, q_ - 2);
}

int Field::pow(int a, long long k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    int out = 1;
    long long kk = k;
    int base = a;
    while (kk > 0) {
        if (kk & 1) out = mul(out, base);
        base = mul(base, base);
        kk >>= 1;
    }
    return out;
}

} // namespace genrec
