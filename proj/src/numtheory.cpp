#include "spherical/numtheory.hpp"

#include <stdexcept>

namespace spherical {

std::vector<Integer> hj_cf(const Integer& p, const Integer& q) {
    if (q < 1 || p <= q) throw std::invalid_argument("hj_cf: need p > q >= 1");
    if (gcd(p, q) != 1) throw std::invalid_argument("hj_cf: p, q not coprime");
    std::vector<Integer> out;
    Integer a = p, b = q;
    while (b != 0) {
        // ceil(a/b) = floor((a + b - 1)/b) for b > 0
        Integer t = floor_div(a + b - 1, b);
        out.push_back(t);
        Integer nb = t * b - a;  // in [0, b)
        a = b;
        b = nb;
    }
    return out;
}

Rational cf_eval(const std::vector<Integer>& terms) {
    if (terms.empty()) throw std::invalid_argument("cf_eval: empty expansion");
    Rational v(terms.back());
    for (std::size_t k = terms.size() - 1; k-- > 0;) {
        if (v.is_zero())
            throw std::domain_error("cf_eval: inner tail evaluates to zero");
        v = Rational(terms[k]) - Rational(1) / v;
    }
    return v;
}

Integer mod_inverse(const Integer& a, const Integer& n) {
    if (n < 2) throw std::invalid_argument("mod_inverse: need n >= 2");
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: argument not invertible");
    return r;  // mpz_invert returns a representative in [1, n)
}

std::optional<Integer> is_perfect_square(const Integer& n) {
    if (n < 0) throw std::invalid_argument("is_perfect_square: negative input");
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square_free(const Integer& n) {
    if (n < 1) throw std::invalid_argument("is_square_free: need n >= 1");
    Integer m = n;
    Integer d = 2;
    while (d * d <= m) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return false;
        } else {
            d += (d == 2) ? 1 : 2;
        }
    }
    return true;
}

Rational dedekind_rademacher(const Integer& q, const Integer& p, const Integer& i,
                             SawtoothConvention conv) {
    if (p < 1) throw std::invalid_argument("dedekind_rademacher: need p >= 1");
    // With every fraction put over the common denominator p,
    //   B1((kq+i)/p) = (2*r1 - p) / (2p)  where r1 = (kq+i) mod p,
    // so the whole sum is  N / (4 p^2)  with
    //   N = sum_k (2*r1 - p)(2*k - p),
    // dropping the terms the zero-at-integers convention excludes.
    const bool keep_integer_points = (conv == SawtoothConvention::HalfAtIntegers);
    Integer r1 = mod_floor(i, p);
    Integer step = mod_floor(q, p);
    Integer acc = 0;
    Integer t1, t2;
    for (Integer k = 0; k < p; ++k) {
        if (keep_integer_points || (r1 != 0 && k != 0)) {
            t1 = 2 * r1 - p;
            t2 = 2 * k - p;
            acc += t1 * t2;
        }
        r1 += step;
        if (r1 >= p) r1 -= p;
    }
    return Rational(acc, 4 * p * p);
}

Rational dedekind_sum(const Integer& q, const Integer& p) {
    return dedekind_rademacher(q, p, 0, SawtoothConvention::HalfAtIntegers) - Rational(1, 4);
}

}  // namespace spherical
