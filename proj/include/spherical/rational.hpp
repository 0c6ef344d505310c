/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and reduced rationals on top of GMP.
 */
#ifndef SPHERICAL_RATIONAL_HPP
#define SPHERICAL_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace spherical {

using Integer = mpz_class;

// floor(a/b), exact, b != 0
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// a mod b in [0, |b|)
inline Integer mod_floor(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(b) < 0) r = -r;
    return r;
}

/**
 * Reduced fraction with positive denominator.  Every constructor and every
 * arithmetic result is canonical: gcd(num, den) == 1 and den > 0.
 */
class Rational {
public:
    Rational() : q_(0) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& num, const Integer& den) : q_(num, den) {
        if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Integer floor() const { return floor_div(q_.get_num(), q_.get_den()); }
    Integer ceil() const { return -floor_div(-q_.get_num(), q_.get_den()); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // "a/b", or just "a" when the denominator is 1
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    // accepts "a" and "a/b" with optional leading minus
    static std::optional<Rational> parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

}  // namespace spherical

#endif
