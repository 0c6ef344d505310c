#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "spherical/numtheory.hpp"

using namespace spherical;

namespace {

std::vector<Integer> terms(std::initializer_list<long> xs) {
    return std::vector<Integer>(xs.begin(), xs.end());
}

} // namespace

TEST_CASE("continued fractions of pinned slopes") {
    CHECK(hj_cf(Integer(22), Integer(3)) == terms({8, 2, 2}));
    CHECK(hj_cf(Integer(46), Integer(7)) == terms({7, 3, 2, 2}));
    CHECK(hj_cf(Integer(118), Integer(19)) == terms({7, 2, 2, 2, 3, 2, 2}));
    CHECK(hj_cf(Integer(9), Integer(2)) == terms({5, 2}));
    CHECK(hj_cf(Integer(9), Integer(7)) == terms({2, 2, 2, 3}));
    CHECK(hj_cf(Integer(7), Integer(1)) == terms({7}));
}

TEST_CASE("continued fraction evaluation") {
    CHECK(cf_eval(terms({2, 2, 2, 2})) == Rational(5, 4));
    CHECK(cf_eval(terms({8, 2, 2})) == Rational(22, 3));
    // [1,1] evaluates to 1 - 1/1 = 0; only an inner zero tail divides by zero
    CHECK(cf_eval(terms({1, 1})) == Rational(0));
    CHECK_THROWS_AS(cf_eval(terms({2, 1, 1})), std::domain_error);
}

TEST_CASE("continued fraction round trip") {
    for (long p = 2; p <= 80; ++p) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            std::vector<Integer> t = hj_cf(Integer(p), Integer(q));
            for (const Integer& a : t) CHECK(a >= 2);
            CHECK(cf_eval(t) == Rational(p, q));
        }
    }
}

TEST_CASE("modular inverses") {
    CHECK(mod_inverse(Integer(2), Integer(77)) == 39);
    CHECK(mod_inverse(Integer(3), Integer(7)) == 5);
    for (long n = 2; n <= 40; ++n) {
        for (long a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            Integer inv = mod_inverse(Integer(a), Integer(n));
            CHECK(inv >= 1);
            CHECK(inv < n);
            CHECK(mod_floor(inv * a, Integer(n)) == 1);
        }
    }
}

TEST_CASE("perfect squares and square-free parts") {
    CHECK(is_perfect_square(Integer(0)) == Integer(0));
    CHECK(is_perfect_square(Integer(1)) == Integer(1));
    CHECK(is_perfect_square(Integer(49)) == Integer(7));
    CHECK(is_perfect_square(Integer(1849)) == Integer(43));
    CHECK_FALSE(is_perfect_square(Integer(48)).has_value());
    CHECK(is_square_free(Integer(1)));
    CHECK(is_square_free(Integer(77)));
    CHECK(is_square_free(Integer(109)));
    CHECK_FALSE(is_square_free(Integer(18)));
    CHECK_FALSE(is_square_free(Integer(49)));
}

TEST_CASE("dedekind sums against closed forms") {
    CHECK(dedekind_sum(Integer(1), Integer(2)) == Rational(0));
    CHECK(dedekind_sum(Integer(1), Integer(3)) == Rational(1, 18));
    // s(1, p) = (p-1)(p-2) / (12p)
    for (long p = 2; p <= 30; ++p) {
        CHECK(dedekind_sum(Integer(1), Integer(p)) ==
              Rational(Integer((p - 1) * (p - 2)), Integer(12 * p)));
    }
}

TEST_CASE("dedekind reciprocity") {
    for (long p = 2; p <= 40; ++p) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Rational lhs = dedekind_sum(Integer(q), Integer(p)) +
                           dedekind_sum(Integer(p), Integer(q));
            Rational rhs = Rational(-1, 4) +
                           (Rational(p, q) + Rational(q, p) + Rational(1, Integer(p) * q)) *
                               Rational(1, 12);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("sawtooth conventions differ only at integer points") {
    // with the half convention the k = 0 term contributes 1/4 at i = 0
    Rational half = dedekind_rademacher(Integer(1), Integer(3), Integer(0),
                                        SawtoothConvention::HalfAtIntegers);
    Rational zero = dedekind_rademacher(Integer(1), Integer(3), Integer(0),
                                        SawtoothConvention::ZeroAtIntegers);
    CHECK(half - zero == Rational(1, 4));
    CHECK(zero == dedekind_sum(Integer(1), Integer(3)));
    // at i = 1 integer arguments occur at k = 0 (first factor) and at
    // k = -i q^{-1} = 2 (second factor); the conventions differ by
    // (-1/2) B1(1/5) + B1(2/5) (-1/2) = 3/20 + 1/20 = 1/5
    CHECK(dedekind_rademacher(Integer(2), Integer(5), Integer(1),
                              SawtoothConvention::HalfAtIntegers) -
              dedekind_rademacher(Integer(2), Integer(5), Integer(1),
                                  SawtoothConvention::ZeroAtIntegers) ==
          Rational(1, 5));
}
