#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "spherical/surgery.hpp"

using namespace spherical;

namespace {

SphericalName catalog(Family f, long subscript) {
    SphericalName n;
    n.family = f;
    n.subscript = subscript;
    return n;
}

} // namespace

TEST_CASE("moser invariants of pinned slopes") {
    // 77/12 surgery on the right trefoil is the icosahedral entry I_77
    SeifertInvariant y = moser(Integer(2), Integer(3), Rational(77, 12));
    NameResult name = spherical_name(y);
    REQUIRE(name.name.has_value());
    CHECK(name.name->family == Family::I);
    CHECK(name.name->subscript == 77);
    CHECK(name.name->sign == 1);  // the slope names the catalog entry directly

    // -1 surgery is the Brieskorn homology sphere with fibers 2, 3, 7
    SeifertInvariant s = moser(Integer(2), Integer(3), Rational(-1));
    CHECK(h1_order(s) == 1);
    CHECK(euler_number(s) == Rational(1, 42));
    REQUIRE(s.legs.size() == 3);
    CHECK(s.legs[0].alpha == 2);
    CHECK(s.legs[1].alpha == 3);
    CHECK(s.legs[2].alpha == 7);
    CHECK(reverse_orientation(s).str() == "(2; 2/1, 3/2, 7/6)");

    // the reducible slope pq is rejected
    CHECK_THROWS_AS(moser(Integer(2), Integer(3), Rational(6)), std::domain_error);
    // |H1| = |numerator|
    CHECK(h1_order(moser(Integer(2), Integer(3), Rational(22, 3))) == 22);
    CHECK(h1_order(moser(Integer(3), Integer(5), Rational(7, 2))) == 7);
}

TEST_CASE("surgery descriptions parse and mirror") {
    auto desc = SurgeryDescription::parse("surgery(T(2,3), 77/12)");
    REQUIRE(desc.has_value());
    CHECK(desc->knot.p == 2);
    CHECK(desc->knot.q == 3);
    CHECK_FALSE(desc->knot.mirrored);
    CHECK(desc->r == Rational(77, 12));
    CHECK(desc->sign == 1);
    CHECK(desc->str() == "surgery(T(2,3), 77/12)");

    auto m = SurgeryDescription::parse("-surgery(T(2,3)^m, -49/9)");
    REQUIRE(m.has_value());
    CHECK(m->knot.mirrored);
    CHECK(m->sign == -1);
    CHECK(m->r == Rational(-49, 9));
    CHECK(m->str() == "-surgery(T(2,3)^m, -49/9)");

    // r surgery on the mirror is the reversal of -r surgery on the knot
    SurgeryDescription a;
    a.knot.mirrored = true;
    a.r = Rational(-77, 12);
    SeifertInvariant lhs = surgered_manifold(a);
    SeifertInvariant rhs = reverse_orientation(moser(Integer(2), Integer(3),
                                                     Rational(77, 12)));
    CHECK(lhs == rhs);
}

TEST_CASE("every catalog entry is a trefoil surgery") {
    for (Family f : {Family::T, Family::O, Family::I}) {
        long modulus = f == Family::T ? 6 : f == Family::O ? 12 : 30;
        std::vector<long> ks;
        if (f == Family::T) ks = {1, 3, 5};
        if (f == Family::O) ks = {1, 5, 7, 11};
        if (f == Family::I) ks = {1, 7, 11, 13, 17, 19, 23, 29};
        for (long b = 2; b <= 50; ++b) {
            for (long k : ks) {
                SphericalName name = catalog(f, modulus * (b - 2) + k);
                SurgeryDescription desc = surgery_of_spherical(name);
                CHECK(surgered_manifold(desc) == spherical_from_name(name));
                CHECK(abs(desc.r.num()) == h1_order(spherical_from_name(name)));
            }
        }
    }
}

TEST_CASE("pinned surgery slopes of named entries") {
    CHECK(surgery_of_spherical(catalog(Family::I, 77)).r == Rational(77, 12));
    CHECK(surgery_of_spherical(catalog(Family::O, 11)).r == Rational(22, 3));
    CHECK(surgery_of_spherical(catalog(Family::O, 59)).r == Rational(118, 19));

    SurgeryDescription i49 = surgery_of_spherical(catalog(Family::I, 49));
    CHECK(i49.r == Rational(-49, 9));
    CHECK(i49.knot.mirrored);
    CHECK(i49.sign == 1);
}

TEST_CASE("no C or D trefoil descriptions") {
    auto lens = SphericalName::parse("L_9_2");
    REQUIRE(lens.has_value());
    CHECK_THROWS_AS(surgery_of_spherical(*lens), std::invalid_argument);
    auto prism = SphericalName::parse("D_7_3");
    REQUIRE(prism.has_value());
    CHECK_THROWS_AS(surgery_of_spherical(*prism), std::invalid_argument);
}

TEST_CASE("spin labels") {
    CHECK(spin_label(Integer(77), Integer(12)) == 44);
    CHECK(spin_label(Integer(49), Integer(9)) == 4);
    // the label is the fixed point of conjugation, not the orbit base point
    CHECK(spin_label(Integer(9), Integer(2)) == 5);
    CHECK_THROWS_AS(spin_label(Integer(4), Integer(1)), std::domain_error);
    for (long p = 3; p <= 99; p += 2) {
        for (long q : {1L, 2L, p - 1}) {
            if (std::gcd(p, q) != 1) continue;
            Integer i = spin_label(Integer(p), Integer(q));
            CHECK(mod_floor(2 * i - (p + q - 1), Integer(p)) == 0);
            CHECK(i >= 0);
            CHECK(i < p);
        }
    }
}

TEST_CASE("extendable labels form conjugation-closed orbits") {
    for (long m : {3L, 5L, 7L}) {
        long p = m * m;
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            std::vector<SpincOrbit> orbits = extendable_spinc(Integer(m), Integer(q));
            REQUIRE(orbits.size() == 1);
            const SpincOrbit& orbit = orbits[0];
            CHECK(orbit.labels.size() == static_cast<std::size_t>(m));
            std::set<Integer> labels(orbit.labels.begin(), orbit.labels.end());
            CHECK(labels.size() == orbit.labels.size());
            for (const Integer& i : labels) {
                CHECK(labels.count(mod_floor(Integer(p + q - 1) - i, Integer(p))) == 1);
            }
            // the spin label lies in the orbit
            CHECK(labels.count(spin_label(Integer(p), Integer(q))) == 1);
        }
    }
    // even m: two parity candidates, each an arithmetic orbit
    std::vector<SpincOrbit> even = extendable_spinc(Integer(2), Integer(1));
    CHECK(even.size() == 2);
    for (const SpincOrbit& orbit : even) CHECK(orbit.labels.size() == 2);
}

TEST_CASE("extendable labels of the order-one surgery") {
    // S^3_{-49/9} of the mirrored trefoil: labels 4 + 7k
    std::vector<SpincOrbit> orbits = extendable_spinc(Integer(7), Integer(9));
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].i0 == 4);
    for (long k = 0; k < 7; ++k) {
        CHECK(orbits[0].labels[k] == 4 + 7 * k);
    }
}
