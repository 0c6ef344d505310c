#include <doctest.h>

#include <stdexcept>

#include "spherical/lattice.hpp"
#include "spherical/seifert.hpp"

using namespace spherical;

namespace {

SeifertInvariant make(long b, std::initializer_list<std::pair<long, long>> legs) {
    SeifertInvariant inv;
    inv.b = b;
    for (const auto& [a, beta] : legs) inv.legs.push_back({Integer(a), Integer(beta)});
    return inv;
}

} // namespace

TEST_CASE("normalization by twists and blow-downs") {
    // (2; 2/3): the twist lowers b, e = 2 - 3/2 = 1/2 is preserved
    SeifertInvariant n = normalize(make(2, {{2, 3}}));
    CHECK(n == make(1, {{2, 1}}));
    CHECK(euler_number(n) == Rational(1, 2));
    // (1, m) legs blow down into the central weight
    CHECK(normalize(make(0, {{1, 1}, {2, 1}})) == make(-1, {{2, 1}}));
    // negative beta twists up, e = 0 + 2/3 = 1 - 1/3 is preserved
    CHECK(normalize(make(0, {{3, -2}})) == make(1, {{3, 1}}));
    // legs sort by (alpha, beta)
    SeifertInvariant s = normalize(make(2, {{5, 4}, {2, 1}, {3, 2}}));
    CHECK(s == make(2, {{2, 1}, {3, 2}, {5, 4}}));
    CHECK(is_normalized(s));
}

TEST_CASE("euler number and first homology") {
    SeifertInvariant poincare = make(2, {{2, 1}, {3, 2}, {5, 4}});
    CHECK(euler_number(poincare) == Rational(1, 30));
    CHECK(h1_order(poincare) == 1);
    SeifertInvariant i77 = make(4, {{2, 1}, {3, 1}, {5, 3}});
    CHECK(h1_order(i77) == 77);
    // e = 0 is not a rational homology sphere
    SeifertInvariant flat = make(1, {{2, 1}, {4, 1}, {4, 1}});
    CHECK(euler_number(flat).is_zero());
    CHECK(h1_order(flat) == 0);
}

TEST_CASE("orientation reversal is an involution negating e") {
    for (const SeifertInvariant& inv :
         {make(2, {{2, 1}, {3, 2}, {5, 4}}), make(3, {{2, 1}, {3, 1}, {5, 1}}),
          make(5, {{2, 1}, {2, 1}, {3, 1}})}) {
        SeifertInvariant rev = reverse_orientation(inv);
        CHECK(euler_number(rev) == -euler_number(inv));
        CHECK(h1_order(rev) == h1_order(inv));
        CHECK(reverse_orientation(rev) == normalize(inv));
        // the three-leg reversal has central weight 3 - b
        CHECK(rev.b == Integer(3) - inv.b);
    }
}

TEST_CASE("catalog names round trip") {
    for (Family f : {Family::T, Family::O, Family::I}) {
        long modulus = f == Family::T ? 6 : f == Family::O ? 12 : 30;
        std::vector<long> ks;
        if (f == Family::T) ks = {1, 3, 5};
        if (f == Family::O) ks = {1, 5, 7, 11};
        if (f == Family::I) ks = {1, 7, 11, 13, 17, 19, 23, 29};
        for (long b = 2; b <= 30; ++b) {
            for (long k : ks) {
                SphericalName name;
                name.family = f;
                name.subscript = modulus * (b - 2) + k;
                SeifertInvariant inv = spherical_from_name(name);
                CHECK(inv.b == b);
                NameResult back = spherical_name(inv);
                REQUIRE(back.name.has_value());
                CHECK(*back.name == name);
                // the reversal names the same entry with the opposite sign
                NameResult rev = spherical_name(reverse_orientation(inv));
                REQUIRE(rev.name.has_value());
                CHECK(rev.name->sign == -1);
                CHECK(rev.name->subscript == name.subscript);
                CHECK(rev.name->family == f);
            }
        }
    }
}

TEST_CASE("homology orders of the catalog families") {
    for (long b = 2; b <= 12; ++b) {
        SphericalName t, o, i;
        t.family = Family::T;
        t.subscript = 6 * (b - 2) + 5;
        o.family = Family::O;
        o.subscript = 12 * (b - 2) + 7;
        i.family = Family::I;
        i.subscript = 30 * (b - 2) + 13;
        CHECK(h1_order(spherical_from_name(t)) == 3 * t.subscript);
        CHECK(h1_order(spherical_from_name(o)) == 2 * o.subscript);
        CHECK(h1_order(spherical_from_name(i)) == i.subscript);
    }
}

TEST_CASE("lens space naming") {
    // one-leg fibrations are lens spaces; (1; 2/1) is the 3-sphere
    NameResult s3 = spherical_name(make(1, {{2, 1}}));
    REQUIRE(s3.name.has_value());
    CHECK(s3.name->family == Family::C);
    CHECK(s3.name->p == 1);
    // (2; 2/1) has |H1| = 3
    NameResult l3 = spherical_name(make(2, {{2, 1}}));
    REQUIRE(l3.name.has_value());
    CHECK(l3.name->family == Family::C);
    CHECK(l3.name->p == 3);
    // q and q^{-1} give one canonical name
    SphericalName a, bname;
    a.family = bname.family = Family::C;
    a.p = bname.p = 7;
    a.q = 3;
    bname.q = 5;  // 3 * 5 = 15 = 1 (mod 7)
    CHECK(same_spherical(a, bname));
    // parse/str round trip
    auto parsed = SphericalName::parse("L_9_2");
    REQUIRE(parsed.has_value());
    CHECK(parsed->family == Family::C);
    CHECK(parsed->p == 9);
    CHECK(parsed->q == 2);
    CHECK(parsed->str() == "L_9_2");
}

TEST_CASE("prism manifolds round trip through their names") {
    auto d73 = SphericalName::parse("D_7_3");
    REQUIRE(d73.has_value());
    SeifertInvariant inv = spherical_from_name(*d73);
    NameResult back = spherical_name(inv);
    REQUIRE(back.name.has_value());
    CHECK(*back.name == *d73);
    CHECK(h1_order(inv) == 4 * (7 - 3));
    // two legs are (2,1), the third encodes p/q
    REQUIRE(inv.legs.size() == 3);
    CHECK(inv.legs[0] == SeifertLeg{Integer(2), Integer(1)});
    CHECK(inv.legs[1] == SeifertLeg{Integer(2), Integer(1)});
}

TEST_CASE("complementary legs reduce prisms to lens spaces") {
    auto d73 = SphericalName::parse("D_7_3");
    REQUIRE(d73.has_value());
    SeifertInvariant inv = spherical_from_name(*d73);
    auto red = complementary_reduction(inv);
    REQUIRE(red.has_value());
    REQUIRE(red->lens.has_value());
    CHECK(red->lens->family == Family::C);
    CHECK(red->lens->p == 4);
    CHECK(red->lens->q == 1);

    // the (2,1),(3,1),(3,2) family reduces to lens spaces as well
    SphericalName t15;
    t15.family = Family::T;
    t15.subscript = 15;
    auto red2 = complementary_reduction(spherical_from_name(t15));
    REQUIRE(red2.has_value());
    REQUIRE(red2->lens.has_value());
    CHECK(red2->lens->p == 5);

    // no complementary pair on the Poincare sphere
    CHECK_FALSE(complementary_reduction(make(2, {{2, 1}, {3, 2}, {5, 4}})).has_value());
}

TEST_CASE("canonical plumbing matches the homology order") {
    for (Family f : {Family::T, Family::O, Family::I}) {
        long modulus = f == Family::T ? 6 : f == Family::O ? 12 : 30;
        std::vector<long> ks;
        if (f == Family::T) ks = {1, 3, 5};
        if (f == Family::O) ks = {1, 5, 7, 11};
        if (f == Family::I) ks = {1, 7, 11, 13, 17, 19, 23, 29};
        for (long b = 2; b <= 12; ++b) {
            for (long k : ks) {
                SphericalName name;
                name.family = f;
                name.subscript = modulus * (b - 2) + k;
                SeifertInvariant inv = spherical_from_name(name);
                PlumbingGraph g = canonical_plumbing(inv);
                GramLattice l = gram_from_plumbing(g);
                CHECK(is_negative_definite(l));
                CHECK(abs(det(l)) == h1_order(inv));
            }
        }
    }
}

TEST_CASE("the b = 2 tetrahedral plumbing is the E6 tree") {
    SphericalName t1;
    t1.family = Family::T;
    t1.subscript = 1;
    PlumbingGraph g = canonical_plumbing(spherical_from_name(t1));
    CHECK(g.rank() == 6);
    for (const Integer& w : g.weights) CHECK(w == -2);
    CHECK(abs(det(gram_from_plumbing(g))) == 3);
}

TEST_CASE("plumbing requires e > 0") {
    CHECK_THROWS_AS(canonical_plumbing(make(-1, {{2, 1}, {3, 2}, {5, 4}})),
                    std::domain_error);
}

TEST_CASE("seifert text round trip") {
    SeifertInvariant inv = make(3, {{2, 1}, {3, 2}, {5, 1}});
    CHECK(inv.str() == "(3; 2/1, 3/2, 5/1)");
    auto parsed = SeifertInvariant::parse("(3; 2/1, 3/2, 5/1)");
    REQUIRE(parsed.has_value());
    CHECK(*parsed == inv);
    CHECK_FALSE(SeifertInvariant::parse("(3; 2/1,").has_value());
}
