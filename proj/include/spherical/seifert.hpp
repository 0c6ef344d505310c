/**
 * @file seifert.hpp
 * @brief Seifert invariants over S^2, the spherical-manifold catalog, and
 *        canonical negative-definite plumbings.
 *
 * A Seifert invariant (b; (a1,b1), ..., (ar,br)) fixes the manifold with
 * Euler number e = b - sum(bi/ai).  Rolfsen twists and blow-downs of (1,*)
 * legs preserve the manifold; the normalized form has ai > bi > 0 on every
 * leg and legs sorted, so normalized invariants compare structurally.
 */
#ifndef SPHERICAL_SEIFERT_HPP
#define SPHERICAL_SEIFERT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spherical/rational.hpp"

namespace spherical {

struct SeifertLeg {
    Integer alpha;  // multiplicity, >= 1
    Integer beta;   // any integer coprime to alpha

    friend bool operator==(const SeifertLeg& a, const SeifertLeg& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
    friend bool operator<(const SeifertLeg& a, const SeifertLeg& b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
    }
};

struct SeifertInvariant {
    Integer b;
    std::vector<SeifertLeg> legs;

    std::string str() const;  // "(b; a1/b1, ..., ar/br)"
    static std::optional<SeifertInvariant> parse(const std::string& s);

    friend bool operator==(const SeifertInvariant& x, const SeifertInvariant& y) {
        return x.b == y.b && x.legs == y.legs;
    }
};

// throws std::invalid_argument unless every leg has alpha >= 1, gcd(alpha, beta) = 1
void validate(const SeifertInvariant& inv);

// Rolfsen twists + blow-downs to the sorted normal form; preserves the manifold
SeifertInvariant normalize(const SeifertInvariant& inv);
bool is_normalized(const SeifertInvariant& inv);

// normalized invariant of the orientation reversal -Y
SeifertInvariant reverse_orientation(const SeifertInvariant& inv);

Rational euler_number(const SeifertInvariant& inv);

// |H1| = a1*...*ar * |e|; returns 0 when e = 0 (not a rational homology sphere)
Integer h1_order(const SeifertInvariant& inv);

/**
 * Tree of framed unknots.  Vertex 0 of a star is the central vertex; a chain
 * is numbered head to tail.
 */
struct PlumbingGraph {
    std::vector<Integer> weights;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t rank() const { return weights.size(); }
    // linear graph with weights -terms[k]; terms are the positive entries of
    // a Hirzebruch-Jung expansion
    static PlumbingGraph chain(const std::vector<Integer>& terms);
};

/**
 * Star-shaped plumbing bounding Y: center -b, leg i the chain of the
 * Hirzebruch-Jung expansion of ai/bi with the first entry adjacent to the
 * center.  Defined exactly when e(Y) > 0 (that is when the intersection form
 * is negative definite); otherwise throws std::domain_error suggesting the
 * reversed orientation.
 */
PlumbingGraph canonical_plumbing(const SeifertInvariant& inv);

enum class Family { C, D, T, O, I };

/**
 * Catalog name of a spherical manifold:
 *   C: lens space L(p, q), q canonicalized over q <-> q^{-1} (mod p), sign +1;
 *   D: prism family D(p, q), p > q >= 1 coprime;
 *   T/O/I: subscript n with n = 6(b-2)+k, 12(b-2)+k, 30(b-2)+k.
 * sign -1 names the orientation reversal of the catalog entry (D/T/O/I only;
 * reversed lens spaces are renamed instead).
 */
struct SphericalName {
    Family family = Family::C;
    Integer p, q;       // C and D
    Integer subscript;  // T, O, I
    int sign = +1;

    std::string str() const;  // "L_9_2", "D_7_3", "T_27", "-I_49", ...
    static std::optional<SphericalName> parse(const std::string& s);

    friend bool operator==(const SphericalName& a, const SphericalName& b);
};

// catalog data of a T/O/I name: central b and the three normalized legs
struct SphericalShape {
    Integer b;
    Integer beta2, beta3;  // legs (2,1), (m2, beta2), (m3, beta3)
    Integer m2, m3;
};

struct NameResult {
    std::optional<SphericalName> name;
    std::string reason;  // set when name is empty: why the input is not spherical
};

// identify the oriented homeomorphism type of inv within the catalog
NameResult spherical_name(const SeifertInvariant& inv);

// normalized Seifert invariant of the named oriented manifold
SeifertInvariant spherical_from_name(const SphericalName& name);

// k residue and legs for a T/O/I subscript; throws on invalid subscripts
SphericalShape catalog_shape(Family f, const Integer& subscript);

// true when the names denote homeomorphic oriented manifolds
bool same_spherical(const SphericalName& a, const SphericalName& b);

/**
 * Complementary-legs reduction: legs i < j with bi/ai + bj/aj = 1 removed and
 * b lowered by one.  The reduced manifold is rational homology cobordant to
 * the input, so cobordism-order questions transfer to it; with three legs it
 * is the lens space recorded in `lens`.
 */
struct LegReduction {
    std::size_t i = 0, j = 0;               // removed pair (indices into the normalized input)
    SeifertInvariant reduced;               // (b-1; remaining legs)
    std::optional<SphericalName> lens;      // set when the reduction is a lens space
};
std::optional<LegReduction> complementary_reduction(const SeifertInvariant& inv);

}  // namespace spherical

#endif
