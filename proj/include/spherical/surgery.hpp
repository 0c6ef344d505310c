/**
 * @file surgery.hpp
 * @brief Dehn surgery on torus knots: Seifert invariants of the result,
 *        trefoil descriptions of catalog manifolds, spin^c labels.
 */
#ifndef SPHERICAL_SURGERY_HPP
#define SPHERICAL_SURGERY_HPP

#include <optional>
#include <string>
#include <vector>

#include "spherical/rational.hpp"
#include "spherical/seifert.hpp"

namespace spherical {

struct TorusKnot {
    Integer p = 2, q = 3;
    bool mirrored = false;  // false: right-handed T(p,q); true: its mirror

    std::string str() const;  // "T(2,3)" or "T(2,3)^m"
    friend bool operator==(const TorusKnot& a, const TorusKnot& b) {
        return a.p == b.p && a.q == b.q && a.mirrored == b.mirrored;
    }
};

/**
 * The oriented manifold sign * S^3_r(knot).  |H1| = |numerator(r)|, so r = 0
 * never describes a rational homology sphere.
 */
struct SurgeryDescription {
    TorusKnot knot;
    Rational r;
    int sign = +1;

    std::string str() const;  // "surgery(T(2,3), 77/12)"
    static std::optional<SurgeryDescription> parse(const std::string& s);
};

/**
 * Seifert invariant of S^3_r(T(p,q)) for the right-handed positive torus
 * knot: the orientation reversal of Y(2; (p,q*), (q,p*), (m,n)) with
 * q* = q^{-1} (mod p), p* = p^{-1} (mod q) and m/n = (pq-r)/(pq-r-1) in
 * lowest terms.  Result is normalized.  Throws std::domain_error on the
 * reducible slope r = pq.
 */
SeifertInvariant moser(const Integer& p, const Integer& q, const Rational& r);

// normalized Seifert invariant of sign * S^3_r(knot), mirrors included
SeifertInvariant surgered_manifold(const SurgeryDescription& desc);

/**
 * Trefoil surgery description of a T/O/I catalog manifold: a coefficient r
 * with Y = S^3_r(T(2,3)) or, when only the mirror works, Y = S^3_r(T(2,3)^m).
 * The result round-trips through surgered_manifold.  Throws
 * std::invalid_argument for C/D names (no trefoil description in scope).
 */
SurgeryDescription surgery_of_spherical(const SphericalName& name);

/**
 * Label of the self-conjugate spin^c structure on S^3_{p/q}(K), p odd: the
 * unique i with 2i = p+q-1 (mod p), the fixed point of i -> p+q-1-i.
 * Throws std::domain_error for even p (two spin structures).
 */
Integer spin_label(const Integer& p, const Integer& q);

// one orbit {i0 + m*k (mod m^2) : k = 0..m-1} of candidate extendable labels
struct SpincOrbit {
    Integer i0;
    std::vector<Integer> labels;  // in k order, reduced mod m^2
};

/**
 * Spin^c structures on S^3_{m^2/q}(K) that can extend over a rational
 * homology ball: the m labels i0 + m*k.  For odd m the base label i0 is
 * (q-1)/2 (q odd) or (m+q-1)/2 (q even) and one orbit is returned; for even
 * m both parity candidates are returned and the caller selects by testing
 * integrality of d.
 */
std::vector<SpincOrbit> extendable_spinc(const Integer& m, const Integer& q);

}  // namespace spherical

#endif
