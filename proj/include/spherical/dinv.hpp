/**
 * @file dinv.hpp
 * @brief Heegaard Floer correction terms of lens spaces (recursive and
 *        Dedekind-sum closed forms) and of trefoil surgeries via the
 *        Ni-Wu formula.
 *
 * Label convention: spin^c structures on S^3_{p/q}(K) (and on the lens space
 * L(p,q) = S^3_{p/q}(U)) carry the standard enumeration i in Z/p with
 * conjugation acting by i -> p+q-1-i.
 */
#ifndef SPHERICAL_DINV_HPP
#define SPHERICAL_DINV_HPP

#include <map>
#include <string>
#include <vector>

#include "spherical/rational.hpp"
#include "spherical/surgery.hpp"

namespace spherical {

/**
 * d(-L(p,q), i) by the Casson-Walker style recursion
 *   d(-L(p,q), i) = (pq - (2i+1-p-q)^2) / (4pq) - d(-L(q, p mod q), i mod q)
 * with d(S^3) = 0.  Requires p > 0, gcd(p,q) = 1, 0 <= i < p; q is reduced
 * mod p first.
 */
Rational d_neg_lens_recursive(const Integer& p, const Integer& q, const Integer& i);

/**
 * d(L(p,q), i) in closed form from Dedekind-Rademacher sums,
 *   d = 2 s(q,p;i) + s(q,p) - 1/(2p),
 * with the sawtooth convention pinned in numtheory.  Equals
 * -d_neg_lens_recursive(p,q,i) (regression-tested for all p <= 200).
 */
Rational d_lens_closed(const Integer& p, const Integer& q, const Integer& i);

// d(L(p,q), i); the recursion is the production path
Rational d_lens(const Integer& p, const Integer& q, const Integer& i);

struct VSequence {
    std::string knot;
    std::vector<Integer> v;  // trailing zeros dropped

    // V_s, zero beyond the stored prefix
    Integer at(const Integer& s) const;
};

// V_0 = 1, V_s = 0 for s > 0 (the right-handed trefoil)
VSequence v_sequence_trefoil();

/**
 * d(sign * S^3_r(knot), i) for the trefoil via Ni-Wu:
 *   d(S^3_{p/q}(K), i) = d(L(p,q), i) - 2 max{ V_{floor(i/q)}, V_{floor((p+q-1-i)/q)} }
 * for r = p/q > 0 and the right-handed trefoil.  Negative r is computed as
 * -d of the mirror at the same label; sign < 0 negates at the same label.
 * 0 <= i < |numerator(r)|.
 */
Rational d_surgery(const SurgeryDescription& desc, const Integer& i);

struct DInvariantTable {
    std::string manifold;            // text form of the description
    std::vector<Rational> values;    // indexed by label 0..p-1

    std::string csv() const;  // "label,d" rows, exact fractions
};

// full table over all |H1| labels
DInvariantTable d_table(const SurgeryDescription& desc);

// sum of d over all spin^c structures
Rational d_sum_all(const SurgeryDescription& desc);

// d at the self-conjugate label; requires odd |H1|
Rational d_spin(const SurgeryDescription& desc);

// full table for the lens space L(p,q)
DInvariantTable d_lens_table(const Integer& p, const Integer& q);

}  // namespace spherical

#endif
