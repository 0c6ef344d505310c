/**
 * @file obstruct.hpp
 * @brief Obstructions to bounding rational homology balls and to finite
 *        order in the rational homology cobordism group, and the order
 *        classification of the spherical catalog built from them.
 *
 * Each obstruction is a pure function producing a self-contained report:
 * what was tested, at which parameters, and the witness when it obstructs.
 * classify_order chains them in a fixed audit order and marks the report
 * that settled the verdict as decisive.
 */
#ifndef SPHERICAL_OBSTRUCT_HPP
#define SPHERICAL_OBSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spherical/dinv.hpp"
#include "spherical/lattice.hpp"
#include "spherical/rational.hpp"
#include "spherical/seifert.hpp"
#include "spherical/surgery.hpp"

namespace spherical {

/**
 * Wu surface of a plumbing with odd-determinant Gram matrix: the unique 0/1
 * vertex vector w with w.v = v.v (mod 2) for every vertex v.  Throws
 * std::domain_error when the determinant is even (the solution is not
 * unique).
 */
std::vector<int> wu_surface(const PlumbingGraph& g);

/**
 * mu_bar invariant of the boundary of the plumbed 4-manifold X: sigma(X) -
 * [Sigma]^2 with Sigma the Wu surface.  Requires X negative definite (so
 * sigma = -rank) with odd determinant.
 */
Integer mu_bar(const PlumbingGraph& g);

// correction term of the spin structure on the boundary, -mu_bar/4
Rational d_spin_plumbing(const PlumbingGraph& g);

enum class ObstructionVerdict { obstructs, passes, inapplicable, inconclusive };
const char* to_string(ObstructionVerdict v);

struct ObstructionReport {
    std::string id;  // square_h1, integral_d, spin_d_mubar, donaldson_embed,
                     // donaldson_order, greene_jabuka, d_sum, max_min,
                     // complementary_reduction, lisca_lens
    ObstructionVerdict verdict = ObstructionVerdict::inapplicable;
    std::string witness;   // nonempty whenever verdict == obstructs
    std::string params;    // the inputs and settings the verdict was computed at
    bool decisive = false; // set by classify_order on the report that settled it
};

/**
 * A rational homology ball filling forces |H1| to be a perfect square;
 * obstructs (bounding) when it is not.
 */
ObstructionReport obstruct_square_h1(const SeifertInvariant& inv);

/**
 * On a surgery manifold S^3_{m^2/q}(K), a label that must extend over any
 * rational homology ball but has nonzero (integral) correction term
 * obstructs bounding.  Inapplicable when |H1| is not a perfect square.
 */
ObstructionReport obstruct_integral_d(const SurgeryDescription& desc);

/**
 * Nonzero correction term of the spin structure obstructs finite order.
 * Computed from the plumbing mu_bar and, for catalog T/O/I names,
 * cross-checked against the surgery-side value (mismatch throws
 * std::logic_error).  Inapplicable when |H1| is even.
 */
ObstructionReport obstruct_spin_d(const SeifertInvariant& inv);

/**
 * Donaldson embedding test at equal rank for the bounding question: the
 * canonical plumbing lattice must embed into the diagonal lattice of its own
 * rank when the manifold bounds a rational homology ball.
 */
ObstructionReport obstruct_donaldson_embed(const SeifertInvariant& inv,
                                           std::uint64_t budget = kDefaultBudget);

/**
 * Donaldson order test on an explicit lattice: order n requires the n-fold
 * direct sum to embed into the diagonal lattice of rank n*rank.  Failure
 * obstructs order n (and every divisor of n).  `what` names the lattice in
 * the report.
 */
ObstructionReport obstruct_donaldson_order(const GramLattice& l, const std::string& what,
                                           std::size_t n,
                                           std::uint64_t budget = kDefaultBudget);

/**
 * Linear-chain lattice of a surgery slope |r| = p/q: the chain on the
 * Hirzebruch-Jung expansion of p/q.  The order of the surgered manifold
 * dominates the order of L(p,q) exactly when I(chain) < 0, so chain
 * non-embeddings transfer; `applicable` records the I < 0 test.
 */
struct SlopeChain {
    std::vector<Integer> terms;  // hj expansion of the slope
    Integer i_val;
    bool applicable = false;     // i_val < 0
};
SlopeChain slope_chain(const SurgeryDescription& desc);

/**
 * Number of classes of {+-1}^{5n} modulo translations by the block kernel
 * lattice (n diagonal copies of the pinned 5x4 block), counted by exhaustive
 * membership tests.  variant selects between the two admissible block sign
 * patterns; both give 11^n.
 */
Integer greene_jabuka_count(std::size_t n, int variant = 0);

// values of the linear functional cutting out the block kernel on {+-1}^5
std::vector<Integer> greene_jabuka_l_image(int variant = 0);

/**
 * Spin^c counting bound for the rank-5 catalog family Y(b; (2,1), (3,2),
 * (5,1)): embedding rigidity caps the vanishing-correction-term classes at
 * 11^n while order n demands (30(b-2)+19)^{n/2} of them, so every finite
 * order is impossible once 30(b-2)+19 exceeds 11^2.  The threshold is
 * recomputed from greene_jabuka_count(1), not assumed.
 */
ObstructionReport gj_bound(const Integer& b);

/**
 * When |H1| is square-free, finite order forces the correction terms to sum
 * to zero over all spin^c structures; a nonzero sum obstructs.  Inapplicable
 * when |H1| has a square factor.
 */
ObstructionReport obstruct_d_sum(const SurgeryDescription& desc);

/**
 * For |H1| = p*q odd with p prime and gcd(p,q) = 1, finite order forces
 * max + min of the correction terms over the coset A = {spin + n*q} to
 * vanish; a nonzero value obstructs.
 */
ObstructionReport obstruct_max_min(const SurgeryDescription& desc,
                                   const Integer& p_prime, const Integer& q_part);

enum class OrderKind {
    order_1,
    order_2,
    reduction_to_lens,  // order equals the order of `lens`
    infinite,
    excluded_up_to,     // finite orders 1..excluded_up_to ruled out, rest open
    unknown,
};
const char* to_string(OrderKind k);

struct OrderVerdict {
    OrderKind kind = OrderKind::unknown;
    std::string detail;                 // justification summary / citations
    long excluded_up_to = 0;            // set for excluded_up_to
    std::optional<SphericalName> lens;  // set for reduction_to_lens
};

struct ClassifyCaps {
    std::size_t n_max = 2;                     // largest direct-sum multiplicity searched
    std::uint64_t budget = kDefaultBudget;     // per-search node budget
};

struct Classification {
    SphericalName name;
    OrderVerdict verdict;
    std::vector<ObstructionReport> reports;
};

/**
 * Order of the named manifold in the rational homology cobordism group.
 *
 * Pipeline: complementary-legs reduction (D and the (2,1),(3,1),(3,2)
 * family) hands off to the lens-space certificates; otherwise the bounding
 * filters run first (square |H1|, equal-rank Donaldson, integral correction
 * terms on extendable labels), then the order obstructions in order: spin
 * correction term, Donaldson direct sums (plumbing and slope chain),
 * spin^c counting bound, correction-term sum, max+min.  Verdicts of
 * "infinite" carry the citation they lean on in `detail`; order 1 for the
 * subscript-49 member of the rank-5 family is the one externally certified
 * verdict (an explicit ribbon filling), corroborated by every implemented
 * obstruction passing.
 */
Classification classify_order(const SphericalName& name, const ClassifyCaps& caps = {});

// classify_order over the full T/O/I catalog with 2 <= b <= b_max
std::vector<Classification> order_table(const Integer& b_max,
                                        const ClassifyCaps& caps = {});

// "name,b,order" rows; order is 1, 2, infinite, or unknown(<=n excluded)
std::string order_table_csv(const std::vector<Classification>& rows);

// {"manifold": ..., "verdict": ..., "reports": [{id, verdict, witness, params}]}
std::string classification_to_json(const Classification& c);

}  // namespace spherical

#endif
