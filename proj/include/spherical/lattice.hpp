/**
 * @file lattice.hpp
 * @brief Negative-definite Gram lattices from plumbings and exhaustive
 *        embedding search into the diagonal lattice <-1>^n.
 *
 * An embedding is an integer matrix whose columns are the images of the
 * basis vectors; soundness means -A^T A = G exactly.  Searches are complete
 * backtracking runs quotiented by the signed-permutation automorphisms of
 * the target, with an explicit node budget so a failed search is either a
 * proof of non-existence or an honest "inconclusive".
 */
#ifndef SPHERICAL_LATTICE_HPP
#define SPHERICAL_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spherical/rational.hpp"
#include "spherical/seifert.hpp"

namespace spherical {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct GramLattice {
    std::vector<std::vector<Integer>> g;  // symmetric, row-major

    std::size_t rank() const { return g.size(); }
};

// diagonal = vertex weights, off-diagonal 1 exactly on edges
GramLattice gram_from_plumbing(const PlumbingGraph& graph);

// block sum of k copies
GramLattice direct_sum(const GramLattice& l, std::size_t k);

// exact determinant (fraction-free elimination)
Integer det(const GramLattice& l);

// exact sign test on all leading principal minors
bool is_negative_definite(const GramLattice& l);

// I = sum(|a_i| - 3) over a linear chain with weights -a_i, given as the
// positive continued-fraction entries a_i
Integer i_value(const std::vector<Integer>& hj_terms);

struct DiagonalEmbedding {
    std::size_t n = 0;                    // target rank
    std::vector<std::vector<long>> cols;  // cols[j] in Z^n, image of basis j
};

// exact check of -A^T A = G
bool verify_embedding(const GramLattice& l, const DiagonalEmbedding& e);

struct SearchOutcome {
    enum class Status { found, none, inconclusive };
    Status status = Status::none;
    std::optional<DiagonalEmbedding> embedding;  // set when found
    std::uint64_t nodes = 0;
};

/**
 * Complete search for one embedding of l into <-1>^n.  "none" is a proof;
 * "inconclusive" reports only that the node budget ran out.  Requires l
 * negative definite and n >= rank.  At n = rank a non-square |det| short
 * circuits to "none" (full-rank sublattices of Z^n have square index).
 */
SearchOutcome find_embedding(const GramLattice& l, std::size_t n,
                             std::uint64_t budget = kDefaultBudget);

struct EnumerationOutcome {
    bool complete = false;  // false when the budget interrupted the run
    std::vector<DiagonalEmbedding> reps;
    std::uint64_t nodes = 0;
};

/**
 * All embeddings of l into <-1>^n modulo signed permutations of the target
 * basis, one canonical representative each (rows sign-normalized so the
 * first nonzero entry is positive, then sorted).  Source basis vectors keep
 * their given order and signs.
 */
EnumerationOutcome all_embeddings(const GramLattice& l, std::size_t n,
                                  std::uint64_t budget = kDefaultBudget);

struct BoundsOutcome {
    enum class Status { yes, no, inconclusive };
    Status status = Status::no;
    std::string reason;
    std::optional<DiagonalEmbedding> certificate;  // set on "yes"
};

/**
 * Whether the lens space L(p,q) (equivalently -L(p,q)) bounds a rational
 * homology ball, decided by the embedding criterion: p must be a perfect
 * square, and the side of {hj(p,q), hj(p,p-q)} with I < 0 must embed at
 * equal rank.  Requires p > q > 0 coprime.
 */
BoundsOutcome lens_bounds_qhb(const Integer& p, const Integer& q,
                              std::uint64_t budget = kDefaultBudget);

// integer solvability of columns * x = v
bool lattice_member(const std::vector<Integer>& v,
                    const std::vector<std::vector<Integer>>& columns);

// JSON round-trip of a Gram matrix: {"rank": r, "gram": [[...], ...]}
std::string gram_to_json(const GramLattice& l);
std::optional<GramLattice> gram_from_json(const std::string& text);

// embedding as JSON with the soundness check recorded
std::string embedding_to_json(const GramLattice& l, const DiagonalEmbedding& e);

}  // namespace spherical

#endif
