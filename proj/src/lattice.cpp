#include "spherical/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "spherical/numtheory.hpp"

namespace spherical {

GramLattice gram_from_plumbing(const PlumbingGraph& graph) {
    std::size_t r = graph.rank();
    GramLattice l;
    l.g.assign(r, std::vector<Integer>(r, 0));
    for (std::size_t i = 0; i < r; ++i) l.g[i][i] = graph.weights[i];
    for (const auto& [a, b] : graph.edges) {
        if (a >= r || b >= r || a == b)
            throw std::invalid_argument("gram_from_plumbing: bad edge");
        l.g[a][b] = 1;
        l.g[b][a] = 1;
    }
    return l;
}

GramLattice direct_sum(const GramLattice& l, std::size_t k) {
    std::size_t r = l.rank();
    GramLattice s;
    s.g.assign(r * k, std::vector<Integer>(r * k, 0));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) s.g[c * r + i][c * r + j] = l.g[i][j];
    return s;
}

namespace {

void check_square_symmetric(const GramLattice& l, const char* who) {
    for (std::size_t i = 0; i < l.rank(); ++i) {
        if (l.g[i].size() != l.rank()) throw std::invalid_argument(std::string(who) + ": not square");
        for (std::size_t j = 0; j < i; ++j)
            if (l.g[i][j] != l.g[j][i]) throw std::invalid_argument(std::string(who) + ": not symmetric");
    }
}

}  // namespace

Integer det(const GramLattice& l) {
    check_square_symmetric(l, "det");
    std::size_t n = l.rank();
    if (n == 0) return 1;
    auto a = l.g;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

bool is_negative_definite(const GramLattice& l) {
    check_square_symmetric(l, "is_negative_definite");
    std::size_t n = l.rank();
    auto a = l.g;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // after k elimination rounds a[k][k] is the (k+1)-st leading minor
        bool want_negative = (k % 2 == 0);
        if (a[k][k] == 0) return false;
        if ((a[k][k] < 0) != want_negative) return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return true;
}

Integer i_value(const std::vector<Integer>& hj_terms) {
    Integer s = 0;
    for (const auto& t : hj_terms) s += abs(t) - 3;
    return s;
}

bool verify_embedding(const GramLattice& l, const DiagonalEmbedding& e) {
    std::size_t r = l.rank();
    if (e.cols.size() != r) return false;
    for (const auto& c : e.cols)
        if (c.size() != e.n) return false;
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
            Integer dot = 0;
            for (std::size_t c = 0; c < e.n; ++c)
                dot += Integer(e.cols[j][c]) * Integer(e.cols[k][c]);
            if (-dot != l.g[j][k]) return false;
        }
    return true;
}

namespace {

long isqrt_floor(long x) {
    if (x < 0) return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

long to_long(const Integer& z, const char* who) {
    if (!z.fits_slong_p()) throw std::invalid_argument(std::string(who) + ": entry out of range");
    return z.get_si();
}

/**
 * Backtracking search over images of the basis vectors, processed in order
 * of increasing norm.  The signed-permutation automorphisms of the target
 * are quotiented by demanding that coordinates untouched so far enter only
 * as a consecutive block of positive non-increasing values at the end of
 * each new image vector.
 */
struct Searcher {
    std::size_t n = 0, r = 0;
    std::vector<long> norm;                    // required norms, search order
    std::vector<std::vector<long>> need;       // need[j][k] = required dot, k < j
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    bool find_all = false;
    bool done = false;

    std::vector<std::vector<long>> cols;       // images, search order
    std::vector<long> cur;                     // candidate for the current j
    std::size_t used = 0;                      // touched target coordinates
    std::vector<std::vector<std::vector<long>>> found;

    bool tick() {
        if (nodes >= budget) {
            out_of_budget = true;
            done = true;
            return false;
        }
        ++nodes;
        return true;
    }

    void run() {
        cur.assign(n, 0);
        cols.assign(r, std::vector<long>(n, 0));
        place(0);
    }

    void place(std::size_t j) {
        if (done) return;
        if (j == r) {
            found.push_back(cols);
            if (!find_all) done = true;
            return;
        }
        // suffix norms of the placed vectors over the used coordinates
        std::vector<std::vector<long>> suffix(j, std::vector<long>(used + 1, 0));
        for (std::size_t k = 0; k < j; ++k)
            for (std::size_t c = used; c-- > 0;)
                suffix[k][c] = suffix[k][c + 1] + cols[k][c] * cols[k][c];
        std::vector<long> partial(j, 0);
        old_dfs(j, 0, norm[j], partial, suffix);
    }

    // assign cur on the already-used coordinates c, c+1, ...
    void old_dfs(std::size_t j, std::size_t c, long rem, std::vector<long>& partial,
                 const std::vector<std::vector<long>>& suffix) {
        if (done) return;
        for (std::size_t k = 0; k < j; ++k) {
            long deficit = need[j][k] - partial[k];
            // Cauchy-Schwarz: the rest of the dot is bounded by the norms left
            if (static_cast<__int128>(deficit) * deficit >
                static_cast<__int128>(rem) * suffix[k][c])
                return;
        }
        if (c == used) {
            for (std::size_t k = 0; k < j; ++k)
                if (partial[k] != need[j][k]) return;
            fresh_dfs(j, rem, rem, used);
            return;
        }
        long vmax = isqrt_floor(rem);
        for (long v = vmax; v >= -vmax; --v) {
            if (!tick()) return;
            cur[c] = v;
            for (std::size_t k = 0; k < j; ++k) partial[k] += v * cols[k][c];
            old_dfs(j, c + 1, rem - v * v, partial, suffix);
            for (std::size_t k = 0; k < j; ++k) partial[k] -= v * cols[k][c];
            cur[c] = 0;
            if (done) return;
        }
    }

    // append the canonical positive non-increasing block on fresh coordinates
    void fresh_dfs(std::size_t j, long rem, long cap, std::size_t pos) {
        if (done) return;
        if (rem == 0) {
            cols[j] = cur;
            std::size_t prev_used = used;
            used = pos;
            place(j + 1);
            used = prev_used;
            // deeper levels share cur and zero it while backtracking; the
            // frames above this one still expect their path entries in place
            cur = cols[j];
            return;
        }
        if (pos >= n) return;
        long t0 = std::min(cap, isqrt_floor(rem));
        for (long t = t0; t >= 1; --t) {
            if (!tick()) return;
            cur[pos] = t;
            fresh_dfs(j, rem - t * t, t, pos + 1);
            cur[pos] = 0;
            if (done) return;
        }
    }
};

// search-order permutation: increasing norm, ties by original index; small
// norms admit the fewest images, so the rigid part of the lattice is pinned
// before the wide large-norm vectors branch
std::vector<std::size_t> search_order(const GramLattice& l) {
    std::vector<std::size_t> perm(l.rank());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return l.g[a][a] > l.g[b][b]; });
    return perm;  // least negative diagonal first
}

Searcher make_searcher(const GramLattice& l, std::size_t n, std::uint64_t budget,
                       const std::vector<std::size_t>& perm) {
    Searcher s;
    s.n = n;
    s.r = l.rank();
    s.budget = budget;
    s.norm.resize(s.r);
    s.need.assign(s.r, {});
    for (std::size_t j = 0; j < s.r; ++j) {
        s.norm[j] = to_long(-l.g[perm[j]][perm[j]], "find_embedding");
        if (s.norm[j] <= 0) throw std::invalid_argument("find_embedding: non-negative diagonal");
        s.need[j].resize(j);
        for (std::size_t k = 0; k < j; ++k)
            s.need[j][k] = to_long(-l.g[perm[j]][perm[k]], "find_embedding");
    }
    return s;
}

DiagonalEmbedding unpermute(const std::vector<std::vector<long>>& cols, std::size_t n,
                            const std::vector<std::size_t>& perm) {
    DiagonalEmbedding e;
    e.n = n;
    e.cols.assign(cols.size(), {});
    for (std::size_t j = 0; j < cols.size(); ++j) e.cols[perm[j]] = cols[j];
    return e;
}

// orbit invariant under signed permutations of the target: rows with the
// first nonzero entry made positive, sorted
std::vector<std::vector<long>> canonical_rows(const DiagonalEmbedding& e) {
    std::vector<std::vector<long>> rows(e.n, std::vector<long>(e.cols.size(), 0));
    for (std::size_t j = 0; j < e.cols.size(); ++j)
        for (std::size_t c = 0; c < e.n; ++c) rows[c][j] = e.cols[j][c];
    for (auto& row : rows) {
        for (long v : row) {
            if (v > 0) break;
            if (v < 0) {
                for (auto& x : row) x = -x;
                break;
            }
        }
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

DiagonalEmbedding from_rows(const std::vector<std::vector<long>>& rows, std::size_t rank) {
    DiagonalEmbedding e;
    e.n = rows.size();
    e.cols.assign(rank, std::vector<long>(rows.size(), 0));
    for (std::size_t c = 0; c < rows.size(); ++c)
        for (std::size_t j = 0; j < rank; ++j) e.cols[j][c] = rows[c][j];
    return e;
}

}  // namespace

SearchOutcome find_embedding(const GramLattice& l, std::size_t n, std::uint64_t budget) {
    check_square_symmetric(l, "find_embedding");
    if (n < l.rank()) throw std::invalid_argument("find_embedding: target rank too small");
    if (!is_negative_definite(l))
        throw std::invalid_argument("find_embedding: lattice must be negative definite");
    SearchOutcome out;
    if (l.rank() == 0) {
        out.status = SearchOutcome::Status::found;
        out.embedding = DiagonalEmbedding{n, {}};
        return out;
    }
    if (n == l.rank() && !is_perfect_square(abs(det(l)))) {
        out.status = SearchOutcome::Status::none;  // full-rank index is squared
        return out;
    }
    auto perm = search_order(l);
    Searcher s = make_searcher(l, n, budget, perm);
    s.run();
    out.nodes = s.nodes;
    if (!s.found.empty()) {
        out.status = SearchOutcome::Status::found;
        out.embedding = unpermute(s.found.front(), n, perm);
        if (!verify_embedding(l, *out.embedding))
            throw std::logic_error("find_embedding: unsound result");
        return out;
    }
    out.status = s.out_of_budget ? SearchOutcome::Status::inconclusive : SearchOutcome::Status::none;
    return out;
}

EnumerationOutcome all_embeddings(const GramLattice& l, std::size_t n, std::uint64_t budget) {
    check_square_symmetric(l, "all_embeddings");
    if (n < l.rank()) throw std::invalid_argument("all_embeddings: target rank too small");
    if (!is_negative_definite(l))
        throw std::invalid_argument("all_embeddings: lattice must be negative definite");
    EnumerationOutcome out;
    if (l.rank() == 0) {
        out.complete = true;
        out.reps.push_back(DiagonalEmbedding{n, {}});
        return out;
    }
    if (n == l.rank() && !is_perfect_square(abs(det(l)))) {
        out.complete = true;
        return out;
    }
    auto perm = search_order(l);
    Searcher s = make_searcher(l, n, budget, perm);
    s.find_all = true;
    s.run();
    out.nodes = s.nodes;
    out.complete = !s.out_of_budget;
    std::map<std::vector<std::vector<long>>, DiagonalEmbedding> orbits;
    for (const auto& cols : s.found) {
        DiagonalEmbedding e = unpermute(cols, n, perm);
        orbits.emplace(canonical_rows(e), e);
    }
    for (const auto& [rows, e] : orbits) {
        DiagonalEmbedding rep = from_rows(rows, l.rank());
        if (!verify_embedding(l, rep)) throw std::logic_error("all_embeddings: unsound result");
        out.reps.push_back(rep);
    }
    return out;
}

BoundsOutcome lens_bounds_qhb(const Integer& p, const Integer& q, std::uint64_t budget) {
    if (q < 1 || p <= q || gcd(p, q) != 1)
        throw std::invalid_argument("lens_bounds_qhb: need p > q > 0 coprime");
    BoundsOutcome out;
    if (!is_perfect_square(p)) {
        out.status = BoundsOutcome::Status::no;
        out.reason = "|H1| is not a perfect square";
        return out;
    }
    auto t1 = hj_cf(p, q), t2 = hj_cf(p, p - q);
    // I(t1) + I(t2) = -2, so the smaller side is < 0 (the criterion's side)
    const auto& side = i_value(t1) <= i_value(t2) ? t1 : t2;
    GramLattice l = gram_from_plumbing(PlumbingGraph::chain(side));
    auto search = find_embedding(l, l.rank(), budget);
    switch (search.status) {
        case SearchOutcome::Status::found:
            out.status = BoundsOutcome::Status::yes;
            out.reason = "equal-rank embedding of the small chain";
            out.certificate = search.embedding;
            break;
        case SearchOutcome::Status::none:
            out.status = BoundsOutcome::Status::no;
            out.reason = "no equal-rank embedding of the small chain";
            break;
        case SearchOutcome::Status::inconclusive:
            out.status = BoundsOutcome::Status::inconclusive;
            out.reason = "embedding search budget exhausted";
            break;
    }
    return out;
}

bool lattice_member(const std::vector<Integer>& v,
                    const std::vector<std::vector<Integer>>& columns) {
    const std::size_t m = v.size();
    for (const auto& col : columns)
        if (col.size() != m) throw std::invalid_argument("lattice_member: dimension mismatch");
    auto w = columns;
    std::vector<Integer> x = v;
    std::size_t c = 0;
    for (std::size_t row = 0; row < m; ++row) {
        if (c >= w.size()) {
            if (x[row] != 0) return false;
            continue;
        }
        // sweep all nonzeros in this row into one pivot column
        std::size_t pivot = w.size();
        for (std::size_t j = c; j < w.size(); ++j) {
            if (w[j][row] == 0) continue;
            if (pivot == w.size()) {
                pivot = j;
                continue;
            }
            Integer a = w[pivot][row], b = w[j][row], g, u, t;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Integer fa = a / g, fb = b / g;
            for (std::size_t s = 0; s < m; ++s) {
                Integer np = u * w[pivot][s] + t * w[j][s];
                Integer nj = fb * w[pivot][s] - fa * w[j][s];
                w[pivot][s] = np;
                w[j][s] = nj;
            }
        }
        if (pivot == w.size()) {
            if (x[row] != 0) return false;
            continue;
        }
        if (x[row] % w[pivot][row] != 0) return false;
        Integer f = x[row] / w[pivot][row];
        for (std::size_t s = 0; s < m; ++s) x[s] -= f * w[pivot][s];
        std::swap(w[pivot], w[c]);
        ++c;
    }
    for (const auto& entry : x)
        if (entry != 0) return false;
    return true;
}

std::string gram_to_json(const GramLattice& l) {
    nlohmann::json j;
    j["rank"] = l.rank();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : l.g) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(to_long(e, "gram_to_json"));
        rows.push_back(r);
    }
    j["gram"] = rows;
    return j.dump();
}

std::optional<GramLattice> gram_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("rank") || !j.contains("gram")) return std::nullopt;
    if (!j["rank"].is_number_unsigned() || !j["gram"].is_array()) return std::nullopt;
    std::size_t r = j["rank"].get<std::size_t>();
    if (j["gram"].size() != r) return std::nullopt;
    GramLattice l;
    l.g.assign(r, std::vector<Integer>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        if (!j["gram"][i].is_array() || j["gram"][i].size() != r) return std::nullopt;
        for (std::size_t k = 0; k < r; ++k) {
            if (!j["gram"][i][k].is_number_integer()) return std::nullopt;
            l.g[i][k] = Integer(j["gram"][i][k].get<long>());
        }
    }
    try {
        check_square_symmetric(l, "gram_from_json");
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return l;
}

std::string embedding_to_json(const GramLattice& l, const DiagonalEmbedding& e) {
    nlohmann::json j;
    j["target_rank"] = e.n;
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& col : e.cols) cols.push_back(col);
    j["columns"] = cols;
    j["gram"] = nlohmann::json::parse(gram_to_json(l));
    j["sound"] = verify_embedding(l, e);
    return j.dump();
}

}  // namespace spherical
