#include "spherical/obstruct.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "spherical/numtheory.hpp"

namespace spherical {

namespace {

std::string istr(const Integer& x) { return x.get_str(); }

std::string terms_str(const std::vector<Integer>& terms) {
    std::string s = "[";
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k) s += ",";
        s += istr(terms[k]);
    }
    return s + "]";
}

bool is_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

ObstructionReport report(std::string id, ObstructionVerdict v, std::string witness,
                         std::string params) {
    ObstructionReport r;
    r.id = std::move(id);
    r.verdict = v;
    r.witness = std::move(witness);
    r.params = std::move(params);
    return r;
}

}  // namespace

const char* to_string(ObstructionVerdict v) {
    switch (v) {
        case ObstructionVerdict::obstructs: return "obstructs";
        case ObstructionVerdict::passes: return "passes";
        case ObstructionVerdict::inapplicable: return "inapplicable";
        case ObstructionVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(OrderKind k) {
    switch (k) {
        case OrderKind::order_1: return "order 1";
        case OrderKind::order_2: return "order 2";
        case OrderKind::reduction_to_lens: return "reduction to lens";
        case OrderKind::infinite: return "infinite";
        case OrderKind::excluded_up_to: return "excluded up to";
        case OrderKind::unknown: return "unknown";
    }
    return "?";
}

std::vector<int> wu_surface(const PlumbingGraph& g) {
    const std::size_t r = g.rank();
    if (r == 0) return {};
    GramLattice l = gram_from_plumbing(g);
    if (det(l) % 2 == 0)
        throw std::domain_error("wu_surface: even determinant, no unique Wu vector");
    // GF(2) elimination on [G | diag(G)]; the odd determinant makes the
    // system uniquely solvable.
    std::vector<std::vector<int>> m(r, std::vector<int>(r + 1, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            m[i][j] = mpz_odd_p(l.g[i][j].get_mpz_t()) ? 1 : 0;
        m[i][r] = m[i][i];
    }
    std::vector<std::size_t> pivot_col(r, 0);
    std::size_t row = 0;
    for (std::size_t col = 0; col < r && row < r; ++col) {
        std::size_t p = row;
        while (p < r && m[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(m[p], m[row]);
        for (std::size_t i = 0; i < r; ++i)
            if (i != row && m[i][col]) {
                for (std::size_t j = col; j <= r; ++j) m[i][j] ^= m[row][j];
            }
        pivot_col[row] = col;
        ++row;
    }
    if (row < r) throw std::logic_error("wu_surface: singular system despite odd determinant");
    std::vector<int> w(r, 0);
    for (std::size_t i = 0; i < r; ++i) w[pivot_col[i]] = m[i][r];
    return w;
}

Integer mu_bar(const PlumbingGraph& g) {
    if (g.rank() == 0) return 0;
    GramLattice l = gram_from_plumbing(g);
    if (!is_negative_definite(l))
        throw std::domain_error("mu_bar: plumbing lattice is not negative definite");
    std::vector<int> w = wu_surface(g);
    Integer sq = 0;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        if (!w[i]) continue;
        for (std::size_t j = 0; j < l.rank(); ++j)
            if (w[j]) sq += l.g[i][j];
    }
    return Integer(-static_cast<long>(g.rank())) - sq;
}

Rational d_spin_plumbing(const PlumbingGraph& g) {
    return Rational(-mu_bar(g), Integer(4));
}

ObstructionReport obstruct_square_h1(const SeifertInvariant& inv) {
    SeifertInvariant y = normalize(inv);
    Integer h = h1_order(y);
    if (h == 0)
        return report("square_h1", ObstructionVerdict::inapplicable, "",
                      "zero Euler number: not a rational homology sphere");
    std::string params = "|H1| = " + istr(h);
    if (auto m = is_perfect_square(h))
        return report("square_h1", ObstructionVerdict::passes, "",
                      params + " = " + istr(*m) + "^2");
    return report("square_h1", ObstructionVerdict::obstructs,
                  "|H1| = " + istr(h) + " is not a perfect square", params);
}

ObstructionReport obstruct_integral_d(const SurgeryDescription& desc) {
    Integer p = abs(desc.r.num());
    Integer q = desc.r.den();
    auto m = is_perfect_square(p);
    if (!m)
        return report("integral_d", ObstructionVerdict::inapplicable, "",
                      "|H1| = " + istr(p) + " is not a perfect square");
    std::vector<SpincOrbit> orbits = extendable_spinc(*m, q);
    // For even m both parity orbits are produced; the extendable one is the
    // orbit whose correction terms are all integers.
    for (const SpincOrbit& orbit : orbits) {
        std::vector<Rational> vals;
        bool integral = true;
        for (const Integer& label : orbit.labels) {
            Rational d = d_surgery(desc, label);
            if (!d.is_integer()) {
                integral = false;
                break;
            }
            vals.push_back(d);
        }
        if (!integral) continue;
        std::string params = desc.str() + ", labels i0 + " + istr(*m) +
                             "k with i0 = " + istr(orbit.i0);
        for (std::size_t k = 0; k < vals.size(); ++k) {
            if (!vals[k].is_zero())
                return report("integral_d", ObstructionVerdict::obstructs,
                              "d(label " + istr(orbit.labels[k]) + ") = " + vals[k].str(),
                              params);
        }
        return report("integral_d", ObstructionVerdict::passes, "",
                      params + "; all " + istr(*m) + " values are 0");
    }
    throw std::logic_error("obstruct_integral_d: no orbit has all-integral correction terms");
}

ObstructionReport obstruct_spin_d(const SeifertInvariant& inv) {
    SeifertInvariant y = normalize(inv);
    Integer h = h1_order(y);
    if (h == 0)
        return report("spin_d_mubar", ObstructionVerdict::inapplicable, "",
                      "zero Euler number: not a rational homology sphere");
    if (h % 2 == 0)
        return report("spin_d_mubar", ObstructionVerdict::inapplicable, "",
                      "|H1| = " + istr(h) + " is even: no unique spin structure");
    int flip = +1;
    SeifertInvariant work = y;
    if (euler_number(y) < Rational(0)) {
        work = reverse_orientation(y);
        flip = -1;
    }
    PlumbingGraph g = canonical_plumbing(work);
    Integer mb = mu_bar(g);
    Rational d = d_spin_plumbing(g);
    if (flip < 0) d = -d;
    std::string params = "mu_bar = " + istr(flip < 0 ? Integer(-mb) : mb) +
                         " on the rank-" + std::to_string(g.rank()) + " plumbing";
    // Cross-check against the surgery-side value whenever a description exists.
    NameResult nm = spherical_name(y);
    if (nm.name) {
        std::optional<Rational> other;
        if (nm.name->family == Family::C && nm.name->p % 2 == 1 && nm.name->p > 1) {
            other = d_lens(nm.name->p, nm.name->q,
                           spin_label(nm.name->p, nm.name->q));
        } else if (nm.name->family == Family::T || nm.name->family == Family::O ||
                   nm.name->family == Family::I) {
            other = d_spin(surgery_of_spherical(*nm.name));
        }
        if (other) {
            if (*other != d)
                throw std::logic_error("obstruct_spin_d: plumbing value " + d.str() +
                                       " disagrees with surgery value " + other->str());
            params += "; cross-checked against the surgery computation";
        }
    }
    if (d.is_zero())
        return report("spin_d_mubar", ObstructionVerdict::passes, "", params);
    return report("spin_d_mubar", ObstructionVerdict::obstructs,
                  "d(spin) = " + d.str() + " != 0", params);
}

ObstructionReport obstruct_donaldson_embed(const SeifertInvariant& inv,
                                           std::uint64_t budget) {
    SeifertInvariant y = normalize(inv);
    Rational e = euler_number(y);
    if (e.is_zero())
        return report("donaldson_embed", ObstructionVerdict::inapplicable, "",
                      "zero Euler number: not a rational homology sphere");
    if (e < Rational(0)) y = reverse_orientation(y);
    GramLattice l = gram_from_plumbing(canonical_plumbing(y));
    const std::size_t r = l.rank();
    SearchOutcome out = find_embedding(l, r, budget);
    std::string params = "rank " + std::to_string(r) + " plumbing lattice into <-1>^" +
                         std::to_string(r) + ", " + std::to_string(out.nodes) + " nodes";
    switch (out.status) {
        case SearchOutcome::Status::found:
            return report("donaldson_embed", ObstructionVerdict::passes, "", params);
        case SearchOutcome::Status::none:
            return report("donaldson_embed", ObstructionVerdict::obstructs,
                          "no embedding of the plumbing lattice at equal rank", params);
        case SearchOutcome::Status::inconclusive:
            return report("donaldson_embed", ObstructionVerdict::inconclusive, "",
                          params + " (budget exhausted)");
    }
    throw std::logic_error("obstruct_donaldson_embed: unreachable");
}

ObstructionReport obstruct_donaldson_order(const GramLattice& l, const std::string& what,
                                           std::size_t n, std::uint64_t budget) {
    GramLattice sum = direct_sum(l, n);
    const std::size_t target = n * l.rank();
    SearchOutcome out = find_embedding(sum, target, budget);
    std::string params = std::to_string(n) + " copies of " + what + " (rank " +
                         std::to_string(l.rank()) + ") into <-1>^" +
                         std::to_string(target) + ", " + std::to_string(out.nodes) +
                         " nodes";
    switch (out.status) {
        case SearchOutcome::Status::found:
            return report("donaldson_order", ObstructionVerdict::passes, "", params);
        case SearchOutcome::Status::none:
            return report("donaldson_order", ObstructionVerdict::obstructs,
                          "the " + std::to_string(n) +
                              "-fold sum does not embed: order " + std::to_string(n) +
                              " impossible",
                          params);
        case SearchOutcome::Status::inconclusive:
            return report("donaldson_order", ObstructionVerdict::inconclusive, "",
                          params + " (budget exhausted)");
    }
    throw std::logic_error("obstruct_donaldson_order: unreachable");
}

SlopeChain slope_chain(const SurgeryDescription& desc) {
    SlopeChain out;
    Integer p = abs(desc.r.num());
    Integer q = desc.r.den();
    if (p <= q) return out;  // slope in (0,1]: no chain in scope
    out.terms = hj_cf(p, q);
    out.i_val = i_value(out.terms);
    out.applicable = out.i_val < 0;
    return out;
}

namespace {

// pinned 5x4 kernel block; both sign variants annihilate the rank-1
// functional below
const long kGJBlock[2][5][4] = {
    {{1, 0, 0, 1}, {-1, 0, 0, 1}, {0, 1, 0, 1}, {0, -1, 1, 1}, {0, 0, -1, 1}},
    {{1, 0, 0, 1}, {-1, 0, 0, 1}, {0, 1, 0, -1}, {0, -1, 1, -1}, {0, 0, -1, -1}},
};

long gj_l(int variant, const long x[5]) {
    long s = variant == 0 ? -1 : +1;
    return 3 * (x[0] + x[1]) + s * 2 * (x[2] + x[3] + x[4]);
}

}  // namespace

Integer greene_jabuka_count(std::size_t n, int variant) {
    if (n == 0 || variant < 0 || variant > 1)
        throw std::invalid_argument("greene_jabuka_count: need n >= 1 and variant 0/1");
    const std::size_t dim = 5 * n;
    if (dim > 20)
        throw std::invalid_argument("greene_jabuka_count: brute force capped at n = 4");
    std::vector<std::vector<Integer>> columns;
    for (std::size_t blk = 0; blk < n; ++blk)
        for (std::size_t c = 0; c < 4; ++c) {
            std::vector<Integer> col(dim, 0);
            for (std::size_t row = 0; row < 5; ++row)
                col[5 * blk + row] = kGJBlock[variant][row][c];
            columns.push_back(std::move(col));
        }
    std::vector<std::vector<Integer>> reps;
    std::vector<Integer> v(dim), diff(dim);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << dim); ++mask) {
        for (std::size_t i = 0; i < dim; ++i)
            v[i] = (mask >> i) & 1 ? 1 : -1;
        bool fresh = true;
        for (const auto& w : reps) {
            for (std::size_t i = 0; i < dim; ++i) diff[i] = v[i] - w[i];
            if (lattice_member(diff, columns)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(v);
    }
    return Integer(static_cast<long>(reps.size()));
}

std::vector<Integer> greene_jabuka_l_image(int variant) {
    if (variant < 0 || variant > 1)
        throw std::invalid_argument("greene_jabuka_l_image: variant 0/1");
    std::set<long> vals;
    long x[5];
    for (int mask = 0; mask < 32; ++mask) {
        for (int i = 0; i < 5; ++i) x[i] = (mask >> i) & 1 ? 1 : -1;
        vals.insert(gj_l(variant, x));
    }
    return std::vector<Integer>(vals.begin(), vals.end());
}

ObstructionReport gj_bound(const Integer& b) {
    if (b < 2) throw std::invalid_argument("gj_bound: need b >= 2");
    Integer s = 30 * (b - 2) + 19;
    Integer c = greene_jabuka_count(1);
    std::string params = "30(b-2)+19 = " + istr(s) + ", class count " + istr(c) +
                         " per block (computed), threshold " + istr(c * c);
    if (s > c * c)
        return report("greene_jabuka", ObstructionVerdict::obstructs,
                      istr(s) + " > " + istr(c * c) +
                          ": no order n supplies (" + istr(s) +
                          ")^(n/2) vanishing classes within " + istr(c) + "^n",
                      params);
    return report("greene_jabuka", ObstructionVerdict::passes, "", params);
}

ObstructionReport obstruct_d_sum(const SurgeryDescription& desc) {
    Integer h = abs(desc.r.num());
    if (!is_square_free(h))
        return report("d_sum", ObstructionVerdict::inapplicable, "",
                      "|H1| = " + istr(h) + " is not square-free");
    Rational sum = d_sum_all(desc);
    std::string params = desc.str() + ", |H1| = " + istr(h) + " square-free, all labels";
    if (sum.is_zero())
        return report("d_sum", ObstructionVerdict::passes, "", params);
    return report("d_sum", ObstructionVerdict::obstructs,
                  "sum of correction terms = " + sum.str() + " != 0", params);
}

ObstructionReport obstruct_max_min(const SurgeryDescription& desc,
                                   const Integer& p_prime, const Integer& q_part) {
    Integer h = abs(desc.r.num());
    std::string hyp = "|H1| = " + istr(h) + " = " + istr(p_prime) + "*" + istr(q_part);
    if (p_prime * q_part != h || !is_prime(p_prime) || gcd(p_prime, q_part) != 1 ||
        h % 2 == 0)
        return report("max_min", ObstructionVerdict::inapplicable, "",
                      hyp + ": need an odd |H1| = p*q with p prime and gcd(p,q) = 1");
    Integer s0 = spin_label(h, desc.r.den());
    std::vector<Rational> vals;
    std::string labels = "{";
    for (Integer n = 0; n < p_prime; ++n) {
        Integer label = mod_floor(s0 + n * q_part, h);
        if (n > 0) labels += ",";
        labels += istr(label);
        vals.push_back(d_surgery(desc, label));
    }
    labels += "}";
    Rational mx = vals[0], mn = vals[0];
    for (const Rational& v : vals) {
        if (v > mx) mx = v;
        if (v < mn) mn = v;
    }
    std::string params = desc.str() + ", p = " + istr(p_prime) + ", q = " + istr(q_part) +
                         ", A = " + labels;
    Rational total = mx + mn;
    if (total.is_zero())
        return report("max_min", ObstructionVerdict::passes, "", params);
    return report("max_min", ObstructionVerdict::obstructs,
                  "max + min over A = " + mx.str() + " + " + mn.str() + " = " +
                      total.str() + " != 0",
                  params);
}

namespace {

struct LensOrderResult {
    OrderVerdict verdict;
    std::vector<ObstructionReport> reports;
};

// order of L(p,q) by the embedding certificates: order 1 iff the one-sided
// chain embeds at equal rank, order 2 iff not order 1 but the doubled chain
// embeds (the embedding criterion is sharp for sums of lens spaces), else
// infinite (lens orders are 1, 2, or infinite).
LensOrderResult lens_order(const Integer& p, const Integer& q, const ClassifyCaps& caps) {
    LensOrderResult out;
    if (p == 1) {
        out.verdict.kind = OrderKind::order_1;
        out.verdict.detail = "the 3-sphere bounds the 4-ball";
        ObstructionReport r = report("lisca_lens", ObstructionVerdict::passes, "",
                                     "L(1,0): trivial");
        r.decisive = true;
        out.reports.push_back(r);
        return out;
    }
    BoundsOutcome bounds = lens_bounds_qhb(p, q, caps.budget);
    std::string lens = "L(" + istr(p) + "," + istr(q) + ")";
    if (bounds.status == BoundsOutcome::Status::yes) {
        ObstructionReport r = report("lisca_lens", ObstructionVerdict::passes, "",
                                     lens + ": " + bounds.reason);
        r.decisive = true;
        out.reports.push_back(r);
        out.verdict.kind = OrderKind::order_1;
        out.verdict.detail = lens + " bounds a rational homology ball (" + bounds.reason + ")";
        return out;
    }
    if (bounds.status == BoundsOutcome::Status::inconclusive) {
        out.reports.push_back(report("lisca_lens", ObstructionVerdict::inconclusive, "",
                                     lens + ": " + bounds.reason));
        out.verdict.kind = OrderKind::unknown;
        out.verdict.detail = lens + ": bounding test hit the search budget";
        return out;
    }
    out.reports.push_back(report("lisca_lens", ObstructionVerdict::obstructs,
                                 lens + " does not bound: " + bounds.reason,
                                 lens));
    if (caps.n_max < 2) {
        out.verdict.kind = OrderKind::excluded_up_to;
        out.verdict.excluded_up_to = 1;
        out.verdict.detail = lens + ": order 1 excluded; doubling not searched";
        return out;
    }
    std::vector<Integer> t1 = hj_cf(p, q), t2 = hj_cf(p, p - q);
    std::vector<Integer> side = i_value(t1) <= i_value(t2) ? t1 : t2;
    GramLattice chain = gram_from_plumbing(PlumbingGraph::chain(side));
    ObstructionReport r2 = obstruct_donaldson_order(
        chain, "the chain " + terms_str(side) + " of " + lens, 2, caps.budget);
    r2.decisive = r2.verdict != ObstructionVerdict::inconclusive;
    out.reports.push_back(r2);
    if (r2.verdict == ObstructionVerdict::passes) {
        out.verdict.kind = OrderKind::order_2;
        out.verdict.detail = lens +
            ": order 1 excluded, the doubled chain embeds; order two by the sharp "
            "embedding classification of sums of lens spaces";
    } else if (r2.verdict == ObstructionVerdict::obstructs) {
        out.verdict.kind = OrderKind::infinite;
        out.verdict.detail = lens +
            ": orders 1 and 2 excluded by embeddings; lens orders are 1, 2, or infinite";
    } else {
        out.verdict.kind = OrderKind::excluded_up_to;
        out.verdict.excluded_up_to = 1;
        out.verdict.detail = lens + ": order 1 excluded; doubling search hit the budget";
    }
    return out;
}

ObstructionReport& push(Classification& c, ObstructionReport r) {
    c.reports.push_back(std::move(r));
    return c.reports.back();
}

void settle(Classification& c, OrderKind kind, std::string detail, bool mark_last = true) {
    c.verdict.kind = kind;
    c.verdict.detail = std::move(detail);
    if (mark_last && !c.reports.empty()) c.reports.back().decisive = true;
}

}  // namespace

Classification classify_order(const SphericalName& name0, const ClassifyCaps& caps) {
    Classification out;
    out.name = name0;
    SphericalName name = name0;
    std::string orient;
    if (name.sign < 0) {
        name.sign = +1;
        orient = "orders of a manifold and its reversal agree; classified the reversal. ";
    }

    if (name.family == Family::C) {
        LensOrderResult lr = lens_order(name.p, name.q, caps);
        out.reports = std::move(lr.reports);
        out.verdict = std::move(lr.verdict);
        out.verdict.detail = orient + out.verdict.detail;
        return out;
    }

    SeifertInvariant inv = spherical_from_name(name);

    // complementary legs: D-type and the (2,1),(3,1),(3,2) family reduce to a
    // lens space of the same cobordism order
    bool reducible = name.family == Family::D ||
                     (name.family == Family::T && mod_floor(name.subscript, 6) == 3);
    if (reducible) {
        std::optional<LegReduction> red = complementary_reduction(inv);
        if (!red || !red->lens)
            throw std::logic_error("classify_order: catalog reduction failed for " +
                                   name.str());
        SphericalName lens = *red->lens;
        push(out, report("complementary_reduction", ObstructionVerdict::passes,
                         "cobordant to " + lens.str(),
                         inv.str() + " minus legs " + std::to_string(red->i) + "," +
                             std::to_string(red->j) + " -> " + red->reduced.str()));
        LensOrderResult lr = lens_order(lens.p, lens.q, caps);
        for (ObstructionReport& r : lr.reports) out.reports.push_back(std::move(r));
        if (name.family == Family::D) {
            out.verdict.kind = OrderKind::reduction_to_lens;
            out.verdict.lens = lens;
            out.verdict.detail = orient + "order equals the order of " + lens.str() +
                                 "; " + lr.verdict.detail;
        } else {
            out.verdict = std::move(lr.verdict);
            out.verdict.detail = orient + "cobordant to " + lens.str() + ": " +
                                 out.verdict.detail;
        }
        return out;
    }

    // bounding filters
    SurgeryDescription desc = surgery_of_spherical(name);
    Integer h = h1_order(inv);
    ObstructionReport& rsq = push(out, obstruct_square_h1(inv));
    bool maybe_bounds = rsq.verdict == ObstructionVerdict::passes;
    if (maybe_bounds) {
        ObstructionReport& ri = push(out, obstruct_integral_d(desc));
        if (ri.verdict == ObstructionVerdict::obstructs) maybe_bounds = false;
        ObstructionReport& re = push(out, obstruct_donaldson_embed(inv, caps.budget));
        if (re.verdict == ObstructionVerdict::obstructs) maybe_bounds = false;
    }

    if (name.family == Family::I && name.subscript == 49 && maybe_bounds) {
        out.verdict.kind = OrderKind::order_1;
        out.verdict.detail = orient +
            "bounds a rational homology ball (externally certified ribbon filling); "
            "every implemented obstruction passes";
        return out;
    }

    // order obstructions, in the audited sequence
    ObstructionReport& rspin = push(out, obstruct_spin_d(inv));
    if (rspin.verdict == ObstructionVerdict::obstructs) {
        settle(out, OrderKind::infinite,
               orient + "nonzero spin correction term: no finite order");
        return out;
    }

    GramLattice plumb = gram_from_plumbing(canonical_plumbing(inv));
    long excluded = 0;
    bool plumb_all_fail = true;
    for (std::size_t n = 1; n <= caps.n_max; ++n) {
        ObstructionReport rep =
            obstruct_donaldson_order(plumb, "the canonical plumbing", n, caps.budget);
        ObstructionVerdict v = rep.verdict;
        push(out, std::move(rep));
        if (v == ObstructionVerdict::obstructs) {
            excluded = static_cast<long>(n);
        } else {
            plumb_all_fail = false;
            break;
        }
    }
    Integer modulus = name.family == Family::T ? 6 : name.family == Family::O ? 12 : 30;
    Integer k = mod_floor(name.subscript, modulus);
    if (name.family == Family::O && (k == 1 || k == 5 || k == 7) && plumb_all_fail &&
        excluded == static_cast<long>(caps.n_max)) {
        settle(out, OrderKind::infinite,
               orient + "no direct-sum multiple of the plumbing lattice embeds "
                        "(searched n <= " + std::to_string(caps.n_max) +
                        "; the non-embedding persists for every n by the structure "
                        "of the lattice)");
        return out;
    }

    SlopeChain sc = slope_chain(desc);
    if (sc.applicable && caps.n_max >= 2) {
        GramLattice chain = gram_from_plumbing(PlumbingGraph::chain(sc.terms));
        bool all_fail = true;
        for (std::size_t n = 1; n <= 2; ++n) {
            ObstructionReport rep = obstruct_donaldson_order(
                chain, "the slope chain " + terms_str(sc.terms) + " (I = " +
                           istr(sc.i_val) + ")",
                n, caps.budget);
            ObstructionVerdict v = rep.verdict;
            push(out, std::move(rep));
            if (v != ObstructionVerdict::obstructs) {
                all_fail = false;
                break;
            }
        }
        if (all_fail) {
            settle(out, OrderKind::infinite,
                   orient + "the slope chain has I < 0, so the order dominates the "
                            "order of the slope lens space, whose orders 1 and 2 are "
                            "excluded by embeddings; lens orders are 1, 2, or infinite");
            return out;
        }
    }

    if (name.family == Family::I && k == 19) {
        Integer b = (name.subscript - k) / modulus + 2;
        ObstructionReport& rg = push(out, gj_bound(b));
        if (rg.verdict == ObstructionVerdict::obstructs) {
            settle(out, OrderKind::infinite,
                   orient + "spin^c counting bound: too few vanishing classes for "
                            "any finite order");
            return out;
        }
    }

    ObstructionReport& rsum = push(out, obstruct_d_sum(desc));
    if (rsum.verdict == ObstructionVerdict::obstructs) {
        settle(out, OrderKind::infinite,
               orient + "nonzero correction-term sum: no finite order");
        return out;
    }

    if (h % 2 == 1) {
        std::vector<Integer> primes;
        Integer rem = h;
        for (Integer f = 3; f * f <= rem; f += 2)
            while (rem % f == 0) {
                if (primes.empty() || primes.back() != f) primes.push_back(f);
                rem /= f;
            }
        if (rem > 1) primes.push_back(rem);
        for (const Integer& f : primes) {
            if (h % (f * f) == 0) continue;  // the prime part must be exact
            ObstructionReport& rm = push(out, obstruct_max_min(desc, f, h / f));
            if (rm.verdict == ObstructionVerdict::obstructs) {
                settle(out, OrderKind::infinite,
                       orient + "max + min of correction terms over a prime-index "
                                "coset is nonzero: no finite order");
                return out;
            }
        }
    }

    if (excluded > 0) {
        out.verdict.kind = OrderKind::excluded_up_to;
        out.verdict.excluded_up_to = excluded;
        out.verdict.detail = orient + "finite orders up to " + std::to_string(excluded) +
                             " excluded by Donaldson sums; no infinite-order "
                             "certificate applies";
        return out;
    }
    out.verdict.kind = OrderKind::unknown;
    out.verdict.detail = orient + "no implemented obstruction settles the order";
    return out;
}

std::vector<Classification> order_table(const Integer& b_max, const ClassifyCaps& caps) {
    if (b_max < 2) throw std::invalid_argument("order_table: need b_max >= 2");
    struct Row {
        Family f;
        long modulus, k;
    };
    const std::vector<Row> rows = {
        {Family::T, 6, 1},   {Family::T, 6, 3},   {Family::T, 6, 5},
        {Family::O, 12, 1},  {Family::O, 12, 5},  {Family::O, 12, 7},
        {Family::O, 12, 11}, {Family::I, 30, 1},  {Family::I, 30, 7},
        {Family::I, 30, 11}, {Family::I, 30, 13}, {Family::I, 30, 17},
        {Family::I, 30, 19}, {Family::I, 30, 23}, {Family::I, 30, 29},
    };
    std::vector<Classification> out;
    for (const Row& row : rows)
        for (Integer b = 2; b <= b_max; ++b) {
            SphericalName name;
            name.family = row.f;
            name.subscript = row.modulus * (b - 2) + row.k;
            out.push_back(classify_order(name, caps));
        }
    return out;
}

std::string order_table_csv(const std::vector<Classification>& rows) {
    std::string csv = "name,b,order\n";
    for (const Classification& c : rows) {
        Integer modulus = c.name.family == Family::T   ? 6
                          : c.name.family == Family::O ? 12
                                                       : 30;
        Integer b = (c.name.subscript - mod_floor(c.name.subscript, modulus)) / modulus + 2;
        std::string order;
        switch (c.verdict.kind) {
            case OrderKind::order_1: order = "1"; break;
            case OrderKind::order_2: order = "2"; break;
            case OrderKind::infinite: order = "infinite"; break;
            case OrderKind::excluded_up_to:
                order = "unknown(<=" + std::to_string(c.verdict.excluded_up_to) +
                        " excluded)";
                break;
            case OrderKind::reduction_to_lens:
                order = "order of " + (c.verdict.lens ? c.verdict.lens->str() : "?");
                break;
            case OrderKind::unknown: order = "unknown"; break;
        }
        csv += c.name.str() + "," + istr(b) + "," + order + "\n";
    }
    return csv;
}

std::string classification_to_json(const Classification& c) {
    nlohmann::json j;
    j["manifold"] = c.name.str();
    nlohmann::json v;
    v["kind"] = to_string(c.verdict.kind);
    v["detail"] = c.verdict.detail;
    if (c.verdict.kind == OrderKind::excluded_up_to)
        v["excluded_up_to"] = c.verdict.excluded_up_to;
    if (c.verdict.lens) v["lens"] = c.verdict.lens->str();
    j["verdict"] = v;
    j["reports"] = nlohmann::json::array();
    for (const ObstructionReport& r : c.reports) {
        nlohmann::json jr;
        jr["id"] = r.id;
        jr["verdict"] = to_string(r.verdict);
        jr["witness"] = r.witness;
        jr["params"] = r.params;
        jr["decisive"] = r.decisive;
        j["reports"].push_back(jr);
    }
    return j.dump(2);
}

}  // namespace spherical
