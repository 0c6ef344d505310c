#include "spherical/dinv.hpp"

#include <sstream>
#include <stdexcept>

#include "spherical/numtheory.hpp"

namespace spherical {

Rational d_neg_lens_recursive(const Integer& p0, const Integer& q0, const Integer& i0) {
    if (p0 < 1) throw std::invalid_argument("d_neg_lens_recursive: p must be positive");
    Integer p = p0, q = mod_floor(q0, p0), i = i0;
    if (p == 1) return Rational(0);
    if (q < 1 || gcd(p, q) != 1)
        throw std::invalid_argument("d_neg_lens_recursive: p, q must be coprime");
    if (i < 0 || i >= p) throw std::invalid_argument("d_neg_lens_recursive: label out of range");
    Rational acc(0);
    int sign = +1;
    while (p > 1) {
        Integer t = 2 * i + 1 - p - q;
        Rational term(p * q - t * t, 4 * p * q);
        acc += sign > 0 ? term : -term;
        sign = -sign;
        Integer np = q;
        q = mod_floor(p, q);
        p = np;
        i = mod_floor(i, p);
    }
    return acc;
}

Rational d_lens_closed(const Integer& p, const Integer& q0, const Integer& i) {
    if (p < 1) throw std::invalid_argument("d_lens_closed: p must be positive");
    if (p == 1) return Rational(0);
    Integer q = mod_floor(q0, p);
    if (q < 1 || gcd(p, q) != 1) throw std::invalid_argument("d_lens_closed: p, q must be coprime");
    if (i < 0 || i >= p) throw std::invalid_argument("d_lens_closed: label out of range");
    return 2 * dedekind_rademacher(q, p, i) + dedekind_sum(q, p) - Rational(1, 2 * p);
}

Rational d_lens(const Integer& p, const Integer& q, const Integer& i) {
    return -d_neg_lens_recursive(p, q, i);
}

Integer VSequence::at(const Integer& s) const {
    if (s < 0) throw std::invalid_argument("VSequence: index must be non-negative");
    if (s >= Integer(v.size())) return 0;
    return v[s.get_ui()];
}

VSequence v_sequence_trefoil() { return {"T(2,3)", {1}}; }

Rational d_surgery(const SurgeryDescription& desc, const Integer& i) {
    SurgeryDescription d = desc;
    int flip = +1;
    if (d.sign < 0) {
        flip = -flip;
        d.sign = +1;
    }
    if (d.r.is_zero())
        throw std::domain_error("d_surgery: slope 0 is not a rational homology sphere");
    if (d.r.sign() < 0) {
        // -S^3_{-r}(mirror K) = S^3_r(K); negate the mirror's value, same label
        flip = -flip;
        d.r = -d.r;
        d.knot.mirrored = !d.knot.mirrored;
    }
    if (d.knot.p != 2 || d.knot.q != 3)
        throw std::invalid_argument("d_surgery: V-sequence unavailable for this knot");
    Integer p = d.r.num(), q = d.r.den();
    if (i < 0 || i >= p) throw std::invalid_argument("d_surgery: label out of range");
    // the mirror trefoil has V identically zero
    VSequence V = d.knot.mirrored ? VSequence{"T(2,3)^m", {}} : v_sequence_trefoil();
    Integer vmax = std::max(V.at(floor_div(i, q)), V.at(floor_div(p + q - 1 - i, q)));
    Rational val = d_lens(p, q, i) - 2 * Rational(vmax);
    return flip < 0 ? -val : val;
}

DInvariantTable d_table(const SurgeryDescription& desc) {
    DInvariantTable t;
    t.manifold = desc.str();
    Integer p = abs(desc.r.num());
    for (Integer i = 0; i < p; ++i) t.values.push_back(d_surgery(desc, i));
    return t;
}

Rational d_sum_all(const SurgeryDescription& desc) {
    Rational s(0);
    for (const auto& v : d_table(desc).values) s += v;
    return s;
}

Rational d_spin(const SurgeryDescription& desc) {
    Integer p = abs(desc.r.num());
    if (p % 2 == 0) throw std::domain_error("d_spin: |H1| must be odd");
    return d_surgery(desc, spin_label(p, desc.r.den()));
}

DInvariantTable d_lens_table(const Integer& p, const Integer& q) {
    DInvariantTable t;
    std::ostringstream os;
    os << "L_" << p << "_" << mod_floor(q, p);
    t.manifold = os.str();
    for (Integer i = 0; i < p; ++i) t.values.push_back(d_lens(p, q, i));
    return t;
}

std::string DInvariantTable::csv() const {
    std::ostringstream os;
    os << "label,d\n";
    for (std::size_t i = 0; i < values.size(); ++i) os << i << "," << values[i].str() << "\n";
    return os.str();
}

}  // namespace spherical
