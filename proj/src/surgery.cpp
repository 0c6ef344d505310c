#include "spherical/surgery.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "spherical/numtheory.hpp"

namespace spherical {

SeifertInvariant moser(const Integer& p, const Integer& q, const Rational& r) {
    if (p < 2 || q < 2 || gcd(p, q) != 1)
        throw std::invalid_argument("moser: torus knot needs coprime p, q >= 2");
    Integer num = r.num(), den = r.den();
    Integer m = p * q * den - num;  // pq - r = m/den
    if (m == 0) throw std::domain_error("moser: slope pq gives a reducible manifold");
    Integer n = m - den;
    if (m < 0) {
        m = -m;
        n = -n;
    }
    SeifertInvariant inv;
    inv.b = 2;
    inv.legs = {{p, mod_inverse(q, p)}, {q, mod_inverse(p, q)}, {m, n}};
    return reverse_orientation(inv);
}

SeifertInvariant surgered_manifold(const SurgeryDescription& desc) {
    SeifertInvariant y = desc.knot.mirrored
                             ? reverse_orientation(moser(desc.knot.p, desc.knot.q, -desc.r))
                             : moser(desc.knot.p, desc.knot.q, desc.r);
    return desc.sign < 0 ? reverse_orientation(y) : y;
}

namespace {

// match cand against the Moser pattern for the trefoil: legs {(2,1), (3,2),
// (a3,b3)}; on success produce the slope r with S^3_r(T(2,3)) = -cand
std::optional<Rational> trefoil_slope(const SeifertInvariant& cand) {
    if (cand.legs.size() != 3) return std::nullopt;
    // locate (2,1) and (3,2) among the sorted legs; the remaining leg is free
    int i21 = -1, i32 = -1;
    for (int k = 0; k < 3; ++k) {
        const auto& leg = cand.legs[k];
        if (i21 < 0 && leg.alpha == 2 && leg.beta == 1) {
            i21 = k;
        } else if (i32 < 0 && leg.alpha == 3 && leg.beta == 2) {
            i32 = k;
        }
    }
    if (i21 < 0 || i32 < 0) return std::nullopt;
    const auto& third = cand.legs[3 - i21 - i32];
    // twist the remaining leg to the b = 2 presentation, then invert
    // m/n = (6 - r)/(6 - r - 1)
    Integer m = third.alpha;
    Integer n = third.beta - (cand.b - 2) * third.alpha;
    return Rational(5 * m - 6 * n, m - n);
}

}  // namespace

SurgeryDescription surgery_of_spherical(const SphericalName& name) {
    if (name.family == Family::C || name.family == Family::D)
        throw std::invalid_argument("surgery_of_spherical: no trefoil description in scope for C/D");
    SeifertInvariant y = spherical_from_name(name);
    SurgeryDescription desc;
    desc.knot = {2, 3, false};
    desc.sign = +1;
    if (auto r = trefoil_slope(reverse_orientation(y))) {
        desc.r = *r;
    } else if (auto rm = trefoil_slope(y)) {
        desc.knot.mirrored = true;
        desc.r = -*rm;
    } else {
        throw std::logic_error("surgery_of_spherical: catalog entry matches no trefoil pattern");
    }
    if (!(surgered_manifold(desc) == y))
        throw std::logic_error("surgery_of_spherical: round-trip mismatch");
    return desc;
}

Integer spin_label(const Integer& p, const Integer& q) {
    if (p < 1 || p % 2 == 0)
        throw std::domain_error("spin_label: p must be odd (unique spin structure)");
    // 2^{-1} = (p+1)/2 mod p
    return mod_floor(mod_floor(p + q - 1, p) * ((p + 1) / 2), p);
}

std::vector<SpincOrbit> extendable_spinc(const Integer& m, const Integer& q) {
    if (m < 1 || q < 1 || gcd(m * m, q) != 1)
        throw std::invalid_argument("extendable_spinc: need m, q >= 1 with gcd(m^2, q) = 1");
    Integer p = m * m;
    auto orbit = [&](const Integer& i0) {
        SpincOrbit o;
        o.i0 = i0;
        for (Integer k = 0; k < m; ++k) o.labels.push_back(mod_floor(i0 + m * k, p));
        return o;
    };
    std::vector<SpincOrbit> out;
    if (m % 2 == 1) {
        out.push_back(orbit(q % 2 == 1 ? Integer((q - 1) / 2) : Integer((m + q - 1) / 2)));
    } else {
        // q is odd here; the two parity candidates differ by m/2
        out.push_back(orbit((q - 1) / 2));
        out.push_back(orbit((m + q - 1) / 2));
    }
    return out;
}

std::string TorusKnot::str() const {
    std::ostringstream os;
    os << "T(" << p << "," << q << ")";
    if (mirrored) os << "^m";
    return os.str();
}

std::string SurgeryDescription::str() const {
    std::ostringstream os;
    if (sign < 0) os << "-";
    os << "surgery(" << knot.str() << ", " << r.str() << ")";
    return os.str();
}

std::optional<SurgeryDescription> SurgeryDescription::parse(const std::string& s) {
    std::size_t pos = 0;
    SurgeryDescription d;
    d.sign = +1;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    auto expect = [&](const std::string& tok) {
        skip_ws();
        if (s.compare(pos, tok.size(), tok) != 0) return false;
        pos += tok.size();
        return true;
    };
    auto integer = [&](Integer& out) {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) return false;
        out = Integer(s.substr(start, pos - start));
        return true;
    };
    skip_ws();
    if (pos < s.size() && s[pos] == '-') {
        d.sign = -1;
        ++pos;
    }
    Integer kp, kq;
    if (!expect("surgery") || !expect("(") || !expect("T") || !expect("(") || !integer(kp) ||
        !expect(",") || !integer(kq) || !expect(")"))
        return std::nullopt;
    d.knot.p = kp;
    d.knot.q = kq;
    d.knot.mirrored = false;
    skip_ws();
    if (pos + 1 < s.size() && s[pos] == '^' && s[pos + 1] == 'm') {
        d.knot.mirrored = true;
        pos += 2;
    }
    if (!expect(",")) return std::nullopt;
    skip_ws();
    std::size_t rstart = pos;
    int depth = 1;
    while (pos < s.size()) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')' && --depth == 0) break;
        ++pos;
    }
    if (pos >= s.size()) return std::nullopt;
    auto r = Rational::parse(s.substr(rstart, pos - rstart));
    if (!r) return std::nullopt;
    d.r = *r;
    ++pos;
    skip_ws();
    if (pos != s.size()) return std::nullopt;
    if (d.knot.p < 2 || d.knot.q < 2 || gcd(d.knot.p, d.knot.q) != 1) return std::nullopt;
    return d;
}

}  // namespace spherical
