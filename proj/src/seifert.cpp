#include "spherical/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "spherical/numtheory.hpp"

namespace spherical {

void validate(const SeifertInvariant& inv) {
    for (const auto& leg : inv.legs) {
        if (leg.alpha < 1)
            throw std::invalid_argument("seifert: leg multiplicity must be positive");
        if (gcd(leg.alpha, leg.beta) != 1)
            throw std::invalid_argument("seifert: leg pair must be coprime");
    }
}

SeifertInvariant normalize(const SeifertInvariant& inv) {
    validate(inv);
    SeifertInvariant out;
    out.b = inv.b;
    for (const auto& leg : inv.legs) {
        if (leg.alpha == 1) {
            // twist the fiber to (1,0), absorb into b, blow it down
            out.b -= leg.beta;
            continue;
        }
        Integer n = floor_div(leg.beta, leg.alpha);
        out.b -= n;
        out.legs.push_back({leg.alpha, leg.beta - n * leg.alpha});
    }
    std::sort(out.legs.begin(), out.legs.end());
    return out;
}

bool is_normalized(const SeifertInvariant& inv) {
    for (const auto& leg : inv.legs)
        if (leg.alpha <= leg.beta || leg.beta <= 0) return false;
    return std::is_sorted(inv.legs.begin(), inv.legs.end());
}

SeifertInvariant reverse_orientation(const SeifertInvariant& inv) {
    SeifertInvariant r;
    r.b = -inv.b;
    for (const auto& leg : inv.legs) r.legs.push_back({leg.alpha, -leg.beta});
    return normalize(r);
}

Rational euler_number(const SeifertInvariant& inv) {
    validate(inv);
    Rational e(inv.b);
    for (const auto& leg : inv.legs) e -= Rational(leg.beta, leg.alpha);
    return e;
}

Integer h1_order(const SeifertInvariant& inv) {
    Rational e = euler_number(inv);
    Integer prod = 1;
    for (const auto& leg : inv.legs) prod *= leg.alpha;
    Rational h = e * Rational(prod);
    // denominators of e divide the multiplicity product, so h is an integer
    if (!h.is_integer()) throw std::logic_error("h1_order: non-integral result");
    return abs(h.num());
}

PlumbingGraph PlumbingGraph::chain(const std::vector<Integer>& terms) {
    PlumbingGraph g;
    for (const auto& t : terms) {
        if (t < 2) throw std::invalid_argument("PlumbingGraph::chain: entries must be >= 2");
        g.weights.push_back(-t);
        if (g.weights.size() > 1) g.edges.emplace_back(g.weights.size() - 2, g.weights.size() - 1);
    }
    return g;
}

PlumbingGraph canonical_plumbing(const SeifertInvariant& inv) {
    SeifertInvariant n = normalize(inv);
    if (euler_number(n).sign() <= 0)
        throw std::domain_error(
            "canonical_plumbing: Euler number must be positive; plumb the reversed orientation");
    PlumbingGraph g;
    g.weights.push_back(-n.b);
    for (const auto& leg : n.legs) {
        std::size_t prev = 0;
        for (const auto& t : hj_cf(leg.alpha, leg.beta)) {
            g.weights.push_back(-t);
            g.edges.emplace_back(prev, g.weights.size() - 1);
            prev = g.weights.size() - 1;
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// catalog

SphericalShape catalog_shape(Family f, const Integer& subscript) {
    if (subscript < 1) throw std::invalid_argument("catalog_shape: subscript must be positive");
    long modulus;
    switch (f) {
        case Family::T: modulus = 6; break;
        case Family::O: modulus = 12; break;
        case Family::I: modulus = 30; break;
        default: throw std::invalid_argument("catalog_shape: only T, O, I have subscripts");
    }
    Integer k = mod_floor(subscript, modulus);
    SphericalShape s;
    s.b = (subscript - k) / modulus + 2;
    long kk = k.get_si();
    if (f == Family::T) {
        s.m2 = 3; s.m3 = 3;
        switch (kk) {
            case 1: s.beta2 = 2; s.beta3 = 2; break;
            case 3: s.beta2 = 1; s.beta3 = 2; break;
            case 5: s.beta2 = 1; s.beta3 = 1; break;
            default: throw std::invalid_argument("catalog_shape: T subscript must be 1, 3 or 5 mod 6");
        }
    } else if (f == Family::O) {
        s.m2 = 3; s.m3 = 4;
        switch (kk) {
            case 1: s.beta2 = 2; s.beta3 = 3; break;
            case 5: s.beta2 = 1; s.beta3 = 3; break;
            case 7: s.beta2 = 2; s.beta3 = 1; break;
            case 11: s.beta2 = 1; s.beta3 = 1; break;
            default: throw std::invalid_argument("catalog_shape: O subscript must be 1, 5, 7 or 11 mod 12");
        }
    } else {
        s.m2 = 3; s.m3 = 5;
        switch (kk) {
            case 1: s.beta2 = 2; s.beta3 = 4; break;
            case 7: s.beta2 = 2; s.beta3 = 3; break;
            case 11: s.beta2 = 1; s.beta3 = 4; break;
            case 13: s.beta2 = 2; s.beta3 = 2; break;
            case 17: s.beta2 = 1; s.beta3 = 3; break;
            case 19: s.beta2 = 2; s.beta3 = 1; break;
            case 23: s.beta2 = 1; s.beta3 = 2; break;
            case 29: s.beta2 = 1; s.beta3 = 1; break;
            default:
                throw std::invalid_argument("catalog_shape: I subscript must be coprime to 30");
        }
    }
    return s;
}

SeifertInvariant spherical_from_name(const SphericalName& name) {
    SeifertInvariant inv;
    switch (name.family) {
        case Family::C: {
            if (name.p < 1) throw std::invalid_argument("lens space needs p >= 1");
            if (name.p == 1) {
                inv.b = 1;  // S^3
            } else {
                if (name.q < 1 || name.q >= name.p || gcd(name.p, name.q) != 1)
                    throw std::invalid_argument("lens space needs 1 <= q < p coprime");
                inv.b = -1;
                inv.legs.push_back({name.q, name.p - name.q});
            }
            break;
        }
        case Family::D: {
            if (name.q < 1 || name.p <= name.q || gcd(name.p, name.q) != 1)
                throw std::invalid_argument("D family needs p > q >= 1 coprime");
            if (name.q == 1) {
                inv.b = name.p;
                inv.legs = {{2, 1}, {2, 1}};
            } else {
                auto terms = hj_cf(name.p, name.q);
                std::vector<Integer> tail(terms.begin() + 1, terms.end());
                Rational a3 = cf_eval(tail);
                inv.b = terms[0];
                inv.legs = {{2, 1}, {2, 1}, {a3.num(), a3.den()}};
            }
            break;
        }
        default: {
            SphericalShape s = catalog_shape(name.family, name.subscript);
            inv.b = s.b;
            inv.legs = {{2, 1}, {s.m2, s.beta2}, {s.m3, s.beta3}};
            break;
        }
    }
    SeifertInvariant n = normalize(inv);
    return name.sign < 0 ? reverse_orientation(n) : n;
}

NameResult spherical_name(const SeifertInvariant& inv) {
    SeifertInvariant n = normalize(inv);
    const std::size_t r = n.legs.size();
    if (r >= 4) return {std::nullopt, "four or more exceptional fibers"};

    if (r <= 2) {
        Rational e = euler_number(n);
        if (e.is_zero())
            return {std::nullopt, "Euler number zero: not a rational homology sphere"};
        // with at most two exceptional fibers the manifold is (-e)-surgery on
        // the unknot, the lens space L(p, q) below
        Rational me = -e;
        SphericalName nm;
        nm.family = Family::C;
        nm.sign = +1;
        nm.subscript = 0;
        Integer p = abs(me.num());
        if (p == 1) {
            nm.p = 1;
            nm.q = 0;
        } else {
            Integer q = mod_floor(me.sign() > 0 ? me.den() : -me.den(), p);
            nm.p = p;
            nm.q = std::min(q, mod_inverse(q, p));
        }
        return {nm, ""};
    }

    int sign = +1;
    if (n.b <= 1) {
        n = reverse_orientation(n);  // now n.b = 3 - b >= 2
        sign = -1;
    }
    const Integer a1 = n.legs[0].alpha, a2 = n.legs[1].alpha, a3 = n.legs[2].alpha;

    SphericalName nm;
    nm.sign = sign;
    nm.subscript = 0;
    if (a1 == 2 && a2 == 2) {
        // prism: legs (2,1), (2,1), (alpha3, beta3); p/q = b - beta3/alpha3
        nm.family = Family::D;
        nm.q = n.legs[2].alpha;
        nm.p = n.b * n.legs[2].alpha - n.legs[2].beta;
        return {nm, ""};
    }
    if (a1 == 2 && a2 == 3 && (a3 == 3 || a3 == 4 || a3 == 5)) {
        Family f = a3 == 3 ? Family::T : a3 == 4 ? Family::O : Family::I;
        Integer divisor = a3 == 3 ? 3 : a3 == 4 ? 2 : 1;
        Integer h1 = h1_order(n);
        if (h1 % divisor != 0) throw std::logic_error("spherical_name: |H1| divisibility failed");
        nm.family = f;
        nm.subscript = h1 / divisor;
        // the subscript determines the shape; confirm it reproduces the legs
        SphericalShape s = catalog_shape(f, nm.subscript);
        if (s.b != n.b || s.beta2 != n.legs[1].beta || s.beta3 != n.legs[2].beta)
            throw std::logic_error("spherical_name: catalog shape mismatch");
        return {nm, ""};
    }
    return {std::nullopt,
            "multiplicities are not of lens, prism, tetrahedral, octahedral or icosahedral type"};
}

bool same_spherical(const SphericalName& a, const SphericalName& b) {
    if (a.family != b.family) return false;
    if (a.family == Family::C) {
        if (a.p != b.p) return false;
        if (a.p == 1) return true;
        Integer qa = mod_floor(a.sign < 0 ? a.p - a.q : a.q, a.p);
        Integer qb = mod_floor(b.sign < 0 ? b.p - b.q : b.q, b.p);
        return qa == qb || mod_floor(qa * qb, a.p) == 1;
    }
    if (a.sign != b.sign) return false;
    if (a.family == Family::D) return a.p == b.p && a.q == b.q;
    return a.subscript == b.subscript;
}

bool operator==(const SphericalName& a, const SphericalName& b) {
    return a.family == b.family && a.sign == b.sign && a.p == b.p && a.q == b.q &&
           a.subscript == b.subscript;
}

std::optional<LegReduction> complementary_reduction(const SeifertInvariant& inv) {
    SeifertInvariant n = normalize(inv);
    for (std::size_t i = 0; i < n.legs.size(); ++i) {
        for (std::size_t j = i + 1; j < n.legs.size(); ++j) {
            if (n.legs[i].alpha != n.legs[j].alpha) continue;
            if (n.legs[i].beta + n.legs[j].beta != n.legs[i].alpha) continue;
            LegReduction red;
            red.i = i;
            red.j = j;
            red.reduced.b = n.b - 1;
            for (std::size_t k = 0; k < n.legs.size(); ++k)
                if (k != i && k != j) red.reduced.legs.push_back(n.legs[k]);
            if (red.reduced.legs.size() <= 2) {
                auto nr = spherical_name(red.reduced);
                if (nr.name) red.lens = nr.name;
            }
            return red;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// text forms

std::string SeifertInvariant::str() const {
    std::ostringstream os;
    os << "(" << b << ";";
    for (std::size_t k = 0; k < legs.size(); ++k)
        os << (k ? ", " : " ") << legs[k].alpha << "/" << legs[k].beta;
    os << ")";
    return os.str();
}

namespace {

// integer token with optional sign; advances pos past trailing spaces
std::optional<Integer> scan_int(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) return std::nullopt;
    return Integer(s.substr(start, pos - start));
}

bool scan_char(const std::string& s, std::size_t& pos, char c) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
    }
    return false;
}

}  // namespace

std::optional<SeifertInvariant> SeifertInvariant::parse(const std::string& s) {
    std::size_t pos = 0;
    if (!scan_char(s, pos, '(')) return std::nullopt;
    auto b = scan_int(s, pos);
    if (!b || !scan_char(s, pos, ';')) return std::nullopt;
    SeifertInvariant inv;
    inv.b = *b;
    if (!scan_char(s, pos, ')')) {
        while (true) {
            auto a = scan_int(s, pos);
            if (!a || !scan_char(s, pos, '/')) return std::nullopt;
            auto be = scan_int(s, pos);
            if (!be) return std::nullopt;
            inv.legs.push_back({*a, *be});
            if (scan_char(s, pos, ',')) continue;
            if (scan_char(s, pos, ')')) break;
            return std::nullopt;
        }
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) return std::nullopt;
    try {
        validate(inv);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return inv;
}

std::string SphericalName::str() const {
    std::ostringstream os;
    if (sign < 0) os << "-";
    switch (family) {
        case Family::C: os << "L_" << p << "_" << q; break;
        case Family::D: os << "D_" << p << "_" << q; break;
        case Family::T: os << "T_" << subscript; break;
        case Family::O: os << "O_" << subscript; break;
        case Family::I: os << "I_" << subscript; break;
    }
    return os.str();
}

std::optional<SphericalName> SphericalName::parse(const std::string& s) {
    std::size_t pos = 0;
    SphericalName nm;
    nm.subscript = 0;
    nm.sign = +1;
    if (pos < s.size() && s[pos] == '-') {
        nm.sign = -1;
        ++pos;
    }
    if (pos >= s.size()) return std::nullopt;
    char fam = s[pos++];
    auto take = [&](Integer& out) {
        if (pos >= s.size() || s[pos] != '_') return false;
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return false;
        out = Integer(s.substr(start, pos - start));
        return true;
    };
    switch (fam) {
        case 'L':
        case 'D': {
            nm.family = fam == 'L' ? Family::C : Family::D;
            if (!take(nm.p) || !take(nm.q) || pos != s.size()) return std::nullopt;
            break;
        }
        case 'T':
        case 'O':
        case 'I': {
            nm.family = fam == 'T' ? Family::T : fam == 'O' ? Family::O : Family::I;
            if (!take(nm.subscript) || pos != s.size()) return std::nullopt;
            break;
        }
        default:
            return std::nullopt;
    }
    // reject names whose parameters the catalog cannot host
    try {
        spherical_from_name(nm);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return nm;
}

}  // namespace spherical
