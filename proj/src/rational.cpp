#include "spherical/rational.hpp"

#include <cctype>
#include <ostream>

namespace spherical {

std::optional<Rational> Rational::parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (k == t.size()) return false;
        for (; k < t.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
        return true;
    };
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) return std::nullopt;
        return Rational(Integer(s));
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!valid_int(a) || !valid_int(b)) return std::nullopt;
    Integer den(b);
    if (sgn(den) == 0) return std::nullopt;
    return Rational(Integer(a), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace spherical
