#include "brieskorn/rational.hpp"

#include "brieskorn/errors.hpp"

#include <cctype>

namespace brieskorn {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational", 0);
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false, digits = false;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] == '/' && !seen_slash && digits) {
            seen_slash = true;
            digits = false;
        } else if (std::isdigit(static_cast<unsigned char>(s[k]))) {
            digits = true;
        } else {
            throw ParseError("malformed rational '" + s + "'", k);
        }
    }
    if (!digits) throw ParseError("malformed rational '" + s + "'", s.size());
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'", 0);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
    q.canonicalize();
    return q;
}

Rational make_rational(long p, long q) {
    if (q == 0) throw Error("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace brieskorn
