#include "brieskorn/parser.hpp"

#include "brieskorn/errors.hpp"

#include <cctype>

namespace brieskorn {

VariableNames VariableNames::defaults(std::size_t n, std::size_t r) {
    return {default_names("u", n), default_names("x", r)};
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const VariableNames& names, Mode mode)
        : text_(text), names_(names), mode_(mode), n_(names.u.size()), r_(names.x.size()) {}

    LaurentPoly parse() {
        Poly acc(n_ + r_);
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            skip_ws();
            Poly t = parse_term();
            if (sign < 0) t = -t;
            acc += t;
            skip_ws();
            if (at_end()) break;
        }
        return LaurentPoly::from_flat(std::move(acc), n_, r_, mode_);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly parse_term() {
        Rational coeff = 1;
        Exponent e(n_ + r_, 0);
        bool any = false;
        while (true) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Rational q{Integer(digits())};
                skip_ws();
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    skip_ws();
                    std::size_t at = pos_;
                    Integer den(digits());
                    if (den == 0) throw ParseError("zero denominator", at);
                    q /= Rational(den);
                }
                coeff *= q;
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
                    ++pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                std::string name(text_.substr(start, pos_ - start));
                std::size_t index = lookup(name, start);
                int k = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    k = parse_exponent();
                }
                if (k < 0 && (index >= n_ || mode_ == Mode::polynomial)) {
                    throw ParseError(index >= n_ ? "negative exponent on parameter '" + name + "'"
                                                 : "negative exponent in polynomial mode",
                                     start);
                }
                e[index] += k;
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end()) throw ParseError("dangling '*'", pos_);
            }
        }
        if (!any) throw ParseError("expected a term", pos_);
        Poly p(n_ + r_);
        p.add_term(e, coeff);
        return p;
    }

    int parse_exponent() {
        skip_ws();
        bool paren = !at_end() && peek() == '(';
        if (paren) {
            ++pos_;
            skip_ws();
        }
        int sign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
        }
        std::size_t at = pos_;
        std::string d = digits();
        if (d.size() > 6) throw ParseError("exponent too large", at);
        int k = sign * std::stoi(d);
        if (paren) {
            skip_ws();
            if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
        }
        return k;
    }

    std::size_t lookup(const std::string& name, std::size_t at) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (names_.u[i] == name) return i;
        for (std::size_t j = 0; j < r_; ++j)
            if (names_.x[j] == name) return n_ + j;
        throw ParseError("unknown variable '" + name + "'", at);
    }

    std::string_view text_;
    const VariableNames& names_;
    Mode mode_;
    std::size_t n_, r_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const VariableNames& names, Mode mode) {
    return Parser(text, names, mode).parse();
}

LaurentPoly parse_poly(std::string_view text, std::size_t n, std::size_t r, Mode mode) {
    return parse_poly(text, VariableNames::defaults(n, r), mode);
}

ParamCoeff parse_param(std::string_view text, const std::vector<std::string>& x_names) {
    VariableNames names{{}, x_names};
    return parse_poly(text, names, Mode::polynomial).flat();
}

}  // namespace brieskorn
