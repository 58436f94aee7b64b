#pragma once

#include "brieskorn/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace brieskorn {

/// Integer exponent vector; negative entries are allowed for Laurent monomials.
using Exponent = std::vector<int>;

enum class Mode { laurent, polynomial };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Graded-lex comparison: total degree first, then lexicographic.
/// Returns <0, 0, >0.
int grlex_compare(const Exponent& a, const Exponent& b);

/// Sparse multivariate polynomial over Q with a fixed number of variables.
/// No zero coefficient is ever stored, so structural equality is equality.
class Poly {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly monomial(Exponent e, const Rational& c = 1);
    static Poly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coeff(const Exponent& e) const;
    Rational constant_term() const;

    void add_term(const Exponent& e, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Poly mul_monomial(const Exponent& e, const Rational& c) const;
    Poly derivative(std::size_t i) const;
    Poly pow(unsigned k) const;
    /// Total degree of the highest term; -1 for the zero polynomial.
    int total_degree() const;

    /// Evaluates at a rational point. Requires nonnegative exponents
    /// unless every coordinate hit by a negative exponent is nonzero.
    Rational evaluate(std::span<const Rational> point) const;

    /// Printing with the given variable names, in descending graded-lex order.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

/// Polynomial in the deformation parameters x (coefficients of LaurentPoly).
using ParamCoeff = Poly;

std::vector<std::string> default_names(const std::string& stem, std::size_t count);

/// Laurent (or ordinary) polynomial in u_1..u_n whose coefficients are
/// polynomials in parameters x_1..x_r. Stored flat over n + r variables:
/// the first n exponents belong to u, the trailing r to x.
class LaurentPoly {
public:
    LaurentPoly(std::size_t n, std::size_t r, Mode mode) : n_(n), r_(r), mode_(mode), flat_(n + r) {}

    /// Validates the mode constraint (no negative exponents in polynomial
    /// mode, never on parameters).
    static LaurentPoly from_flat(Poly flat, std::size_t n, std::size_t r, Mode mode);
    static LaurentPoly monomial(std::size_t n, std::size_t r, Mode mode, const Exponent& u,
                                const Rational& c = 1);
    static LaurentPoly constant(std::size_t n, std::size_t r, Mode mode, const Rational& c);
    /// c(x) * u^e
    static LaurentPoly term(std::size_t n, Mode mode, const Exponent& u, const ParamCoeff& c);

    std::size_t n() const { return n_; }
    std::size_t r() const { return r_; }
    Mode mode() const { return mode_; }
    const Poly& flat() const { return flat_; }
    bool is_zero() const { return flat_.is_zero(); }

    /// u-exponent -> coefficient in Q[x].
    std::map<Exponent, ParamCoeff> grouped() const;
    std::vector<Exponent> u_support() const;
    ParamCoeff coefficient(const Exponent& u) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.mode_ == b.mode_ && a.flat_ == b.flat_;
    }

    LaurentPoly times_param(const ParamCoeff& c) const;
    LaurentPoly times_monomial(const Exponent& u, const Rational& c = 1) const;

    /// u_i * d/du_i, i zero-based.
    LaurentPoly log_derivative(std::size_t i) const;
    /// d/du_i; polynomial mode only.
    LaurentPoly partial_derivative(std::size_t i) const;
    /// d/dx_j.
    LaurentPoly param_derivative(std::size_t j) const;
    /// Evaluates all parameters; the result has r = 0.
    LaurentPoly substitute_params(std::span<const Rational> point) const;
    /// Same polynomial viewed with r parameters (requires current r = 0).
    LaurentPoly with_params(std::size_t r) const;
    /// The part independent of x (x = 0), as an r = 0 polynomial.
    LaurentPoly x_free_part() const;
    /// The part that depends on x (F - F|x=0), keeping r.
    LaurentPoly x_dependent_part() const;

    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& u_names,
                          const std::vector<std::string>& x_names) const;

private:
    std::size_t n_, r_;
    Mode mode_;
    Poly flat_;
};

void require_compatible(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace brieskorn
