#include "brieskorn/poly.hpp"

#include "brieskorn/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace brieskorn {

std::string to_string(Mode mode) { return mode == Mode::laurent ? "laurent" : "polynomial"; }

Mode parse_mode(const std::string& text) {
    if (text == "laurent") return Mode::laurent;
    if (text == "polynomial") return Mode::polynomial;
    throw Error("unknown mode '" + text + "' (expected laurent|polynomial)");
}

int grlex_compare(const Exponent& a, const Exponent& b) {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db ? -1 : 1;
    if (a == b) return 0;
    return a < b ? -1 : 1;
}

// ---------------------------------------------------------------- Poly

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    Rational v = c;
    v.canonicalize();
    p.add_term(Exponent(nvars, 0), v);
    return p;
}

Poly Poly::monomial(Exponent e, const Rational& c) {
    Poly p(e.size());
    Rational v = c;
    v.canonicalize();
    p.add_term(e, v);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
    Exponent e(nvars, 0);
    e.at(index) = 1;
    return monomial(std::move(e));
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Rational Poly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coeff(Exponent(nvars_, 0)); }

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != nvars_) throw DimensionError("exponent length does not match variable count");
    if (brieskorn::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (brieskorn::is_zero(it->second)) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.nvars_ != nvars_) throw DimensionError("polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.nvars_ != nvars_) throw DimensionError("polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (brieskorn::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [e, v] : p.terms_) v = -v;
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw DimensionError("polynomial variable counts differ");
    Poly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly Poly::mul_monomial(const Exponent& m, const Rational& c) const {
    Poly out(nvars_);
    if (brieskorn::is_zero(c)) return out;
    Exponent e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + m[i];
        out.terms_.emplace_hint(out.terms_.end(), e, ca * c);
    }
    return out;
}

Poly Poly::derivative(std::size_t i) const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent d = e;
        d[i] -= 1;
        out.add_term(d, c * e[i]);
    }
    return out;
}

Poly Poly::pow(unsigned k) const {
    Poly out = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
}

int Poly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw DimensionError("evaluation point has wrong length");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            Rational base = point[i];
            int k = e[i];
            if (k < 0) {
                if (brieskorn::is_zero(base)) throw Error("negative power of zero in evaluation");
                base = 1 / base;
                k = -k;
            }
            Rational powv = 1;
            for (int j = 0; j < k; ++j) powv *= base;
            term *= powv;
        }
        total += term;
    }
    return total;
}

namespace {

void append_term(std::ostringstream& out, bool first, const Rational& c,
                 const std::vector<std::pair<std::string, int>>& factors) {
    Rational mag = abs(c);
    if (first) {
        if (sgn(c) < 0) out << "-";
    } else {
        out << (sgn(c) < 0 ? " - " : " + ");
    }
    bool wrote = false;
    if (factors.empty() || mag != 1) {
        out << mag.get_str();
        wrote = true;
    }
    for (const auto& [name, k] : factors) {
        if (wrote) out << "*";
        out << name;
        if (k != 1) out << "^" << k;
        wrote = true;
    }
}

}  // namespace

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw DimensionError("name list does not match variable count");
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return grlex_compare(a->first, b->first) > 0; });
    std::ostringstream out;
    bool first = true;
    for (auto* t : order) {
        std::vector<std::pair<std::string, int>> factors;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (t->first[i] != 0) factors.emplace_back(names[i], t->first[i]);
        append_term(out, first, t->second, factors);
        first = false;
    }
    return out.str();
}

std::vector<std::string> default_names(const std::string& stem, std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

// ---------------------------------------------------------------- LaurentPoly

void require_compatible(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.n() != b.n() || a.r() != b.r() || a.mode() != b.mode())
        throw DimensionError("Laurent polynomials differ in n, r or mode");
}

LaurentPoly LaurentPoly::from_flat(Poly flat, std::size_t n, std::size_t r, Mode mode) {
    if (flat.nvars() != n + r) throw DimensionError("flat polynomial has wrong variable count");
    for (const auto& [e, c] : flat.terms()) {
        for (std::size_t i = 0; i < n + r; ++i) {
            if (e[i] >= 0) continue;
            if (i >= n) throw Error("negative exponent on a parameter");
            if (mode == Mode::polynomial) throw Error("negative exponent in polynomial mode");
        }
    }
    LaurentPoly p(n, r, mode);
    p.flat_ = std::move(flat);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t n, std::size_t r, Mode mode, const Exponent& u,
                                  const Rational& c) {
    if (u.size() != n) throw DimensionError("u-exponent has wrong length");
    Exponent e = u;
    e.resize(n + r, 0);
    return from_flat(Poly::monomial(e, c), n, r, mode);
}

LaurentPoly LaurentPoly::constant(std::size_t n, std::size_t r, Mode mode, const Rational& c) {
    return monomial(n, r, mode, Exponent(n, 0), c);
}

LaurentPoly LaurentPoly::term(std::size_t n, Mode mode, const Exponent& u, const ParamCoeff& c) {
    std::size_t r = c.nvars();
    Poly flat(n + r);
    Exponent e(n + r);
    std::copy(u.begin(), u.end(), e.begin());
    for (const auto& [ex, v] : c.terms()) {
        std::copy(ex.begin(), ex.end(), e.begin() + static_cast<long>(n));
        flat.add_term(e, v);
    }
    return from_flat(std::move(flat), n, r, mode);
}

std::map<Exponent, ParamCoeff> LaurentPoly::grouped() const {
    std::map<Exponent, ParamCoeff> out;
    for (const auto& [e, c] : flat_.terms()) {
        Exponent u(e.begin(), e.begin() + static_cast<long>(n_));
        Exponent x(e.begin() + static_cast<long>(n_), e.end());
        auto it = out.try_emplace(u, ParamCoeff(r_)).first;
        it->second.add_term(x, c);
    }
    return out;
}

std::vector<Exponent> LaurentPoly::u_support() const {
    std::vector<Exponent> out;
    for (const auto& [e, c] : flat_.terms()) {
        Exponent u(e.begin(), e.begin() + static_cast<long>(n_));
        if (out.empty() || out.back() != u) out.push_back(std::move(u));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ParamCoeff LaurentPoly::coefficient(const Exponent& u) const {
    ParamCoeff out(r_);
    for (const auto& [e, c] : flat_.terms())
        if (std::equal(u.begin(), u.end(), e.begin()))
            out.add_term(Exponent(e.begin() + static_cast<long>(n_), e.end()), c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_compatible(*this, o);
    flat_ += o.flat_;
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_compatible(*this, o);
    flat_ -= o.flat_;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    flat_ *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_compatible(a, b);
    LaurentPoly out(a.n_, a.r_, a.mode_);
    out.flat_ = a.flat_ * b.flat_;
    return out;
}

LaurentPoly LaurentPoly::times_param(const ParamCoeff& c) const {
    if (c.nvars() != r_) throw DimensionError("parameter coefficient has wrong parameter count");
    return *this * term(n_, mode_, Exponent(n_, 0), c);
}

LaurentPoly LaurentPoly::times_monomial(const Exponent& u, const Rational& c) const {
    Exponent e = u;
    e.resize(n_ + r_, 0);
    LaurentPoly out(n_, r_, mode_);
    out.flat_ = flat_.mul_monomial(e, c);
    if (mode_ == Mode::polynomial) return from_flat(std::move(out.flat_), n_, r_, mode_);
    return out;
}

LaurentPoly LaurentPoly::log_derivative(std::size_t i) const {
    if (i >= n_) throw DimensionError("log_derivative index out of range");
    LaurentPoly out(n_, r_, mode_);
    for (const auto& [e, c] : flat_.terms())
        if (e[i] != 0) out.flat_.add_term(e, c * e[i]);
    return out;
}

LaurentPoly LaurentPoly::partial_derivative(std::size_t i) const {
    if (i >= n_) throw DimensionError("partial_derivative index out of range");
    if (mode_ != Mode::polynomial)
        throw Error("partial_derivative requires polynomial mode (use log_derivative)");
    LaurentPoly out(n_, r_, mode_);
    out.flat_ = flat_.derivative(i);
    return out;
}

LaurentPoly LaurentPoly::param_derivative(std::size_t j) const {
    if (j >= r_) throw DimensionError("param_derivative index out of range");
    LaurentPoly out(n_, r_, mode_);
    out.flat_ = flat_.derivative(n_ + j);
    return out;
}

LaurentPoly LaurentPoly::substitute_params(std::span<const Rational> point) const {
    if (point.size() != r_) throw DimensionError("parameter point has wrong length");
    LaurentPoly out(n_, 0, mode_);
    for (const auto& [u, c] : grouped()) out.flat_.add_term(u, c.evaluate(point));
    return out;
}

LaurentPoly LaurentPoly::with_params(std::size_t r) const {
    if (r_ != 0) throw DimensionError("with_params requires r = 0");
    LaurentPoly out(n_, r, mode_);
    for (const auto& [e, c] : flat_.terms()) {
        Exponent x = e;
        x.resize(n_ + r, 0);
        out.flat_.add_term(x, c);
    }
    return out;
}

LaurentPoly LaurentPoly::x_free_part() const {
    LaurentPoly out(n_, 0, mode_);
    for (const auto& [e, c] : flat_.terms())
        if (std::all_of(e.begin() + static_cast<long>(n_), e.end(), [](int v) { return v == 0; }))
            out.flat_.add_term(Exponent(e.begin(), e.begin() + static_cast<long>(n_)), c);
    return out;
}

LaurentPoly LaurentPoly::x_dependent_part() const {
    LaurentPoly out(n_, r_, mode_);
    for (const auto& [e, c] : flat_.terms())
        if (!std::all_of(e.begin() + static_cast<long>(n_), e.end(), [](int v) { return v == 0; }))
            out.flat_.add_term(e, c);
    return out;
}

std::string LaurentPoly::to_string() const {
    return to_string(default_names("u", n_), default_names("x", r_));
}

std::string LaurentPoly::to_string(const std::vector<std::string>& u_names,
                                   const std::vector<std::string>& x_names) const {
    if (u_names.size() != n_ || x_names.size() != r_)
        throw DimensionError("name lists do not match n and r");
    if (flat_.is_zero()) return "0";
    auto split = [this](const Exponent& e) {
        return std::pair{Exponent(e.begin(), e.begin() + static_cast<long>(n_)),
                         Exponent(e.begin() + static_cast<long>(n_), e.end())};
    };
    std::vector<const Poly::TermMap::value_type*> order;
    for (const auto& t : flat_.terms()) order.push_back(&t);
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        auto [ua, xa] = split(a->first);
        auto [ub, xb] = split(b->first);
        int cu = grlex_compare(ua, ub);
        if (cu != 0) return cu > 0;
        return grlex_compare(xa, xb) > 0;
    });
    std::ostringstream out;
    bool first = true;
    for (auto* t : order) {
        std::vector<std::pair<std::string, int>> factors;
        for (std::size_t j = 0; j < r_; ++j)
            if (t->first[n_ + j] != 0) factors.emplace_back(x_names[j], t->first[n_ + j]);
        for (std::size_t i = 0; i < n_; ++i)
            if (t->first[i] != 0) factors.emplace_back(u_names[i], t->first[i]);
        append_term(out, first, t->second, factors);
        first = false;
    }
    return out.str();
}

}  // namespace brieskorn
