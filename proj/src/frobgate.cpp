#include "brieskorn/frobgate.hpp"

#include "brieskorn/matrix.hpp"

#include <algorithm>
#include <deque>

namespace brieskorn {

MilnorAlgebra undeformed(const MilnorAlgebra& A) {
    if (A.r() == 0) return A;
    return A.deform(A.system().f());
}

std::vector<LaurentPoly> deformation_terms(const LaurentPoly& F) {
    std::vector<LaurentPoly> g;
    std::vector<Rational> zero(F.r(), Rational(0));
    for (std::size_t j = 0; j < F.r(); ++j) g.push_back(F.param_derivative(j).substitute_params(zero));
    return g;
}

namespace {

std::vector<Rational> constant_coordinates(const MilnorAlgebra& A0, const LaurentPoly& h) {
    std::vector<Rational> v;
    for (const auto& c : A0.coordinates(h)) v.push_back(c.constant_term());
    return v;
}

// Incremental row-echelon span over Q.
class Span {
public:
    explicit Span(std::size_t dim) : dim_(dim) {}

    /// Adds v if independent; returns whether it was added.
    bool add(std::vector<Rational> v) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational& c = v[pivots_[k]];
            if (c == 0) continue;
            Rational f = c;
            for (std::size_t t = 0; t < dim_; ++t) v[t] -= f * rows_[k][t];
        }
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
        if (it == v.end()) return false;
        std::size_t p = static_cast<std::size_t>(it - v.begin());
        Rational s = 1 / v[p];
        for (auto& c : v) c *= s;
        for (auto& row : rows_) {
            Rational f = row[p];
            if (f == 0) continue;
            for (std::size_t t = 0; t < dim_; ++t) row[t] -= f * v[t];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    std::size_t size() const { return rows_.size(); }

private:
    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

std::string word_join(const std::string& w, const std::string& letter) {
    return w == "1" ? letter : w + "*" + letter;
}

}  // namespace

ECReport check_EC(const MilnorAlgebra& A) {
    ECReport rep;
    const MilnorBasis& b = A.basis();
    Exponent zero(A.n(), 0);
    rep.zeta = A.mode() == Mode::laurent ? "du/u" : "du";
    rep.zeta_weight = A.weight(zero);
    rep.minimal_weight = *std::min_element(b.weights.begin(), b.weights.end());
    rep.multiplicity = static_cast<std::size_t>(std::count(b.weights.begin(), b.weights.end(), rep.minimal_weight));
    rep.ok = A.mode() == Mode::laurent || (rep.zeta_weight == rep.minimal_weight && rep.multiplicity == 1);
    return rep;
}

ICReport check_IC(const MilnorAlgebra& A, const std::vector<LaurentPoly>& g) {
    MilnorAlgebra A0 = undeformed(A);
    ICReport rep;
    rep.r = g.size();
    QMatrix M(A0.mu(), g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        auto v = constant_coordinates(A0, g[j]);
        for (std::size_t k = 0; k < v.size(); ++k) M(k, j) = v[k];
    }
    rep.rank = rank(M);
    rep.ok = rep.rank == rep.r;
    return rep;
}

GCReport check_GC(const MilnorAlgebra& A, const std::vector<LaurentPoly>& g, bool include_R0) {
    MilnorAlgebra A0 = undeformed(A);
    GCReport rep;
    rep.mu = A0.mu();
    rep.include_R0 = include_R0;

    std::vector<QMatrix> ops;
    std::vector<std::string> letters;
    for (const auto& gj : g) {
        ops.push_back(A0.multiplication_matrix(gj).constant_part());
        letters.push_back(gj.flat().size() == 1 ? gj.to_string() : "(" + gj.to_string() + ")");
    }
    if (include_R0) {
        ops.push_back(A0.multiplication_matrix(A0.system().f()).constant_part());
        letters.push_back("f");
    }

    Span span(rep.mu);
    std::deque<std::pair<std::vector<Rational>, std::string>> queue;
    Exponent zero(A0.n(), 0);
    auto zeta = constant_coordinates(A0, LaurentPoly::monomial(A0.n(), 0, A0.mode(), zero));
    if (span.add(zeta)) {
        rep.words.push_back("1");
        queue.push_back({zeta, "1"});
    }
    while (!queue.empty() && span.size() < rep.mu) {
        auto [v, w] = std::move(queue.front());
        queue.pop_front();
        for (std::size_t k = 0; k < ops.size() && span.size() < rep.mu; ++k) {
            auto image = ops[k] * std::span<const Rational>(v);
            if (span.add(image)) {
                std::string word = word_join(w, letters[k]);
                rep.words.push_back(word);
                queue.push_back({std::move(image), word});
            }
        }
    }
    rep.dimension = span.size();
    rep.ok = rep.dimension == rep.mu;
    return rep;
}

ConditionReport check_conditions(const MilnorAlgebra& A, bool include_R0) {
    ConditionReport rep;
    auto g = deformation_terms(A.system().F());
    rep.ec = check_EC(A);
    rep.ic = check_IC(A, g);
    rep.gc = check_GC(A, g, include_R0);
    for (const auto& gj : g) rep.subdiagram.push_back(is_subdiagram(gj, A.polyhedron()));
    return rep;
}

Suggestion suggest_deformation(const MilnorAlgebra& A, bool include_R0) {
    MilnorAlgebra A0 = undeformed(A);
    const MilnorBasis& b = A0.basis();
    std::size_t n = A0.n();
    Mode mode = A0.mode();
    auto mono = [&](const Exponent& e) { return LaurentPoly::monomial(n, 0, mode, e); };

    std::vector<Exponent> candidates;
    for (const auto& e : b.monomials) {
        if (std::all_of(e.begin(), e.end(), [](int k) { return k == 0; })) continue;
        if (is_subdiagram(mono(e), A0.polyhedron()).ok) candidates.push_back(e);
    }
    auto gc_of = [&](const std::vector<Exponent>& list) {
        std::vector<LaurentPoly> g;
        for (const auto& e : list) g.push_back(mono(e));
        return check_GC(A0, g, include_R0);
    };

    Suggestion s;
    std::size_t dim = gc_of(s.monomials).dimension;
    for (const auto& e : candidates) {
        if (dim == b.mu()) break;
        auto trial = s.monomials;
        trial.push_back(e);
        std::size_t d = gc_of(trial).dimension;
        if (d > dim) {
            s.monomials = std::move(trial);
            dim = d;
        }
    }
    if (dim != b.mu()) {
        s.diagnostic = "no sub-diagram basis monomial list reaches dimension " + std::to_string(b.mu()) +
                       " (reached " + std::to_string(dim) + ")";
        return s;
    }
    for (std::size_t k = s.monomials.size(); k-- > 0;) {
        auto trial = s.monomials;
        trial.erase(trial.begin() + static_cast<long>(k));
        if (gc_of(trial).ok) s.monomials = std::move(trial);
    }
    std::vector<LaurentPoly> g;
    for (const auto& e : s.monomials) g.push_back(mono(e));
    s.ok = check_IC(A0, g).ok && check_GC(A0, g, include_R0).ok;
    if (!s.ok) s.diagnostic = "greedy list fails the injectivity condition";
    return s;
}

}  // namespace brieskorn
