#include "brieskorn/groebner.hpp"

#include "brieskorn/errors.hpp"

#include <algorithm>
#include <functional>

namespace brieskorn {

namespace {

int grevlex_range(const Exponent& a, const Exponent& b, std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

struct Term {
    Exponent e;
    Rational c;
};

// Terms sorted ascending in the monomial order; the leading term is back().
using Sparse = std::vector<Term>;

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
    Exponent m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

Exponent diff(const Exponent& a, const Exponent& b) {
    Exponent m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
    return m;
}

bool coprime(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

class Engine {
public:
    Engine(const MonomialOrder& order, std::size_t budget) : order_(order), budget_(budget) {}

    Sparse to_sparse(const Poly& p) const {
        Sparse s;
        s.reserve(p.size());
        for (const auto& [e, c] : p.terms()) s.push_back({e, c});
        std::sort(s.begin(), s.end(),
                  [this](const Term& a, const Term& b) { return order_.compare(a.e, b.e) < 0; });
        return s;
    }

    static Poly to_poly(const Sparse& s, std::size_t nvars) {
        Poly p(nvars);
        for (const auto& t : s) p.add_term(t.e, t.c);
        return p;
    }

    // a - c * x^m * b
    Sparse sub_mul(const Sparse& a, const Rational& c, const Exponent& m, const Sparse& b) const {
        Sparse out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        Exponent shifted;
        while (i < a.size() || j < b.size()) {
            if (j < b.size()) {
                shifted = b[j].e;
                for (std::size_t k = 0; k < m.size(); ++k) shifted[k] += m[k];
            }
            int cmp = j == b.size() ? -1 : i == a.size() ? 1 : order_.compare(a[i].e, shifted);
            if (cmp < 0) {
                out.push_back(a[i++]);
            } else if (cmp > 0) {
                out.push_back({shifted, -c * b[j++].c});
            } else {
                Rational v = a[i].c - c * b[j].c;
                if (sgn(v) != 0) out.push_back({shifted, v});
                ++i;
                ++j;
            }
        }
        return out;
    }

    void tick() {
        if (++steps_ > budget_)
            throw BudgetExceeded("Groebner basis computation exceeded the step budget of " +
                                 std::to_string(budget_) + " reductions");
    }

    std::size_t steps() const { return steps_; }
    const MonomialOrder& order() const { return order_; }

private:
    MonomialOrder order_;
    std::size_t budget_;
    std::size_t steps_ = 0;
};

struct Element {
    Sparse poly;
    std::vector<Poly> cof;
};

Poly scaled_shift(const Poly& p, const Rational& c, const Exponent& m) { return p.mul_monomial(m, c); }

// Full reduction of `p` (with cofactors) modulo `basis`.
void reduce(Engine& eng, Element& p, const std::vector<Element>& basis, bool track) {
    Sparse remainder;
    while (!p.poly.empty()) {
        const Term& lt = p.poly.back();
        const Element* hit = nullptr;
        for (const auto& g : basis)
            if (divides(g.poly.back().e, lt.e)) {
                hit = &g;
                break;
            }
        if (!hit) {
            remainder.push_back(lt);
            p.poly.pop_back();
            continue;
        }
        eng.tick();
        Rational c = lt.c / hit->poly.back().c;
        Exponent m = diff(lt.e, hit->poly.back().e);
        p.poly = eng.sub_mul(p.poly, c, m, hit->poly);
        if (track)
            for (std::size_t i = 0; i < p.cof.size(); ++i)
                if (!hit->cof[i].is_zero()) p.cof[i] -= scaled_shift(hit->cof[i], c, m);
    }
    std::reverse(remainder.begin(), remainder.end());
    p.poly = std::move(remainder);
}

void make_monic(Element& e, bool track) {
    Rational inv = 1 / e.poly.back().c;
    for (auto& t : e.poly) t.c *= inv;
    if (track)
        for (auto& c : e.cof) c *= inv;
}

}  // namespace

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
    int c = grevlex_range(a, b, main_vars, a.size());
    if (c != 0) return c;
    return grevlex_range(a, b, 0, main_vars);
}

GroebnerBasis GroebnerBasis::compute(std::vector<Poly> generators, MonomialOrder order,
                                     const GroebnerOptions& options) {
    if (generators.empty()) throw Error("Groebner basis of an empty generator list");
    std::size_t nvars = generators.front().nvars();
    for (const auto& g : generators) {
        if (g.nvars() != nvars) throw DimensionError("generators have different variable counts");
        for (const auto& [e, c] : g.terms())
            for (int v : e)
                if (v < 0) throw Error("Groebner engine needs nonnegative exponents");
    }
    if (order.main_vars > nvars) throw DimensionError("monomial order block exceeds variable count");

    const bool track = options.track_cofactors;
    Engine eng(order, options.budget);
    std::size_t m = generators.size();

    std::vector<Element> basis;
    auto add_element = [&](Element e) {
        make_monic(e, track);
        basis.push_back(std::move(e));
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        Element e{eng.to_sparse(generators[i]), {}};
        if (track) {
            e.cof.assign(m, Poly(nvars));
            e.cof[i] = Poly::constant(nvars, 1);
        }
        reduce(eng, e, basis, track);
        if (e.poly.empty()) continue;
        add_element(std::move(e));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& p) {
        return lcm(basis[p.first].poly.back().e, basis[p.second].poly.back().e);
    };

    while (!pairs.empty()) {
        // normal selection strategy: smallest lcm first
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
            return order.compare(pair_lcm(a), pair_lcm(b)) < 0;
        });
        auto [i, j] = *best;
        pairs.erase(best);
        const Exponent& li = basis[i].poly.back().e;
        const Exponent& lj = basis[j].poly.back().e;
        if (coprime(li, lj)) continue;
        Exponent l = lcm(li, lj);
        // chain criterion: skip if some k has LM(k) | lcm and both (i,k), (j,k) already handled
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == i || k == j || !divides(basis[k].poly.back().e, l)) continue;
            auto pending = [&](std::size_t a, std::size_t b) {
                auto key = std::minmax(a, b);
                return std::find(pairs.begin(), pairs.end(), std::pair{key.first, key.second}) != pairs.end();
            };
            chain = !pending(i, k) && !pending(j, k);
        }
        if (chain) continue;

        Exponent mi = diff(l, li), mj = diff(l, lj);
        Element s{eng.sub_mul(Sparse{}, Rational(-1), mi, basis[i].poly), {}};
        s.poly = eng.sub_mul(s.poly, Rational(1), mj, basis[j].poly);
        if (track) {
            s.cof.assign(m, Poly(nvars));
            for (std::size_t q = 0; q < m; ++q)
                s.cof[q] = basis[i].cof[q].mul_monomial(mi, 1) - basis[j].cof[q].mul_monomial(mj, 1);
        }
        eng.tick();
        reduce(eng, s, basis, track);
        if (s.poly.empty()) continue;
        add_element(std::move(s));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // minimize, then interreduce
    std::vector<Element> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == i || !divides(basis[k].poly.back().e, basis[i].poly.back().e)) continue;
            redundant = basis[k].poly.back().e != basis[i].poly.back().e || k < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Element& a, const Element& b) {
        return order.compare(a.poly.back().e, b.poly.back().e) < 0;
    });
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Element> others;
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        Element head{{minimal[i].poly.back()}, {}};
        Element tail{Sparse(minimal[i].poly.begin(), minimal[i].poly.end() - 1), minimal[i].cof};
        reduce(eng, tail, others, track);
        Element reduced{tail.poly, tail.cof};
        reduced.poly.push_back(head.poly.back());
        minimal[i] = std::move(reduced);
    }

    GroebnerBasis gb;
    gb.generators_ = std::move(generators);
    gb.order_ = order;
    gb.steps_ = eng.steps();
    for (auto& e : minimal) {
        gb.elements_.push_back(Engine::to_poly(e.poly, nvars));
        if (track) gb.cofactors_.push_back(std::move(e.cof));
    }
    return gb;
}

bool GroebnerBasis::contains_unit() const {
    for (const auto& e : elements_)
        if (e.is_constant() && !e.is_zero()) return true;
    return false;
}

Exponent GroebnerBasis::leading_monomial(std::size_t k) const {
    const Poly& p = elements_.at(k);
    const Exponent* best = nullptr;
    for (const auto& [e, c] : p.terms())
        if (!best || order_.compare(e, *best) > 0) best = &e;
    return *best;
}

Poly GroebnerBasis::normal_form(const Poly& p) const {
    Engine eng(order_, static_cast<std::size_t>(-1));
    std::vector<Element> basis;
    for (const auto& e : elements_) basis.push_back({eng.to_sparse(e), {}});
    Element x{eng.to_sparse(p), {}};
    reduce(eng, x, basis, false);
    return Engine::to_poly(x.poly, p.nvars());
}

std::optional<std::vector<Exponent>> GroebnerBasis::standard_monomials() const {
    std::size_t nv = elements_.empty() ? 0 : elements_.front().nvars();
    std::size_t k = order_.main_vars;
    std::vector<Exponent> leads;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        Exponent lm = leading_monomial(i);
        bool main_only = true;
        for (std::size_t v = k; v < nv; ++v)
            if (lm[v] != 0) main_only = false;
        if (main_only) leads.emplace_back(lm.begin(), lm.begin() + static_cast<long>(k));
    }
    if (contains_unit()) return std::vector<Exponent>{};
    std::vector<int> bound(k, -1);
    for (const auto& lm : leads) {
        std::size_t nonzero = 0, var = 0;
        for (std::size_t v = 0; v < k; ++v)
            if (lm[v] != 0) {
                ++nonzero;
                var = v;
            }
        if (nonzero == 1 && (bound[var] < 0 || lm[var] < bound[var])) bound[var] = lm[var];
    }
    for (int b : bound)
        if (b < 0) return std::nullopt;

    std::vector<Exponent> out;
    Exponent cur(k, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
        if (v == k) {
            for (const auto& lm : leads)
                if (divides(lm, cur)) return;
            out.push_back(cur);
            return;
        }
        for (int a = 0; a < bound[v]; ++a) {
            cur[v] = a;
            walk(v + 1);
        }
        cur[v] = 0;
    };
    walk(0);
    return out;
}

Poly clear_laurent(const Poly& p, std::size_t extra, Exponent* shift) {
    std::size_t n = p.nvars();
    Exponent s(n, 0);
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i) s[i] = std::max(s[i], -e[i]);
    Poly out(n + extra);
    Exponent f(n + extra, 0);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < n; ++i) f[i] = e[i] + s[i];
        out.add_term(f, c);
    }
    if (shift) *shift = s;
    return out;
}

Poly torus_relation(std::size_t n) {
    Exponent e(n + 1, 1);
    Poly rel = Poly::monomial(e);
    rel -= Poly::constant(n + 1, 1);
    return rel;
}

}  // namespace brieskorn
