#include "brieskorn/jacobi.hpp"

#include "brieskorn/errors.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace brieskorn {

// ---------------------------------------------------------------- JacobianSystem

LaurentPoly JacobianSystem::generator(const LaurentPoly& p, std::size_t i) {
    return p.mode() == Mode::laurent ? p.log_derivative(i) : p.partial_derivative(i);
}

JacobianSystem::JacobianSystem(const LaurentPoly& F) : F_(F), f_(F.x_free_part()) {
    for (std::size_t i = 0; i < F.n(); ++i) {
        gens_.push_back(generator(F_, i));
        ref_gens_.push_back(generator(f_, i));
    }
}

// ---------------------------------------------------------------- Groebner wrapper

JacobianGroebner jacobian_groebner(const LaurentPoly& f, const JacobiOptions& options) {
    if (f.r() != 0) throw DimensionError("the Jacobian Groebner basis is computed from the parameter-free f");
    std::size_t n = f.n();
    bool laurent = f.mode() == Mode::laurent;
    std::vector<LaurentPoly> ref;
    for (std::size_t i = 0; i < n; ++i) ref.push_back(JacobianSystem::generator(f, i));

    std::vector<Poly> gens;
    std::vector<Exponent> shifts(n);
    for (std::size_t i = 0; i < n; ++i) gens.push_back(clear_laurent(ref[i].flat(), laurent ? 1 : 0, &shifts[i]));
    if (laurent) gens.push_back(torus_relation(n));

    GroebnerOptions go;
    go.budget = options.budget;
    JacobianGroebner out{GroebnerBasis::compute(gens, MonomialOrder{n}, go), {}, {}, {}};

    auto sm = out.raw.standard_monomials();
    if (!sm)
        throw HypothesisError("non_isolated",
                              "the Jacobian quotient is infinite-dimensional (non-isolated critical points)");
    out.standard_monomials = std::move(*sm);

    auto to_laurent = [&](const Poly& p, const Exponent& shift) {
        Poly flat(n);
        Exponent e(n);
        for (const auto& [a, c] : p.terms()) {
            int t = laurent ? a[n] : 0;
            for (std::size_t j = 0; j < n; ++j) e[j] = a[j] - t + shift[j];
            flat.add_term(e, c);
        }
        return LaurentPoly::from_flat(flat, n, 0, f.mode());
    };
    Exponent zero(n, 0);
    for (std::size_t k = 0; k < out.raw.elements().size(); ++k) {
        Exponent lm = out.raw.leading_monomial(k);
        if (laurent && lm[n] != 0) continue;
        const Poly& el = out.raw.elements()[k];
        bool t_free = true;
        if (laurent)
            for (const auto& [a, c] : el.terms()) t_free = t_free && a[n] == 0;
        if (!t_free) continue;
        LaurentPoly e = to_laurent(el, zero);
        std::vector<LaurentPoly> cof;
        LaurentPoly check(n, 0, f.mode());
        for (std::size_t i = 0; i < n; ++i) {
            cof.push_back(to_laurent(out.raw.cofactors()[k][i], shifts[i]));
            check += cof.back() * ref[i];
        }
        if (!(check == e)) throw Error("internal: Groebner cofactor identity failed");
        out.elements.push_back(std::move(e));
        out.cofactors.push_back(std::move(cof));
    }
    return out;
}

// ---------------------------------------------------------------- levels

namespace {

struct Level {
    int beta = 0;
    std::vector<Exponent> monomials;  // descending graded-lex
    std::map<Exponent, std::size_t> index;
    std::vector<std::pair<Exponent, std::size_t>> gen_columns;  // (m, i)
    std::vector<std::size_t> basis;                             // positions in monomials
    QMatrix inverse;                                            // of [gen columns | unit columns]
};

bool grlex_desc(const Exponent& a, const Exponent& b) { return grlex_compare(a, b) > 0; }

}  // namespace

struct MilnorAlgebra::Shared {
    LaurentPoly f;
    Mode mode;
    std::size_t n;
    NewtonPolyhedron P;
    int d = 1;
    std::vector<std::vector<long>> normals;
    std::vector<long> box_max, box_min;
    std::vector<std::map<Exponent, Rational>> ref_terms;
    JacobianGroebner gb;
    MilnorBasis basis;
    std::map<Exponent, std::size_t> basis_index;

    mutable std::mutex mutex;
    mutable std::map<int, std::shared_ptr<const Level>> levels;

    explicit Shared(const LaurentPoly& f0, const JacobiOptions& options)
        : f(f0), mode(f0.mode()), n(f0.n()), P(build_polyhedron(f0)) {
        if (!P.denominator().fits_sint_p()) throw Error("weight denominator too large");
        d = static_cast<int>(P.denominator().get_si());
        for (const auto& fc : P.facets()) {
            std::vector<long> row;
            for (const auto& c : fc.L) {
                Rational v = c * d;
                row.push_back(v.get_num().get_si());
            }
            normals.push_back(std::move(row));
        }
        box_max.assign(n, 0);
        box_min.assign(n, 0);
        for (const auto& v : P.vertices())
            for (std::size_t i = 0; i < n; ++i) {
                box_max[i] = std::max<long>(box_max[i], v[i]);
                box_min[i] = std::min<long>(box_min[i], v[i]);
            }
        for (std::size_t i = 0; i < n; ++i) {
            std::map<Exponent, Rational> terms;
            for (const auto& [e, c] : JacobianSystem::generator(f, i).grouped()) terms[e] = c.constant_term();
            ref_terms.push_back(std::move(terms));
        }
        gb = jacobian_groebner(f, options);

        for (int beta = 0; beta <= static_cast<int>(n) * d; ++beta) {
            auto L = level(beta);
            for (auto k : L->basis) {
                const Exponent& e = L->monomials[k];
                basis_index[e] = basis.monomials.size();
                basis.monomials.push_back(e);
                basis.levels.push_back(beta);
                basis.weights.push_back(make_rational(beta, d));
            }
        }
        if (basis.mu() != gb.standard_monomials.size())
            throw HypothesisError("degenerate",
                                  "weight-graded basis has " + std::to_string(basis.mu()) +
                                      " elements but the Jacobian quotient has dimension " +
                                      std::to_string(gb.standard_monomials.size()) +
                                      " (f is degenerate for its Newton polyhedron)");
    }

    int raw_level(const Exponent& a) const {
        long best = LONG_MIN;
        for (const auto& row : normals) {
            long v = 0;
            for (std::size_t i = 0; i < n; ++i) v += row[i] * a[i];
            best = std::max(best, v);
        }
        return static_cast<int>(best);
    }

    // number of weight facets attaining the maximum at a (after the shift in polynomial mode)
    int facet_ties(const Exponent& a) const {
        Exponent s = a;
        if (mode == Mode::polynomial)
            for (auto& v : s) v += 1;
        long best = LONG_MIN;
        int ties = 0;
        for (const auto& row : normals) {
            long v = 0;
            for (std::size_t i = 0; i < n; ++i) v += row[i] * s[i];
            if (v > best) {
                best = v;
                ties = 1;
            } else if (v == best) {
                ++ties;
            }
        }
        return ties;
    }

    int level_of(const Exponent& a) const {
        if (mode == Mode::laurent) return raw_level(a);
        Exponent s = a;
        for (auto& v : s) v += 1;
        return raw_level(s);
    }

    // every monomial with level_of(a) <= bound
    std::vector<Exponent> monomials_up_to(int bound) const {
        std::vector<Exponent> out;
        if (bound < 0) return out;
        std::vector<long> lo(n), hi(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (mode == Mode::laurent) {
                lo[i] = -((-box_min[i] * bound + d - 1) / d);
                hi[i] = (box_max[i] * bound + d - 1) / d;
            } else {
                lo[i] = 0;
                hi[i] = box_max[i] * bound / d - 1;
            }
        }
        Exponent a(n);
        std::function<void(std::size_t)> walk = [&](std::size_t i) {
            if (i == n) {
                if (level_of(a) <= bound) out.push_back(a);
                return;
            }
            for (long v = lo[i]; v <= hi[i]; ++v) {
                a[i] = static_cast<int>(v);
                walk(i + 1);
            }
        };
        walk(0);
        return out;
    }

    std::shared_ptr<const Level> level(int beta) const {
        {
            std::lock_guard<std::mutex> lock(mutex);
            auto it = levels.find(beta);
            if (it != levels.end()) return it->second;
        }
        auto L = std::make_shared<Level>(compute_level(beta));
        std::lock_guard<std::mutex> lock(mutex);
        return levels.emplace(beta, std::move(L)).first->second;
    }

    Level compute_level(int beta) const {
        Level L;
        L.beta = beta;
        for (auto& a : monomials_up_to(beta))
            if (level_of(a) == beta) L.monomials.push_back(std::move(a));
        std::stable_sort(L.monomials.begin(), L.monomials.end(), [this](const Exponent& a, const Exponent& b) {
            bool ia = facet_ties(a) == 1, ib = facet_ties(b) == 1;
            if (ia != ib) return ia;
            return grlex_desc(a, b);
        });
        for (std::size_t k = 0; k < L.monomials.size(); ++k) L.index[L.monomials[k]] = k;
        std::size_t rows = L.monomials.size();
        if (rows == 0) return L;

        // candidate generator columns (m, i) with their top parts at level beta
        std::vector<std::pair<Exponent, std::size_t>> cands;
        std::vector<std::vector<Rational>> cols;
        auto try_column = [&](const Exponent& m, std::size_t i) {
            std::vector<Rational> col(rows);
            bool nonzero = false;
            Exponent e(n);
            for (const auto& [b, c] : ref_terms[i]) {
                for (std::size_t j = 0; j < n; ++j) e[j] = m[j] + b[j];
                int lv = level_of(e);
                if (lv > beta) return;
                if (lv == beta) {
                    col[L.index.at(e)] += c;
                    nonzero = true;
                }
            }
            if (!nonzero) return;
            cands.emplace_back(m, i);
            cols.push_back(std::move(col));
        };
        if (mode == Mode::laurent) {
            for (const auto& m : monomials_up_to(beta - d))
                if (level_of(m) == beta - d)
                    for (std::size_t i = 0; i < n; ++i) try_column(m, i);
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                Exponent ui(n, 0);
                ui[i] = 1;
                int wi = raw_level(ui);
                for (const auto& m : monomials_up_to(beta - d + wi)) {
                    if (m[i] > 0) {
                        Exponent dm = m;
                        dm[i] -= 1;
                        if (level_of(dm) > beta - d) continue;
                    }
                    try_column(m, i);
                }
            }
        }

        std::size_t g = cols.size();
        QMatrix big(rows, g + rows);
        for (std::size_t c = 0; c < g; ++c)
            for (std::size_t r = 0; r < rows; ++r) big(r, c) = cols[c][r];
        for (std::size_t r = 0; r < rows; ++r) big(r, g + r) = 1;
        Echelon ech = row_echelon(big);
        QMatrix M(rows, rows);
        std::size_t k = 0;
        for (auto p : ech.pivots) {
            if (p < g) {
                L.gen_columns.push_back(cands[p]);
                for (std::size_t r = 0; r < rows; ++r) M(r, k) = cols[p][r];
            } else {
                L.basis.push_back(p - g);
                M(p - g, k) = 1;
            }
            ++k;
        }
        auto inv = inverse(M);
        if (!inv) throw Error("internal: level matrix is singular");
        L.inverse = std::move(*inv);
        return L;
    }
};

// ---------------------------------------------------------------- MilnorAlgebra

std::size_t MilnorBasis::index_of(const Exponent& e) const {
    auto it = std::find(monomials.begin(), monomials.end(), e);
    if (it == monomials.end()) throw Error("monomial is not a basis element");
    return static_cast<std::size_t>(it - monomials.begin());
}

namespace {

void check_subdiagram(const LaurentPoly& F, const NewtonPolyhedron& P) {
    LaurentPoly T = F.x_dependent_part();
    if (T.is_zero()) return;
    auto w = phi(T, P);
    auto name = [&](const Exponent& a) {
        return LaurentPoly::monomial(F.n(), 0, F.mode(), a).to_string();
    };
    if (w.value >= 1)
        throw HypothesisError("not_subdiagram", "deformation is not sub-diagram: phi(" + name(w.witness) +
                                                    ") = " + to_string(w.value) + " >= 1");
    if (F.mode() != Mode::polynomial) return;
    for (std::size_t i = 0; i < F.n(); ++i) {
        Exponent ui(F.n(), 0);
        ui[i] = 1;
        Rational bound = 1 - phi_monomial(ui, P);
        auto wd = phi(T.partial_derivative(i), P);
        if (!wd.bottom && wd.value >= bound)
            throw HypothesisError("not_subdiagram", "deformation violates phi(dg/du" + std::to_string(i + 1) +
                                                        ") < 1 - phi(u" + std::to_string(i + 1) + "): " +
                                                        to_string(wd.value) + " >= " + to_string(bound));
    }
}

}  // namespace

MilnorAlgebra::MilnorAlgebra(const LaurentPoly& F, const JacobiOptions& options)
    : MilnorAlgebra(std::make_shared<Shared>(F.x_free_part(), options), F) {}

MilnorAlgebra::MilnorAlgebra(std::shared_ptr<Shared> shared, const LaurentPoly& F)
    : shared_(std::move(shared)), system_(F) {
    check_subdiagram(F, shared_->P);
    for (const auto& g : system_.generators()) gen_terms_.push_back(g.grouped());
}

MilnorAlgebra MilnorAlgebra::deform(const LaurentPoly& F) const {
    LaurentPoly f = F.x_free_part();
    if (!(f == shared_->f)) throw Error("deform: the parameter-free part differs from the reference polynomial");
    return MilnorAlgebra(shared_, F);
}

const NewtonPolyhedron& MilnorAlgebra::polyhedron() const { return shared_->P; }
const JacobianGroebner& MilnorAlgebra::groebner() const { return shared_->gb; }
const MilnorBasis& MilnorAlgebra::basis() const { return shared_->basis; }
int MilnorAlgebra::denominator() const { return shared_->d; }
int MilnorAlgebra::level(const Exponent& a) const { return shared_->level_of(a); }
Rational MilnorAlgebra::weight(const Exponent& a) const { return make_rational(level(a), shared_->d); }

DivisionResult MilnorAlgebra::divide(const LaurentPoly& h0) const {
    const Shared& S = *shared_;
    std::size_t n = S.n, r = system_.r();
    if (h0.n() != n || h0.mode() != S.mode) throw DimensionError("dividend does not match the Jacobian system");
    LaurentPoly h = h0.r() == r ? h0 : h0.r() == 0 ? h0.with_params(r) : throw DimensionError("parameter count mismatch");

    DivisionResult res;
    res.remainder.assign(S.basis.mu(), Poly(r));
    for (std::size_t i = 0; i < n; ++i) res.cofactors.emplace_back(n, r, S.mode);
    std::map<Exponent, ParamCoeff> terms = h.grouped();
    if (terms.empty()) return res;

    int alpha_level = INT_MIN;
    for (const auto& [e, c] : terms) alpha_level = std::max(alpha_level, S.level_of(e));
    res.alpha = make_rational(alpha_level, S.d);

    auto subtract = [&](const Exponent& e, const ParamCoeff& c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms.erase(it);
        }
    };

    int previous = INT_MAX;
    while (!terms.empty()) {
        int beta = INT_MIN;
        for (const auto& [e, c] : terms) beta = std::max(beta, S.level_of(e));
        if (beta >= previous)
            throw HypothesisError("weight_watchdog", "division did not lower the weight (level " +
                                                         std::to_string(beta) +
                                                         "); the deformation violates the sub-diagram hypothesis");
        previous = beta;
        auto L = S.level(beta);
        std::size_t rows = L->monomials.size();
        std::vector<ParamCoeff> top(rows, Poly(r));
        for (const auto& [e, c] : terms)
            if (S.level_of(e) == beta) top[L->index.at(e)] = c;
        std::size_t g = L->gen_columns.size();
        for (std::size_t k = 0; k < rows; ++k) {
            ParamCoeff coord(r);
            for (std::size_t j = 0; j < rows; ++j)
                if (sgn(L->inverse(k, j)) != 0 && !top[j].is_zero()) coord += L->inverse(k, j) * top[j];
            if (coord.is_zero()) continue;
            ++res.steps;
            if (k < g) {
                const auto& [m, i] = L->gen_columns[k];
                res.cofactors[i] += LaurentPoly::term(n, S.mode, m, coord);
                Exponent e(n);
                for (const auto& [b, c] : gen_terms_[i]) {
                    for (std::size_t j = 0; j < n; ++j) e[j] = m[j] + b[j];
                    subtract(e, coord * c);
                }
            } else {
                const Exponent& e = L->monomials[L->basis[k - g]];
                auto it = S.basis_index.find(e);
                if (it == S.basis_index.end())
                    throw HypothesisError("degenerate", "class of weight above n found outside the basis");
                res.remainder[it->second] += coord;
                subtract(e, coord);
            }
        }
    }

    // re-verify every weight bound with the Newton weights
    const Rational one = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const LaurentPoly& a = res.cofactors[i];
        auto certify = [&](std::string bound, const WeightReport& w, const Rational& limit) {
            WeightCertificate c{i, std::move(bound), w.bottom, w.bottom ? Rational(0) : w.value, limit,
                                w.bottom || w.value <= limit};
            if (!c.ok) throw Error("internal: division certificate failed: " + c.bound);
            res.certificates.push_back(std::move(c));
        };
        std::string idx = std::to_string(i + 1);
        if (S.mode == Mode::laurent) {
            certify("phi(a" + idx + ") <= alpha - 1", phi(a, S.P), res.alpha - one);
            certify("phi(u" + idx + " da" + idx + "/du" + idx + ") <= alpha - 1", phi(a.log_derivative(i), S.P),
                    res.alpha - one);
        } else {
            Exponent ui(n, 0);
            ui[i] = 1;
            certify("phi*(a" + idx + ") <= alpha - 1 + phi(u" + idx + ")", phi_star(a, S.P),
                    res.alpha - one + phi_monomial(ui, S.P));
            certify("phi*(da" + idx + "/du" + idx + ") <= alpha - 1", phi_star(a.partial_derivative(i), S.P),
                    res.alpha - one);
        }
    }
    return res;
}

std::vector<ParamCoeff> MilnorAlgebra::coordinates(const LaurentPoly& h) const { return divide(h).remainder; }

PMatrix MilnorAlgebra::multiplication_matrix(const LaurentPoly& g) const {
    std::size_t mu = this->mu(), r = system_.r();
    PMatrix M(mu, mu, r);
    for (std::size_t k = 0; k < mu; ++k) {
        auto col = coordinates(g.times_monomial(basis().monomials[k]));
        for (std::size_t j = 0; j < mu; ++j) M(j, k) = std::move(col[j]);
    }
    return M;
}

LaurentPoly MilnorAlgebra::lift(const std::vector<ParamCoeff>& coords) const {
    if (coords.size() != mu()) throw DimensionError("coordinate vector has wrong length");
    LaurentPoly out(n(), r(), mode());
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero()) out += LaurentPoly::term(n(), mode(), basis().monomials[k], coords[k]);
    return out;
}

std::size_t milnor_number(const LaurentPoly& f, const JacobiOptions& options) {
    return jacobian_groebner(f.x_free_part(), options).standard_monomials.size();
}

MilnorBasis e0_basis(const LaurentPoly& f, const JacobiOptions& options) {
    return MilnorAlgebra(f.x_free_part(), options).basis();
}

}  // namespace brieskorn
