#include "brieskorn/connection.hpp"

#include "brieskorn/errors.hpp"

#include <algorithm>

namespace brieskorn {

ThetaExpansion theta_reduce(const MilnorAlgebra& A, const LaurentPoly& h) {
    ThetaExpansion out;
    LaurentPoly cur = h.r() == A.r() ? h : h.with_params(A.r());
    Rational last_alpha;
    bool first = true;
    while (!cur.is_zero()) {
        DivisionResult d = A.divide(cur);
        if (!first && d.alpha > last_alpha - 1)
            throw HypothesisError("weight_watchdog", "theta-reduction did not lower the weight");
        first = false;
        last_alpha = d.alpha;
        LaurentPoly next(A.n(), A.r(), A.mode());
        for (std::size_t i = 0; i < A.n(); ++i) next += JacobianSystem::generator(d.cofactors[i], i);
        out.coefficients.push_back(d.remainder);
        out.chain.push_back(std::move(d));
        cur = std::move(next);
    }
    while (!out.coefficients.empty() &&
           std::all_of(out.coefficients.back().begin(), out.coefficients.back().end(),
                       [](const ParamCoeff& c) { return c.is_zero(); })) {
        out.coefficients.pop_back();
    }
    return out;
}

bool verify_unreduce(const MilnorAlgebra& A, const LaurentPoly& h, const ThetaExpansion& e) {
    LaurentPoly cur = h.r() == A.r() ? h : h.with_params(A.r());
    for (std::size_t k = 0; k < e.chain.size(); ++k) {
        const auto& d = e.chain[k];
        LaurentPoly rebuilt = A.lift(d.remainder);
        LaurentPoly next(A.n(), A.r(), A.mode());
        for (std::size_t i = 0; i < A.n(); ++i) {
            rebuilt += d.cofactors[i] * A.system().generators()[i];
            next += JacobianSystem::generator(d.cofactors[i], i);
        }
        if (!(rebuilt == cur)) return false;
        bool zero_coeffs = k >= e.coefficients.size();
        if (zero_coeffs) {
            for (const auto& c : d.remainder)
                if (!c.is_zero()) return false;
        } else if (e.coefficients[k] != d.remainder) {
            return false;
        }
        cur = std::move(next);
    }
    return cur.is_zero();
}

QMatrix ConnectionData::binf_constant() const {
    if (!Binf.is_constant()) throw Error("B_infinity is not constant");
    return Binf.constant_part();
}

namespace {

void fill_columns(const MilnorAlgebra& A, const LaurentPoly& factor, const std::string& source,
                  PMatrix& theta0, PMatrix& theta1, std::vector<ThetaResidual>& residuals) {
    const auto& basis = A.basis();
    for (std::size_t k = 0; k < basis.mu(); ++k) {
        ThetaExpansion e = theta_reduce(A, factor.times_monomial(basis.monomials[k]));
        for (std::size_t p = 0; p < e.coefficients.size(); ++p) {
            const auto& col = e.coefficients[p];
            if (p <= 1) {
                PMatrix& target = p == 0 ? theta0 : theta1;
                for (std::size_t j = 0; j < basis.mu(); ++j) target(j, k) = col[j];
            } else {
                residuals.push_back({source, k, p, col});
            }
        }
    }
}

}  // namespace

ConnectionData build_connection(const MilnorAlgebra& A) {
    ConnectionData d;
    d.basis = A.basis();
    d.r = A.r();
    d.n = A.n();
    std::size_t mu = A.mu();
    const LaurentPoly& F = A.system().F();
    d.A0 = PMatrix(mu, mu, d.r);
    d.A1 = PMatrix(mu, mu, d.r);
    fill_columns(A, F, "F*m", d.A0, d.A1, d.residuals);
    for (std::size_t i = 0; i < d.r; ++i) {
        PMatrix cm(mu, mu, d.r), c0(mu, mu, d.r);
        LaurentPoly g = F.param_derivative(i) * Rational(-1);
        fill_columns(A, g, "-g" + std::to_string(i + 1) + "*m", cm, c0, d.residuals);
        d.C_minus1.push_back(std::move(cm));
        d.C0.push_back(std::move(c0));
    }
    d.B0 = d.A0;
    d.Binf = d.A1;
    d.C = d.C_minus1;
    d.gauge = {PMatrix::identity(mu, d.r), PMatrix::identity(mu, d.r), true};
    bool c0_zero = std::all_of(d.C0.begin(), d.C0.end(), [](const PMatrix& m) { return m.is_zero(); });
    d.birkhoff_ok = d.residuals.empty() && c0_zero && d.Binf.is_constant();
    if (!d.residuals.empty()) d.notes.push_back("theta-powers >= 2 in the adapted basis");
    return d;
}

ConnectionData gauge_normalize(const ConnectionData& pre) {
    ConnectionData d = pre;
    std::size_t mu = pre.basis.mu(), r = pre.r;
    d.normalized = true;
    bool c0_zero = std::all_of(pre.C0.begin(), pre.C0.end(), [](const PMatrix& m) { return m.is_zero(); });
    if (c0_zero) {
        d.birkhoff_ok = pre.residuals.empty() && pre.Binf.is_constant();
        if (!pre.Binf.is_constant()) d.notes.push_back("B_infinity is not constant");
        return d;
    }
    if (!pre.residuals.empty()) {
        d.birkhoff_ok = false;
        d.notes.push_back("gauge not attempted: the basis carries theta-powers >= 2");
        return d;
    }

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            PMatrix lhs = pre.C0[j].derivative(i) - pre.C0[i].derivative(j);
            if (!(lhs == commutator(pre.C0[j], pre.C0[i])))
                throw HypothesisError("gauge_integrability", "C0 matrices fail the integrability pre-check for x" +
                                                                 std::to_string(i + 1) + ", x" +
                                                                 std::to_string(j + 1));
        }

    // Euler: sum_i x_i dP/dx_i = -(sum_i x_i C0^(i)) P, solved degree by degree
    PMatrix E(mu, mu, r);
    int maxdeg = 0;
    for (std::size_t i = 0; i < r; ++i) {
        PMatrix xi(mu, mu, r);
        for (std::size_t a = 0; a < mu; ++a) xi(a, a) = Poly::variable(r, i);
        E = E + xi * pre.C0[i];
        maxdeg = std::max(maxdeg, pre.C0[i].degree());
    }
    auto homogeneous = [&](const PMatrix& m, int deg) {
        PMatrix out(mu, mu, r);
        for (std::size_t a = 0; a < mu; ++a)
            for (std::size_t b = 0; b < mu; ++b)
                for (const auto& [e, c] : m(a, b).terms()) {
                    int s = 0;
                    for (int v : e) s += v;
                    if (s == deg) out(a, b).add_term(e, c);
                }
        return out;
    };
    // P_d = -(1/d) sum_k [E P_k]_d; E has degree <= maxdeg + 1, so maxdeg + 1
    // consecutive vanishing parts end the series.
    int bound = static_cast<int>(mu) * (maxdeg + 1);
    std::vector<PMatrix> EP{E};
    PMatrix P = PMatrix::identity(mu, r);
    int zero_run = 0;
    for (int deg = 1; zero_run <= maxdeg; ++deg) {
        PMatrix acc(mu, mu, r);
        for (const auto& m : EP) acc = acc + homogeneous(m, deg);
        PMatrix part = Rational(-1) / Rational(deg) * acc;
        if (part.is_zero()) {
            ++zero_run;
        } else {
            if (deg > bound)
                throw HypothesisError("gauge_degree", "gauge solve exceeded the degree bound " +
                                                          std::to_string(bound) + " (C0 is not nilpotent)");
            zero_run = 0;
            P = P + part;
        }
        EP.push_back(E * part);
    }
    for (std::size_t i = 0; i < r; ++i)
        if (!(P.derivative(i) == Rational(-1) * (pre.C0[i] * P)))
            throw HypothesisError("gauge_integrability", "gauge P does not solve dP/dx" + std::to_string(i + 1) +
                                                             " = -C0 P");

    PMatrix N = P - PMatrix::identity(mu, r);
    PMatrix inv = PMatrix::identity(mu, r), power = PMatrix::identity(mu, r);
    for (std::size_t k = 1; k <= mu; ++k) {
        power = Rational(-1) * (power * N);
        if (power.is_zero()) break;
        inv = inv + power;
    }
    if (!(P * inv == PMatrix::identity(mu, r)))
        throw HypothesisError("gauge_degree", "gauge matrix is not unipotent (C0 not weight-triangular)");

    d.gauge = {P, inv, false};
    d.B0 = inv * pre.A0 * P;
    d.Binf = inv * pre.A1 * P;
    d.C.clear();
    for (const auto& c : pre.C_minus1) d.C.push_back(inv * c * P);
    d.birkhoff_ok = pre.residuals.empty() && d.Binf.is_constant();
    if (!d.Binf.is_constant()) d.notes.push_back("B_infinity is not constant after the gauge");
    return d;
}

IntegrabilityReport verify_integrability(const ConnectionData& d) {
    IntegrabilityReport rep;
    auto record = [&](const char* name, std::size_t i, std::size_t j, PMatrix m) {
        ++rep.relations_checked;
        if (m.is_zero()) return;
        rep.ok = false;
        rep.residuals.push_back({name, i, j, std::move(m)});
    };
    for (std::size_t i = 0; i < d.r; ++i) {
        for (std::size_t j = i + 1; j < d.r; ++j) {
            record("I.1", i, j, d.C[i].derivative(j) - d.C[j].derivative(i));
            record("I.2", i, j, commutator(d.C[i], d.C[j]));
        }
        record("I.3", i, i, commutator(d.B0, d.C[i]));
        record("I.4", i, i, d.B0.derivative(i) + d.C[i] - commutator(d.Binf, d.C[i]));
    }
    return rep;
}

Reconstruction reconstruct_C_from_B0(const PMatrix& B0, const QMatrix& Binf) {
    if (!Binf.is_diagonal()) throw Error("reconstruction needs a diagonal B_infinity");
    std::size_t mu = B0.rows(), r = B0.params();
    Reconstruction out;
    for (std::size_t i = 0; i < r; ++i) {
        PMatrix dB = B0.derivative(i);
        PMatrix C(mu, mu, r);
        for (std::size_t k = 0; k < mu; ++k)
            for (std::size_t l = 0; l < mu; ++l) {
                Rational denom = 1 - Binf(k, k) + Binf(l, l);
                if (sgn(denom) == 0) {
                    if (!dB(k, l).is_zero())
                        out.inconsistencies.push_back("resonance alpha_" + std::to_string(k + 1) + " = 1 + alpha_" +
                                                      std::to_string(l + 1) + " with nonzero dB0/dx" +
                                                      std::to_string(i + 1));
                    continue;
                }
                C(k, l) = dB(k, l) * (Rational(-1) / denom);
            }
        out.C.push_back(std::move(C));
    }
    return out;
}

std::vector<Rational> spectrum(const ConnectionData& d) {
    QMatrix b = d.binf_constant();
    if (!b.is_diagonal()) throw Error("B_infinity is not diagonal in the adapted basis");
    std::vector<Rational> s;
    for (std::size_t k = 0; k < b.rows(); ++k) s.push_back(b(k, k));
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace brieskorn
