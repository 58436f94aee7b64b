#include "brieskorn/duality.hpp"

#include "brieskorn/errors.hpp"

#include <algorithm>
#include <numeric>

namespace brieskorn {

std::size_t socle(const MilnorBasis& basis) {
    if (basis.mu() == 0) throw HypothesisError("socle_not_unique", "empty basis");
    auto top = std::max_element(basis.weights.begin(), basis.weights.end());
    if (std::count(basis.weights.begin(), basis.weights.end(), *top) != 1)
        throw HypothesisError("socle_not_unique", "maximal weight " + top->get_str() + " is attained more than once");
    return static_cast<std::size_t>(top - basis.weights.begin());
}

PairingMatrix residue_pairing(const MilnorAlgebra& A, std::span<const Rational> point) {
    const MilnorBasis& b = A.basis();
    std::size_t mu = b.mu();
    std::vector<Rational> at(A.r(), Rational(0));
    if (!point.empty()) {
        if (point.size() != A.r()) throw DimensionError("pairing point has the wrong dimension");
        at.assign(point.begin(), point.end());
    }
    PairingMatrix P;
    P.socle = socle(b);
    P.S = QMatrix(mu, mu);
    std::size_t n = A.n(), r = A.r();
    Mode mode = A.mode();
    for (std::size_t k = 0; k < mu; ++k)
        for (std::size_t l = k; l < mu; ++l) {
            Exponent e(n);
            for (std::size_t i = 0; i < n; ++i) e[i] = b.monomials[k][i] + b.monomials[l][i];
            auto coords = A.coordinates(LaurentPoly::monomial(n, r, mode, e));
            Rational v = coords[P.socle].evaluate(at);
            P.S(k, l) = v;
            P.S(l, k) = v;
        }
    P.n = b.weights[0] + b.weights[P.socle];
    Rational top = P.S(0, P.socle);
    if (top != 0) {
        P.normalization = 1 / top;
        for (std::size_t k = 0; k < mu; ++k)
            for (std::size_t l = 0; l < mu; ++l) P.S(k, l) *= P.normalization;
    }
    P.nondegenerate = determinant(P.S) != 0;
    P.weight_graded = true;
    for (std::size_t k = 0; k < mu; ++k)
        for (std::size_t l = 0; l < mu; ++l)
            if (P.S(k, l) != 0 && b.weights[k] + b.weights[l] != P.n) P.weight_graded = false;
    return P;
}

PMatrix t_transpose(const PMatrix& a) {
    std::size_t m = a.rows();
    PMatrix t(m, m, a.params());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t(i, j) = a(m - 1 - j, m - 1 - i);
    return t;
}

PMatrix permuted(const PMatrix& a, std::span<const std::size_t> order) {
    if (order.empty()) return a;
    PMatrix p(a.rows(), a.cols(), a.params());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = a(order[i], order[j]);
    return p;
}

TSymmetryReport check_T_symmetry(const ConnectionData& d, std::span<const std::size_t> order) {
    TSymmetryReport rep;
    auto record = [&rep](std::string name, std::size_t i, PMatrix value) {
        if (!value.is_zero()) {
            rep.ok = false;
            rep.residuals.push_back({std::move(name), i, 0, std::move(value)});
        }
    };
    PMatrix B0 = permuted(d.B0, order);
    record("TB0", 0, t_transpose(B0) - B0);
    for (std::size_t i = 0; i < d.C.size(); ++i) {
        PMatrix C = permuted(d.C[i], order);
        record("TC", i, t_transpose(C) - C);
    }
    PMatrix Binf = permuted(d.Binf, order);
    std::size_t mu = Binf.rows();
    record("Binf+TBinf", 0,
           Binf + t_transpose(Binf) - Rational(static_cast<long>(d.n)) * PMatrix::identity(mu, Binf.params()));
    return rep;
}

QMatrix congruence(const QMatrix& S, const QMatrix& Q) { return Q.transpose() * S * Q; }

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q <= 0) return std::nullopt;
    Integer a = q.get_num(), b = q.get_den();
    if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return std::nullopt;
    Rational s(Integer(sqrt(a)), Integer(sqrt(b)));
    s.canonicalize();
    return s;
}

// Diagonal of a symmetric form after symmetric Gaussian elimination.
std::vector<Rational> gram_diagonal(QMatrix M) {
    std::size_t m = M.rows();
    std::vector<Rational> diag;
    for (std::size_t k = 0; k < m; ++k) {
        if (M(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < m && M(k, j) == 0) ++j;
            if (j < m) {
                // replace e_k by e_k + e_j to create a nonzero diagonal entry when possible
                for (std::size_t t = 0; t < m; ++t) M(t, k) += M(t, j);
                for (std::size_t t = 0; t < m; ++t) M(k, t) += M(j, t);
            }
        }
        Rational p = M(k, k);
        diag.push_back(p);
        if (p == 0) continue;
        for (std::size_t i = k + 1; i < m; ++i) {
            Rational f = M(i, k) / p;
            if (f == 0) continue;
            for (std::size_t t = k; t < m; ++t) M(i, t) -= f * M(k, t);
            for (std::size_t t = k; t < m; ++t) M(t, i) -= f * M(t, k);
        }
    }
    return diag;
}

}  // namespace

Orthonormalization orthonormalize(const MilnorBasis& basis, const PairingMatrix& P) {
    Orthonormalization out;
    std::size_t mu = basis.mu();
    out.change = QMatrix(mu, mu);
    if (!P.nondegenerate || !P.weight_graded) {
        out.diagnostic = "pairing is not nondegenerate and weight-graded";
        return out;
    }
    // blocks of equal weight, in basis order
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t k = 0; k < mu;) {
        std::size_t e = k;
        while (e < mu && basis.weights[e] == basis.weights[k]) ++e;
        blocks.push_back({k, e});
        k = e;
    }
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        auto [a, e] = blocks[bi];
        auto [pa, pe] = blocks[blocks.size() - 1 - bi];
        std::size_t m = e - a;
        if (pe - pa != m || pa != mu - e || basis.weights[a] + basis.weights[pa] != P.n) {
            out.diagnostic = "weight blocks are not symmetric about n/2";
            return out;
        }
        if (a > pa) continue;
        if (a < pa) {
            QMatrix block(m, m), J(m, m);
            for (std::size_t k = 0; k < m; ++k) {
                J(k, m - 1 - k) = 1;
                for (std::size_t l = 0; l < m; ++l) block(k, l) = P.S(a + k, pa + l);
            }
            auto inv = inverse(block);
            if (!inv) {
                out.diagnostic = "singular pairing block";
                return out;
            }
            QMatrix Q = *inv * J;
            for (std::size_t k = 0; k < m; ++k) {
                out.change(a + k, a + k) = 1;
                for (std::size_t l = 0; l < m; ++l) out.change(pa + k, pa + l) = Q(k, l);
            }
            continue;
        }
        // self-paired middle block
        QMatrix block(m, m);
        bool antidiagonal = true;
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = 0; l < m; ++l) {
                block(k, l) = P.S(a + k, a + l);
                if (l != m - 1 - k && block(k, l) != 0) antidiagonal = false;
            }
        bool solved = antidiagonal;
        for (std::size_t k = 0; solved && k < m; ++k) {
            std::size_t l = m - 1 - k;
            if (k < l) {
                out.change(a + k, a + k) = 1 / block(k, l);
                out.change(a + l, a + l) = 1;
            } else if (k == l) {
                auto s = rational_sqrt(block(k, k));
                if (!s) solved = false;
                else out.change(a + k, a + k) = 1 / *s;
            }
        }
        if (!solved) {
            out.obstruction = gram_diagonal(block);
            out.diagnostic = "self-paired block of weight " + basis.weights[a].get_str() +
                             " is not orthonormalizable over Q by scaling";
            out.change = QMatrix(mu, mu);
            return out;
        }
    }
    out.ok = true;
    return out;
}

}  // namespace brieskorn
