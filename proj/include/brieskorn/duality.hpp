#pragma once

#include "brieskorn/connection.hpp"
#include "brieskorn/jacobi.hpp"
#include "brieskorn/matrix.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace brieskorn {

/// Throws HypothesisError("socle_not_unique") when the top weight is shared.
std::size_t socle(const MilnorBasis& basis);

struct PairingMatrix {
    QMatrix S;
    std::size_t socle = 0;
    Rational normalization = 1;
    Rational n = 0;  ///< weights of paired elements sum to this
    bool nondegenerate = false;
    bool weight_graded = false;
};

/// S_kl = socle coefficient of the class of m_k * m_l at x = point (x = 0 by default),
/// scaled so that the lowest basis element pairs to 1 with the socle.
PairingMatrix residue_pairing(const MilnorAlgebra& A, std::span<const Rational> point = {});

/// (TA)_ij = a_{mu+1-j, mu+1-i}
PMatrix t_transpose(const PMatrix& a);
/// a(order[i], order[j])
PMatrix permuted(const PMatrix& a, std::span<const std::size_t> order);

struct TSymmetryReport {
    bool ok = true;
    std::vector<MatrixResidual> residuals;  ///< relations "TB0", "TC", "Binf+TBinf"
};

/// `order` lists the basis indices in the order to test (identity if empty).
TSymmetryReport check_T_symmetry(const ConnectionData& d, std::span<const std::size_t> order = {});

struct Orthonormalization {
    bool ok = false;
    QMatrix change;                     ///< columns: new basis in old coordinates
    std::vector<Rational> obstruction;  ///< diagonal of the self-paired block when unsolved
    std::string diagnostic;
};

/// Weight-homogeneous change of basis making S the antidiagonal identity.
Orthonormalization orthonormalize(const MilnorBasis& basis, const PairingMatrix& S);

/// Q^T S Q
QMatrix congruence(const QMatrix& S, const QMatrix& Q);

}  // namespace brieskorn
