#pragma once

#include "brieskorn/jacobi.hpp"
#include "brieskorn/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace brieskorn {

/// Class of h in the Brieskorn lattice as sum_k theta^k * (coordinates),
/// together with the division chain that produced it.
struct ThetaExpansion {
    std::vector<std::vector<ParamCoeff>> coefficients;  ///< index = power of theta
    std::vector<DivisionResult> chain;

    std::size_t max_power() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

ThetaExpansion theta_reduce(const MilnorAlgebra& A, const LaurentPoly& h);

/// Replays the chain symbolically: h_k = lift(c_k) + sum a_i gen_i and
/// h_{k+1} = sum D_i a_i, ending at 0.
bool verify_unreduce(const MilnorAlgebra& A, const LaurentPoly& h, const ThetaExpansion& e);

struct GaugeTransform {
    PMatrix P;
    PMatrix inverse;
    bool identity = true;
};

struct ThetaResidual {
    std::string source;  ///< "F*m" or "-g<i>*m"
    std::size_t column = 0;
    std::size_t power = 0;
    std::vector<ParamCoeff> coordinates;
};

/// Connection matrices with columns = images of basis vectors:
///   theta^2 nabla_theta e = e (B0 + Binf theta),  nabla_{x_i} e = e C^(i) / theta.
struct ConnectionData {
    MilnorBasis basis;
    std::size_t n = 0;
    std::size_t r = 0;
    PMatrix A0, A1;
    std::vector<PMatrix> C_minus1, C0;

    PMatrix B0, Binf;
    std::vector<PMatrix> C;
    GaugeTransform gauge;
    bool normalized = false;
    bool birkhoff_ok = false;
    std::vector<ThetaResidual> residuals;
    std::vector<std::string> notes;

    /// Binf as a constant matrix; throws unless constant.
    QMatrix binf_constant() const;
};

/// Pre-gauge data from theta-reduction of F*m_k and -(dF/dx_i)*m_k.
ConnectionData build_connection(const MilnorAlgebra& A);

/// Solves dP/dx_i = -C0^(i) P, P(0) = Id, and transforms the data.
/// Throws HypothesisError("gauge_integrability" | "gauge_degree").
ConnectionData gauge_normalize(const ConnectionData& pre);

struct MatrixResidual {
    std::string relation;
    std::size_t i = 0, j = 0;
    PMatrix value;
};

struct IntegrabilityReport {
    bool ok = true;
    std::vector<MatrixResidual> residuals;
    std::size_t relations_checked = 0;
};

IntegrabilityReport verify_integrability(const ConnectionData& d);

struct Reconstruction {
    std::vector<PMatrix> C;
    std::vector<std::string> inconsistencies;
};

/// c_kl = -dB0_kl/dx_i / (1 - alpha_k + alpha_l); zero on resonance when dB0_kl = 0.
Reconstruction reconstruct_C_from_B0(const PMatrix& B0, const QMatrix& Binf);

std::vector<Rational> spectrum(const ConnectionData& d);

}  // namespace brieskorn
