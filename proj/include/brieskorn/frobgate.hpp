#pragma once

#include "brieskorn/jacobi.hpp"
#include "brieskorn/newton.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace brieskorn {

struct ECReport {
    bool ok = false;
    std::string zeta;  ///< "du/u" or "du"
    Rational zeta_weight;
    Rational minimal_weight;
    std::size_t multiplicity = 0;
};

struct ICReport {
    bool ok = false;
    std::size_t rank = 0;
    std::size_t r = 0;
};

struct GCReport {
    bool ok = false;
    std::size_t dimension = 0;
    std::size_t mu = 0;
    bool include_R0 = true;
    /// One word per spanning vector found, e.g. "1", "u1*u2", "f*f".
    std::vector<std::string> words;
};

struct ConditionReport {
    ECReport ec;
    ICReport ic;
    GCReport gc;
    std::vector<SubdiagramVerdict> subdiagram;
};

/// The algebra of f with the parameters dropped (x = 0).
MilnorAlgebra undeformed(const MilnorAlgebra& A);

/// g_j = dF/dx_j at x = 0.
std::vector<LaurentPoly> deformation_terms(const LaurentPoly& F);

ECReport check_EC(const MilnorAlgebra& A);
ICReport check_IC(const MilnorAlgebra& A, const std::vector<LaurentPoly>& g);
GCReport check_GC(const MilnorAlgebra& A, const std::vector<LaurentPoly>& g, bool include_R0 = true);
ConditionReport check_conditions(const MilnorAlgebra& A, bool include_R0 = true);

struct Suggestion {
    bool ok = false;
    std::vector<Exponent> monomials;
    std::string diagnostic;
};

/// Greedy search over sub-diagram basis monomials (excluding 1) for a list passing IC and GC.
Suggestion suggest_deformation(const MilnorAlgebra& A, bool include_R0 = true);

}  // namespace brieskorn
