#pragma once

#include "brieskorn/groebner.hpp"
#include "brieskorn/matrix.hpp"
#include "brieskorn/newton.hpp"
#include "brieskorn/poly.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace brieskorn {

struct JacobiOptions {
    std::size_t budget = 100000;  ///< Groebner reduction steps
};

/// Generators of the Jacobian ideal: u_i dF/du_i (laurent) or dF/du_i (polynomial).
class JacobianSystem {
public:
    explicit JacobianSystem(const LaurentPoly& F);

    const LaurentPoly& F() const { return F_; }
    const LaurentPoly& f() const { return f_; }
    Mode mode() const { return F_.mode(); }
    std::size_t n() const { return F_.n(); }
    std::size_t r() const { return F_.r(); }
    const std::vector<LaurentPoly>& generators() const { return gens_; }
    const std::vector<LaurentPoly>& reference_generators() const { return ref_gens_; }

    /// Generator of an arbitrary polynomial in the same convention.
    static LaurentPoly generator(const LaurentPoly& p, std::size_t i);

private:
    LaurentPoly F_, f_;
    std::vector<LaurentPoly> gens_, ref_gens_;
};

/// Groebner basis of the (saturated, in laurent mode) Jacobian ideal of f,
/// expressed back in the Laurent ring.
struct JacobianGroebner {
    GroebnerBasis raw;
    std::vector<LaurentPoly> elements;
    /// elements[k] == sum_i cofactors[k][i] * reference_generators()[i]
    std::vector<std::vector<LaurentPoly>> cofactors;
    std::vector<Exponent> standard_monomials;
};

JacobianGroebner jacobian_groebner(const LaurentPoly& f, const JacobiOptions& options = {});

struct MilnorBasis {
    std::vector<Exponent> monomials;
    std::vector<Rational> weights;
    std::vector<int> levels;  ///< integer weights d * weight

    std::size_t mu() const { return monomials.size(); }
    std::size_t index_of(const Exponent& e) const;
};

struct WeightCertificate {
    std::size_t cofactor = 0;
    std::string bound;
    bool bottom = false;
    Rational value;
    Rational limit;
    bool ok = false;
};

struct DivisionResult {
    std::vector<ParamCoeff> remainder;  ///< coordinates over the Milnor basis
    std::vector<LaurentPoly> cofactors;
    Rational alpha;                     ///< weight of the dividend
    std::vector<WeightCertificate> certificates;
    std::size_t steps = 0;
};

/// E_0 with its weight-adapted basis and certified division over Q[x].
class MilnorAlgebra {
public:
    explicit MilnorAlgebra(const LaurentPoly& F, const JacobiOptions& options = {});

    /// Same f, different deformation: reuses every f-dependent computation.
    MilnorAlgebra deform(const LaurentPoly& F) const;

    const JacobianSystem& system() const { return system_; }
    const NewtonPolyhedron& polyhedron() const;
    const JacobianGroebner& groebner() const;
    const MilnorBasis& basis() const;
    std::size_t mu() const { return basis().mu(); }
    Mode mode() const { return system_.mode(); }
    std::size_t n() const { return system_.n(); }
    std::size_t r() const { return system_.r(); }

    /// phi (laurent) or phi* (polynomial) of a monomial, and its integer form.
    Rational weight(const Exponent& a) const;
    int level(const Exponent& a) const;
    int denominator() const;

    DivisionResult divide(const LaurentPoly& h) const;
    /// Coordinates of the class of h (division remainder).
    std::vector<ParamCoeff> coordinates(const LaurentPoly& h) const;
    /// Column k = coordinates of g * m_k.
    PMatrix multiplication_matrix(const LaurentPoly& g) const;
    /// Lifts a coordinate vector back to a polynomial.
    LaurentPoly lift(const std::vector<ParamCoeff>& coords) const;

    struct Shared;

private:
    MilnorAlgebra(std::shared_ptr<Shared> shared, const LaurentPoly& F);

    std::shared_ptr<Shared> shared_;
    JacobianSystem system_;
    std::vector<std::map<Exponent, ParamCoeff>> gen_terms_;
};

std::size_t milnor_number(const LaurentPoly& f, const JacobiOptions& options = {});
MilnorBasis e0_basis(const LaurentPoly& f, const JacobiOptions& options = {});

}  // namespace brieskorn
