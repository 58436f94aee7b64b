#pragma once

#include "brieskorn/poly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace brieskorn {

/// Block order on Q[v_0..v_{N-1}]: the trailing block [main_vars, N) is
/// compared first (grevlex), then the leading block [0, main_vars) (grevlex).
/// With an empty trailing block this is plain grevlex.
struct MonomialOrder {
    std::size_t main_vars = 0;

    int compare(const Exponent& a, const Exponent& b) const;
};

struct GroebnerOptions {
    /// Maximal number of reduction steps before BudgetExceeded is thrown.
    std::size_t budget = 100000;
    bool track_cofactors = true;
};

/// Reduced Groebner basis of an ideal of an ordinary polynomial ring over Q.
/// When cofactors are tracked, elements()[k] == sum_i cofactors()[k][i] * generators()[i].
class GroebnerBasis {
public:
    static GroebnerBasis compute(std::vector<Poly> generators, MonomialOrder order,
                                 const GroebnerOptions& options = {});

    const std::vector<Poly>& generators() const { return generators_; }
    const std::vector<Poly>& elements() const { return elements_; }
    const std::vector<std::vector<Poly>>& cofactors() const { return cofactors_; }
    const MonomialOrder& order() const { return order_; }
    std::size_t steps() const { return steps_; }

    bool contains_unit() const;
    Exponent leading_monomial(std::size_t k) const;
    Poly normal_form(const Poly& p) const;

    /// Standard monomials in the variables [0, main_vars) of the elements free
    /// of the trailing block; nullopt when there are infinitely many.
    std::optional<std::vector<Exponent>> standard_monomials() const;

private:
    std::vector<Poly> generators_;
    std::vector<Poly> elements_;
    std::vector<std::vector<Poly>> cofactors_;
    MonomialOrder order_;
    std::size_t steps_ = 0;
};

/// u^s * p for the smallest s making it a polynomial, embedded into
/// n + extra variables (trailing ones unused). `shift` receives s.
Poly clear_laurent(const Poly& p, std::size_t extra, Exponent* shift = nullptr);

/// t * u_1 ... u_n - 1 in Q[u_1..u_n, t].
Poly torus_relation(std::size_t n);

}  // namespace brieskorn
