#pragma once

#include "brieskorn/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace brieskorn {

/// Variable naming for parsing and printing. Defaults to u1..un, x1..xr.
struct VariableNames {
    std::vector<std::string> u;
    std::vector<std::string> x;

    static VariableNames defaults(std::size_t n, std::size_t r);
};

/// Parses a polynomial expression.
///
/// Grammar (whitespace insignificant):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := rational | name ['^' exponent]
///   exponent := ['-'] digits | '(' ['-'] digits ')'
///   rational := digits ['/' digits]
/// Negative exponents are accepted only on u-variables in laurent mode.
LaurentPoly parse_poly(std::string_view text, std::size_t n, std::size_t r, Mode mode);
LaurentPoly parse_poly(std::string_view text, const VariableNames& names, Mode mode);

/// Parses a polynomial in the parameters only (n = 0).
ParamCoeff parse_param(std::string_view text, const std::vector<std::string>& x_names);

}  // namespace brieskorn
