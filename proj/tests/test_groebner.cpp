#include <doctest.h>

#include "brieskorn/errors.hpp"
#include "brieskorn/groebner.hpp"
#include "brieskorn/parser.hpp"

using namespace brieskorn;

namespace {

Poly flat(const char* s, std::size_t n) { return parse_poly(s, n, 0, Mode::polynomial).flat(); }

void check_cofactors(const GroebnerBasis& gb) {
    for (std::size_t k = 0; k < gb.elements().size(); ++k) {
        Poly sum(gb.elements()[k].nvars());
        for (std::size_t i = 0; i < gb.generators().size(); ++i) sum += gb.cofactors()[k][i] * gb.generators()[i];
        CHECK(sum == gb.elements()[k]);
    }
}

}  // namespace

TEST_CASE("generators already a basis") {
    auto gb = GroebnerBasis::compute({flat("5u1^4", 2), flat("5u2^4", 2)}, MonomialOrder{2});
    REQUIRE(gb.elements().size() == 2);
    CHECK(gb.elements()[0] == flat("u2^4", 2));
    CHECK(gb.elements()[1] == flat("u1^4", 2));
    check_cofactors(gb);
    auto sm = gb.standard_monomials();
    REQUIRE(sm.has_value());
    CHECK(sm->size() == 16);
}

TEST_CASE("single variable") {
    auto gb = GroebnerBasis::compute({flat("3u1^2", 1)}, MonomialOrder{1});
    CHECK(gb.elements() == std::vector<Poly>{flat("u1^2", 1)});
    CHECK(gb.standard_monomials()->size() == 2);
}

TEST_CASE("laurent saturation of u - 1/u") {
    Poly li = parse_poly("u1 - u1^-1", 1, 0, Mode::laurent).flat();
    Exponent shift;
    Poly cleared = clear_laurent(li, 1, &shift);
    CHECK(shift == Exponent{1});
    auto gb = GroebnerBasis::compute({cleared, torus_relation(1)}, MonomialOrder{1});
    check_cofactors(gb);
    bool found = false;
    for (const auto& e : gb.elements()) found = found || e == flat("u1^2 - 1", 2).mul_monomial(Exponent{0, 0}, 1);
    CHECK(found);
    CHECK(gb.standard_monomials()->size() == 2);
}

TEST_CASE("a genuine completion with cofactors") {
    auto gb = GroebnerBasis::compute({flat("u1^2*u2 - u2^2", 2), flat("u1*u2^2 - u1", 2)}, MonomialOrder{2});
    check_cofactors(gb);
    for (std::size_t k = 0; k < gb.elements().size(); ++k)
        CHECK(gb.normal_form(gb.elements()[k]).is_zero());
    auto nf = gb.normal_form(flat("u1^2*u2", 2) * flat("u1*u2^2 - u1", 2));
    CHECK(nf.is_zero());
}

TEST_CASE("unit ideal, infinite staircase, budget") {
    auto unit = GroebnerBasis::compute({flat("u1", 1), flat("u1 - 1", 1)}, MonomialOrder{1});
    CHECK(unit.contains_unit());
    auto inf = GroebnerBasis::compute({flat("u1^2", 2)}, MonomialOrder{2});
    CHECK_FALSE(inf.standard_monomials().has_value());
    GroebnerOptions tiny;
    tiny.budget = 2;
    CHECK_THROWS_AS(GroebnerBasis::compute({flat("u1^3*u2 - u2^4", 2), flat("u1*u2^3 - u1^4", 2),
                                            flat("u1^2*u2^2 - 1", 2)},
                                           MonomialOrder{2}, tiny),
                    BudgetExceeded);
}
