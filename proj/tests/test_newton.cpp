#include <doctest.h>

#include "brieskorn/errors.hpp"
#include "brieskorn/newton.hpp"
#include "brieskorn/parser.hpp"

#include <random>
#include <set>

using namespace brieskorn;

namespace {

LaurentPoly L(const char* s, std::size_t n) { return parse_poly(s, n, 0, Mode::laurent); }
LaurentPoly Pm(const char* s, std::size_t n) { return parse_poly(s, n, 0, Mode::polynomial); }
Rational q(long p, long d = 1) { return make_rational(p, d); }

}  // namespace

TEST_CASE("polyhedron of u1^5+u2^5") {
    auto P = build_polyhedron(Pm("u1^5+u2^5", 2));
    REQUIRE(P.facets().size() == 1);
    CHECK(P.facets()[0].L == std::vector<Rational>{q(1, 5), q(1, 5)});
    CHECK(P.vertices().size() == 3);
    CHECK(P.denominator() == 5);
}

TEST_CASE("polyhedron of u+1/u") {
    auto P = build_polyhedron(L("u1+u1^-1", 1));
    REQUIRE(P.facets().size() == 2);
    std::set<Rational> forms;
    for (const auto& f : P.facets()) forms.insert(f.L[0]);
    CHECK(forms == std::set<Rational>{q(-1), q(1)});
}

TEST_CASE("polyhedron of the mirror of P2") {
    auto P = build_polyhedron(L("u1+u2+u1^-1u2^-1", 2));
    CHECK(P.facets().size() == 3);
    CHECK(P.vertices().size() == 3);
    for (const auto& v : P.vertices()) CHECK(phi_monomial(v, P) == 1);
}

TEST_CASE("commode") {
    CHECK(is_commode(Pm("u1^5+u2^5", 2)).ok);
    auto bad = is_commode(Pm("u1^5", 2));
    CHECK_FALSE(bad.ok);
    CHECK(bad.diagnostic.find("u2") != std::string::npos);
    CHECK(is_commode(L("u1+u1^-1", 1)).ok);
    CHECK_FALSE(is_commode(L("u1+u2+u1u2", 2)).ok);
    CHECK_THROWS_AS(build_polyhedron(L("u1+u2+u1^-1", 2)), HypothesisError);
    CHECK_THROWS_AS(build_polyhedron(Pm("u1^5+u1*u2", 2)), HypothesisError);
}

TEST_CASE("phi and phi*") {
    auto P = build_polyhedron(Pm("u1^5+u2^5", 2));
    CHECK(phi(Pm("1", 2), P).value == 0);
    CHECK(phi(Pm("u1^5+u2^5", 2), P).value == 1);
    CHECK(phi(Pm("0", 2), P).bottom);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(phi_star_monomial(Exponent{i, j}, P) == q(i + j + 2, 5));
    CHECK(phi_star(Pm("1", 2), P).value == q(2, 5));
    auto P3 = build_polyhedron(Pm("u1^3", 1));
    CHECK(phi_star(Pm("u1", 1), P3).value == q(2, 3));

    auto M = build_polyhedron(L("u1+u2+u1^-1u2^-1", 2));
    CHECK(phi(L("u1", 2), M).value == 1);
    CHECK(phi(L("u1^-1", 2), M).value == 2);
    CHECK(phi(L("u1^-1u2^-1", 2), M).value == 1);
    CHECK(phi(L("7", 2), M).value == 0);
}

TEST_CASE("newton number") {
    CHECK(newton_number(build_polyhedron(Pm("u1^5+u2^5", 2))) == 16);
    CHECK(newton_number(build_polyhedron(L("u1+u1^-1", 1))) == 2);
    CHECK(newton_number(build_polyhedron(L("u1+u2+u1^-1u2^-1", 2))) == 3);
    CHECK(newton_number(build_polyhedron(Pm("u1^3", 1))) == 2);
    CHECK(newton_number(build_polyhedron(Pm("u1^4+u2^2+u1^4u2^2", 2))) == 11);
    CHECK(newton_number(build_polyhedron(Pm("u1^2+u2^2+u3^2", 3))) == 1);
}

TEST_CASE("sub-diagram tests") {
    auto P = build_polyhedron(Pm("u1^5+u2^5", 2));
    auto g = is_subdiagram(Pm("u1", 2), P);
    CHECK(g.ok);
    CHECK(g.checks[0].lhs == q(1, 5));
    CHECK_FALSE(is_subdiagram(Pm("u1^5", 2), P).ok);
    bool strong_seen = false;
    for (const auto& c : g.checks)
        if (c.name == "phi*(g) < 1 - phi(u1)") {
            strong_seen = true;
            CHECK(c.lhs == q(3, 5));
            CHECK(c.rhs == q(4, 5));
            CHECK(c.ok);
        }
    CHECK(strong_seen);
}

TEST_CASE("nondegeneracy") {
    CHECK(is_nondegenerate(Pm("u1^5+u2^5", 2)).verdict == Tristate::yes);
    CHECK(is_nondegenerate(L("u1+u1^-1", 1)).verdict == Tristate::yes);
    CHECK(is_nondegenerate(L("u1+u2+u1^-1u2^-1", 2)).verdict == Tristate::yes);
    auto bad = is_nondegenerate(Pm("u1^2+2u1u2+u2^2+u3^2", 3));
    CHECK(bad.verdict == Tristate::no);
    CHECK(bad.failing_face.size() >= 2);
    CHECK(is_nondegenerate(Pm("u1^2+2u1u2+u2^2+u3^2", 3), 1).verdict != Tristate::yes);
}

TEST_CASE("property: vertices, subadditivity, monotonicity, phi* remark") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(-2, 2), pe(0, 5), c(1, 3);
    auto M = build_polyhedron(L("u1+u2+u1^-1u2^-1", 2));
    auto P = build_polyhedron(Pm("u1^5+u2^3+u1u2^2", 2));
    for (const auto& v : P.vertices())
        if (v != Exponent{0, 0}) CHECK(phi_monomial(v, P) == 1);
    auto rand_laurent = [&] {
        LaurentPoly g(2, 0, Mode::laurent);
        for (int t = 0; t < 3; ++t) g += LaurentPoly::monomial(2, 0, Mode::laurent, Exponent{e(rng), e(rng)}, c(rng));
        return g;
    };
    auto rand_poly = [&] {
        LaurentPoly g(2, 0, Mode::polynomial);
        for (int t = 0; t < 3; ++t) g += LaurentPoly::monomial(2, 0, Mode::polynomial, Exponent{pe(rng), pe(rng)}, c(rng));
        return g;
    };
    for (int k = 0; k < 100; ++k) {
        auto g = rand_laurent(), h = rand_laurent();
        CHECK(phi(g * h, M).value <= phi(g, M).value + phi(h, M).value);
        CHECK(phi(g, M).value <= phi(g + h, M).value);
        auto a = rand_poly();
        CHECK(phi_star(a, P).value <= phi_star(Pm("1", 2), P).value + phi(a, P).value);
    }
}
