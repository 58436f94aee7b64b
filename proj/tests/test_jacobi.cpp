#include <doctest.h>

#include "brieskorn/errors.hpp"
#include "brieskorn/jacobi.hpp"
#include "brieskorn/parser.hpp"

#include <random>
#include <set>

using namespace brieskorn;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::vector<Rational> weights_of(const MilnorBasis& b) { return b.weights; }

void check_identity(const MilnorAlgebra& A, const LaurentPoly& h, const DivisionResult& d) {
    LaurentPoly h2 = h.r() == A.r() ? h : h.with_params(A.r());
    LaurentPoly sum = A.lift(d.remainder);
    for (std::size_t i = 0; i < A.n(); ++i) sum += d.cofactors[i] * A.system().generators()[i];
    CHECK(sum == h2);
    for (const auto& c : d.certificates) CHECK(c.ok);
}

}  // namespace

TEST_CASE("Milnor basis of u1^5+u2^5") {
    auto f = parse_poly("u1^5+u2^5", 2, 0, Mode::polynomial);
    MilnorAlgebra A(f);
    CHECK(A.mu() == 16);
    CHECK(milnor_number(f) == 16);
    const auto& b = A.basis();
    std::vector<Exponent> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1},
                                   {1, 2}, {0, 3}, {3, 1}, {2, 2}, {1, 3}, {3, 2}, {2, 3}, {3, 3}};
    CHECK(b.monomials == expected);
    for (std::size_t k = 0; k < 16; ++k) CHECK(b.weights[k] == q(b.monomials[k][0] + b.monomials[k][1] + 2, 5));
    std::set<Exponent> leads;
    for (const auto& e : A.groebner().elements) CHECK(e.grouped().size() == 1);
    CHECK(A.groebner().elements.size() == 2);
}

TEST_CASE("Milnor basis of u^3, u+1/u and the mirror of P2") {
    auto b3 = e0_basis(parse_poly("u1^3", 1, 0, Mode::polynomial));
    CHECK(b3.monomials == std::vector<Exponent>{{0}, {1}});
    CHECK(weights_of(b3) == std::vector<Rational>{q(1, 3), q(2, 3)});

    auto f = parse_poly("u1+u1^-1", 1, 0, Mode::laurent);
    MilnorAlgebra A(f);
    CHECK(A.basis().monomials == std::vector<Exponent>{{0}, {1}});
    CHECK(A.basis().weights == std::vector<Rational>{0, 1});
    REQUIRE(A.groebner().elements.size() == 1);
    CHECK(A.groebner().elements[0] == parse_poly("u1^2 - 1", 1, 0, Mode::laurent));
    CHECK(milnor_number(f) == 2);

    auto m = e0_basis(parse_poly("u1+u2+u1^-1u2^-1", 2, 0, Mode::laurent));
    CHECK(m.monomials == std::vector<Exponent>{{0, 0}, {1, 0}, {1, 1}});
    CHECK(m.weights == std::vector<Rational>{0, 1, 2});
}

TEST_CASE("division examples") {
    auto f = parse_poly("u1^5+u2^5", 2, 0, Mode::polynomial);
    MilnorAlgebra A(f);
    auto h = parse_poly("u1^5", 2, 0, Mode::polynomial);
    auto d = A.divide(h);
    for (const auto& c : d.remainder) CHECK(c.is_zero());
    CHECK(d.cofactors[0] == parse_poly("1/5*u1", 2, 0, Mode::polynomial));
    CHECK(d.cofactors[1].is_zero());
    check_identity(A, h, d);

    auto F = parse_poly("u1^3 + x1*u1", 1, 1, Mode::polynomial);
    MilnorAlgebra B(F);
    auto h2 = parse_poly("u1^2", 1, 1, Mode::polynomial);
    auto d2 = B.divide(h2);
    std::vector<std::string> xs{"x1"};
    CHECK(d2.remainder[0] == parse_param("-1/3*x1", xs));
    CHECK(d2.remainder[1].is_zero());
    CHECK(d2.cofactors[0] == parse_poly("1/3", 1, 1, Mode::polynomial));
    check_identity(B, h2, d2);

    auto G = parse_poly("u1^5+u2^5+x1*u1+x2*u2", 2, 2, Mode::polynomial);
    MilnorAlgebra C(G);
    auto h3 = G * parse_poly("u1^3u2^3", 2, 2, Mode::polynomial);
    auto d3 = C.divide(h3);
    std::vector<std::string> x2{"x1", "x2"};
    for (std::size_t k = 0; k < 16; ++k) {
        const auto& e = C.basis().monomials[k];
        if (e == Exponent{0, 3})
            CHECK(d3.remainder[k] == parse_param("-4/25*x1^2", x2));
        else if (e == Exponent{3, 0})
            CHECK(d3.remainder[k] == parse_param("-4/25*x2^2", x2));
        else
            CHECK(d3.remainder[k].is_zero());
    }
    check_identity(C, h3, d3);
}

TEST_CASE("multiplication matrices") {
    auto G = parse_poly("u1^5+u2^5+x1*u1+x2*u2", 2, 2, Mode::polynomial);
    MilnorAlgebra C(G);
    auto M = C.multiplication_matrix(parse_poly("u1", 2, 0, Mode::polynomial));
    std::vector<Rational> zero{0, 0};
    auto M0 = M.evaluate(zero);
    const auto& b = C.basis().monomials;
    for (std::size_t k = 0; k < 16; ++k) {
        Exponent next{b[k][0] + 1, b[k][1]};
        for (std::size_t j = 0; j < 16; ++j) CHECK(M0(j, k) == (b[k][0] < 3 && b[j] == next ? 1 : 0));
    }
    auto I = C.multiplication_matrix(parse_poly("1", 2, 0, Mode::polynomial));
    CHECK(I == PMatrix::identity(16, 2));

    auto f = parse_poly("u1+u1^-1", 1, 0, Mode::laurent);
    MilnorAlgebra A(f);
    auto R = A.multiplication_matrix(f).constant_part();
    CHECK(R(0, 0) == 0);
    CHECK(R(1, 0) == 2);
    CHECK(R(0, 1) == 2);
    CHECK(R(1, 1) == 0);
}

TEST_CASE("hypothesis violations") {
    CHECK_THROWS_AS(MilnorAlgebra(parse_poly("u1^5+u2^5 + x1*u1^5", 2, 1, Mode::polynomial)), HypothesisError);
    CHECK_THROWS_AS(MilnorAlgebra(parse_poly("u1^5", 2, 0, Mode::polynomial)), HypothesisError);
    CHECK_THROWS_AS(MilnorAlgebra(parse_poly("u1^2+2u1u2+u2^2+u3^2", 3, 0, Mode::polynomial)), HypothesisError);
}

TEST_CASE("property: exact division and freeness under specialization") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> e(0, 6), c(-3, 3);
    auto G = parse_poly("u1^5+u2^5+x1*u1+x2*u2", 2, 2, Mode::polynomial);
    MilnorAlgebra C(G);
    for (int t = 0; t < 30; ++t) {
        LaurentPoly h(2, 2, Mode::polynomial);
        for (int k = 0; k < 4; ++k) {
            Exponent ex{e(rng), e(rng), e(rng) % 2, e(rng) % 2};
            h += LaurentPoly::from_flat(Poly::monomial(ex, c(rng)), 2, 2, Mode::polynomial);
        }
        check_identity(C, h, C.divide(h));
    }
    for (int t = 0; t < 5; ++t) {
        std::vector<Rational> pt{c(rng), c(rng)};
        MilnorAlgebra S(G.substitute_params(pt));
        CHECK(S.basis().monomials == C.basis().monomials);
        auto h = parse_poly("u1^7*u2^2 + 3u1u2^6", 2, 2, Mode::polynomial);
        auto full = C.coordinates(h);
        auto spec = S.coordinates(h.substitute_params(pt));
        for (std::size_t k = 0; k < full.size(); ++k) CHECK(Poly::constant(0, full[k].evaluate(pt)) == spec[k]);
    }
}
