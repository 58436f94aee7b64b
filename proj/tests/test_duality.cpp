#include <doctest.h>

#include "brieskorn/duality.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/parser.hpp"

#include <random>

using namespace brieskorn;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

LaurentPoly golden_F() { return parse_poly("u1^5+u2^5+x1*u1+x2*u2", 2, 2, Mode::polynomial); }
LaurentPoly cubic_F() { return parse_poly("u1^3 + x*u1", VariableNames{{"u1"}, {"x"}}, Mode::polynomial); }

}  // namespace

TEST_CASE("socle") {
    MilnorAlgebra A(golden_F());
    CHECK(A.basis().monomials[socle(A.basis())] == Exponent{3, 3});
    MilnorAlgebra B(parse_poly("u1^3", 1, 0, Mode::polynomial));
    CHECK(B.basis().monomials[socle(B.basis())] == Exponent{1});
    MilnorAlgebra C(parse_poly("u1+u1^-1", 1, 0, Mode::laurent));
    CHECK(C.basis().monomials[socle(C.basis())] == Exponent{1});

    MilnorBasis tie;
    tie.monomials = {{0}, {1}, {2}};
    tie.weights = {0, 1, 1};
    CHECK_THROWS_AS(socle(tie), HypothesisError);
}

TEST_CASE("residue pairing examples") {
    MilnorAlgebra A(golden_F());
    auto P = residue_pairing(A);
    const auto& b = A.basis();
    CHECK(P.nondegenerate);
    CHECK(P.weight_graded);
    CHECK(P.n == 2);
    for (std::size_t k = 0; k < 16; ++k)
        for (std::size_t l = 0; l < 16; ++l) {
            bool dual = b.monomials[l][0] == 3 - b.monomials[k][0] && b.monomials[l][1] == 3 - b.monomials[k][1];
            CHECK(P.S(k, l) == (dual ? 1 : 0));
            CHECK(P.S(k, l) == (l == 15 - k ? 1 : 0));
        }

    auto Pc = residue_pairing(MilnorAlgebra(parse_poly("u1^3", 1, 0, Mode::polynomial)));
    CHECK(Pc.S(0, 0) == 0);
    CHECK(Pc.S(0, 1) == 1);
    CHECK(Pc.S(1, 1) == 0);

    auto Pl = residue_pairing(MilnorAlgebra(parse_poly("u1+u1^-1", 1, 0, Mode::laurent)));
    CHECK(Pl.S(0, 1) != 0);
    CHECK(Pl.S(1, 1) == 0);
    CHECK(Pl.S(0, 0) == 0);
    CHECK(Pl.n == 1);
}

TEST_CASE("pairing does not depend on the parameters") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-6, 6);
    for (auto F : {golden_F(), cubic_F()}) {
        MilnorAlgebra A(F);
        auto P0 = residue_pairing(A);
        for (int t = 0; t < 5; ++t) {
            std::vector<Rational> x;
            for (std::size_t j = 0; j < F.r(); ++j) x.push_back(q(c(rng), 1 + std::abs(c(rng))));
            CHECK(residue_pairing(A, x).S == P0.S);
            MilnorAlgebra Ax(F.substitute_params(x));
            CHECK(residue_pairing(Ax).S == P0.S);
        }
    }
}

TEST_CASE("T-symmetry") {
    auto golden = gauge_normalize(build_connection(MilnorAlgebra(golden_F())));
    auto rep = check_T_symmetry(golden);
    CHECK(rep.ok);
    CHECK(rep.residuals.empty());

    auto cubic = gauge_normalize(build_connection(MilnorAlgebra(cubic_F())));
    CHECK(check_T_symmetry(cubic).ok);

    std::vector<std::size_t> scrambled(16);
    for (std::size_t k = 0; k < 16; ++k) scrambled[k] = k;
    std::swap(scrambled[1], scrambled[2]);
    auto bad = check_T_symmetry(golden, scrambled);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.residuals.empty());
}

TEST_CASE("orthonormalization") {
    MilnorAlgebra A(golden_F());
    auto on = orthonormalize(A.basis(), residue_pairing(A));
    REQUIRE(on.ok);
    CHECK(on.change == QMatrix::identity(16));

    MilnorBasis two;
    two.monomials = {{0}, {1}};
    two.weights = {q(1, 3), q(2, 3)};
    PairingMatrix P;
    P.S = QMatrix(2, 2);
    P.S(0, 1) = P.S(1, 0) = 3;
    P.n = 1;
    P.nondegenerate = P.weight_graded = true;
    auto o = orthonormalize(two, P);
    REQUIRE(o.ok);
    QMatrix J(2, 2);
    J(0, 1) = J(1, 0) = 1;
    CHECK(congruence(P.S, o.change) == J);
    CHECK(o.change(0, 0) == 1);
    CHECK(o.change(1, 1) == q(1, 3));

    two.weights = {q(1, 2), q(1, 2)};
    P.S(0, 1) = P.S(1, 0) = 1;
    auto same = orthonormalize(two, P);
    REQUIRE(same.ok);
    CHECK(same.change == QMatrix::identity(2));

    MilnorBasis one;
    one.monomials = {{0}};
    one.weights = {q(1, 2)};
    PairingMatrix S1;
    S1.S = QMatrix(1, 1);
    S1.S(0, 0) = 4;
    S1.n = 1;
    S1.nondegenerate = S1.weight_graded = true;
    auto sq = orthonormalize(one, S1);
    REQUIRE(sq.ok);
    CHECK(sq.change(0, 0) == q(1, 2));
    S1.S(0, 0) = 2;
    auto obstructed = orthonormalize(one, S1);
    CHECK_FALSE(obstructed.ok);
    CHECK(obstructed.obstruction == std::vector<Rational>{2});
}
