#include <doctest.h>

#include "brieskorn/connection.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/parser.hpp"

#include <random>

using namespace brieskorn;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

const std::vector<std::string> X2{"x1", "x2"};
const std::vector<std::string> X1{"x"};

ParamCoeff px(const char* s, const std::vector<std::string>& names) { return parse_param(s, names); }

LaurentPoly golden_F() { return parse_poly("u1^5+u2^5+x1*u1+x2*u2", 2, 2, Mode::polynomial); }

std::size_t idx(const MilnorBasis& b, int i, int j) { return b.index_of(Exponent{i, j}); }

}  // namespace

TEST_CASE("theta reduction examples") {
    MilnorAlgebra A(golden_F());
    const auto& b = A.basis();
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            auto h = golden_F() * parse_poly(("u1^" + std::to_string(i) + "*u2^" + std::to_string(j)).c_str(), 2, 2,
                                             Mode::polynomial);
            auto e = theta_reduce(A, h);
            REQUIRE(e.coefficients.size() == 2);
            for (std::size_t k = 0; k < 16; ++k) {
                ParamCoeff expect(2);
                if (k == idx(b, i + 1, j)) expect = px("4/5*x1", X2);
                if (k == idx(b, i, j + 1)) expect = px("4/5*x2", X2);
                CHECK(e.coefficients[0][k] == expect);
                CHECK(e.coefficients[1][k] == (k == idx(b, i, j) ? Poly::constant(2, q(i + j + 2, 5)) : Poly(2)));
            }
            CHECK(verify_unreduce(A, h, e));
        }

    auto F = parse_poly("u1^3 + x*u1", VariableNames{{"u1"}, {"x"}}, Mode::polynomial);
    MilnorAlgebra B(F);
    auto e = theta_reduce(B, F);
    REQUIRE(e.coefficients.size() == 2);
    CHECK(e.coefficients[0][1] == px("2/3*x", X1));
    CHECK(e.coefficients[1][0] == Poly::constant(1, q(1, 3)));

    auto c = theta_reduce(B, parse_poly("7", 1, 1, Mode::polynomial));
    REQUIRE(c.coefficients.size() == 1);
    CHECK(c.coefficients[0][0] == Poly::constant(1, 7));
}

TEST_CASE("golden connection") {
    MilnorAlgebra A(golden_F());
    auto pre = build_connection(A);
    CHECK(pre.residuals.empty());
    for (const auto& c0 : pre.C0) CHECK(c0.is_zero());
    auto d = gauge_normalize(pre);
    CHECK(d.gauge.identity);
    CHECK(d.birkhoff_ok);
    const auto& b = d.basis;

    PMatrix B0(16, 16, 2), C1(16, 16, 2), C2(16, 16, 2);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            std::size_t col = idx(b, i, j);
            if (i < 3) B0(idx(b, i + 1, j), col) = px("4/5*x1", X2);
            else B0(idx(b, 0, j), col) = px("-4/25*x1^2", X2);
            if (j < 3) B0(idx(b, i, j + 1), col) = px("4/5*x2", X2);
            else B0(idx(b, i, 0), col) = px("-4/25*x2^2", X2);
            if (i < 3) C1(idx(b, i + 1, j), col) = px("-1", X2);
            else C1(idx(b, 0, j), col) = px("1/5*x1", X2);
            if (j < 3) C2(idx(b, i, j + 1), col) = px("-1", X2);
            else C2(idx(b, i, 0), col) = px("1/5*x2", X2);
        }
    CHECK(d.B0 == B0);
    CHECK(d.C[0] == C1);
    CHECK(d.C[1] == C2);
    QMatrix binf = d.binf_constant();
    CHECK(binf.is_diagonal());
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            Rational expect = q(i + j + 2, 5);
            CHECK(binf(idx(b, i, j), idx(b, i, j)) == expect);
        }
    CHECK(binf(idx(b, 3, 0), idx(b, 3, 0)) == q(5, 5));
    CHECK(binf(idx(b, 3, 3), idx(b, 3, 3)) == q(8, 5));

    auto integ = verify_integrability(d);
    CHECK(integ.ok);
    CHECK(integ.relations_checked == 6);
    auto rec = reconstruct_C_from_B0(d.B0, binf);
    CHECK(rec.inconsistencies.empty());
    CHECK(rec.C[0] == C1);
    CHECK(rec.C[1] == C2);

    auto s = spectrum(d);
    CHECK(s.front() == q(2, 5));
    CHECK(s.back() == q(8, 5));
    std::vector<Rational> zero{0, 0};
    CHECK(d.B0.evaluate(zero).is_zero());
}

TEST_CASE("one-variable case u^3 + x u") {
    auto F = parse_poly("u1^3 + x*u1", VariableNames{{"u1"}, {"x"}}, Mode::polynomial);
    auto d = gauge_normalize(build_connection(MilnorAlgebra(F)));
    CHECK(d.birkhoff_ok);
    CHECK(d.B0(0, 0).is_zero());
    CHECK(d.B0(0, 1) == px("-2/9*x^2", X1));
    CHECK(d.B0(1, 0) == px("2/3*x", X1));
    CHECK(d.B0(1, 1).is_zero());
    auto binf = d.binf_constant();
    CHECK(binf(0, 0) == q(1, 3));
    CHECK(binf(1, 1) == q(2, 3));
    CHECK(binf(0, 1) == 0);
    CHECK(d.C[0](0, 1) == px("1/3*x", X1));
    CHECK(d.C[0](1, 0) == px("-1", X1));
    CHECK(verify_integrability(d).ok);
    auto rec = reconstruct_C_from_B0(d.B0, binf);
    CHECK(rec.C[0] == d.C[0]);
}

TEST_CASE("laurent u + 1/u") {
    auto d = gauge_normalize(build_connection(MilnorAlgebra(parse_poly("u1+u1^-1", 1, 0, Mode::laurent))));
    CHECK(d.birkhoff_ok);
    auto b0 = d.B0.constant_part();
    CHECK(b0(0, 1) == 2);
    CHECK(b0(1, 0) == 2);
    CHECK(b0(0, 0) == 0);
    CHECK(b0(1, 1) == 0);
    CHECK(spectrum(d) == std::vector<Rational>{0, 1});
    CHECK(verify_integrability(d).ok);
}

TEST_CASE("gauge fixture with nonzero C0") {
    auto F = parse_poly("u1^4 + x*u1^2", VariableNames{{"u1"}, {"x"}}, Mode::polynomial);
    auto pre = build_connection(MilnorAlgebra(F));
    REQUIRE_FALSE(pre.C0[0].is_zero());
    CHECK(pre.C0[0](0, 2) == Poly::constant(1, q(-1, 4)));
    auto d = gauge_normalize(pre);
    CHECK_FALSE(d.gauge.identity);
    std::vector<Rational> zero{0};
    CHECK(d.gauge.P.evaluate(zero) == QMatrix::identity(3));
    CHECK(d.gauge.P * d.gauge.inverse == PMatrix::identity(3, 1));
    CHECK(d.gauge.P(0, 2) == px("1/4*x", X1));
    // the transformed C0 part: P^-1 C0 P + P^-1 dP/dx
    PMatrix newC0 = d.gauge.inverse * pre.C0[0] * d.gauge.P + d.gauge.inverse * d.gauge.P.derivative(0);
    CHECK(newC0.is_zero());
    CHECK(d.Binf.is_constant());
    CHECK(d.birkhoff_ok);
    CHECK(verify_integrability(d).ok);
}

TEST_CASE("negative control: corrupted B0 breaks I.4") {
    auto F = parse_poly("u1^3 + x*u1", VariableNames{{"u1"}, {"x"}}, Mode::polynomial);
    auto d = gauge_normalize(build_connection(MilnorAlgebra(F)));
    d.B0(1, 0) = px("x", X1);
    auto rep = verify_integrability(d);
    CHECK_FALSE(rep.ok);
    bool i4 = false;
    for (const auto& r : rep.residuals) i4 = i4 || r.relation == "I.4";
    CHECK(i4);
}

TEST_CASE("property: un-reduction reproduces the input") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> e(-3, 3), c(-4, 4);
    auto F = parse_poly("u1^2+u2^2+u1^-2u2^-2 + x1*u1 + x2*u2", 2, 2, Mode::laurent);
    MilnorAlgebra A(F);
    for (int t = 0; t < 25; ++t) {
        LaurentPoly h(2, 2, Mode::laurent);
        for (int k = 0; k < 3; ++k)
            h += LaurentPoly::from_flat(Poly::monomial(Exponent{e(rng), e(rng), std::abs(e(rng)) % 2, 0}, c(rng)), 2,
                                        2, Mode::laurent);
        auto ex = theta_reduce(A, h);
        CHECK(verify_unreduce(A, h, ex));
    }
}

TEST_CASE("mirror of P2 is a Birkhoff solution") {
    auto d = gauge_normalize(build_connection(MilnorAlgebra(parse_poly("u1+u2+u1^-1u2^-1", 2, 0, Mode::laurent))));
    CHECK(d.basis.monomials == std::vector<Exponent>{{0, 0}, {1, 0}, {1, 1}});
    CHECK(d.residuals.empty());
    CHECK(d.birkhoff_ok);
    QMatrix binf = d.binf_constant();
    CHECK(binf.is_diagonal());
    CHECK(spectrum(d) == std::vector<Rational>{0, 1, 2});
    QMatrix b0 = d.B0.constant_part();
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) CHECK(b0(i, j) == (i == (j + 1) % 3 ? 3 : 0));
}

TEST_CASE("theta-powers beyond one are reported, not gauged") {
    auto F = parse_poly("u1^5+u2^5+x1*u1^2*u2^2+x2*u1^3", 2, 2, Mode::polynomial);
    auto pre = build_connection(MilnorAlgebra(F));
    REQUIRE_FALSE(pre.residuals.empty());
    CHECK(pre.residuals[0].power == 2);
    auto d = gauge_normalize(pre);
    CHECK_FALSE(d.birkhoff_ok);
    CHECK(d.gauge.identity);
    CHECK_FALSE(d.notes.empty());
}
