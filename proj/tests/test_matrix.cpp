#include <doctest.h>

#include "brieskorn/matrix.hpp"
#include "brieskorn/parser.hpp"

using namespace brieskorn;

namespace {

QMatrix Q(std::initializer_list<std::initializer_list<int>> rows) {
    QMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rank, inverse, nullspace, solve") {
    auto a = Q({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(a) == 2);
    CHECK_FALSE(inverse(a).has_value());
    auto ns = nullspace(a);
    REQUIRE(ns.size() == 1);
    CHECK((a * std::span<const Rational>(ns[0])) == std::vector<Rational>(3));

    auto b = Q({{2, 1}, {1, 1}});
    auto bi = inverse(b);
    REQUIRE(bi.has_value());
    CHECK(b * *bi == QMatrix::identity(2));

    std::vector<Rational> rhs{3, 2};
    auto y = solve(b, rhs);
    REQUIRE(y.has_value());
    CHECK((*y)[0] == 1);
    CHECK((*y)[1] == 1);
    std::vector<Rational> bad{1, 0, 0};
    CHECK_FALSE(solve(a, bad).has_value());
}

TEST_CASE("parametric matrices") {
    std::vector<std::string> xs{"x"};
    PMatrix m(2, 2, 1);
    m(0, 1) = parse_param("-2/9*x^2", xs);
    m(1, 0) = parse_param("2/3*x", xs);
    CHECK(m.degree() == 2);
    CHECK_FALSE(m.is_constant());
    auto d = m.derivative(0);
    CHECK(d(0, 1) == parse_param("-4/9*x", xs));
    std::vector<Rational> pt{3};
    auto e = m.evaluate(pt);
    CHECK(e(0, 1) == -2);
    CHECK(e(1, 0) == 2);
    CHECK(commutator(m, PMatrix::identity(2, 1)).is_zero());
    CHECK(m.to_strings(xs)[0][1] == "-2/9*x^2");
}
