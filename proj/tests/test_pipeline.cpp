#include <doctest.h>

#include "brieskorn/errors.hpp"
#include "brieskorn/pipeline.hpp"

using namespace brieskorn;

namespace {

JobSpec quintic() {
    return JobSpec::from_json(Json::parse(R"({"mode": "polynomial", "n": 2, "f": "u1^5+u2^5",
                                              "deformation": ["u1", "u2"]})"));
}

PMatrix read_matrix(const Json& rows, const std::vector<std::string>& x) {
    PMatrix m(rows.size(), rows.size(), x.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_param(rows[i][j].get<std::string>(), x);
    return m;
}

}  // namespace

TEST_CASE("job specs") {
    auto s = quintic();
    CHECK(s.r() == 2);
    CHECK(s.names.x == std::vector<std::string>{"x1", "x2"});
    CHECK(s.deformed() == parse_poly("u1^5+u2^5+x1*u1+x2*u2", 2, 2, Mode::polynomial));
    CHECK(JobSpec::from_json(s.to_json()).to_json() == s.to_json());

    CHECK_THROWS_AS(JobSpec::from_json(Json::parse(R"({"mode": "polynomial", "n": 1})")), UsageError);
    CHECK_THROWS_AS(JobSpec::from_json(Json::parse(R"({"mode": "weird", "n": 1, "f": "u1"})")), UsageError);
    CHECK_THROWS_AS(JobSpec::from_json(Json::parse(R"({"mode": "laurent", "n": 1, "f": "u1 +* 2"})")), UsageError);
    CHECK_THROWS_AS(JobSpec::from_json(Json::parse(R"({"mode": "laurent", "n": 2, "f": "u1", "variables": ["a"]})")),
                    UsageError);
    CHECK_THROWS_AS(JobSpec::from_json(Json::parse(R"({"mode": "polynomial", "n": 1, "f": "u1^-1"})")), UsageError);
}

TEST_CASE("exit codes") {
    CHECK(exit_code_for(UsageError("x")) == 1);
    CHECK(exit_code_for(ParseError("x", 0)) == 1);
    CHECK(exit_code_for(HypothesisError("c", "x")) == 2);
    CHECK(exit_code_for(BudgetExceeded("x")) == 3);
    CHECK(exit_code_for(Error("x")) == 4);
    auto e = error_object(HypothesisError("not_commode", "msg"));
    CHECK(e["error"]["code"] == "not_commode");
    CHECK(e["error"]["exit_code"] == 2);
    CHECK_THROWS_AS(parse_command("nope"), UsageError);
    CHECK_THROWS_AS(run_command(Command::divide, quintic()), UsageError);
}

TEST_CASE("reports are deterministic and round-trip") {
    auto s = quintic();
    Json a = run_analyze(s);
    CHECK(a.dump() == run_analyze(s).dump());
    CHECK(a["mu"] == 16);

    ConnectionData d;
    d.n = 2;
    d.r = 2;
    d.B0 = read_matrix(a["connection"]["B0"], s.names.x);
    d.Binf = read_matrix(a["connection"]["Binf"], s.names.x);
    for (const auto& c : a["connection"]["C"]) d.C.push_back(read_matrix(c, s.names.x));
    auto integ = verify_integrability(d);
    CHECK(integ.ok == a["connection"]["integrability"]["ok"].get<bool>());
    CHECK(integ.relations_checked == a["connection"]["integrability"]["relations_checked"].get<std::size_t>());
    Json again = read_matrix(a["connection"]["B0"], s.names.x).to_strings(s.names.x);
    CHECK(again == a["connection"]["B0"]);

    std::string text = render_text(a);
    CHECK(text.find("mu: 16") != std::string::npos);
    CHECK(text.find("socle: u1^3*u2^3") != std::string::npos);
}

TEST_CASE("partial commands") {
    auto circle = JobSpec::from_json(Json::parse(R"({"mode": "laurent", "n": 1, "f": "u1+u1^-1"})"));
    auto sp = run_command(Command::spectrum, circle);
    CHECK(sp["spectrum"] == Json::array({"0", "1"}));
    CHECK_FALSE(sp.contains("connection"));

    auto cubic = JobSpec::from_json(
        Json::parse(R"({"mode": "polynomial", "n": 1, "variables": ["u"], "parameters": ["x"],
                        "f": "u^3", "deformation": ["u"]})"));
    auto dv = run_command(Command::divide, cubic, std::string("u^2"));
    CHECK(dv["division"]["remainder"] == "-1/3*x");
    CHECK(dv["division"]["cofactors"] == Json::array({"1/3"}));

    auto bad = JobSpec::from_json(Json::parse(R"({"mode": "laurent", "n": 1, "f": "u1+u1^-1", "deformation": ["u1"]})"));
    try {
        run_command(Command::milnor, bad);
        FAIL("expected a hypothesis error");
    } catch (const HypothesisError& e) {
        CHECK(e.code() == "not_subdiagram");
    }
}
