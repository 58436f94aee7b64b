#include "brieskorn/pipeline.hpp"

#include "brieskorn/duality.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/frobgate.hpp"
#include "brieskorn/newton.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace brieskorn {

namespace {

template <class T>
T field(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw UsageError(std::string("job field '") + key + "' has the wrong type");
    }
}

}  // namespace

JobSpec JobSpec::from_json(const Json& j) {
    if (!j.is_object()) throw UsageError("job must be a JSON object");
    for (const char* key : {"mode", "n", "f"})
        if (!j.contains(key)) throw UsageError(std::string("job is missing field '") + key + "'");
    JobSpec s;
    try {
        s.mode = parse_mode(field<std::string>(j, "mode", ""));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    long n = field<long>(j, "n", 0);
    if (n <= 0) throw UsageError("job field 'n' must be positive");
    s.n = static_cast<std::size_t>(n);
    s.f = field<std::string>(j, "f", "");
    s.deformation = field<std::vector<std::string>>(j, "deformation", {});
    s.names.u = field<std::vector<std::string>>(j, "variables", default_names("u", s.n));
    s.names.x = field<std::vector<std::string>>(j, "parameters", default_names("x", s.r()));
    if (s.names.u.size() != s.n) throw UsageError("'variables' must list n names");
    if (s.names.x.size() != s.r()) throw UsageError("'parameters' must list one name per deformation term");
    if (j.contains("flags")) {
        const Json& fl = j.at("flags");
        if (!fl.is_object()) throw UsageError("job field 'flags' must be an object");
        s.assume_nondegenerate = field<bool>(fl, "assume_nondegenerate", false);
        s.gc_include_R0 = field<bool>(fl, "gc_include_R0", true);
        long budget = field<long>(fl, "budget", 100000);
        if (budget <= 0) throw UsageError("budget must be positive");
        s.budget = static_cast<std::size_t>(budget);
    }
    s.deformed();
    return s;
}

JobSpec JobSpec::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open job file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("job file '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(j);
}

Json JobSpec::to_json() const {
    Json j;
    j["mode"] = to_string(mode);
    j["n"] = n;
    j["variables"] = names.u;
    j["parameters"] = names.x;
    j["f"] = f;
    j["deformation"] = deformation;
    j["flags"] = {{"assume_nondegenerate", assume_nondegenerate}, {"gc_include_R0", gc_include_R0}, {"budget", budget}};
    return j;
}

LaurentPoly JobSpec::base() const {
    try {
        return parse_poly(f, VariableNames{names.u, {}}, mode);
    } catch (const ParseError& e) {
        throw UsageError(std::string("in f: ") + e.what());
    }
}

std::vector<LaurentPoly> JobSpec::terms() const {
    std::vector<LaurentPoly> out;
    for (std::size_t j = 0; j < deformation.size(); ++j) {
        try {
            out.push_back(parse_poly(deformation[j], VariableNames{names.u, {}}, mode));
        } catch (const ParseError& e) {
            throw UsageError("in deformation term " + std::to_string(j + 1) + ": " + e.what());
        }
    }
    return out;
}

LaurentPoly JobSpec::deformed() const {
    LaurentPoly F = base().with_params(r());
    auto g = terms();
    for (std::size_t j = 0; j < g.size(); ++j) F += g[j].with_params(r()).times_param(Poly::variable(r(), j));
    return F;
}

Command parse_command(const std::string& name) {
    static const std::vector<std::pair<std::string, Command>> table{
        {"analyze", Command::analyze}, {"milnor", Command::milnor},     {"spectrum", Command::spectrum},
        {"connection", Command::connection}, {"check", Command::check}, {"divide", Command::divide}};
    for (const auto& [k, v] : table)
        if (k == name) return v;
    throw UsageError("unknown command '" + name + "'");
}

std::string to_string(Command c) {
    switch (c) {
        case Command::analyze: return "analyze";
        case Command::milnor: return "milnor";
        case Command::spectrum: return "spectrum";
        case Command::connection: return "connection";
        case Command::check: return "check";
        case Command::divide: return "divide";
    }
    return "";
}

namespace {

std::string rat(const Rational& q) { return q.get_str(); }

Json rats(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(rat(q));
    return a;
}

class Pipeline {
public:
    explicit Pipeline(const JobSpec& spec) : spec_(spec), f_(spec.base()), g_(spec.terms()), F_(spec.deformed()) {}

    Json hypotheses() {
        Json j;
        P_ = build_polyhedron(f_);
        j["commode"] = true;
        if (spec_.assume_nondegenerate) {
            j["nondegenerate"] = "assumed";
        } else {
            auto v = is_nondegenerate(f_, spec_.budget);
            if (v.verdict == Tristate::no) throw HypothesisError("degenerate", v.diagnostic);
            if (v.verdict == Tristate::unknown)
                throw BudgetExceeded("nondegeneracy undecided within the budget (" + v.diagnostic +
                                     "); rerun with --assume-nondegenerate or a larger --budget");
            j["nondegenerate"] = "yes";
        }
        Json sub = Json::array();
        for (std::size_t k = 0; k < g_.size(); ++k) {
            auto v = is_subdiagram(g_[k], *P_);
            Json checks = Json::array();
            std::string failed;
            for (const auto& c : v.checks) {
                checks.push_back({{"name", c.name}, {"ok", c.ok}, {"lhs", rat(c.lhs)}, {"rhs", rat(c.rhs)}});
                if (!c.ok && failed.empty() && c.name.find("phi*(g)") == std::string::npos) failed = c.name;
            }
            if (!v.ok)
                throw HypothesisError("not_subdiagram", "deformation term " + std::to_string(k + 1) + " ('" +
                                                            spec_.deformation[k] + "') is not sub-diagram: " +
                                                            failed + " fails");
            sub.push_back({{"g", spec_.deformation[k]}, {"ok", v.ok}, {"checks", checks}});
        }
        j["subdiagram"] = sub;
        return j;
    }

    const MilnorAlgebra& algebra() {
        if (!A_) A_.emplace(F_, JacobiOptions{spec_.budget});
        return *A_;
    }

    std::string monomial(const Exponent& e) const {
        return LaurentPoly::monomial(spec_.n, 0, spec_.mode, e).to_string(spec_.names.u, {});
    }

    Json matrix(const PMatrix& m) const {
        Json rows = Json::array();
        for (const auto& row : m.to_strings(spec_.names.x)) rows.push_back(row);
        return rows;
    }

    Json milnor() {
        const auto& A = algebra();
        const auto& b = A.basis();
        Json j;
        j["mu"] = b.mu();
        j["newton_number"] = newton_number(A.polyhedron()).get_str();
        j["groebner_dimension"] = A.groebner().standard_monomials.size();
        Json basis = Json::array();
        for (std::size_t k = 0; k < b.mu(); ++k)
            basis.push_back({{"monomial", monomial(b.monomials[k])}, {"weight", rat(b.weights[k])}});
        j["basis"] = basis;
        return j;
    }

    Json spectrum_part() {
        const auto& b = algebra().basis();
        std::vector<Rational> w = b.weights;
        std::sort(w.begin(), w.end());
        bool symmetric = true;
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] + w[w.size() - 1 - k] != Rational(static_cast<long>(spec_.n))) symmetric = false;
        return {{"spectrum", rats(w)}, {"symmetric", symmetric}};
    }

    const ConnectionData& connection() {
        if (!d_) d_ = gauge_normalize(build_connection(algebra()));
        return *d_;
    }

    Json residual(const MatrixResidual& r) const {
        return {{"relation", r.relation}, {"i", r.i + 1}, {"j", r.j + 1}, {"value", matrix(r.value)}};
    }

    Json connection_part() {
        const auto& d = connection();
        Json j;
        j["B0"] = matrix(d.B0);
        j["Binf"] = matrix(d.Binf);
        Json C = Json::array();
        for (const auto& c : d.C) C.push_back(matrix(c));
        j["C"] = C;
        j["birkhoff_ok"] = d.birkhoff_ok;
        Json res = Json::array();
        for (const auto& t : d.residuals) {
            Json coords = Json::array();
            for (const auto& c : t.coordinates) coords.push_back(c.to_string(spec_.names.x));
            res.push_back({{"source", t.source}, {"column", t.column + 1}, {"power", t.power}, {"coordinates", coords}});
        }
        j["theta_residuals"] = res;
        Json gauge;
        gauge["identity"] = d.gauge.identity;
        if (!d.gauge.identity) {
            gauge["P"] = matrix(d.gauge.P);
            gauge["P_inverse"] = matrix(d.gauge.inverse);
        }
        j["gauge"] = gauge;
        j["notes"] = d.notes;
        auto integ = verify_integrability(d);
        Json ir = Json::array();
        for (const auto& r : integ.residuals) ir.push_back(residual(r));
        j["integrability"] = {{"ok", integ.ok}, {"relations_checked", integ.relations_checked}, {"residuals", ir}};
        return j;
    }

    Json duality_part() {
        Json j;
        const auto& A = algebra();
        try {
            auto P = residue_pairing(A);
            Json S = Json::array();
            for (std::size_t k = 0; k < P.S.rows(); ++k) {
                Json row = Json::array();
                for (std::size_t l = 0; l < P.S.cols(); ++l) row.push_back(rat(P.S(k, l)));
                S.push_back(row);
            }
            j["pairing"] = {{"S", S},
                            {"socle", monomial(A.basis().monomials[P.socle])},
                            {"normalization", rat(P.normalization)},
                            {"nondegenerate", P.nondegenerate},
                            {"weight_graded", P.weight_graded}};
            auto o = orthonormalize(A.basis(), P);
            Json on = {{"ok", o.ok}};
            if (o.ok) {
                on["identity"] = o.change == QMatrix::identity(A.mu());
                if (!o.change.is_zero() && o.change != QMatrix::identity(A.mu()))
                    on["change"] = matrix(PMatrix::from(o.change, 0));
            } else {
                on["diagnostic"] = o.diagnostic;
                on["obstruction"] = rats(o.obstruction);
            }
            j["orthonormalization"] = on;
        } catch (const HypothesisError& e) {
            j["pairing"] = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
        }
        auto t = check_T_symmetry(connection());
        Json tr = Json::array();
        for (const auto& r : t.residuals) tr.push_back(residual(r));
        j["t_symmetry"] = {{"ok", t.ok}, {"residuals", tr}};
        return j;
    }

    Json conditions_part() {
        const auto& A = algebra();
        auto rep = check_conditions(A, spec_.gc_include_R0);
        Json j;
        j["ec"] = {{"ok", rep.ec.ok},
                   {"zeta", rep.ec.zeta},
                   {"zeta_weight", rat(rep.ec.zeta_weight)},
                   {"minimal_weight", rat(rep.ec.minimal_weight)},
                   {"multiplicity", rep.ec.multiplicity}};
        j["ic"] = {{"ok", rep.ic.ok}, {"rank", rep.ic.rank}, {"r", rep.ic.r}};
        j["gc"] = {{"ok", rep.gc.ok},
                   {"dimension", rep.gc.dimension},
                   {"mu", rep.gc.mu},
                   {"include_R0", rep.gc.include_R0},
                   {"words", rep.gc.words}};
        auto s = suggest_deformation(A, spec_.gc_include_R0);
        Json mons = Json::array();
        for (const auto& e : s.monomials) mons.push_back(monomial(e));
        j["suggestion"] = {{"ok", s.ok}, {"monomials", mons}};
        if (!s.ok) j["suggestion"]["diagnostic"] = s.diagnostic;
        return j;
    }

    Json divide_part(const std::string& text) {
        LaurentPoly h = [&] {
            try {
                return parse_poly(text, spec_.names, spec_.mode);
            } catch (const ParseError& e) {
                throw UsageError(std::string("in --h: ") + e.what());
            }
        }();
        const auto& A = algebra();
        auto res = A.divide(h);
        Json j;
        j["h"] = h.to_string(spec_.names.u, spec_.names.x);
        j["alpha"] = rat(res.alpha);
        Json coords = Json::array();
        for (const auto& c : res.remainder) coords.push_back(c.to_string(spec_.names.x));
        j["remainder_coordinates"] = coords;
        j["remainder"] = A.lift(res.remainder).to_string(spec_.names.u, spec_.names.x);
        Json cof = Json::array();
        for (const auto& c : res.cofactors) cof.push_back(c.to_string(spec_.names.u, spec_.names.x));
        j["cofactors"] = cof;
        j["generators"] = spec_.mode == Mode::laurent ? "u_i*dF/du_i" : "dF/du_i";
        Json certs = Json::array();
        for (const auto& c : res.certificates)
            certs.push_back({{"cofactor", c.cofactor + 1},
                             {"bound", c.bound},
                             {"value", c.bottom ? "-inf" : rat(c.value)},
                             {"limit", rat(c.limit)},
                             {"ok", c.ok}});
        j["certificates"] = certs;
        j["steps"] = res.steps;
        return j;
    }

private:
    const JobSpec& spec_;
    LaurentPoly f_;
    std::vector<LaurentPoly> g_;
    LaurentPoly F_;
    std::optional<NewtonPolyhedron> P_;
    std::optional<MilnorAlgebra> A_;
    std::optional<ConnectionData> d_;
};

void merge(Json& into, const Json& part) {
    for (auto it = part.begin(); it != part.end(); ++it) into[it.key()] = it.value();
}

}  // namespace

Json run_command(Command command, const JobSpec& spec, const std::optional<std::string>& h) {
    if (command == Command::divide && !h) throw UsageError("divide requires --h <expr>");
    Pipeline p(spec);
    Json report;
    report["command"] = to_string(command);
    report["job"] = spec.to_json();
    merge(report, p.hypotheses());
    switch (command) {
        case Command::milnor:
            merge(report, p.milnor());
            break;
        case Command::spectrum:
            merge(report, p.spectrum_part());
            break;
        case Command::connection:
            merge(report, p.milnor());
            report["connection"] = p.connection_part();
            break;
        case Command::check:
            merge(report, p.milnor());
            report["conditions"] = p.conditions_part();
            break;
        case Command::divide:
            report["division"] = p.divide_part(*h);
            break;
        case Command::analyze:
            merge(report, p.milnor());
            merge(report, p.spectrum_part());
            report["connection"] = p.connection_part();
            merge(report, p.duality_part());
            report["conditions"] = p.conditions_part();
            break;
    }
    return report;
}

Json run_analyze(const JobSpec& spec) { return run_command(Command::analyze, spec); }

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const ParseError*>(&e)) return 1;
    if (dynamic_cast<const HypothesisError*>(&e)) return 2;
    if (dynamic_cast<const BudgetExceeded*>(&e)) return 3;
    return 4;
}

Json error_object(const std::exception& e) {
    static const char* kinds[] = {"ok", "usage", "hypothesis", "budget", "internal"};
    int code = exit_code_for(e);
    Json err;
    err["kind"] = kinds[code];
    if (auto* h = dynamic_cast<const HypothesisError*>(&e)) err["code"] = h->code();
    err["message"] = e.what();
    err["exit_code"] = code;
    return {{"error", err}};
}

namespace {

bool is_scalar_array(const Json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        std::string key = j.is_object() ? it.key() : "-";
        if (v.is_primitive()) {
            out << indent << key << ": " << scalar(v) << "\n";
        } else if (v.is_object() && !v.empty() &&
                   std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); })) {
            out << indent << key << ": ";
            bool first = true;
            for (auto e = v.begin(); e != v.end(); ++e) {
                out << (first ? "" : ", ") << e.key() << " = " << scalar(e.value());
                first = false;
            }
            out << "\n";
        } else if (is_scalar_array(v)) {
            out << indent << key << ": [";
            for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << scalar(v[k]);
            out << "]\n";
        } else if (v.is_array() && !v.empty() &&
                   std::all_of(v.begin(), v.end(), [](const Json& e) { return is_scalar_array(e); })) {
            out << indent << key << ":\n";
            for (const auto& row : v) {
                out << indent << "  [";
                for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << scalar(row[k]);
                out << "]\n";
            }
        } else {
            out << indent << key << ":\n";
            render(v, indent + "  ", out);
        }
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream out;
    render(report, "", out);
    return out.str();
}

}  // namespace brieskorn
