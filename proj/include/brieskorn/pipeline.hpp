#pragma once

#include "brieskorn/connection.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/jacobi.hpp"
#include "brieskorn/parser.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn {

using Json = nlohmann::ordered_json;

/// A job: f, its deformation terms g_j (F = f + sum x_j g_j) and run flags.
struct JobSpec {
    Mode mode = Mode::polynomial;
    std::size_t n = 0;
    VariableNames names;
    std::string f;
    std::vector<std::string> deformation;
    bool assume_nondegenerate = false;
    bool gc_include_R0 = true;
    std::size_t budget = 100000;

    std::size_t r() const { return deformation.size(); }

    /// Throws UsageError on malformed input (including parse errors).
    static JobSpec from_json(const Json& j);
    static JobSpec load(const std::string& path);
    Json to_json() const;

    LaurentPoly base() const;
    std::vector<LaurentPoly> terms() const;
    LaurentPoly deformed() const;
};

/// Invalid job files and arguments (exit code 1).
class UsageError : public Error {
public:
    using Error::Error;
};

enum class Command { analyze, milnor, spectrum, connection, check, divide };
Command parse_command(const std::string& name);
std::string to_string(Command c);

/// Runs one pipeline prefix. `h` is required for divide. Throws library errors.
Json run_command(Command command, const JobSpec& spec, const std::optional<std::string>& h = std::nullopt);
Json run_analyze(const JobSpec& spec);

/// 0 success, 1 usage, 2 hypothesis violation, 3 budget exhausted.
int exit_code_for(const std::exception& e);
Json error_object(const std::exception& e);

/// Human-readable rendering of a report.
std::string render_text(const Json& report);

}  // namespace brieskorn
