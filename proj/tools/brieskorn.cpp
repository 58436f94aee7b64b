#include "brieskorn/errors.hpp"
#include "brieskorn/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace brieskorn;

int main(int argc, char** argv) {
    CLI::App app{"Brieskorn lattice, Birkhoff normal form and Frobenius-hypothesis checks for Laurent polynomials"};
    app.require_subcommand(1, 1);

    std::string jobfile, h, format = "json";
    bool assume_nondegenerate = false, gc_no_r0 = false;
    std::size_t budget = 0;

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"analyze", "full pipeline report"},
        {"milnor", "Milnor number and weight-adapted basis"},
        {"spectrum", "spectrum at infinity"},
        {"connection", "connection matrices in the Birkhoff normal form"},
        {"check", "EC/IC/GC conditions and a suggested deformation"},
        {"divide", "certified division of --h by the Jacobian generators"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->set_help_flag("--help", "print this help and exit");
        sub->add_option("jobfile", jobfile, "job description (JSON)")->required();
        sub->add_flag("--assume-nondegenerate", assume_nondegenerate, "skip the nondegeneracy check");
        sub->add_option("--budget", budget, "step budget for Groebner computations")->check(CLI::PositiveNumber);
        sub->add_flag("--gc-no-r0", gc_no_r0, "generation condition without R0");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
        if (std::string(s.name) == "divide") sub->add_option("--h", h, "dividend expression")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Json out;
    int code = 0;
    try {
        JobSpec spec = JobSpec::load(jobfile);
        if (assume_nondegenerate) spec.assume_nondegenerate = true;
        if (gc_no_r0) spec.gc_include_R0 = false;
        if (budget > 0) spec.budget = budget;
        std::optional<std::string> dividend;
        if (command == "divide") dividend = h;
        out = run_command(parse_command(command), spec, dividend);
    } catch (const std::exception& e) {
        out = error_object(e);
        code = exit_code_for(e);
    }
    std::ostream& stream = code == 0 ? std::cout : std::cerr;
    if (format == "text") stream << render_text(out);
    else stream << out.dump(2) << "\n";
    return code;
}
