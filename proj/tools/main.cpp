#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "zhualg/errors.hpp"
#include "zhualg/reports.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitInput = 2;

void add_common(CLI::App* cmd, zhualg::RunConfig& cfg, bool with_sweep, bool with_fixture) {
    if (with_sweep)
        cmd->add_option("--sweep", cfg.sweep,
                        "parameter ranges, e.g. \"T=1..4,l=0..2,wu=0..3\"");
    if (with_fixture)
        cmd->add_option("--fixture", cfg.fixture_path, "fixture JSON file")->required();
    cmd->add_option("--out", cfg.out_path, "report path (default: stdout)");
    cmd->add_option("--seed", cfg.seed, "seed for sampling and numeric retries");
    cmd->add_option("--trunc", cfg.trunc, "working series order K (default: M + 4l + 40)");
    cmd->add_option("--jobs", cfg.jobs, "number of worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--bench", cfg.bench, "record wall-clock timings in the report");
    cmd->add_flag("--inject-singular", cfg.inject_singular,
                  "test hook: corrupt the first linear system")
        ->group("");  // hidden
}

int dispatch(const std::string& name, const zhualg::RunConfig& cfg) {
    zhualg::RunResult res;
    if (name == "coeffs")
        res = zhualg::run_coeffs(cfg);
    else if (name == "product")
        res = zhualg::run_product(cfg);
    else if (name == "detcheck")
        res = zhualg::run_detcheck(cfg);
    else
        res = zhualg::run_double(cfg);
    zhualg::emit_report(cfg, res.report);
    if (!res.ok) {
        std::cerr << name << ": mathematical checks failed (see report)\n";
        return kExitMath;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification runs: correction coefficients, unified products,\n"
                 "binomial determinant identities, and twisted double algebras."};
    app.require_subcommand(1);

    zhualg::RunConfig cfg;
    add_common(app.add_subcommand("coeffs", "solve the correction-vector systems over a sweep"),
               cfg, true, false);
    add_common(app.add_subcommand("product",
                                  "unified product coefficients and congruence witnesses"),
               cfg, true, false);
    add_common(app.add_subcommand("detcheck",
                                  "determinant identities: closed form, specialization, chain"),
               cfg, true, false);
    add_common(app.add_subcommand("double",
                                  "build and analyze the twisted double of a fixture"),
               cfg, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), cfg);
    } catch (const zhualg::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const zhualg::MathError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
}
