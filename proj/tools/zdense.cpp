// zdense: decide Zariski density of integer matrix groups, or certify a
// generic Galois group for one polynomial.
//
//   zdense [--mode weyl|adjoint|galois] [--epsilon E] [--seed S]
//          [--word-constant C] [--prime-bits LO HI] [--trials K]
//          [--report PATH] [--quiet] INPUT
//
// Exit codes: 0 dense / generic, 1 not dense / not generic, 2 input error.

#include "zdense/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <vector>

int main(int argc, char** argv)
{
    using namespace zdense::cli;

    RunConfig config;
    std::string mode = "weyl";
    std::vector<unsigned> prime_bits { config.prime_bits_low, config.prime_bits_high };
    std::string report_path;
    bool quiet = false;

    CLI::App app { "Zariski density and generic Galois group certification" };
    app.add_option("input", config.input_path, "JSON generator set or polynomial file")->required();
    app.add_option("--mode", mode, "weyl (Weyl-group Galois test), adjoint (adjoint irreducibility) or galois")
        ->check(CLI::IsMember({ "weyl", "adjoint", "galois" }))
        ->capture_default_str();
    app.add_option("--epsilon", config.epsilon, "bound on the probability of a wrong NO")->capture_default_str();
    app.add_option("--seed", config.seed, "random seed")->capture_default_str();
    app.add_option("--word-constant", config.word_constant, "word length is max(16, ceil(C ln(1/eps)))")
        ->capture_default_str();
    app.add_option("--prime-bits", prime_bits, "primes are drawn from [2^LO, 2^HI)")->expected(2);
    app.add_option("--trials", config.trials, "independent repetitions with derived seeds")->capture_default_str();
    app.add_option("--report", report_path, "also write the JSON report to this file");
    app.add_flag("--quiet", quiet, "no stdout report and no stderr summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }
    config.mode = parse_mode(mode);
    config.prime_bits_low = prime_bits[0];
    config.prime_bits_high = prime_bits[1];

    const RunOutcome outcome = run(config);
    if (!quiet)
        std::cerr << outcome.summary << '\n';
    if (outcome.exit_code == kInputError)
        return outcome.exit_code;

    const std::string doc = outcome.report.dump(2);
    if (!quiet)
        std::cout << doc << '\n';
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write report to '" << report_path << "'\n";
            return kInputError;
        }
        out << doc << '\n';
    }
    return outcome.exit_code;
}
