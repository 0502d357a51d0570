#pragma once

#include "zdense/linalg.hpp"
#include "zdense/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>

namespace zdense::cli {

enum class Mode {
    Weyl,      // two-word Galois certificates
    Adjoint,   // cyclotomic check + adjoint irreducibility
    GaloisOnly // S_n / hyperoctahedral certification of one polynomial
};

std::string_view to_string(Mode m);
/// "weyl", "adjoint" or "galois"; throws InvalidArgument otherwise.
Mode parse_mode(std::string_view name);

struct RunConfig {
    std::filesystem::path input_path;
    Mode mode = Mode::Weyl;
    double epsilon = 1e-6;
    std::uint64_t seed = 0;
    double word_constant = 10.0;
    unsigned prime_bits_low = 20;
    unsigned prime_bits_high = 21;
    unsigned trials = 1;

    /// Throws InvalidArgument on an out-of-range field.
    void check() const;
};

using Input = std::variant<GeneratorSet, IntPolynomial>;

/// Matrix input:     {"group": "SL"|"Sp", "dim": n, "generators": [[[row], ...], ...]}
/// Polynomial input: {"poly": [c0, c1, ...]}, or plain whitespace-separated
/// integers, constant term first. Integers may be JSON numbers or decimal
/// strings. Errors carry the offending field; validation errors pass through.
Input parse_input_text(const std::string& text);
Input parse_input(const std::filesystem::path& path);

enum ExitCode : int { kDense = 0, kNotDense = 1, kInputError = 2 };

struct RunOutcome {
    int exit_code = kInputError;
    /// Empty on input errors.
    nlohmann::json report;
    /// One-paragraph human-readable summary or diagnostic.
    std::string summary;
};

/// Parses the input, runs the selected decider `trials` times with derived
/// seeds, and assembles the report. Never throws for bad input: any domain
/// error becomes exit code 2 with a diagnostic in `summary`.
RunOutcome run(const RunConfig& config);

/// Seed of trial `index`; trial 0 uses the configured seed unchanged.
std::uint64_t trial_seed(std::uint64_t seed, unsigned index);

/// Removes the wall-clock fields of a report (everything else is a function
/// of the configuration and input).
nlohmann::json strip_timings(nlohmann::json report);

} // namespace zdense::cli
