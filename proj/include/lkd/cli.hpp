#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "lkd/intersect.hpp"

namespace lkd {

/// Malformed or inconsistent input; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Tsv, Json };

struct RunConfig {
    FieldSpec field;
    std::variant<SubspaceProblem, TwoTermData> problem;
    Window window{-4, 4, -8, 8};
    std::string command;
    std::uint64_t seed = 1;
    /// Named object for `cohomology` and `kappa`.
    std::string object;
    /// Random instances for `roundtrip`.
    std::size_t count = 10;
    /// Largest rank for the classical complexes of `koszul-lemmas`.
    std::size_t max_rank = 3;
    OutputFormat format = OutputFormat::Tsv;
};

/// Parses and validates a JSON run description. Throws ConfigError.
RunConfig parse_config(std::string_view text);
/// "imin,imax,jmin,jmax" or, for a single cell, "i,j".
Window parse_window(std::string_view text);
Window parse_cell(std::string_view text);
/// Checks the command name and window after flags have been applied. Throws ConfigError.
void validate(const RunConfig& c);

/// The two-term complex of the problem; build_X for subspace problems.
TwoTermData two_term_of(const RunConfig& c);

/// Runs the command and writes the report. Returns 0 when every check passes and 1 otherwise.
int run(const RunConfig& c, std::ostream& out);

}  // namespace lkd
