#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "limitlab/rational.hpp"

namespace limitlab::cli {

enum class Format { kJson, kCsv };

/// Exit statuses of `run`.
inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kConfigError = 2;

struct RunConfig {
  std::string command;
  std::optional<std::string> input;
  std::optional<std::string> output;
  Format format = Format::kJson;

  std::optional<unsigned> k;
  std::optional<Rational> epsilon;
  std::optional<Rational> epsilon_prime;
  std::optional<std::size_t> c;
  std::optional<std::size_t> lmax;
  std::optional<std::size_t> nmin;
  std::optional<std::size_t> nmax;
  std::optional<std::size_t> horizon;
  std::optional<std::size_t> witness_length;
  std::optional<std::vector<Rational>> grid;
  std::optional<std::string> omega;
  bool family = false;  // deficiency: emit the D_n open family instead of the report
};

const std::vector<std::string>& commands();

/// Runs one command. Results go to config.output when set, else to `out`;
/// diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11). Returns nullopt after printing help; throws
/// ParseError on bad flags or values.
std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out);

}  // namespace limitlab::cli
