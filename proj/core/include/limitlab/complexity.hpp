#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "limitlab/binary_string.hpp"
#include "limitlab/families.hpp"

namespace limitlab {

/// Reference description method M0 with side information `condition`:
///   "00" + q            -> q
///   "01" + q, q != ""   -> the word of length `condition` repeating q
/// Every other program has no output.
std::optional<BinaryString> run_m0(const BinaryString& program, std::size_t condition);

/// Length of the shortest M0 program printing x given `condition`.
/// Never exceeds |x| + 2.
std::size_t exact_complexity(const BinaryString& x, std::size_t condition);

/// Finite table of description lengths. In conditional mode entries are keyed
/// by (x, n) and the unconditional view C(x) reads the entry at n = |x|; in
/// plain mode the condition is ignored.
class ComplexityTable {
 public:
  enum class Mode { kConditional, kPlain };

  explicit ComplexityTable(Mode mode = Mode::kConditional) : mode_(mode) {}

  /// M0 values for every x with |x| <= max_length, at condition |x| or, with
  /// all_conditions, at every condition 0..max_length.
  static ComplexityTable from_m0(std::size_t max_length, bool all_conditions = false);

  [[nodiscard]] Mode mode() const noexcept { return mode_; }
  void set(const BinaryString& x, std::size_t condition, std::size_t value);
  [[nodiscard]] std::optional<std::size_t> at(const BinaryString& x, std::size_t condition) const;
  /// C(x) as used by deficiencies.
  [[nodiscard]] std::optional<std::size_t> complexity(const BinaryString& x) const;
  /// Throws ValidationError naming x when the entry is missing.
  [[nodiscard]] std::size_t require(const BinaryString& x) const;

  /// First violation of #{u : C(u|n) < m} < 2^m, checked per condition.
  [[nodiscard]] std::optional<std::string> counting_bound_violation() const;

  using Key = std::pair<BinaryString, std::size_t>;
  [[nodiscard]] const std::map<Key, std::size_t>& entries() const noexcept { return entries_; }

 private:
  Key key(const BinaryString& x, std::size_t condition) const {
    return {x, mode_ == Mode::kPlain ? 0 : condition};
  }

  Mode mode_;
  std::map<Key, std::size_t> entries_;
};

struct DeficiencyRow {
  BinaryString prefix;
  long long deficiency = 0;           // |x| - C(x)
  long long extension_deficiency = 0; // min over extensions y, |y| <= horizon
  bool exceeds_c = false;             // extension_deficiency > c
};

/// The extension deficiency is an infimum truncated at `horizon`.
struct DeficiencyReport {
  std::vector<DeficiencyRow> rows;
  std::size_t horizon = 0;
  std::size_t c = 0;
};

/// Rows for every prefix of omega_prefix. Throws ValidationError on a table
/// failing the counting bound or missing an entry within the horizon, and
/// ConfigError if horizon < |omega_prefix|.
DeficiencyReport deficiency_report(const ComplexityTable& table, const BinaryString& omega_prefix,
                                   std::size_t horizon, std::size_t c);

/// Extension deficiency of a single string (same truncation as above).
long long extension_deficiency(const ComplexityTable& table, const BinaryString& x,
                               std::size_t horizon);

/// Open family U_n generated by D_n = {u : |u| = n, C(u) < n - c} for
/// n in [nmin, nmax]: Single(n) events below nmax, Tail(nmax) events for
/// D_nmax, granularity c(n) = n and epsilon = 2^{-c}.
OpenFamilyPresentation deficiency_family(const ComplexityTable& table, std::size_t c,
                                         std::size_t nmin, std::size_t nmax);

struct RandomnessReport {
  std::vector<std::size_t> qualifying;  // n with C(omega[0..n)) >= n - c
  std::size_t c = 0;
  [[nodiscard]] std::optional<std::size_t> largest() const {
    if (qualifying.empty()) return std::nullopt;
    return qualifying.back();
  }
};

RandomnessReport randomness_report(const ComplexityTable& table, const BinaryString& omega_prefix,
                                   std::size_t c);

struct OrdinalCode {
  std::size_t n = 0;
  BinaryString word;
  std::size_t ordinal = 0;
  std::size_t code_length = 0;
};

struct ComplexityBounds {
  std::vector<OrdinalCode> codes;
  std::map<BinaryString, std::size_t> table;  // smallest code length per word
};

/// Ordinal coding of the length-n words covered by U_n at every breakpoint n.
/// Requires epsilon <= 2^{-c} and granularity c(n) <= n wherever events apply.
ComplexityBounds cover_to_complexity_bounds(const OpenFamilyPresentation& p, std::size_t c);

}  // namespace limitlab
