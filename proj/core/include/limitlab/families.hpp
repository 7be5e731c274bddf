#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "limitlab/binary_string.hpp"
#include "limitlab/clopen_set.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {

/// Which indices an event applies to: exactly one (Single) or a whole ray
/// [start, infinity) (Tail).
struct IndexSpec {
  enum class Kind { kSingle, kTail };

  Kind kind = Kind::kSingle;
  std::size_t index = 0;

  static IndexSpec single(std::size_t n) { return {Kind::kSingle, n}; }
  static IndexSpec tail(std::size_t start) { return {Kind::kTail, start}; }

  [[nodiscard]] bool applies_to(std::size_t n) const noexcept {
    return kind == Kind::kSingle ? n == index : n >= index;
  }
  friend bool operator==(const IndexSpec&, const IndexSpec&) = default;
};

using ElementSet = std::set<BinaryString>;
/// Pointwise values of a semimeasure; absent keys are 0, stored values > 0.
using ValueTable = std::map<BinaryString, Rational>;

struct SetEvent {
  std::size_t stage = 0;
  IndexSpec spec;
  BinaryString element;
};

/// U_n = elements of events covering n; each U_n must have fewer than 2^k
/// elements.
struct SetFamilyPresentation {
  unsigned k = 0;
  std::vector<BinaryString> universe;
  std::vector<SetEvent> events;
};

struct SemimeasureEvent {
  std::size_t stage = 0;
  IndexSpec spec;
  BinaryString element;
  Rational value;
};

/// m_n(x) = max value over events covering n at x. In tree mode m_n is read
/// as the least tree semimeasure dominating those values (each prefix raised
/// to at least its children's sum).
struct SemimeasureFamilyPresentation {
  std::vector<SemimeasureEvent> events;
  bool tree_mode = false;
};

struct OpenEvent {
  std::size_t stage = 0;
  IndexSpec spec;
  BinaryString interval;
};

/// Bound c on interval length for indices >= n (step function over the
/// listed entries).
struct GranularityEntry {
  std::size_t n = 0;
  std::size_t c = 0;
  friend bool operator==(const GranularityEntry&, const GranularityEntry&) = default;
};

struct OpenFamilyPresentation {
  Rational epsilon;
  std::vector<OpenEvent> events;
  std::optional<std::vector<GranularityEntry>> granularity;

  /// Granularity bound in force at index n, if any.
  [[nodiscard]] std::optional<std::size_t> granularity_at(std::size_t n) const;
};

struct Violation {
  std::optional<std::size_t> index;  // family index n, when applicable
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  [[nodiscard]] std::string summary() const;
};

// Invariant checks. Per-index invariants are evaluated at breakpoints only.
ValidationReport validate(const SetFamilyPresentation& p);
ValidationReport validate(const SemimeasureFamilyPresentation& p);
ValidationReport validate(const OpenFamilyPresentation& p);

/// Throws ValidationError with the report summary if p is invalid.
template <class Presentation>
void require_valid(const Presentation& p);

// Per-index invariant at a given family member; nullopt when it holds.
std::optional<std::string> capacity_violation(const ElementSet& members, unsigned k);
std::optional<std::string> semimeasure_violation(const ValueTable& values, bool tree_mode);
std::optional<std::string> measure_violation(const ClopenSet& member, const Rational& epsilon);

/// Least tree semimeasure dominating the given values (parents raised to
/// the sum of their children when necessary).
ValueTable tree_closure(const ValueTable& values);
bool is_tree_semimeasure(const ValueTable& values);
Rational total_mass(const ValueTable& values);

// Family member at index n, using all events or only those with stage <= stage.
ElementSet family_at(const SetFamilyPresentation& p, std::size_t n,
                     std::optional<std::size_t> stage = std::nullopt);
ValueTable family_at(const SemimeasureFamilyPresentation& p, std::size_t n,
                     std::optional<std::size_t> stage = std::nullopt);
ClopenSet family_at(const OpenFamilyPresentation& p, std::size_t n,
                    std::optional<std::size_t> stage = std::nullopt);

/// Sorted indices at which the family may change: 0, every Single index n
/// and n + 1, every Tail start. The family is constant from the last one on.
std::vector<std::size_t> breakpoints(const std::vector<IndexSpec>& specs);
std::vector<std::size_t> breakpoints(const SetFamilyPresentation& p);
std::vector<std::size_t> breakpoints(const SemimeasureFamilyPresentation& p);
std::vector<std::size_t> breakpoints(const OpenFamilyPresentation& p);

/// Exact liminf over n: the family member at the last breakpoint.
ElementSet liminf_family(const SetFamilyPresentation& p);
ValueTable liminf_family(const SemimeasureFamilyPresentation& p);
ClopenSet liminf_family(const OpenFamilyPresentation& p);

}  // namespace limitlab
