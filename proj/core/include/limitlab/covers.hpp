#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "limitlab/clopen_set.hpp"
#include "limitlab/families.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {

// Every construction below follows the same scheme. A working copy of the
// family is kept; candidate operations "apply X to every member with index
// n >= N" are tried in a fixed order and committed only when every member
// still satisfies the per-index constraint afterwards. Committed operations
// stay in the working family and constrain later attempts.

struct SetOperation {
  std::size_t start = 0;  // N
  BinaryString element;   // u
  friend bool operator==(const SetOperation&, const SetOperation&) = default;
};

struct CoverSet {
  ElementSet elements;  // every u taking part in an accepted operation
  std::vector<SetOperation> accepted;
};

/// Tries (N, u) for N = 0..nmax (default: last breakpoint) and u in universe
/// order. Result contains liminf_family(p) and has fewer than 2^k elements.
/// Throws ValidationError for an invalid presentation.
CoverSet cover_sets(const SetFamilyPresentation& p,
                    std::optional<std::size_t> nmax = std::nullopt);

/// Re-applies the log to a pristine working family; true iff every logged
/// operation is acceptable at its turn.
bool replay(const SetFamilyPresentation& p, std::span<const SetOperation> log);

struct IncreaseOperation {
  Rational target;        // r
  std::size_t start = 0;  // N
  BinaryString element;   // u
  friend bool operator==(const IncreaseOperation&, const IncreaseOperation&) = default;
};

struct CoverSemimeasure {
  ValueTable values;
  std::vector<IncreaseOperation> accepted;
  bool tree_mode = false;
};

/// Tries (r, N, u) increases for N ascending, u in shortlex order over the
/// event elements, r ascending over the grid. Flat mode: values(u) is the
/// largest accepted r. Tree mode: each increase also raises the prefixes of u
/// as needed, and values hold the working tail values of u and its prefixes
/// as of the last accepted operation touching them.
///
/// The grid must lie in [0,1] and contain every event value (ConfigError
/// otherwise).
CoverSemimeasure cover_semimeasure(const SemimeasureFamilyPresentation& p,
                                   std::span<const Rational> grid,
                                   std::optional<std::size_t> nmax = std::nullopt);

bool replay(const SemimeasureFamilyPresentation& p, std::span<const IncreaseOperation> log);

/// ceil(-log2 values(u)) for every u with a positive value.
std::map<BinaryString, long long> semimeasure_to_complexity(const CoverSemimeasure& cover);

struct IntervalOperation {
  BinaryString interval;  // x
  std::size_t start = 0;  // N
  friend bool operator==(const IntervalOperation&, const IntervalOperation&) = default;
};

struct SlackEntry {
  std::size_t index = 0;  // i
  Rational budget;        // (eps' - eps) / 2^{i+1}
  Rational consumed;      // measure added on top of mu(F_i)
};

struct CoverOpenSet {
  ClopenSet set;  // W
  std::vector<IntervalOperation> accepted;
  std::optional<std::vector<SlackEntry>> slack;
};

/// Tries (x, N) for N ascending and x in shortlex order up to length lmax.
/// mu(W) <= epsilon and W contains liminf_family(p).
CoverOpenSet cover_open(const OpenFamilyPresentation& p, std::size_t lmax,
                        std::optional<std::size_t> nmax = std::nullopt);

bool replay(const OpenFamilyPresentation& p, std::span<const IntervalOperation> log);

/// F_0 = intersection of all U_i; F_{i+1} = (intersection of U_j, j > i) \ U_i,
/// for i up to the last breakpoint. Requires granularity.
std::vector<ClopenSet> decompose_liminf(const OpenFamilyPresentation& p);

/// Covers each F_i within mu(F_i) + (eps' - eps)/2^{i+1}; at this scale every
/// F_i is clopen, so the cover is F_i itself and the budget is recorded as
/// unconsumed. Throws ConfigError unless epsilon_prime > p.epsilon.
CoverOpenSet cover_open_strong(const OpenFamilyPresentation& p, const Rational& epsilon_prime);

}  // namespace limitlab
