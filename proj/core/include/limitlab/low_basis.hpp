#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "limitlab/binary_string.hpp"
#include "limitlab/clopen_set.hpp"

namespace limitlab {

struct ForcingQuery {
  std::string label;
  ClopenSet region;  // T(M, x): oracles on which the computation halts
};

struct ForcingInstance {
  ClopenSet initial;  // U, must not be the whole space
  std::vector<ForcingQuery> queries;
};

enum class Verdict { kHalts, kDiverges };

struct ForcingStep {
  std::string label;
  Verdict verdict = Verdict::kDiverges;
  ClopenSet before;  // U before this query
};

struct ForcingOutcome {
  std::vector<ForcingStep> steps;
  ClopenSet final_set;
  BinaryString witness_prefix;
};

/// Decides queries in order. If U together with T covers the space, every
/// sequence outside U halts (U unchanged); otherwise U grows by T and no
/// sequence outside the new U halts. The witness is the leftmost word of the
/// requested length avoiding the final U.
///
/// Throws ValidationError if the initial set is full, ConfigError if
/// witness_length is below the deepest interval of the instance.
ForcingOutcome force(const ForcingInstance& instance, std::size_t witness_length);

std::string to_string(Verdict verdict);

}  // namespace limitlab
