#include "limitlab/low_basis.hpp"

#include <algorithm>

#include "limitlab/errors.hpp"

namespace limitlab {

std::string to_string(Verdict verdict) {
  return verdict == Verdict::kHalts ? "halts" : "diverges";
}

ForcingOutcome force(const ForcingInstance& instance, std::size_t witness_length) {
  if (instance.initial.is_full()) {
    throw ValidationError("initial set covers the whole space; its complement is empty");
  }
  std::size_t depth = instance.initial.max_depth();
  for (const auto& q : instance.queries) depth = std::max(depth, q.region.max_depth());
  if (witness_length < depth) {
    throw ConfigError("witness length " + std::to_string(witness_length) +
                      " is below the interval depth " + std::to_string(depth));
  }

  ForcingOutcome outcome;
  ClopenSet current = instance.initial;
  for (const auto& q : instance.queries) {
    ClopenSet extended = set_union(current, q.region);
    ForcingStep step{q.label, Verdict::kDiverges, current};
    if (extended.is_full()) {
      step.verdict = Verdict::kHalts;
    } else {
      current = std::move(extended);
    }
    outcome.steps.push_back(std::move(step));
  }
  outcome.final_set = current;
  // Non-full and witness_length >= depth, so a free word of that length exists.
  outcome.witness_prefix = *leftmost_avoiding(current, witness_length);
  return outcome;
}

}  // namespace limitlab
