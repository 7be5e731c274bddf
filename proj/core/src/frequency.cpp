#include "limitlab/frequency.hpp"

#include <algorithm>

#include "limitlab/errors.hpp"

namespace limitlab {

namespace {

void require_period(const PartialTrace& trace) {
  if (trace.period.empty()) throw ValidationError("trace period must be nonempty");
}

FrequencyTable counts_to_frequencies(const std::map<unsigned long long, std::size_t>& counts,
                                     std::size_t total) {
  FrequencyTable table;
  for (const auto& [x, count] : counts) {
    if (count != 0) table.emplace(x, Rational(count, total));
  }
  return table;
}

}  // namespace

TraceValue PartialTrace::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  return period[(i - prefix.size()) % period.size()];
}

FrequencyTable limit_frequency(const PartialTrace& trace) {
  require_period(trace);
  std::map<unsigned long long, std::size_t> counts;
  for (const auto& v : trace.period) {
    if (v) ++counts[*v];
  }
  return counts_to_frequencies(counts, trace.period.size());
}

FrequencyTable empirical_frequency(const PartialTrace& trace, std::size_t n) {
  require_period(trace);
  if (n == 0) throw ConfigError("empirical frequency needs n >= 1");
  std::map<unsigned long long, std::size_t> counts;
  for (std::size_t i = 0; i < n; ++i) {
    if (auto v = trace.at(i)) ++counts[*v];
  }
  return counts_to_frequencies(counts, n);
}

Rational grid_floor(const Rational& v, std::span<const Rational> grid) {
  Rational best = 0;
  for (const auto& g : grid) {
    if (g <= v && g > best) best = g;
  }
  return best;
}

SemimeasureFamilyPresentation trace_to_family(const PartialTrace& trace, std::size_t nmax,
                                              std::span<const Rational> grid) {
  require_period(trace);
  const std::size_t period = trace.period.size();
  if (nmax % period != 0 || nmax < trace.prefix.size() + period) {
    throw ConfigError("Nmax = " + std::to_string(nmax) +
                      " must be a multiple of the period length and at least |prefix| + |period|");
  }
  if (grid.empty()) throw ConfigError("grid is empty");
  for (const auto& g : grid) {
    if (g < 0 || g > 1) throw ConfigError("grid value " + to_string(g) + " outside [0,1]");
  }

  SemimeasureFamilyPresentation p;
  auto emit = [&](std::size_t stage, IndexSpec spec, const FrequencyTable& frequencies) {
    for (const auto& [x, q] : frequencies) {
      const Rational floor = grid_floor(q, grid);
      if (floor > 0) p.events.push_back({stage, spec, BinaryString::of_natural(x), floor});
    }
  };
  for (std::size_t n = 1; n < nmax; ++n) {
    emit(n, IndexSpec::single(n), empirical_frequency(trace, n));
  }
  emit(nmax, IndexSpec::tail(nmax), limit_frequency(trace));
  return p;
}

}  // namespace limitlab
