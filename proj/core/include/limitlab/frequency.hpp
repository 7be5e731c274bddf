#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "limitlab/families.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {

/// f(i) for a partial function; nullopt marks an undefined value.
using TraceValue = std::optional<unsigned long long>;

/// f(0), f(1), ... given as a finite prefix followed by a repeated period.
struct PartialTrace {
  std::vector<TraceValue> prefix;
  std::vector<TraceValue> period;  // nonempty

  [[nodiscard]] TraceValue at(std::size_t i) const;
};

using FrequencyTable = std::map<unsigned long long, Rational>;

/// liminf_n #{i < n : f(i) = x} / n, exactly; zero frequencies are omitted.
/// Throws ValidationError for an empty period.
FrequencyTable limit_frequency(const PartialTrace& trace);

/// #{i < n : f(i) = x} / n for n >= 1.
FrequencyTable empirical_frequency(const PartialTrace& trace, std::size_t n);

/// Largest grid value <= v, or 0 when none is.
Rational grid_floor(const Rational& v, std::span<const Rational> grid);

/// Semimeasure family whose members are the grid-floored empirical
/// frequencies at n = 1..nmax-1 (Single events) and the grid-floored limit
/// frequencies from nmax on (Tail events). Values x are encoded as binary
/// numerals. Requires nmax to be a multiple of the period length and at
/// least |prefix| + |period|.
SemimeasureFamilyPresentation trace_to_family(const PartialTrace& trace, std::size_t nmax,
                                              std::span<const Rational> grid);

}  // namespace limitlab
