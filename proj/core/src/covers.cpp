#include "limitlab/covers.hpp"

#include <algorithm>
#include <utility>

#include "limitlab/errors.hpp"

namespace limitlab {

namespace {

/// Family over the naturals stored as constant runs [start_i, start_{i+1});
/// the last run extends to infinity.
template <class Value>
class SegmentedFamily {
 public:
  template <class Presentation>
  explicit SegmentedFamily(const Presentation& p) {
    for (std::size_t n : breakpoints(p)) runs_.emplace_back(n, family_at(p, n));
  }

  /// Applies `transform` to every member with index >= start if `acceptable`
  /// holds for all transformed members; otherwise leaves the family as is.
  template <class Transform, class Check>
  bool try_apply(std::size_t start, Transform&& transform, Check&& acceptable) {
    const std::size_t first = split(start);
    std::vector<Value> updated;
    updated.reserve(runs_.size() - first);
    for (std::size_t i = first; i < runs_.size(); ++i) {
      Value next = transform(runs_[i].second);
      if (!acceptable(next)) return false;
      updated.push_back(std::move(next));
    }
    for (std::size_t i = first; i < runs_.size(); ++i) {
      runs_[i].second = std::move(updated[i - first]);
    }
    return true;
  }

  [[nodiscard]] const Value& eventual() const { return runs_.back().second; }

 private:
  std::size_t split(std::size_t start) {
    auto it = std::upper_bound(runs_.begin(), runs_.end(), start,
                               [](std::size_t n, const auto& run) { return n < run.first; });
    // runs_ starts at 0, so it != begin().
    auto containing = std::prev(it);
    if (containing->first == start) return static_cast<std::size_t>(containing - runs_.begin());
    auto inserted = runs_.insert(it, {start, containing->second});
    return static_cast<std::size_t>(inserted - runs_.begin());
  }

  std::vector<std::pair<std::size_t, Value>> runs_;
};

std::size_t default_nmax(const std::vector<std::size_t>& points,
                         std::optional<std::size_t> nmax) {
  return nmax.value_or(points.back());
}

// --- sets -----------------------------------------------------------------

bool try_set_operation(SegmentedFamily<ElementSet>& working, const SetOperation& op,
                       unsigned k) {
  return working.try_apply(
      op.start,
      [&](const ElementSet& members) {
        ElementSet next = members;
        next.insert(op.element);
        return next;
      },
      [&](const ElementSet& next) { return !capacity_violation(next, k); });
}

// --- semimeasures -----------------------------------------------------------

ValueTable raised(const ValueTable& values, const BinaryString& u, const Rational& r,
                  bool tree_mode) {
  ValueTable next = values;
  auto [it, inserted] = next.try_emplace(u, r);
  if (!inserted && it->second < r) it->second = r;
  return tree_mode ? tree_closure(next) : next;
}

bool try_increase(SegmentedFamily<ValueTable>& working, const IncreaseOperation& op,
                  bool tree_mode) {
  return working.try_apply(
      op.start, [&](const ValueTable& m) { return raised(m, op.element, op.target, tree_mode); },
      [&](const ValueTable& m) { return !semimeasure_violation(m, tree_mode); });
}

// --- open sets ------------------------------------------------------------

bool try_interval(SegmentedFamily<ClopenSet>& working, const IntervalOperation& op,
                  const Rational& epsilon) {
  const ClopenSet added = ClopenSet::interval(op.interval);
  return working.try_apply(
      op.start, [&](const ClopenSet& u) { return set_union(u, added); },
      [&](const ClopenSet& u) { return !measure_violation(u, epsilon); });
}

std::vector<BinaryString> strings_up_to(std::size_t lmax) {
  std::vector<BinaryString> out;
  for (std::size_t len = 0; len <= lmax; ++len) {
    auto level = BinaryString::all_of_length(len);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

CoverSet cover_sets(const SetFamilyPresentation& p, std::optional<std::size_t> nmax) {
  require_valid(p);
  SegmentedFamily<ElementSet> working(p);
  CoverSet cover;
  const std::size_t last = default_nmax(breakpoints(p), nmax);
  for (std::size_t start = 0; start <= last; ++start) {
    for (const auto& u : p.universe) {
      SetOperation op{start, u};
      if (try_set_operation(working, op, p.k)) {
        cover.elements.insert(u);
        cover.accepted.push_back(std::move(op));
      }
    }
  }
  return cover;
}

bool replay(const SetFamilyPresentation& p, std::span<const SetOperation> log) {
  require_valid(p);
  SegmentedFamily<ElementSet> working(p);
  return std::all_of(log.begin(), log.end(), [&](const SetOperation& op) {
    return try_set_operation(working, op, p.k);
  });
}

CoverSemimeasure cover_semimeasure(const SemimeasureFamilyPresentation& p,
                                   std::span<const Rational> grid,
                                   std::optional<std::size_t> nmax) {
  require_valid(p);
  std::vector<Rational> levels(grid.begin(), grid.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (const auto& r : levels) {
    if (r < 0 || r > 1) throw ConfigError("grid value " + to_string(r) + " outside [0,1]");
  }
  std::set<BinaryString> elements;
  for (const auto& e : p.events) {
    if (!std::binary_search(levels.begin(), levels.end(), e.value)) {
      throw ConfigError("grid is missing event value " + to_string(e.value));
    }
    elements.insert(e.element);
  }

  SegmentedFamily<ValueTable> working(p);
  CoverSemimeasure cover;
  cover.tree_mode = p.tree_mode;
  const std::size_t last = default_nmax(breakpoints(p), nmax);
  for (std::size_t start = 0; start <= last; ++start) {
    for (const auto& u : elements) {
      for (const auto& r : levels) {
        if (r <= 0) continue;
        IncreaseOperation op{r, start, u};
        // A rejected level rules out every higher level for this (N, u).
        if (!try_increase(working, op, p.tree_mode)) break;
        if (p.tree_mode) {
          const ValueTable& tail = working.eventual();
          for (std::size_t len = 0; len <= u.size(); ++len) {
            const BinaryString y = u.prefix(len);
            if (auto it = tail.find(y); it != tail.end()) cover.values[y] = it->second;
          }
        } else {
          auto [it, inserted] = cover.values.try_emplace(u, r);
          if (!inserted && it->second < r) it->second = r;
        }
        cover.accepted.push_back(std::move(op));
      }
    }
  }
  return cover;
}

bool replay(const SemimeasureFamilyPresentation& p, std::span<const IncreaseOperation> log) {
  require_valid(p);
  SegmentedFamily<ValueTable> working(p);
  return std::all_of(log.begin(), log.end(), [&](const IncreaseOperation& op) {
    return try_increase(working, op, p.tree_mode);
  });
}

std::map<BinaryString, long long> semimeasure_to_complexity(const CoverSemimeasure& cover) {
  std::map<BinaryString, long long> lengths;
  for (const auto& [u, v] : cover.values) {
    if (v > 0) lengths.emplace(u, ceil_neg_log2(v));
  }
  return lengths;
}

CoverOpenSet cover_open(const OpenFamilyPresentation& p, std::size_t lmax,
                        std::optional<std::size_t> nmax) {
  require_valid(p);
  for (const auto& e : p.events) {
    if (e.interval.size() > lmax) {
      throw ConfigError("Lmax = " + std::to_string(lmax) + " is below event interval length " +
                        std::to_string(e.interval.size()));
    }
  }
  SegmentedFamily<ClopenSet> working(p);
  CoverOpenSet cover;
  std::vector<BinaryString> added;
  const std::size_t last = default_nmax(breakpoints(p), nmax);
  const auto candidates = strings_up_to(lmax);
  for (std::size_t start = 0; start <= last; ++start) {
    for (const auto& x : candidates) {
      IntervalOperation op{x, start};
      if (try_interval(working, op, p.epsilon)) {
        added.push_back(x);
        cover.accepted.push_back(std::move(op));
      }
    }
  }
  cover.set = ClopenSet::normalize(added);
  return cover;
}

bool replay(const OpenFamilyPresentation& p, std::span<const IntervalOperation> log) {
  require_valid(p);
  SegmentedFamily<ClopenSet> working(p);
  return std::all_of(log.begin(), log.end(), [&](const IntervalOperation& op) {
    return try_interval(working, op, p.epsilon);
  });
}

std::vector<ClopenSet> decompose_liminf(const OpenFamilyPresentation& p) {
  if (!p.granularity) throw ValidationError("decomposition requires a granularity bound");
  require_valid(p);
  const std::size_t last = breakpoints(p).back();
  std::vector<ClopenSet> members;
  members.reserve(last + 1);
  for (std::size_t n = 0; n <= last; ++n) members.push_back(family_at(p, n));

  // suffix[i] = intersection of U_j over all j >= i (constant from `last` on).
  std::vector<ClopenSet> suffix(last + 1);
  suffix[last] = members[last];
  for (std::size_t i = last; i-- > 0;) suffix[i] = set_intersection(members[i], suffix[i + 1]);

  std::vector<ClopenSet> parts;
  parts.reserve(last + 1);
  parts.push_back(suffix[0]);
  for (std::size_t i = 0; i < last; ++i) {
    parts.push_back(set_difference(suffix[i + 1], members[i]));
  }
  return parts;
}

CoverOpenSet cover_open_strong(const OpenFamilyPresentation& p, const Rational& epsilon_prime) {
  if (epsilon_prime <= p.epsilon) {
    throw ConfigError("epsilon' = " + to_string(epsilon_prime) + " must exceed epsilon = " +
                      to_string(p.epsilon));
  }
  const auto parts = decompose_liminf(p);
  const Rational spare = epsilon_prime - p.epsilon;
  CoverOpenSet cover;
  cover.slack.emplace();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& x : parts[i].intervals()) cover.accepted.push_back({x, i});
    cover.set = set_union(cover.set, parts[i]);
    cover.slack->push_back({i, spare * inverse_power_of_two(i + 1), Rational(0)});
  }
  return cover;
}

}  // namespace limitlab
