#include "limitlab/families.hpp"

#include <algorithm>
#include <sstream>

#include "limitlab/config.hpp"
#include "limitlab/errors.hpp"

namespace limitlab {

namespace {

template <class Event>
bool included(const Event& e, std::size_t n, std::optional<std::size_t> stage) {
  return e.spec.applies_to(n) && (!stage || e.stage <= *stage);
}

template <class Event>
std::vector<IndexSpec> specs_of(const std::vector<Event>& events) {
  std::vector<IndexSpec> specs;
  specs.reserve(events.size());
  for (const auto& e : events) specs.push_back(e.spec);
  return specs;
}

template <class Event>
void check_stage_order(const std::vector<Event>& events, ValidationReport& report) {
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].stage < events[i - 1].stage) {
      report.violations.push_back(
          {std::nullopt, "event " + std::to_string(i) + ": stage " +
                             std::to_string(events[i].stage) + " precedes stage " +
                             std::to_string(events[i - 1].stage)});
    }
  }
}

void check_depth(const BinaryString& s, std::size_t event, ValidationReport& report) {
  if (s.size() > max_depth()) {
    report.violations.push_back(
        {std::nullopt, "event " + std::to_string(event) + ": string of length " +
                           std::to_string(s.size()) + " exceeds maximum depth " +
                           std::to_string(max_depth())});
  }
}

template <class Presentation, class Check>
void check_breakpoints(const Presentation& p, Check&& check, ValidationReport& report) {
  for (std::size_t n : breakpoints(p)) {
    if (auto message = check(family_at(p, n))) {
      report.violations.push_back({n, *message + " at n=" + std::to_string(n)});
    }
  }
}

}  // namespace

std::optional<std::size_t> OpenFamilyPresentation::granularity_at(std::size_t n) const {
  if (!granularity) return std::nullopt;
  std::optional<std::size_t> bound;
  std::size_t best_start = 0;
  for (const auto& entry : *granularity) {
    if (entry.n <= n && (!bound || entry.n >= best_start)) {
      bound = entry.c;
      best_start = entry.n;
    }
  }
  return bound;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i != 0) out << "; ";
    out << violations[i].message;
  }
  return out.str();
}

template <class Presentation>
void require_valid(const Presentation& p) {
  if (auto report = validate(p); !report.ok()) {
    throw ValidationError("invalid presentation: " + report.summary());
  }
}

template void require_valid(const SetFamilyPresentation&);
template void require_valid(const SemimeasureFamilyPresentation&);
template void require_valid(const OpenFamilyPresentation&);

std::optional<std::string> capacity_violation(const ElementSet& members, unsigned k) {
  Integer capacity = 1;
  capacity <<= k;
  if (Integer(members.size()) >= capacity) {
    return "capacity violated: |U_n| = " + std::to_string(members.size()) + " >= 2^k = " + capacity.str();
  }
  return std::nullopt;
}

std::optional<std::string> semimeasure_violation(const ValueTable& values, bool tree_mode) {
  if (tree_mode) {
    const ValueTable closed = tree_closure(values);
    const auto root = closed.find(BinaryString{});
    if (root != closed.end() && root->second > 1) {
      return "tree semimeasure root m_n(\"\") = " + to_string(root->second) + " > 1";
    }
    return std::nullopt;
  }
  const Rational mass = total_mass(values);
  if (mass > 1) return "sum of m_n = " + to_string(mass) + " > 1";
  return std::nullopt;
}

std::optional<std::string> measure_violation(const ClopenSet& member, const Rational& epsilon) {
  const Rational mu = member.measure();
  if (mu > epsilon) {
    return "mu(U_n) = " + to_string(mu) + " > epsilon = " + to_string(epsilon);
  }
  return std::nullopt;
}

ValueTable tree_closure(const ValueTable& values) {
  std::set<BinaryString> nodes;
  for (const auto& [x, v] : values) {
    for (std::size_t len = 0; len <= x.size(); ++len) nodes.insert(x.prefix(len));
  }
  ValueTable closed = values;
  auto value_of = [&closed](const BinaryString& y) -> Rational {
    auto it = closed.find(y);
    return it == closed.end() ? Rational(0) : it->second;
  };
  // Shortlex descending: children before parents.
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    const Rational children = value_of(it->child('0')) + value_of(it->child('1'));
    if (children > value_of(*it)) closed[*it] = children;
  }
  return closed;
}

bool is_tree_semimeasure(const ValueTable& values) {
  return tree_closure(values) == values && [&] {
    auto root = values.find(BinaryString{});
    return root == values.end() || root->second <= 1;
  }();
}

Rational total_mass(const ValueTable& values) {
  Rational total = 0;
  for (const auto& [x, v] : values) total += v;
  return total;
}

ValidationReport validate(const SetFamilyPresentation& p) {
  ValidationReport report;
  check_stage_order(p.events, report);
  const std::set<BinaryString> universe(p.universe.begin(), p.universe.end());
  for (std::size_t i = 0; i < p.events.size(); ++i) {
    check_depth(p.events[i].element, i, report);
    if (!universe.contains(p.events[i].element)) {
      report.violations.push_back({std::nullopt, "event " + std::to_string(i) + ": element \"" +
                                                     p.events[i].element.str() +
                                                     "\" not in universe"});
    }
  }
  check_breakpoints(
      p, [&](const ElementSet& u) { return capacity_violation(u, p.k); }, report);
  return report;
}

ValidationReport validate(const SemimeasureFamilyPresentation& p) {
  ValidationReport report;
  check_stage_order(p.events, report);
  for (std::size_t i = 0; i < p.events.size(); ++i) {
    check_depth(p.events[i].element, i, report);
    const Rational& v = p.events[i].value;
    if (v < 0 || v > 1) {
      report.violations.push_back(
          {std::nullopt, "event " + std::to_string(i) + ": value " + to_string(v) +
                             " outside [0,1]"});
    }
  }
  check_breakpoints(
      p, [&](const ValueTable& m) { return semimeasure_violation(m, p.tree_mode); }, report);
  return report;
}

ValidationReport validate(const OpenFamilyPresentation& p) {
  ValidationReport report;
  if (p.epsilon < 0 || p.epsilon > 1) {
    report.violations.push_back(
        {std::nullopt, "epsilon " + to_string(p.epsilon) + " outside [0,1]"});
  }
  check_stage_order(p.events, report);
  for (std::size_t i = 0; i < p.events.size(); ++i) {
    check_depth(p.events[i].interval, i, report);
  }
  if (p.granularity) {
    for (std::size_t n : breakpoints(p)) {
      const auto bound = p.granularity_at(n);
      if (!bound) continue;
      for (std::size_t i = 0; i < p.events.size(); ++i) {
        const auto& e = p.events[i];
        if (e.spec.applies_to(n) && e.interval.size() > *bound) {
          report.violations.push_back(
              {n, "event " + std::to_string(i) + ": interval length " +
                      std::to_string(e.interval.size()) + " exceeds granularity c(n) = " +
                      std::to_string(*bound) + " at n=" + std::to_string(n)});
        }
      }
    }
  }
  check_breakpoints(
      p, [&](const ClopenSet& u) { return measure_violation(u, p.epsilon); }, report);
  return report;
}

ElementSet family_at(const SetFamilyPresentation& p, std::size_t n,
                     std::optional<std::size_t> stage) {
  ElementSet members;
  for (const auto& e : p.events) {
    if (included(e, n, stage)) members.insert(e.element);
  }
  return members;
}

ValueTable family_at(const SemimeasureFamilyPresentation& p, std::size_t n,
                     std::optional<std::size_t> stage) {
  ValueTable values;
  for (const auto& e : p.events) {
    if (!included(e, n, stage) || e.value <= 0) continue;
    auto [it, inserted] = values.try_emplace(e.element, e.value);
    if (!inserted && e.value > it->second) it->second = e.value;
  }
  return p.tree_mode ? tree_closure(values) : values;
}

ClopenSet family_at(const OpenFamilyPresentation& p, std::size_t n,
                    std::optional<std::size_t> stage) {
  std::vector<BinaryString> intervals;
  for (const auto& e : p.events) {
    if (included(e, n, stage)) intervals.push_back(e.interval);
  }
  return ClopenSet::normalize(intervals);
}

std::vector<std::size_t> breakpoints(const std::vector<IndexSpec>& specs) {
  std::vector<std::size_t> points{0};
  for (const auto& spec : specs) {
    points.push_back(spec.index);
    if (spec.kind == IndexSpec::Kind::kSingle) points.push_back(spec.index + 1);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<std::size_t> breakpoints(const SetFamilyPresentation& p) {
  return breakpoints(specs_of(p.events));
}
std::vector<std::size_t> breakpoints(const SemimeasureFamilyPresentation& p) {
  return breakpoints(specs_of(p.events));
}
std::vector<std::size_t> breakpoints(const OpenFamilyPresentation& p) {
  return breakpoints(specs_of(p.events));
}

ElementSet liminf_family(const SetFamilyPresentation& p) {
  return family_at(p, breakpoints(p).back());
}
ValueTable liminf_family(const SemimeasureFamilyPresentation& p) {
  return family_at(p, breakpoints(p).back());
}
ClopenSet liminf_family(const OpenFamilyPresentation& p) {
  return family_at(p, breakpoints(p).back());
}

}  // namespace limitlab
