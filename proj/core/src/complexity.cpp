#include "limitlab/complexity.hpp"

#include <algorithm>
#include <set>

#include "limitlab/errors.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {

namespace {

// Smallest p >= 1 with x[i] == x[i mod p] for all i (x nonempty).
std::size_t smallest_period(const std::string& x) {
  std::vector<std::size_t> border(x.size(), 0);
  for (std::size_t i = 1; i < x.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && x[i] != x[k]) k = border[k - 1];
    if (x[i] == x[k]) ++k;
    border[i] = k;
  }
  return x.size() - border.back();
}

void require_counting_bound(const ComplexityTable& table) {
  if (auto violation = table.counting_bound_violation()) {
    throw ValidationError("complexity table violates the counting bound: " + *violation);
  }
}

long long extension_min(const ComplexityTable& table, const BinaryString& x,
                        std::size_t horizon) {
  long long best = static_cast<long long>(x.size()) - static_cast<long long>(table.require(x));
  if (x.size() < horizon) {
    best = std::min(best, extension_min(table, x.child('0'), horizon));
    best = std::min(best, extension_min(table, x.child('1'), horizon));
  }
  return best;
}

}  // namespace

std::optional<BinaryString> run_m0(const BinaryString& program, std::size_t condition) {
  if (program.size() < 2) return std::nullopt;
  const std::string& bits = program.bits();
  const std::string payload = bits.substr(2);
  if (bits[0] != '0') return std::nullopt;
  if (bits[1] == '0') return BinaryString::from_bits(payload);
  if (payload.empty()) return std::nullopt;
  std::string out(condition, '0');
  for (std::size_t i = 0; i < condition; ++i) out[i] = payload[i % payload.size()];
  return BinaryString::from_bits(std::move(out));
}

std::size_t exact_complexity(const BinaryString& x, std::size_t condition) {
  std::size_t best = x.size() + 2;
  if (!x.empty() && x.size() == condition) {
    best = std::min(best, smallest_period(x.bits()) + 2);
  }
  return best;
}

ComplexityTable ComplexityTable::from_m0(std::size_t max_length, bool all_conditions) {
  ComplexityTable table(Mode::kConditional);
  for (std::size_t len = 0; len <= max_length; ++len) {
    for (const auto& x : BinaryString::all_of_length(len)) {
      if (all_conditions) {
        for (std::size_t n = 0; n <= max_length; ++n) table.set(x, n, exact_complexity(x, n));
      } else {
        table.set(x, len, exact_complexity(x, len));
      }
    }
  }
  return table;
}

void ComplexityTable::set(const BinaryString& x, std::size_t condition, std::size_t value) {
  entries_[key(x, condition)] = value;
}

std::optional<std::size_t> ComplexityTable::at(const BinaryString& x,
                                               std::size_t condition) const {
  auto it = entries_.find(key(x, condition));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ComplexityTable::complexity(const BinaryString& x) const {
  return at(x, x.size());
}

std::size_t ComplexityTable::require(const BinaryString& x) const {
  if (auto value = complexity(x)) return *value;
  throw ValidationError("complexity table has no entry for \"" + x.str() + "\"");
}

std::optional<std::string> ComplexityTable::counting_bound_violation() const {
  std::map<std::size_t, std::vector<std::size_t>> by_condition;
  for (const auto& [k, value] : entries_) by_condition[k.second].push_back(value);
  for (auto& [condition, values] : by_condition) {
    std::sort(values.begin(), values.end());
    // values[0..i] are all < values[i] + 1.
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
      const std::size_t m = values[i] + 1;
      Integer bound = 1;
      bound <<= m;
      if (Integer(i + 1) >= bound) {
        std::string where =
            mode_ == Mode::kPlain ? std::string{} : " for condition " + std::to_string(condition);
        return std::to_string(i + 1) + " strings have complexity < " + std::to_string(m) +
               where + " (must be < 2^" + std::to_string(m) + ")";
      }
    }
  }
  return std::nullopt;
}

long long extension_deficiency(const ComplexityTable& table, const BinaryString& x,
                               std::size_t horizon) {
  return extension_min(table, x, horizon);
}

DeficiencyReport deficiency_report(const ComplexityTable& table, const BinaryString& omega_prefix,
                                   std::size_t horizon, std::size_t c) {
  if (horizon < omega_prefix.size()) {
    throw ConfigError("horizon " + std::to_string(horizon) + " is shorter than the prefix");
  }
  require_counting_bound(table);
  DeficiencyReport report;
  report.horizon = horizon;
  report.c = c;
  for (std::size_t len = 0; len <= omega_prefix.size(); ++len) {
    const BinaryString x = omega_prefix.prefix(len);
    DeficiencyRow row;
    row.prefix = x;
    row.deficiency = static_cast<long long>(len) - static_cast<long long>(table.require(x));
    row.extension_deficiency = extension_min(table, x, horizon);
    row.exceeds_c = row.extension_deficiency > static_cast<long long>(c);
    report.rows.push_back(std::move(row));
  }
  return report;
}

OpenFamilyPresentation deficiency_family(const ComplexityTable& table, std::size_t c,
                                         std::size_t nmin, std::size_t nmax) {
  if (nmin > nmax) throw ConfigError("empty index range");
  require_counting_bound(table);
  OpenFamilyPresentation p;
  p.epsilon = inverse_power_of_two(c);
  p.granularity.emplace();
  for (std::size_t n = nmin; n <= nmax; ++n) {
    p.granularity->push_back({n, n});
    const IndexSpec spec = n < nmax ? IndexSpec::single(n) : IndexSpec::tail(n);
    for (const auto& u : BinaryString::all_of_length(n)) {
      if (table.require(u) + c < n) p.events.push_back({n, spec, u});
    }
  }
  return p;
}

RandomnessReport randomness_report(const ComplexityTable& table, const BinaryString& omega_prefix,
                                   std::size_t c) {
  require_counting_bound(table);
  RandomnessReport report;
  report.c = c;
  for (std::size_t n = 0; n <= omega_prefix.size(); ++n) {
    if (table.require(omega_prefix.prefix(n)) + c >= n) report.qualifying.push_back(n);
  }
  return report;
}

ComplexityBounds cover_to_complexity_bounds(const OpenFamilyPresentation& p, std::size_t c) {
  require_valid(p);
  if (p.epsilon > inverse_power_of_two(c)) {
    throw ValidationError("epsilon = " + to_string(p.epsilon) + " exceeds 2^-c = " +
                          to_string(inverse_power_of_two(c)));
  }
  if (!p.granularity) throw ValidationError("ordinal coding requires a granularity bound");
  ComplexityBounds bounds;
  for (std::size_t n : breakpoints(p)) {
    const ClopenSet member = family_at(p, n);
    if (member.empty()) continue;
    const auto bound = p.granularity_at(n);
    if (!bound || *bound > n) {
      throw ValidationError("granularity c(n) <= n does not hold at n=" + std::to_string(n));
    }
    Integer limit = 1;
    if (n >= c) limit <<= (n - c);
    Integer scale = 1;
    scale <<= n;
    const Rational count = member.measure() * Rational(scale);
    if (n < c || count > Rational(limit)) {
      throw ValidationError("U_n covers " + to_string(count) + " words of length " +
                            std::to_string(n) + ", above 2^(n-c)");
    }
    std::vector<BinaryString> covered;
    for (const auto& x : member.intervals()) {
      for (const auto& tail : BinaryString::all_of_length(n - x.size())) {
        covered.push_back(x.concat(tail));
      }
    }
    std::sort(covered.begin(), covered.end(), LexLess{});
    const std::size_t length =
        covered.size() <= 1 ? 0 : static_cast<std::size_t>(ceil_log2(Rational(covered.size())));
    for (std::size_t i = 0; i < covered.size(); ++i) {
      bounds.codes.push_back({n, covered[i], i, length});
      auto [it, inserted] = bounds.table.try_emplace(covered[i], length);
      if (!inserted) it->second = std::min(it->second, length);
    }
  }
  return bounds;
}

}  // namespace limitlab
