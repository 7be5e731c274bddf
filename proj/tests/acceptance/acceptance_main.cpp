// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// All checks are exact; there are no tolerances.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "limitlab/complexity.hpp"
#include "limitlab/covers.hpp"
#include "limitlab/frequency.hpp"
#include "limitlab/low_basis.hpp"
#include "oracles.hpp"

namespace limitlab {
namespace {

struct Check {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

bool points_equal(const ClopenSet& a, const ClopenSet& b, std::size_t depth) {
  return oracle::points(a, depth) == oracle::points(b, depth);
}

bool covers_points(const ClopenSet& big, const ClopenSet& small, std::size_t depth) {
  const auto pb = oracle::points(big, depth);
  const auto ps = oracle::points(small, depth);
  for (std::size_t i = 0; i < pb.size(); ++i) {
    if (ps[i] && !pb[i]) return false;
  }
  return true;
}

// 1. Set-family cover.
Check set_family_suite() {
  Check check;
  gen::Rng rng(1001);
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 250; ++trial) {
    const auto p = gen::random_set_family(rng);
    const auto cover = cover_sets(p);
    bool contains = true;
    for (const auto& u : oracle::tail_liminf(p)) contains = contains && cover.elements.contains(u);
    check.expect(contains, "liminf not contained, trial " + std::to_string(trial));
    check.expect(cover.elements.size() < (std::size_t{1} << p.k),
                 "capacity exceeded, trial " + std::to_string(trial));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(seconds < 10.0, "runtime " + std::to_string(seconds) + " s");
  std::ostringstream note;
  note << "250 presentations, " << seconds << " s";
  check.note = note.str();
  return check;
}

// 2. Semimeasure covers, flat and tree.
Check semimeasure_suite() {
  Check check;
  gen::Rng rng(2002);
  const auto grid = gen::eighths();
  for (int trial = 0; trial < 240; ++trial) {
    const bool tree = trial % 2 == 1;
    const auto p = gen::random_semimeasure_family(rng, tree);
    const auto cover = cover_semimeasure(p, grid);
    const std::string where = "trial " + std::to_string(trial);
    if (tree) {
      check.expect(is_tree_semimeasure(cover.values), "tree constraints, " + where);
    } else {
      check.expect(total_mass(cover.values) <= 1, "mass > 1, " + where);
    }
    for (const auto& [u, v] : oracle::tail_liminf(p)) {
      auto it = cover.values.find(u);
      check.expect(it != cover.values.end() && it->second >= v, "domination, " + where);
    }
  }
  check.note = "240 presentations (120 flat, 120 tree), grid of eighths";
  return check;
}

// 3. Open-set cover.
Check open_suite() {
  Check check;
  gen::Rng rng(3003);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = gen::random_open_family(rng, 6, false);
    const auto cover = cover_open(p, 6);
    const std::string where = "trial " + std::to_string(trial);
    check.expect(cover.set.measure() <= p.epsilon, "mu(W) > epsilon, " + where);
    check.expect(covers_points(cover.set, ClopenSet::normalize(oracle::tail_liminf_intervals(p)), 6),
                 "liminf not covered, " + where);
  }
  check.note = "200 families, depth <= 6";
  return check;
}

// 4. Decomposition and strong cover.
Check strong_suite() {
  Check check;
  gen::Rng rng(4004);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = gen::random_open_family(rng, 6, true);
    const std::string where = "trial " + std::to_string(trial);
    const auto parts = decompose_liminf(p);
    const auto limit = ClopenSet::normalize(oracle::tail_liminf_intervals(p));
    std::vector<bool> seen(std::size_t{1} << 6, false);
    bool disjoint = true;
    Rational sum = 0;
    for (const auto& f : parts) {
      const auto pts = oracle::points(f, 6);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] && seen[i]) disjoint = false;
        seen[i] = seen[i] || pts[i];
      }
      sum += f.measure();
    }
    check.expect(disjoint, "F_i overlap, " + where);
    check.expect(seen == oracle::points(limit, 6), "union != liminf, " + where);
    check.expect(sum == limit.measure(), "sum mu(F_i) != mu(liminf), " + where);

    const Rational eps_prime =
        p.epsilon + Rational(static_cast<long long>(gen::uniform(rng, 1, 8)), 16);
    const auto cover = cover_open_strong(p, eps_prime);
    check.expect(cover.set.measure() <= eps_prime, "mu(W) > eps', " + where);
    check.expect(covers_points(cover.set, limit, 6), "liminf not covered, " + where);
    Rational budget_total = 0;
    for (const auto& s : *cover.slack) {
      const Rational budget = (eps_prime - p.epsilon) * inverse_power_of_two(s.index + 1);
      check.expect(s.budget == budget, "budget mismatch, " + where);
      check.expect(s.consumed <= s.budget, "slack overspent, " + where);
      budget_total += s.budget;
    }
    check.expect(budget_total <= eps_prime - p.epsilon, "total slack, " + where);
  }
  check.note = "200 granular families";
  return check;
}

// 5. Low basis forcing.
Check low_basis_suite() {
  Check check;
  gen::Rng rng(5005);
  for (int trial = 0; trial < 150; ++trial) {
    const auto instance = gen::random_forcing_instance(rng, 6);
    const auto outcome = force(instance, 6);
    const auto longer = force(instance, 9);
    const std::string where = "trial " + std::to_string(trial);
    for (std::size_t i = 0; i < outcome.steps.size(); ++i) {
      const auto& step = outcome.steps[i];
      const auto& t = instance.queries[i].region;
      check.expect(!step.before.is_full(), "U full before step, " + where);
      if (step.verdict == Verdict::kHalts) {
        const auto u = oracle::points(step.before, 6);
        const auto tp = oracle::points(t, 6);
        bool complement_in_t = true;
        for (std::size_t k = 0; k < u.size(); ++k) complement_in_t = complement_in_t && (u[k] || tp[k]);
        check.expect(complement_in_t, "halts but complement not in T, " + where);
      } else {
        const auto w = ClopenSet::interval(outcome.witness_prefix);
        check.expect(set_intersection(w, t).empty(), "diverges but witness meets T, " + where);
      }
      check.expect(step.verdict == longer.steps[i].verdict, "answers depend on witness, " + where);
    }
    check.expect(!outcome.final_set.is_full(), "final U full, " + where);
  }
  check.note = "150 instances, <= 8 queries, depth <= 6";
  return check;
}

// 6. Toy complexity.
Check complexity_suite() {
  Check check;
  std::vector<std::vector<std::size_t>> values(9);  // per condition
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const auto& x : BinaryString::all_of_length(len)) {
      for (std::size_t n = 0; n <= 8; ++n) {
        const auto expected = oracle::enumerated_complexity(x, n);
        check.expect(exact_complexity(x, n) == expected, "C(" + x.str() + "|" + std::to_string(n) + ")");
        values[n].push_back(expected);
      }
    }
  }
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t m = 0; m <= 10; ++m) {
      std::size_t below = 0;
      for (auto v : values[n]) below += v < m;
      check.expect(below < (std::size_t{1} << m), "counting bound m=" + std::to_string(m));
    }
  }
  check.note = "all |x| <= 8, conditions <= 8; m <= 10";
  return check;
}

// 7. Forward pipeline on the M0 table.
Check pipeline_suite() {
  Check check;
  const auto table = ComplexityTable::from_m0(8);
  std::size_t premise = 0;
  for (std::size_t c = 0; c <= 2; ++c) {
    const auto family = deficiency_family(table, c, 2, 8);
    const auto cover = cover_open(family, 8);
    check.expect(cover.set.measure() <= inverse_power_of_two(c), "mu(W) > 2^-c");
    for (std::size_t len = 0; len <= 2; ++len) {
      for (const auto& x : BinaryString::all_of_length(len)) {
        if (extension_deficiency(table, x, 8) <= static_cast<long long>(c)) continue;
        ++premise;
        check.expect(cover.set.contains(x), "Omega_" + x.str() + " not covered, c=" + std::to_string(c));
      }
    }
  }
  // Non-vacuous companion: extensions of "11" are two bits cheap.
  ComplexityTable synthetic;
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const auto& y : BinaryString::all_of_length(len)) {
      synthetic.set(y, len, BinaryString("11").is_prefix_of(y) ? len - 2 : exact_complexity(y, len) + 1);
    }
  }
  std::size_t synthetic_premise = 0;
  if (!synthetic.counting_bound_violation()) {
    const auto cover = cover_open(deficiency_family(synthetic, 1, 2, 8), 8);
    for (std::size_t len = 0; len <= 2; ++len) {
      for (const auto& x : BinaryString::all_of_length(len)) {
        if (extension_deficiency(synthetic, x, 8) <= 1) continue;
        ++synthetic_premise;
        check.expect(cover.set.contains(x), "synthetic Omega_" + x.str() + " not covered");
      }
    }
  }
  check.expect(synthetic_premise > 0, "synthetic premise never holds");
  check.note = "M0: " + std::to_string(premise) + " prefixes with dbar > c (vacuous for M0); synthetic: " +
               std::to_string(synthetic_premise);
  return check;
}

// 8. Limit frequencies.
Check frequency_suite() {
  Check check;
  gen::Rng rng(8008);
  const auto grid = gen::eighths();
  for (int trial = 0; trial < 120; ++trial) {
    const auto t = gen::random_trace(rng);
    const auto q = limit_frequency(t);
    const std::string where = "trial " + std::to_string(trial);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto avg = oracle::running_average(t, k);
      bool same = avg.size() == q.size();
      for (const auto& [x, v] : avg) same = same && q.contains(x) && q.at(x) == v;
      check.expect(same, "running average, " + where);
      // Cesaro: the full average (prefix included) is within |prefix|/n of the limit.
      const auto full = oracle::full_average(t, k * 4);
      const Rational n(static_cast<long long>(t.prefix.size() + 4 * k * t.period.size()));
      for (const auto& [x, v] : q) {
        const Rational got = full.contains(x) ? full.at(x) : Rational(0);
        const Rational gap = got > v ? got - v : v - got;
        check.expect(gap <= Rational(static_cast<long long>(t.prefix.size())) / n,
                     "prefix not washed out, " + where);
      }
    }
    Rational total = 0;
    for (const auto& [x, v] : q) total += v;
    check.expect(total <= 1, "sum q_f > 1, " + where);

    const std::size_t period = t.period.size();
    const std::size_t nmax = ((t.prefix.size() + period - 1) / period + 1) * period;
    const auto p = trace_to_family(t, nmax, grid);
    const auto cover = cover_semimeasure(p, grid);
    for (const auto& [x, v] : q) {
      const Rational floor = grid_floor(v, grid);
      if (floor == 0) continue;
      auto it = cover.values.find(BinaryString::of_natural(x));
      check.expect(it != cover.values.end() && it->second >= floor, "domination, " + where);
    }
  }
  check.note = "120 traces";
  return check;
}

// 9. Exactness floor.
Check exactness_suite() {
  Check check;
  for (std::size_t len = 0; len <= 10; ++len) {
    for (const auto& x : BinaryString::all_of_length(len)) {
      check.expect(ClopenSet::interval(x).measure() == inverse_power_of_two(len), "mu(Omega_" + x.str() + ")");
    }
  }
  gen::Rng rng(9009);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = gen::random_clopen(rng, 8, 8);
    const auto b = gen::random_clopen(rng, 8, 8);
    for (SetOp op : {SetOp::kUnion, SetOp::kIntersection, SetOp::kDifference}) {
      check.expect(oracle::points(boolean_op(a, b, op), 8) ==
                       oracle::combine(oracle::points(a, 8), oracle::points(b, 8), op),
                   "boolean op, trial " + std::to_string(trial));
    }
  }
  check.note = "2047 intervals; 300 random pairs x 3 ops at depth 8";
  return check;
}

// 10. CLI golden files and round trips.
std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool round_trip(const cli::RunConfig& config, const std::string& output) {
  using io::Json;
  if (config.command == "trace-to-family" || (config.command == "deficiency" && config.family)) {
    std::istringstream in(output);
    const auto p = io::read_presentation(in);
    std::ostringstream again;
    io::write_presentation(again, p);
    return again.str() == output &&
           std::visit([](const auto& typed) { return validate(typed).ok(); }, p);
  }
  if (config.format == cli::Format::kCsv) return !output.empty();
  const Json j = Json::parse(output);
  if (j.dump(2) + "\n" != output) return false;
  if (!config.input || config.command.rfind("cover-", 0) != 0 || config.command == "cover-open-strong") {
    return true;
  }
  std::ifstream in(*config.input);
  auto p = io::read_presentation(in);
  if (config.command == "cover-sets") {
    return replay(std::get<SetFamilyPresentation>(p), io::set_log_from_json(j));
  }
  if (config.command == "cover-open") {
    return replay(std::get<OpenFamilyPresentation>(p), io::interval_log_from_json(j));
  }
  auto& semi = std::get<SemimeasureFamilyPresentation>(p);
  semi.tree_mode = semi.tree_mode || config.command == "cover-tree";
  return replay(semi, io::increase_log_from_json(j));
}

Check cli_suite() {
  Check check;
  const std::filesystem::path fixtures = LIMITLAB_FIXTURE_DIR;
  const std::filesystem::path golden = LIMITLAB_GOLDEN_DIR;
  const auto previous = std::filesystem::current_path();
  std::filesystem::current_path(fixtures);
  std::ifstream cases(golden / "cases.txt");
  std::size_t count = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line);
    const std::string name = fields[0];
    const int expected_status = std::stoi(fields[1]);
    std::vector<std::string> args{"limitlab"};
    args.insert(args.end(), fields.begin() + 2, fields.end());
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream help;
    const auto config = cli::parse_arguments(static_cast<int>(argv.size()), argv.data(), help);
    if (!config) {
      check.expect(false, name + ": arguments");
      continue;
    }
    ++count;
    std::ostringstream first, second, err;
    const int status = cli::run(*config, first, err);
    cli::run(*config, second, err);
    check.expect(status == expected_status, name + ": exit status " + std::to_string(status));
    check.expect(first.str() == slurp(golden / (name + ".out")), name + ": differs from golden");
    check.expect(first.str() == second.str(), name + ": not reproducible");
    if (status == cli::kOk) {
      bool ok = false;
      try {
        ok = round_trip(*config, first.str());
      } catch (const std::exception& e) {
        ok = false;
      }
      check.expect(ok, name + ": round trip");
    }
  }
  std::filesystem::current_path(previous);
  check.note = std::to_string(count) + " golden cases";
  return check;
}

}  // namespace
}  // namespace limitlab

int main() {
  using limitlab::Check;
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"1  set-family cover contains liminf, < 2^k elements", limitlab::set_family_suite},
      {"2  semimeasure cover (flat/tree) dominates liminf", limitlab::semimeasure_suite},
      {"3  open cover: mu(W) <= eps, W contains liminf", limitlab::open_suite},
      {"4  decomposition + strong cover with slack", limitlab::strong_suite},
      {"5  low basis forcing consistency", limitlab::low_basis_suite},
      {"6  toy complexity vs enumeration, counting bound", limitlab::complexity_suite},
      {"7  deficiency pipeline covers high-dbar prefixes", limitlab::pipeline_suite},
      {"8  limit frequencies and domination", limitlab::frequency_suite},
      {"9  interval measures and boolean ops exact", limitlab::exactness_suite},
      {"10 CLI golden files and round trips", limitlab::cli_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check check;
    try {
      check = run();
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const bool pass = check.failures == 0;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS " : "FAIL ") << name << "  [" << check.cases << " checks";
    if (!check.note.empty()) std::cout << "; " << check.note;
    std::cout << "]";
    if (!pass) std::cout << "  first failure: " << check.first_failure << " (" << check.failures << " total)";
    std::cout << '\n';
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL") << '\n';
  return failed == 0 ? 0 : 1;
}
