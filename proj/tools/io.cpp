#include "io.hpp"

#include <sstream>

#include "limitlab/errors.hpp"

namespace limitlab::io {

namespace {

Json parse_line(const std::string& line, std::size_t line_no) {
  try {
    return Json::parse(line);
  } catch (const Json::exception& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

Json parse_document(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

template <class T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  try {
    return j.at(name).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + name + "': " + e.what());
  }
}

IndexSpec parse_spec(const Json& event) {
  const auto kind = field<std::string>(event, "spec");
  const auto index = field<std::size_t>(event, "index");
  if (kind == "single") return IndexSpec::single(index);
  if (kind == "tail") return IndexSpec::tail(index);
  throw ParseError("unknown spec kind '" + kind + "' (expected single or tail)");
}

Json spec_fields(const IndexSpec& spec, std::size_t stage) {
  Json j;
  j["stage"] = stage;
  j["spec"] = spec.kind == IndexSpec::Kind::kSingle ? "single" : "tail";
  j["index"] = spec.index;
  return j;
}

ClopenSet parse_clopen(const Json& j) {
  if (!j.is_array()) throw ParseError("clopen set must be an array of bit-strings");
  std::vector<BinaryString> intervals;
  for (const auto& item : j) intervals.push_back(parse_bits(item));
  return ClopenSet::normalize(intervals);
}

TraceValue parse_trace_value(const Json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_number_unsigned()) throw ParseError("trace values must be naturals or null");
  return j.get<unsigned long long>();
}

}  // namespace

BinaryString parse_bits(const Json& j) {
  if (!j.is_string()) throw ParseError("bit-string must be a JSON string");
  return BinaryString(j.get<std::string>());
}

Rational parse_rational_field(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("rational must be a \"num/den\" string");
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> grid;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) grid.push_back(parse_rational(item));
  }
  if (grid.empty()) throw ParseError("empty grid");
  return grid;
}

Presentation read_presentation(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Presentation> result;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Json j = parse_line(line, line_no);
    try {
      if (!result) {
        const auto family = field<std::string>(j, "family");
        if (family == "set") {
          SetFamilyPresentation p;
          p.k = field<unsigned>(j, "k");
          for (const auto& u : field<Json>(j, "universe")) p.universe.push_back(parse_bits(u));
          result = std::move(p);
        } else if (family == "semimeasure") {
          SemimeasureFamilyPresentation p;
          p.tree_mode = j.value("tree", false);
          result = std::move(p);
        } else if (family == "open") {
          OpenFamilyPresentation p;
          p.epsilon = parse_rational_field(field<Json>(j, "epsilon"));
          if (j.contains("granularity")) {
            p.granularity.emplace();
            for (const auto& g : j.at("granularity")) {
              p.granularity->push_back({field<std::size_t>(g, "n"), field<std::size_t>(g, "c")});
            }
          }
          result = std::move(p);
        } else {
          throw ParseError("unknown family '" + family + "'");
        }
        continue;
      }
      const auto stage = field<std::size_t>(j, "stage");
      const IndexSpec spec = parse_spec(j);
      std::visit(
          [&](auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SetFamilyPresentation>) {
              p.events.push_back({stage, spec, parse_bits(field<Json>(j, "element"))});
            } else if constexpr (std::is_same_v<P, SemimeasureFamilyPresentation>) {
              p.events.push_back({stage, spec, parse_bits(field<Json>(j, "element")),
                                  parse_rational_field(field<Json>(j, "value"))});
            } else {
              p.events.push_back({stage, spec, parse_bits(field<Json>(j, "interval"))});
            }
          },
          *result);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!result) throw ParseError("event log has no header line");
  return *std::move(result);
}

void write_presentation(std::ostream& out, const Presentation& presentation) {
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        Json header;
        header["family"] = family_name(presentation);
        if constexpr (std::is_same_v<P, SetFamilyPresentation>) {
          header["k"] = p.k;
          header["universe"] = Json::array();
          for (const auto& u : p.universe) header["universe"].push_back(u.str());
        } else if constexpr (std::is_same_v<P, SemimeasureFamilyPresentation>) {
          header["tree"] = p.tree_mode;
        } else {
          header["epsilon"] = to_string(p.epsilon);
          if (p.granularity) {
            header["granularity"] = Json::array();
            for (const auto& g : *p.granularity) {
              header["granularity"].push_back(Json{{"n", g.n}, {"c", g.c}});
            }
          }
        }
        out << header.dump() << '\n';
        for (const auto& e : p.events) {
          Json j = spec_fields(e.spec, e.stage);
          if constexpr (std::is_same_v<P, SetFamilyPresentation>) {
            j["element"] = e.element.str();
          } else if constexpr (std::is_same_v<P, SemimeasureFamilyPresentation>) {
            j["element"] = e.element.str();
            j["value"] = to_string(e.value);
          } else {
            j["interval"] = e.interval.str();
          }
          out << j.dump() << '\n';
        }
      },
      presentation);
}

std::string family_name(const Presentation& p) {
  switch (p.index()) {
    case 0:
      return "set";
    case 1:
      return "semimeasure";
    default:
      return "open";
  }
}

ForcingInstance read_instance(std::istream& in) {
  const Json j = parse_document(in);
  ForcingInstance instance;
  instance.initial = parse_clopen(field<Json>(j, "initialU"));
  for (const auto& q : field<Json>(j, "queries")) {
    instance.queries.push_back({field<std::string>(q, "label"), parse_clopen(field<Json>(q, "T"))});
  }
  return instance;
}

PartialTrace read_trace(std::istream& in) {
  const Json j = parse_document(in);
  PartialTrace trace;
  for (const auto& v : field<Json>(j, "prefix")) trace.prefix.push_back(parse_trace_value(v));
  for (const auto& v : field<Json>(j, "period")) trace.period.push_back(parse_trace_value(v));
  if (trace.period.empty()) throw ParseError("trace period must be nonempty");
  return trace;
}

ComplexityTable read_table(std::istream& in) {
  in >> std::ws;
  if (in.peek() == '{') {
    const Json j = parse_document(in);
    const auto mode = field<std::string>(j, "mode");
    if (mode != "plain" && mode != "conditional") throw ParseError("unknown table mode");
    ComplexityTable table(mode == "plain" ? ComplexityTable::Mode::kPlain
                                          : ComplexityTable::Mode::kConditional);
    for (const auto& e : field<Json>(j, "entries")) {
      table.set(parse_bits(field<Json>(e, "x")), field<std::size_t>(e, "condition"),
                field<std::size_t>(e, "value"));
    }
    return table;
  }

  ComplexityTable table;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string bits;
    if (!(fields >> bits)) continue;
    if (first && bits == "mode") {
      std::string mode;
      fields >> mode;
      if (mode != "plain" && mode != "conditional") {
        throw ParseError("line " + std::to_string(line_no) + ": unknown table mode");
      }
      table = ComplexityTable(mode == "plain" ? ComplexityTable::Mode::kPlain
                                              : ComplexityTable::Mode::kConditional);
      first = false;
      continue;
    }
    first = false;
    long long condition = -1;
    long long value = -1;
    std::string rest;
    if (!(fields >> condition >> value) || condition < 0 || value < 0 || (fields >> rest)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected \"bits condition value\"");
    }
    try {
      table.set(BinaryString(bits == "-" ? std::string{} : bits),
                static_cast<std::size_t>(condition), static_cast<std::size_t>(value));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return table;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const ClopenSet& s) {
  Json j = Json::array();
  for (const auto& x : s.intervals()) j.push_back(x.str());
  return j;
}

Json to_json(const ElementSet& s) {
  Json j = Json::array();
  for (const auto& x : s) j.push_back(x.str());
  return j;
}

Json to_json(const ValueTable& t) {
  Json j = Json::object();
  for (const auto& [x, v] : t) j[x.str()] = to_string(v);
  return j;
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    item["index"] = v.index ? Json(*v.index) : Json(nullptr);
    item["message"] = v.message;
    violations.push_back(std::move(item));
  }
  return Json{{"valid", report.ok()}, {"violations", std::move(violations)}};
}

Json to_json(const CoverSet& cover) {
  Json accepted = Json::array();
  for (const auto& op : cover.accepted) {
    accepted.push_back(Json{{"N", op.start}, {"u", op.element.str()}});
  }
  return Json{{"elements", to_json(cover.elements)}, {"accepted", std::move(accepted)}};
}

Json to_json(const CoverSemimeasure& cover) {
  Json accepted = Json::array();
  for (const auto& op : cover.accepted) {
    accepted.push_back(Json{{"r", to_string(op.target)}, {"N", op.start}, {"u", op.element.str()}});
  }
  Json complexity = Json::object();
  for (const auto& [u, k] : semimeasure_to_complexity(cover)) complexity[u.str()] = k;
  return Json{{"tree", cover.tree_mode},
              {"values", to_json(cover.values)},
              {"mass", to_string(total_mass(cover.values))},
              {"complexity", std::move(complexity)},
              {"accepted", std::move(accepted)}};
}

Json to_json(const CoverOpenSet& cover) {
  Json accepted = Json::array();
  for (const auto& op : cover.accepted) {
    accepted.push_back(Json{{"x", op.interval.str()}, {"N", op.start}});
  }
  Json j{{"W", to_json(cover.set)},
         {"measure", to_string(cover.set.measure())},
         {"accepted", std::move(accepted)}};
  if (cover.slack) {
    Json slack = Json::array();
    for (const auto& s : *cover.slack) {
      slack.push_back(Json{{"i", s.index},
                           {"budget", to_string(s.budget)},
                           {"consumed", to_string(s.consumed)}});
    }
    j["slack"] = std::move(slack);
  }
  return j;
}

Json to_json(const ForcingOutcome& outcome) {
  Json answers = Json::array();
  for (const auto& step : outcome.steps) {
    answers.push_back(Json{{"label", step.label}, {"verdict", to_string(step.verdict)}});
  }
  return Json{{"answers", std::move(answers)},
              {"finalU", to_json(outcome.final_set)},
              {"witness", outcome.witness_prefix.str()}};
}

Json to_json(const FrequencyTable& table) {
  Json j = Json::object();
  Rational total = 0;
  for (const auto& [x, q] : table) {
    j[std::to_string(x)] = to_string(q);
    total += q;
  }
  return Json{{"frequencies", std::move(j)}, {"total", to_string(total)}};
}

Json to_json(const ComplexityTable& table) {
  Json entries = Json::array();
  for (const auto& [key, value] : table.entries()) {
    entries.push_back(Json{{"x", key.first.str()}, {"condition", key.second}, {"value", value}});
  }
  return Json{
      {"mode", table.mode() == ComplexityTable::Mode::kPlain ? "plain" : "conditional"},
      {"entries", std::move(entries)}};
}

Json to_json(const DeficiencyReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"prefix", row.prefix.str()},
                        {"d", row.deficiency},
                        {"dbar", row.extension_deficiency},
                        {"exceeds_c", row.exceeds_c}});
  }
  return Json{{"horizon", report.horizon},
              {"c", report.c},
              {"truncated_infimum", true},
              {"rows", std::move(rows)}};
}

Json to_json(const RandomnessReport& report) {
  const auto largest = report.largest();
  return Json{{"c", report.c},
              {"qualifying", report.qualifying},
              {"count", report.qualifying.size()},
              {"largest", largest ? Json(*largest) : Json(nullptr)}};
}

Json to_json(const ComplexityBounds& bounds) {
  Json codes = Json::array();
  for (const auto& code : bounds.codes) {
    codes.push_back(Json{{"n", code.n},
                         {"word", code.word.str()},
                         {"ordinal", code.ordinal},
                         {"code_length", code.code_length}});
  }
  Json table = Json::object();
  for (const auto& [x, len] : bounds.table) table[x.str()] = len;
  return Json{{"codes", std::move(codes)}, {"bounds", std::move(table)}};
}

std::vector<SetOperation> set_log_from_json(const Json& cover) {
  std::vector<SetOperation> log;
  for (const auto& op : field<Json>(cover, "accepted")) {
    log.push_back({field<std::size_t>(op, "N"), parse_bits(field<Json>(op, "u"))});
  }
  return log;
}

std::vector<IncreaseOperation> increase_log_from_json(const Json& cover) {
  std::vector<IncreaseOperation> log;
  for (const auto& op : field<Json>(cover, "accepted")) {
    log.push_back({parse_rational_field(field<Json>(op, "r")), field<std::size_t>(op, "N"),
                   parse_bits(field<Json>(op, "u"))});
  }
  return log;
}

std::vector<IntervalOperation> interval_log_from_json(const Json& cover) {
  std::vector<IntervalOperation> log;
  for (const auto& op : field<Json>(cover, "accepted")) {
    log.push_back({parse_bits(field<Json>(op, "x")), field<std::size_t>(op, "N")});
  }
  return log;
}

}  // namespace limitlab::io
