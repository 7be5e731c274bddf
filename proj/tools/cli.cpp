#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"
#include "limitlab/errors.hpp"

namespace limitlab::cli {

namespace {

using io::Json;

struct Emitted {
  Json json;
  std::string csv;  // empty when the command has no CSV form
  std::string raw;  // non-empty for commands that emit an event log
  int status = kOk;
};

template <class T>
const T& need(const std::optional<T>& value, const char* flag, const std::string& command) {
  if (!value) throw ConfigError(command + " requires " + flag);
  return *value;
}

std::ifstream open_input(const RunConfig& config) {
  const auto& path = need(config.input, "--input", config.command);
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open input file '" + path + "'");
  return in;
}

io::Presentation load_presentation(const RunConfig& config) {
  auto in = open_input(config);
  io::Presentation p = io::read_presentation(in);
  if (auto* set = std::get_if<SetFamilyPresentation>(&p); set && config.k) set->k = *config.k;
  if (auto* open = std::get_if<OpenFamilyPresentation>(&p); open && config.epsilon) {
    open->epsilon = *config.epsilon;
  }
  return p;
}

template <class P>
P expect_family(io::Presentation p, const std::string& command) {
  if (auto* typed = std::get_if<P>(&p)) return std::move(*typed);
  throw ConfigError(command + " cannot run on a " + io::family_name(p) + " family");
}

BinaryString omega_of(const RunConfig& config) {
  return BinaryString(need(config.omega, "--omega", config.command));
}

Emitted cmd_validate(const RunConfig& config) {
  const auto p = load_presentation(config);
  const auto report = std::visit([](const auto& typed) { return validate(typed); }, p);
  Emitted e;
  e.json = Json{{"family", io::family_name(p)}};
  e.json.update(io::to_json(report));
  e.status = report.ok() ? kOk : kValidationFailure;
  return e;
}

Emitted cmd_liminf(const RunConfig& config) {
  const auto p = load_presentation(config);
  Emitted e;
  std::visit(
      [&](const auto& typed) {
        require_valid(typed);
        const auto points = breakpoints(typed);
        e.json = Json{{"family", io::family_name(p)}, {"breakpoints", points}};
        const auto limit = liminf_family(typed);
        e.json["liminf"] = io::to_json(limit);
        if constexpr (std::is_same_v<std::decay_t<decltype(limit)>, ClopenSet>) {
          e.json["measure"] = to_string(limit.measure());
        }
      },
      p);
  return e;
}

Emitted cmd_cover_sets(const RunConfig& config) {
  const auto p = expect_family<SetFamilyPresentation>(load_presentation(config), config.command);
  Emitted e;
  e.json = Json{{"k", p.k}, {"liminf", io::to_json(liminf_family(p))}};
  e.json.update(io::to_json(cover_sets(p, config.nmax)));
  return e;
}

Emitted cover_semimeasure_command(const RunConfig& config, bool tree) {
  auto p = expect_family<SemimeasureFamilyPresentation>(load_presentation(config), config.command);
  if (tree) p.tree_mode = true;
  std::vector<Rational> grid;
  if (config.grid) {
    grid = *config.grid;
  } else {
    for (const auto& ev : p.events) grid.push_back(ev.value);
  }
  Emitted e;
  e.json = Json{{"liminf", io::to_json(liminf_family(p))}};
  e.json.update(io::to_json(cover_semimeasure(p, grid, config.nmax)));
  return e;
}

Emitted cmd_cover_open(const RunConfig& config) {
  const auto p = expect_family<OpenFamilyPresentation>(load_presentation(config), config.command);
  Emitted e;
  e.json = Json{{"epsilon", to_string(p.epsilon)}, {"liminf", io::to_json(liminf_family(p))}};
  e.json.update(io::to_json(cover_open(p, need(config.lmax, "--lmax", config.command), config.nmax)));
  return e;
}

Emitted cmd_cover_open_strong(const RunConfig& config) {
  const auto p = expect_family<OpenFamilyPresentation>(load_presentation(config), config.command);
  const auto& eps_prime = need(config.epsilon_prime, "--epsilon-prime", config.command);
  Emitted e;
  e.json = Json{{"epsilon", to_string(p.epsilon)},
                {"epsilon_prime", to_string(eps_prime)},
                {"liminf", io::to_json(liminf_family(p))}};
  e.json.update(io::to_json(cover_open_strong(p, eps_prime)));
  return e;
}

Emitted cmd_decompose(const RunConfig& config) {
  const auto p = expect_family<OpenFamilyPresentation>(load_presentation(config), config.command);
  const auto parts = decompose_liminf(p);
  Emitted e;
  Json list = Json::array();
  std::ostringstream csv;
  csv << "i,measure,intervals\n";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    list.push_back(Json{{"i", i},
                        {"intervals", io::to_json(parts[i])},
                        {"measure", to_string(parts[i].measure())}});
    csv << i << ',' << to_string(parts[i].measure()) << ',';
    for (std::size_t j = 0; j < parts[i].intervals().size(); ++j) {
      csv << (j ? " " : "") << parts[i].intervals()[j].str();
    }
    csv << '\n';
  }
  const ClopenSet limit = liminf_family(p);
  e.json = Json{{"parts", std::move(list)},
                {"liminf", io::to_json(limit)},
                {"liminf_measure", to_string(limit.measure())}};
  e.csv = csv.str();
  return e;
}

Emitted cmd_lowbasis(const RunConfig& config) {
  auto in = open_input(config);
  const auto instance = io::read_instance(in);
  Emitted e;
  e.json = io::to_json(force(instance, need(config.witness_length, "--witness-length", config.command)));
  return e;
}

Emitted cmd_complexity(const RunConfig& config) {
  Emitted e;
  if (config.input) {
    const auto p = expect_family<OpenFamilyPresentation>(load_presentation(config), config.command);
    const auto bounds = cover_to_complexity_bounds(p, need(config.c, "--c", config.command));
    e.json = io::to_json(bounds);
    std::ostringstream csv;
    csv << "n,word,ordinal,code_length\n";
    for (const auto& code : bounds.codes) {
      csv << code.n << ',' << code.word.str() << ',' << code.ordinal << ',' << code.code_length
          << '\n';
    }
    e.csv = csv.str();
    return e;
  }
  const auto table =
      ComplexityTable::from_m0(need(config.horizon, "--horizon or --input", config.command));
  e.json = io::to_json(table);
  std::ostringstream csv;
  csv << "x,condition,value\n";
  for (const auto& [key, value] : table.entries()) {
    csv << key.first.str() << ',' << key.second << ',' << value << '\n';
  }
  e.csv = csv.str();
  return e;
}

Emitted cmd_deficiency(const RunConfig& config) {
  auto in = open_input(config);
  const auto table = io::read_table(in);
  const std::size_t c = need(config.c, "--c", config.command);
  Emitted e;
  if (config.family) {
    const auto p = deficiency_family(table, c, need(config.nmin, "--nmin", config.command),
                                     need(config.nmax, "--nmax", config.command));
    std::ostringstream raw;
    io::write_presentation(raw, p);
    e.raw = raw.str();
    return e;
  }
  const auto report = deficiency_report(table, omega_of(config),
                                        need(config.horizon, "--horizon", config.command), c);
  e.json = io::to_json(report);
  std::ostringstream csv;
  csv << "prefix,length,d,dbar,exceeds_c\n";
  for (const auto& row : report.rows) {
    csv << row.prefix.str() << ',' << row.prefix.size() << ',' << row.deficiency << ','
        << row.extension_deficiency << ',' << (row.exceeds_c ? 1 : 0) << '\n';
  }
  e.csv = csv.str();
  return e;
}

Emitted cmd_randomness(const RunConfig& config) {
  auto in = open_input(config);
  const auto table = io::read_table(in);
  const auto report = randomness_report(table, omega_of(config), need(config.c, "--c", config.command));
  Emitted e;
  e.json = io::to_json(report);
  std::ostringstream csv;
  csv << "n\n";
  for (std::size_t n : report.qualifying) csv << n << '\n';
  e.csv = csv.str();
  return e;
}

Emitted cmd_freq(const RunConfig& config) {
  auto in = open_input(config);
  const auto table = limit_frequency(io::read_trace(in));
  Emitted e;
  e.json = io::to_json(table);
  std::ostringstream csv;
  csv << "x,frequency\n";
  for (const auto& [x, q] : table) csv << x << ',' << to_string(q) << '\n';
  e.csv = csv.str();
  return e;
}

Emitted cmd_trace_to_family(const RunConfig& config) {
  auto in = open_input(config);
  const auto trace = io::read_trace(in);
  const auto p = trace_to_family(trace, need(config.nmax, "--nmax", config.command),
                                 need(config.grid, "--grid", config.command));
  Emitted e;
  std::ostringstream raw;
  io::write_presentation(raw, p);
  e.raw = raw.str();
  return e;
}

using Handler = std::function<Emitted(const RunConfig&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"validate", cmd_validate},
      {"liminf", cmd_liminf},
      {"cover-sets", cmd_cover_sets},
      {"cover-semimeasure", [](const RunConfig& c) { return cover_semimeasure_command(c, false); }},
      {"cover-tree", [](const RunConfig& c) { return cover_semimeasure_command(c, true); }},
      {"cover-open", cmd_cover_open},
      {"cover-open-strong", cmd_cover_open_strong},
      {"decompose", cmd_decompose},
      {"lowbasis", cmd_lowbasis},
      {"complexity", cmd_complexity},
      {"deficiency", cmd_deficiency},
      {"randomness-report", cmd_randomness},
      {"freq", cmd_freq},
      {"trace-to-family", cmd_trace_to_family},
  };
  return table;
}

std::string render(const RunConfig& config, Emitted& emitted) {
  if (!emitted.raw.empty()) return emitted.raw;
  if (config.format == Format::kCsv) {
    if (emitted.csv.empty()) throw ConfigError(config.command + " has no CSV output");
    return emitted.csv;
  }
  Json document{{"command", config.command}};
  document.update(emitted.json);
  return document.dump(2) + "\n";
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{
      "validate",          "liminf",   "cover-sets", "cover-semimeasure", "cover-tree",
      "cover-open",        "cover-open-strong",      "decompose",         "lowbasis",
      "complexity",        "deficiency",             "randomness-report", "freq",
      "trace-to-family"};
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto it = handlers().find(config.command);
    if (it == handlers().end()) throw ConfigError("unknown command '" + config.command + "'");
    Emitted emitted = it->second(config);
    const std::string text = render(config, emitted);
    if (config.output) {
      std::ofstream file(*config.output, std::ios::binary);
      if (!file) throw ConfigError("cannot open output file '" + *config.output + "'");
      file << text;
    } else {
      out << text;
    }
    if (emitted.status == kValidationFailure) {
      err << "validation failed: ";
      for (const auto& v : emitted.json.at("violations")) {
        err << v.at("message").get<std::string>() << "; ";
      }
      err << '\n';
    }
    return emitted.status;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  }
}

std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"limitlab: executable limit-complexity constructions"};
  RunConfig config;
  std::optional<std::string> epsilon, epsilon_prime, grid, format;
  std::string command_help = "one of:";
  for (const auto& name : commands()) command_help += " " + name;

  app.add_option("command", config.command, command_help)->required();
  app.add_option("--input", config.input, "input file");
  app.add_option("--output", config.output, "output file (default: stdout)");
  app.add_option("--k", config.k, "capacity exponent for set families");
  app.add_option("--epsilon", epsilon, "measure bound as num/den");
  app.add_option("--epsilon-prime", epsilon_prime, "strong-cover bound as num/den");
  app.add_option("--c", config.c, "deficiency constant");
  app.add_option("--lmax", config.lmax, "longest candidate interval");
  app.add_option("--nmin", config.nmin, "first index of the deficiency family");
  app.add_option("--nmax", config.nmax, "last index tried / tail start");
  app.add_option("--horizon", config.horizon, "extension horizon / table length");
  app.add_option("--grid", grid, "comma-separated rationals, e.g. 0,1/8,1/4");
  app.add_option("--witness-length", config.witness_length, "length of the witness prefix");
  app.add_option("--omega", config.omega, "prefix of the sequence under test");
  app.add_flag("--family", config.family, "deficiency: emit the D_n open family");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }
  if (epsilon) config.epsilon = parse_rational(*epsilon);
  if (epsilon_prime) config.epsilon_prime = parse_rational(*epsilon_prime);
  if (grid) config.grid = io::parse_grid(*grid);
  if (format == "csv") config.format = Format::kCsv;
  return config;
}

}  // namespace limitlab::cli
