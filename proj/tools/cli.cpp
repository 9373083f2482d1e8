#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polya/error.hpp"
#include "polya/exact.hpp"
#include "polya/info.hpp"
#include "polya/montecarlo.hpp"
#include "polya/oracle.hpp"
#include "polya/permutations.hpp"

namespace polya::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string rule = "end";
  std::string d0 = "0";
  std::string d1 = "0";
  std::string seed = "01";
  std::optional<std::size_t> steps;
  std::size_t trials = 100;
  std::uint64_t master_seed = 0;
  std::size_t resolution = 11;
  std::string format = "csv";
  std::string out;
  std::optional<std::uint64_t> budget;
  unsigned threads = 0;
  std::size_t k_max = 4;
};

// A cell is text, an integer, or a real printed with 6 decimals.
using Cell = std::variant<std::string, std::int64_t, double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (const auto* s = std::get_if<std::string>(&row[i])) {
        os << csv_field(*s);
      } else if (const auto* n = std::get_if<std::int64_t>(&row[i])) {
        os << *n;
      } else {
        os << fixed6(std::get<double>(row[i]));
      }
    }
    os << '\n';
  }
}

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& col = t.columns[i];
      if (const auto* s = std::get_if<std::string>(&row[i])) {
        obj[col] = *s;
      } else if (const auto* n = std::get_if<std::int64_t>(&row[i])) {
        obj[col] = *n;
      } else {
        const double x = std::get<double>(row[i]);
        obj[col] = std::stod(fixed6(x));
        obj[col + "_full"] = x;
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

json meta_block(const Options& o) {
  json meta;
  meta["tool"] = "polya";
  meta["version"] = POLYA_VERSION;
  meta["command"] = o.command;
  json spec;
  spec["rule"] = o.rule;
  spec["delta0"] = o.d0;
  spec["delta1"] = o.d1;
  spec["seed"] = o.seed;
  if (o.steps) spec["steps"] = *o.steps;
  meta["spec"] = spec;
  meta["master_seed"] = o.master_seed;
  return meta;
}

void emit(std::ostream& os, const Options& o, const Table& t) {
  if (o.format == "json") {
    json doc;
    doc["meta"] = meta_block(o);
    doc["rows"] = table_json(t);
    os << doc.dump(2) << '\n';
  } else {
    write_csv(os, t);
  }
}

// Decimal or p/q; rationals are converted exactly to the nearest double.
double parse_noise_value(const std::string& text) {
  if (text.find('/') != std::string::npos) return to_double(parse_rational(text));
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("cannot parse noise value '" + text + "'");
  }
  if (used != text.size()) throw DomainError("cannot parse noise value '" + text + "'");
  return x;
}

NoiseParams float_noise(const Options& o) {
  return NoiseParams::make(parse_noise_value(o.d0), parse_noise_value(o.d1));
}

ModelSpec float_spec(const Options& o) {
  return ModelSpec::make(parse_rule(o.rule), float_noise(o), Word::parse(o.seed));
}

std::vector<Cell> capacity_row(const std::string& quantity, const CapacityValue& c) {
  return {quantity, c.value, std::string(kind_name(c.kind)), c.source};
}

Table cmd_exact(const Options& o) {
  const ModelSpec spec = float_spec(o);
  Table t{{"quantity", "value", "kind", "source"}, {}};
  switch (spec.rule) {
    case Rule::End:
      if (spec.noise.degenerate()) {
        const SymbolCounts c = symbol_counts(spec.seed);
        t.rows.push_back(capacity_row(
            "capacity", cap_end_noiseless(static_cast<unsigned>(c.zeros),
                                          static_cast<unsigned>(c.ones))));
      } else {
        t.rows.push_back(capacity_row("capacity", cap_end_noisy(spec.noise)));
      }
      break;
    case Rule::Interspersed:
      t.rows.push_back(capacity_row("capacity", cap_interspersed(spec.noise, spec.seed)));
      break;
    case Rule::Tandem:
      if (spec.noise.degenerate()) {
        t.rows.push_back(capacity_row("capacity", cap_tandem_noiseless()));
      } else if (spec.noise.delta0 == 1.0 && spec.noise.delta1 == 1.0) {
        const TandemComplementBounds b = cap_tandem_complement_bounds();
        t.rows.push_back(capacity_row("lower", b.lower));
        t.rows.push_back(capacity_row("upper", b.upper));
        t.rows.push_back(capacity_row("refined_upper", b.refined_upper));
      } else {
        t.rows.push_back(capacity_row("upper", cap_tandem_noisy_upper(spec.noise)));
      }
      break;
  }
  return t;
}

void cmd_enumerate(const Options& o, std::ostream& os) {
  const ExactModelSpec spec =
      ExactModelSpec::make(parse_rule(o.rule), ExactNoise::parse(o.d0, o.d1), Word::parse(o.seed));
  EnumerationLimits limits;
  if (o.budget) limits.max_work = *o.budget;
  const ExactDist dist = enumerate_distribution(spec, o.steps.value_or(0), limits);
  const double h = exact_entropy(dist);
  if (o.format == "json") {
    json doc;
    doc["meta"] = meta_block(o);
    json words = json::array();
    for (const auto& [w, p] : dist.probs) {
      words.push_back({{"word", w.to_string()}, {"probability", to_fraction_string(p)}});
    }
    doc["words"] = std::move(words);
    doc["entropy"] = std::stod(fixed6(h));
    doc["entropy_full"] = h;
    os << doc.dump(2) << '\n';
  } else {
    write_canonical(os, dist);
    os << "# entropy " << fixed6(h) << '\n';
  }
}

Table cmd_simulate(const Options& o) {
  const ModelSpec spec = float_spec(o);
  const SimConfig config =
      SimConfig::make(o.trials, o.steps.value_or(1000), o.master_seed,
                      RecordMode::RunningCounts, o.threads);
  const bool noisy = spec.noise.delta0 + spec.noise.delta1 > 0.0;
  Table t{{"quantity", "estimate", "standard_error", "target", "trials"}, {}};
  auto target = [&](std::optional<double> x) -> Cell {
    if (x) return *x;
    return std::string{};
  };
  const EstimateResult fr0 = estimate_symbol_freq(spec, config);
  t.rows.push_back({"fr_0", fr0.mean, fr0.standard_error,
                    target(noisy ? std::optional(limiting_freq_end(spec.noise)) : std::nullopt),
                    static_cast<std::int64_t>(fr0.trials)});
  if (spec.rule == Rule::Tandem && noisy) {
    const auto pairs = estimate_pair_freqs(spec, config);
    const PairFreqVector z = limiting_pair_freqs_tandem(spec.noise);
    const char* names[4] = {"fr_00", "fr_01", "fr_10", "fr_11"};
    for (std::size_t i = 0; i < 4; ++i) {
      t.rows.push_back({names[i], pairs[i].mean, pairs[i].standard_error, z[i],
                        static_cast<std::int64_t>(pairs[i].trials)});
    }
  }
  return t;
}

Table cmd_grid(const Options& o) {
  Table t{{"delta0", "delta1", "value", "kind"}, {}};
  for (const GridPoint& p : capacity_grid(parse_rule(o.rule), o.resolution)) {
    t.rows.push_back({p.delta0, p.delta1, p.capacity.value,
                      std::string(kind_name(p.capacity.kind))});
  }
  return t;
}

Table cmd_compare_tsb(const Options& o) {
  Table t{{"delta", "tandem_upper", "tsb_upper"}, {}};
  for (const TsbComparisonRow& r : compare_tsb(o.resolution)) {
    t.rows.push_back({r.delta, r.tandem_upper, r.tsb_upper});
  }
  return t;
}

Table cmd_signature(const Options& o) {
  SignatureLimits limits;
  if (o.budget) limits.max_block = static_cast<std::size_t>(*o.budget);
  if (o.k_max == 0) throw DomainError("--k-max must be >= 1");
  const auto rows = signature_block_entropies(o.k_max + 1, limits);
  Table t{{"quantity", "k", "value", "kind"}, {}};
  for (std::size_t k = 1; k <= o.k_max; ++k) {
    t.rows.push_back({"markov_upper", static_cast<std::int64_t>(k), rows[k].increment,
                      std::string(kind_name(CapacityKind::UpperBound))});
  }
  const std::string lower(kind_name(CapacityKind::LowerBound));
  t.rows.push_back({"lower_first_order", std::string{}, std::numbers::log2e / 2.0, lower});
  t.rows.push_back(
      {"lower", std::string{}, cap_tandem_complement_bounds().lower.value, lower});
  return t;
}

void add_model_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--rule", o.rule, "Duplication rule")
      ->check(CLI::IsMember({"end", "tandem", "int"}));
  cmd->add_option("--d0", o.d0, "Flip probability of a duplicated 0 (decimal or p/q)");
  cmd->add_option("--d1", o.d1, "Flip probability of a duplicated 1 (decimal or p/q)");
  cmd->add_option("--seed", o.seed, "Seed word over {0,1}");
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Output file (default: stdout)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Capacity, enumeration and simulation tools for duplication systems", "polya"};
  app.require_subcommand(1);

  auto* exact = app.add_subcommand("exact", "Closed-form capacities and bounds");
  add_model_options(exact, o);
  add_output_options(exact, o);

  auto* enumerate = app.add_subcommand("enumerate", "Exact law of S(n) in rational arithmetic");
  add_model_options(enumerate, o);
  add_output_options(enumerate, o);
  enumerate->add_option("--steps", o.steps, "Number of duplication steps");
  enumerate->add_option("--budget", o.budget, "Maximum projected expansion work");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo frequency estimates");
  add_model_options(simulate, o);
  add_output_options(simulate, o);
  simulate->add_option("--steps", o.steps, "Horizon n (default 1000)");
  simulate->add_option("--trials", o.trials, "Number of trajectories");
  simulate->add_option("--master-seed", o.master_seed, "Master seed");
  simulate->add_option("--threads", o.threads, "Worker threads (0: all cores)");

  auto* grid = app.add_subcommand("grid", "Capacity or bound over a (delta0, delta1) grid");
  grid->add_option("--rule", o.rule, "Duplication rule")
      ->check(CLI::IsMember({"end", "tandem", "int"}));
  grid->add_option("--resolution", o.resolution, "Points per axis");
  add_output_options(grid, o);

  auto* tsb = app.add_subcommand("compare-tsb", "Tandem bound against the substitution bound");
  tsb->add_option("--resolution", o.resolution, "Points on [0, 1], origin skipped");
  add_output_options(tsb, o);

  auto* sig = app.add_subcommand("signature", "Signature-process upper bound ladder");
  sig->add_option("--k-max", o.k_max, "Largest Markov order");
  sig->add_option("--budget", o.budget, "Largest block length");
  add_output_options(sig, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    std::ostringstream buffer;
    if (o.command == "exact") {
      emit(buffer, o, cmd_exact(o));
    } else if (o.command == "enumerate") {
      cmd_enumerate(o, buffer);
    } else if (o.command == "simulate") {
      emit(buffer, o, cmd_simulate(o));
    } else if (o.command == "grid") {
      emit(buffer, o, cmd_grid(o));
    } else if (o.command == "compare-tsb") {
      emit(buffer, o, cmd_compare_tsb(o));
    } else {
      emit(buffer, o, cmd_signature(o));
    }
    if (o.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!(file << buffer.str())) {
        err << "error: cannot write " << o.out << '\n';
        return kExitUsage;
      }
    }
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace polya::cli
