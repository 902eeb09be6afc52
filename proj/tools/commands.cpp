#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "necklace/counting.hpp"
#include "necklace/cycle_index.hpp"
#include "necklace/montecarlo.hpp"
#include "necklace/oracle.hpp"
#include "necklace/stats.hpp"

namespace necklace::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact integers travel as decimal strings in every format.
struct Exact {
  std::string digits;
};

using Cell = std::variant<std::monostate, std::int64_t, double, bool, Exact, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Envelope {
  explicit Envelope(std::string name) : command(std::move(name)) {}

  std::string command;
  ordered_json parameters = ordered_json::object();
  std::vector<Table> tables;
};

struct OutputOptions {
  std::string format = "csv";
  std::string path;
  bool quiet = false;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& cell) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const Exact& v) const { return v.digits; }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
  } visitor;
  return std::visit(visitor, cell);
}

ordered_json json_cell(const Cell& cell) {
  struct {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(std::int64_t v) const { return v; }
    ordered_json operator()(double v) const { return v; }
    ordered_json operator()(bool v) const { return v; }
    ordered_json operator()(const Exact& v) const { return v.digits; }
    ordered_json operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, cell);
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

std::string render_csv(const Envelope& env, bool quiet) {
  std::ostringstream os;
  if (!quiet) {
    os << "# command=" << env.command << '\n';
    for (const auto& [key, value] : env.parameters.items())
      os << "# " << key << '=' << scalar_text(value) << '\n';
  }
  for (std::size_t t = 0; t < env.tables.size(); ++t) {
    const Table& table = env.tables[t];
    if (t > 0) os << "\n# " << table.name << '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      os << (c ? "," : "") << table.columns[c];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
      os << '\n';
    }
  }
  return os.str();
}

std::string render_json(const Envelope& env, bool quiet) {
  ordered_json doc;
  doc["command"] = env.command;
  if (!quiet) doc["parameters"] = env.parameters;
  for (const Table& table : env.tables) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json record = ordered_json::object();
      for (std::size_t c = 0; c < row.size(); ++c) record[table.columns[c]] = json_cell(row[c]);
      rows.push_back(std::move(record));
    }
    doc[table.name] = std::move(rows);
  }
  return doc.dump(2) + "\n";
}

void emit(const std::string& text, const OutputOptions& opts, std::ostream& out) {
  if (opts.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file: " + opts.path);
  file << text;
  if (!file) throw UsageError("failed writing output file: " + opts.path);
}

void emit(const Envelope& env, const OutputOptions& opts, std::ostream& out) {
  emit(opts.format == "json" ? render_json(env, opts.quiet) : render_csv(env, opts.quiet), opts,
       out);
}

void add_output_options(CLI::App* cmd, OutputOptions& opts, bool allow_text = false) {
  std::vector<std::string> formats{"csv", "json"};
  if (allow_text) formats.insert(formats.begin(), "text");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--out", opts.path, "Write output to PATH instead of stdout");
  cmd->add_flag("--quiet", opts.quiet, "Omit the parameter echo");
}

Exact exact(const BigCount& v) { return {v.str()}; }
Exact exact(std::uint64_t v) { return {std::to_string(v)}; }

Cell fit_cell(const std::optional<GaussianFit>& fit, double GaussianFit::*field) {
  if (!fit) return std::monostate{};
  return (*fit).*field;
}

ContentRatio parse_ratio(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("ratio must look like GC:AT, e.g. 2:1");
  try {
    std::size_t used_gc = 0, used_at = 0;
    const std::string gc = text.substr(0, colon), at = text.substr(colon + 1);
    ContentRatio ratio{std::stoll(gc, &used_gc), std::stoll(at, &used_at)};
    if (used_gc != gc.size() || used_at != at.size()) throw std::invalid_argument(text);
    if (ratio.gc < 1 || ratio.at < 1) throw UsageError("ratio parts must be positive");
    return ratio;
  } catch (const std::logic_error&) {
    throw UsageError("ratio must look like GC:AT, e.g. 2:1");
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  return cells;
}

// Reads a pdf from a CSV with "alpha" and "probability" columns; lines
// starting with '#' are skipped. The pdf subcommand's output is accepted.
DiscretePdf read_pdf_csv(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open input file: " + path);
  DiscretePdf pdf;
  int alpha_col = -1, prob_col = -1;
  std::string line;
  while (std::getline(file, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto cells = split_csv_line(line);
    if (alpha_col < 0) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == "alpha") alpha_col = static_cast<int>(i);
        if (cells[i] == "probability") prob_col = static_cast<int>(i);
      }
      if (alpha_col < 0 || prob_col < 0)
        throw UsageError("input needs 'alpha' and 'probability' header columns");
      continue;
    }
    if (static_cast<int>(cells.size()) <= std::max(alpha_col, prob_col))
      throw UsageError("short row in input: " + line);
    try {
      pdf.entries[std::stoll(cells[alpha_col])] = std::stod(cells[prob_col]);
    } catch (const std::logic_error&) {
      throw UsageError("unparsable row in input: " + line);
    }
  }
  if (alpha_col < 0) throw UsageError("input has no header row: " + path);
  return pdf;
}

// ---------------------------------------------------------------------------

struct CountArgs {
  std::int64_t alpha = 0, at = 0, gc = 0;
  OutputOptions out{"text", "", false};
};

void run_count(const CountArgs& a, std::ostream& out) {
  const BigCount count = count_for_alternations(a.alpha, NecklaceSpec(a.at, a.gc));
  if (a.out.format == "text") {
    emit(count.str() + "\n", a.out, out);
    return;
  }
  Envelope env{"count"};
  env.parameters = {{"alpha", a.alpha}, {"n_at", a.at}, {"n_gc", a.gc}};
  env.tables.push_back({"rows", {"alpha", "n_at", "n_gc", "count"}, {{a.alpha, a.at, a.gc, exact(count)}}});
  emit(env, a.out, out);
}

struct PdfArgs {
  std::int64_t at = 0, gc = 0;
  OutputOptions out;
};

void run_pdf(const PdfArgs& a, std::ostream& out) {
  const NecklaceSpec spec(a.at, a.gc);
  const AlternationDistribution dist = alternation_distribution(spec);
  BigCount total = 0;
  for (const auto& [alpha, count] : dist) total += count;

  Envelope env{"pdf"};
  env.parameters = {{"n_at", a.at}, {"n_gc", a.gc}, {"weighting", "class-uniform"}, {"total", total.str()}};
  Table table{"rows", {"alpha", "count", "probability"}, {}};
  for (const auto& [alpha, count] : dist)
    table.rows.push_back({alpha, exact(count), ratio_to_double(count, total)});
  env.tables.push_back(std::move(table));
  emit(env, a.out, out);
}

struct McArgs {
  std::int64_t at = 0, gc = 0, runs = 20000, sets = 5;
  std::uint64_t seed = 1;
  OutputOptions out;
};

void run_mc(const McArgs& a, std::ostream& out) {
  const MCConfig config{NecklaceSpec(a.at, a.gc), a.runs, a.seed, a.sets};
  const auto sets = simulate_sets(config);
  const DiscretePdf theory = theoretical_pdf(config.spec);

  Envelope env{"mc"};
  env.parameters = {{"n_at", a.at}, {"n_gc", a.gc}, {"runs", a.runs}, {"sets", a.sets},
                    {"seed", std::to_string(a.seed)}, {"prng", std::string(RandomStream::kAlgorithm)},
                    {"sub_seed_rule", "splitmix64(seed + (set + 1) * 0x9E3779B97F4A7C15)"}};
  Table pdf_rows{"rows", {"set", "alpha", "hits", "probability", "theoretical"}, {}};
  Table set_rows{"sets", {"set", "sub_seed", "runs", "d"}, {}};
  for (const auto& s : sets) {
    for (const auto& [alpha, hits] : s.histogram)
      pdf_rows.rows.push_back({s.index, alpha, hits, s.pdf.at(alpha), theory.at(alpha)});
    set_rows.rows.push_back({s.index, exact(s.sub_seed), a.runs, s.distance});
  }
  env.tables.push_back(std::move(pdf_rows));
  env.tables.push_back(std::move(set_rows));
  emit(env, a.out, out);
}

struct ConvergeArgs {
  std::int64_t at = 0, gc = 0, sets = 5;
  std::vector<std::int64_t> runs{1000, 5000, 20000};
  std::uint64_t seed = 1;
  OutputOptions out;
};

void run_converge(const ConvergeArgs& a, std::ostream& out) {
  const auto rows = convergence_study(NecklaceSpec(a.at, a.gc), a.runs, a.sets, a.seed);
  Envelope env{"converge"};
  env.parameters = {{"n_at", a.at}, {"n_gc", a.gc}, {"sets", a.sets}, {"seed", std::to_string(a.seed)},
                    {"prng", std::string(RandomStream::kAlgorithm)},
                    {"sub_seed_rule", "splitmix64(seed + (row * sets + set + 1) * 0x9E3779B97F4A7C15)"}};
  Table table{"rows", {"runs", "mean_d", "stddev_d", "sub_seeds"}, {}};
  for (const auto& r : rows) {
    std::string seeds;
    for (auto s : r.sub_seeds) seeds += (seeds.empty() ? "" : ";") + std::to_string(s);
    table.rows.push_back({r.runs, r.mean_distance, r.stddev_distance, seeds});
  }
  env.tables.push_back(std::move(table));
  emit(env, a.out, out);
}

struct FitArgs {
  std::int64_t at = -1, gc = -1;
  std::string input;
  OutputOptions out;
};

void run_fit(const FitArgs& a, std::ostream& out) {
  Envelope env{"fit"};
  DiscretePdf pdf;
  if (!a.input.empty()) {
    pdf = read_pdf_csv(a.input);
    env.parameters = {{"input", a.input}};
  } else {
    if (a.at < 0 || a.gc < 0) throw UsageError("fit needs --at and --gc, or --input");
    pdf = theoretical_pdf(NecklaceSpec(a.at, a.gc));
    env.parameters = {{"n_at", a.at}, {"n_gc", a.gc}};
  }
  env.parameters["method"] = "unweighted Levenberg-Marquardt over nonzero support";
  const GaussianFit fit = fit_gaussian(pdf);
  env.tables.push_back({"rows", {"alpha0", "sigma", "amplitude", "rmse"},
                        {{fit.alpha0, fit.sigma, fit.amplitude, fit.rmse}}});
  emit(env, a.out, out);
}

struct SweepArgs {
  std::string mode;
  std::int64_t at = 100;
  std::vector<std::int64_t> gc;
  std::string ratio = "1:1";
  std::vector<std::int64_t> lengths;
  OutputOptions out;
};

void run_sweep(const SweepArgs& a, std::ostream& out) {
  Envelope env{"sweep"};
  if (a.mode == "fixed-at") {
    if (a.gc.empty()) throw UsageError("fixed-at sweep needs --gc values");
    env.parameters = {{"mode", a.mode}, {"n_at", a.at}};
    Table table{"rows", {"n_at", "n_gc", "alpha0", "sigma", "max_pg", "rmse", "error"}, {}};
    for (const auto& r : sweep_fixed_at(a.at, a.gc))
      table.rows.push_back({r.n_at, r.n_gc, fit_cell(r.fit, &GaussianFit::alpha0),
                            fit_cell(r.fit, &GaussianFit::sigma), fit_cell(r.fit, &GaussianFit::amplitude),
                            fit_cell(r.fit, &GaussianFit::rmse), r.error});
    env.tables.push_back(std::move(table));
  } else {
    if (a.lengths.empty()) throw UsageError("fixed-ratio sweep needs --n values");
    const ContentRatio ratio = parse_ratio(a.ratio);
    env.parameters = {{"mode", a.mode}, {"ratio_gc_to_at", a.ratio},
                      {"rounding", "n_at = nearest integer to N*at/(gc+at), halves up"}};
    const RatioSweep sweep = sweep_fixed_ratio(ratio, a.lengths);
    Table table{"rows", {"n", "n_at", "n_gc", "rounded", "alpha0", "sigma", "max_pg", "rmse", "error"}, {}};
    for (const auto& r : sweep.rows)
      table.rows.push_back({r.length, r.n_at, r.n_gc, r.rounded, fit_cell(r.fit, &GaussianFit::alpha0),
                            fit_cell(r.fit, &GaussianFit::sigma), fit_cell(r.fit, &GaussianFit::amplitude),
                            fit_cell(r.fit, &GaussianFit::rmse), r.error});
    env.tables.push_back(std::move(table));
    Cell slope = sweep.slope ? Cell(*sweep.slope) : Cell(std::monostate{});
    env.tables.push_back({"summary", {"slope"}, {{slope}}});
  }
  emit(env, a.out, out);
}

struct OracleArgs {
  std::int64_t n = 0;
  std::optional<std::int64_t> at, alpha;
  OutputOptions out;
};

void run_oracle(const OracleArgs& a, std::ostream& out) {
  const OracleTable buckets = enumerate_all(a.n);
  Envelope env{"oracle"};
  env.parameters = {{"n", a.n}, {"canonicalization", "min over 2N rotations and reflections"}};
  if (a.at) env.parameters["filter_n_at"] = *a.at;
  if (a.alpha) env.parameters["filter_alpha"] = *a.alpha;
  Table table{"rows", {"n_at", "alpha", "count"}, {}};
  for (const auto& [key, count] : buckets) {
    if (a.at && key.first != *a.at) continue;
    if (a.alpha && key.second != *a.alpha) continue;
    table.rows.push_back({key.first, key.second, exact(count)});
  }
  env.tables.push_back(std::move(table));
  emit(env, a.out, out);
}

struct IndexArgs {
  std::int64_t m = 1;
  std::string group = "dihedral";
};

void run_index(const IndexArgs& a, std::ostream& out) {
  const auto index = a.group == "cyclic" ? cyclic_bipartite_index(a.m) : dihedral_bipartite_index(a.m);
  out << index.to_string() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact alternation statistics of two-coloured DNA necklaces"};
  app.name(args.empty() ? "necklace" : args.front());
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Necklaces with a given alternation count and content");
  count->add_option("--alpha", count_args.alpha, "Alternation count (even)")->required();
  count->add_option("--at", count_args.at, "AT (white) beads")->required();
  count->add_option("--gc", count_args.gc, "GC (black) beads")->required();
  add_output_options(count, count_args.out, /*allow_text=*/true);

  PdfArgs pdf_args;
  auto* pdf = app.add_subcommand("pdf", "Exact alternation distribution");
  pdf->add_option("--at", pdf_args.at)->required();
  pdf->add_option("--gc", pdf_args.gc)->required();
  add_output_options(pdf, pdf_args.out);

  McArgs mc_args;
  auto* mc = app.add_subcommand("mc", "Monte Carlo alternation histogram of random chains");
  mc->add_option("--at", mc_args.at)->required();
  mc->add_option("--gc", mc_args.gc)->required();
  mc->add_option("--runs", mc_args.runs, "Chains per set")->capture_default_str();
  mc->add_option("--seed", mc_args.seed, "Master seed")->capture_default_str();
  mc->add_option("--sets", mc_args.sets, "Independent sets")->capture_default_str();
  add_output_options(mc, mc_args.out);

  ConvergeArgs conv_args;
  auto* conv = app.add_subcommand("converge", "Mean/std of d(N_MC) over repeated sets");
  conv->add_option("--at", conv_args.at)->required();
  conv->add_option("--gc", conv_args.gc)->required();
  conv->add_option("--runs", conv_args.runs, "Comma-separated N_MC values")->delimiter(',')->capture_default_str();
  conv->add_option("--sets", conv_args.sets)->capture_default_str();
  conv->add_option("--seed", conv_args.seed)->capture_default_str();
  add_output_options(conv, conv_args.out);

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "Gaussian fit of the exact pdf or of a pdf CSV file");
  auto* fit_at = fit->add_option("--at", fit_args.at);
  auto* fit_gc = fit->add_option("--gc", fit_args.gc);
  auto* fit_in = fit->add_option("--input", fit_args.input, "CSV with alpha,probability columns");
  fit_in->excludes(fit_at)->excludes(fit_gc);
  add_output_options(fit, fit_args.out);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Gaussian characteristics across contents");
  sweep->add_option("--mode", sweep_args.mode)->required()->check(CLI::IsMember({"fixed-at", "fixed-ratio"}));
  sweep->add_option("--at", sweep_args.at, "fixed-at: AT beads")->capture_default_str();
  sweep->add_option("--gc", sweep_args.gc, "fixed-at: comma-separated GC values")->delimiter(',');
  sweep->add_option("--ratio", sweep_args.ratio, "fixed-ratio: GC:AT")->capture_default_str();
  sweep->add_option("--n", sweep_args.lengths, "fixed-ratio: comma-separated ring lengths")->delimiter(',');
  add_output_options(sweep, sweep_args.out);

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Brute-force bracelet enumeration (N <= 18)");
  oracle->add_option("--n", oracle_args.n, "Ring length")->required();
  oracle->add_option("--at", oracle_args.at, "Keep only this AT count");
  oracle->add_option("--alpha", oracle_args.alpha, "Keep only this alternation count");
  add_output_options(oracle, oracle_args.out);

  IndexArgs index_args;
  auto* index = app.add_subcommand("index", "Print a bipartite cycle index");
  index->add_option("--m", index_args.m, "Containers per colour")->required();
  index->add_option("--group", index_args.group)->check(CLI::IsMember({"dihedral", "cyclic"}))->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("necklace");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (count->parsed()) run_count(count_args, out);
    else if (pdf->parsed()) run_pdf(pdf_args, out);
    else if (mc->parsed()) run_mc(mc_args, out);
    else if (conv->parsed()) run_converge(conv_args, out);
    else if (fit->parsed()) run_fit(fit_args, out);
    else if (sweep->parsed()) run_sweep(sweep_args, out);
    else if (oracle->parsed()) run_oracle(oracle_args, out);
    else if (index->parsed()) run_index(index_args, out);
  } catch (const IntegralityError& e) {
    err << "internal error: " << e.what() << '\n';
    return kIntegrityError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const FitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kSuccess;
}

}  // namespace necklace::cli
