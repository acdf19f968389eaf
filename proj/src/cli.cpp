#include "fbmcusum/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fbmcusum/changepoint.hpp"
#include "fbmcusum/estimators.hpp"
#include "fbmcusum/fgn.hpp"
#include "fbmcusum/ks.hpp"
#include "fbmcusum/montecarlo.hpp"

namespace fbmcusum {

using nlohmann::json;

namespace {

// Above this preliminary estimate the first-order statistic is not reported
// next to the second-order one under --order auto.
constexpr double kAutoFirstOrderBelow = 0.7;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> parse_number(const std::string& field) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json input_digest(const SamplePath& path, const std::optional<std::string>& file) {
  const IncrementSeries inc = increments(path, Order::First);
  double mean = 0.0;
  std::size_t zeros = 0;
  for (double d : inc.values) {
    mean += d;
    if (d == 0.0) ++zeros;
  }
  mean /= static_cast<double>(inc.size());
  double ss = 0.0;
  for (double d : inc.values) ss += (d - mean) * (d - mean);
  json j{{"n", path.n()},
         {"increment_mean", mean},
         {"increment_sd", std::sqrt(ss / static_cast<double>(inc.size()))},
         {"zero_increments", zeros}};
  if (file) {
    std::ifstream in(*file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    j["fnv1a64"] = fnv1a_hex(buf.str());
  }
  return j;
}

Order resolve_test_order(OrderChoice choice) {
  return choice == OrderChoice::First ? Order::First : Order::Second;
}

// Monte Carlo runs resolve auto to the first-order statistic where it is valid.
Order resolve_mc_order(OrderChoice choice, double hurst) {
  if (choice == OrderChoice::Auto) return hurst < 0.75 ? Order::First : Order::Second;
  return choice == OrderChoice::First ? Order::First : Order::Second;
}

SamplePath load_input(const RunConfig& cfg) { return read_series(*cfg.input_path, cfg.data_kind); }

std::string trace_csv(const CusumResult& r) {
  std::ostringstream os;
  os << "m,s\n";
  for (std::size_t m = 1; m <= r.trace.size(); ++m) os << m << ',' << format_double(r.trace[m - 1]) << '\n';
  return os.str();
}

json base_report(const RunConfig& cfg) {
  return json{{"command", to_string(cfg.command)}, {"version", kToolVersion}, {"config", cfg.to_json()}};
}

json mc_to_json(const McReport& rep, const McExperiment& exp) {
  json rates = json::object();
  for (const auto& [alpha, rate] : rep.rejection_rate) rates[format_double(alpha)] = rate;
  return json{{"reps", exp.reps},
              {"n", exp.n},
              {"order", to_string(exp.order)},
              {"percentiles", rep.percentiles},
              {"coverage", rep.coverage},
              {"rejection_rate", rates},
              {"ks_fit_distance", ks_fit_distance(rep)},
              {"degenerate", rep.degenerate},
              {"summary",
               {{"mean", rep.summary.mean},
                {"min", rep.summary.min},
                {"q25", rep.summary.q25},
                {"median", rep.summary.median},
                {"q75", rep.summary.q75},
                {"max", rep.summary.max}}},
              {"statistics", rep.statistics}};
}

std::string curves_csv(const McReport& rep) {
  std::ostringstream os;
  os << "percentile,level,coverage,type_ii_error\n";
  for (const CurveRow& row : size_power_curves(rep)) {
    os << format_double(row.percentile) << ',' << format_double(row.level) << ','
       << format_double(row.coverage) << ',' << format_double(row.type_ii_error) << '\n';
  }
  return os.str();
}

std::string run_simulate(const RunConfig& cfg) {
  const HurstParams pre{cfg.hurst, cfg.sigma};
  const Seed seed{cfg.seed, 0};
  SamplePath path;
  if (cfg.hurst2 || cfg.sigma2) {
    const ChangeSpec spec{cfg.theta, pre, {cfg.hurst2.value_or(cfg.hurst), cfg.sigma2.value_or(cfg.sigma)}, cfg.glue};
    path = sample_path_with_change(spec, cfg.n, seed);
  } else {
    path = sample_path(pre, cfg.n, seed);
  }
  if (cfg.format == OutputFormat::Csv) {
    std::ostringstream os;
    write_path_csv(os, path);
    return os.str();
  }
  json rep = base_report(cfg);
  rep["n"] = path.n();
  rep["levels"] = path.values();
  return rep.dump(2) + "\n";
}

struct TestOutcome {
  CusumResult main;
  std::optional<CusumResult> order_one;
  std::optional<HurstEstimate> hurst;
};

TestOutcome run_main_test(const RunConfig& cfg, const SamplePath& path) {
  TestOutcome out;
  try {
    out.hurst = hurst_qv_ratio(path);
  } catch (const DegenerateDataError&) {
  }
  out.main = run_test(path, cfg.alpha, resolve_test_order(cfg.order), cfg.lrv);
  if (cfg.order == OrderChoice::Auto && out.hurst && out.hurst->hurst < kAutoFirstOrderBelow) {
    out.order_one = run_test(path, cfg.alpha, Order::First, cfg.lrv);
  }
  return out;
}

void add_test_fields(json& rep, const RunConfig& cfg, const TestOutcome& t) {
  rep["order"] = to_string(t.main.order);
  rep["statistic"] = t.main.statistic;
  rep["p_value"] = t.main.p_value;
  rep["reject"] = t.main.rejects(cfg.alpha);
  rep["critical_value"] = ks_quantile(1.0 - cfg.alpha);
  rep["long_run_sd"] = t.main.long_run_sd;
  rep["argmax_index"] = t.main.argmax_index;
  json levels = json::object();
  for (const auto& [alpha, rej] : t.main.reject_at) levels[format_double(alpha)] = rej;
  rep["reject_at"] = levels;
  if (t.hurst) {
    rep["hurst_estimate"] = {{"value", t.hurst->hurst},
                             {"method", to_string(t.hurst->method)},
                             {"in_range", t.hurst->in_range()}};
  }
  if (t.order_one) rep["order_one"] = to_json(*t.order_one);
}

std::string run_test_command(const RunConfig& cfg) {
  const SamplePath path = load_input(cfg);
  const TestOutcome t = run_main_test(cfg, path);
  if (cfg.format == OutputFormat::Csv) return trace_csv(t.main);
  json rep = base_report(cfg);
  rep["input"] = input_digest(path, cfg.input_path);
  rep["n"] = path.n();
  add_test_fields(rep, cfg, t);
  return rep.dump(2) + "\n";
}

std::string run_breakpoint(const RunConfig& cfg) {
  const SamplePath path = load_input(cfg);
  const TestOutcome t = run_main_test(cfg, path);
  const BreakEstimate brk = estimate_break(t.main);
  const ChangeDiagnosis diag = discriminate(path, brk, DiscriminationConfig{cfg.delta});
  if (cfg.format == OutputFormat::Csv) return trace_csv(t.main);
  json rep = base_report(cfg);
  rep["input"] = input_digest(path, cfg.input_path);
  rep["n"] = path.n();
  add_test_fields(rep, cfg, t);
  rep["theta_hat"] = brk.theta_hat;
  rep["break_index"] = brk.index;
  rep["q_ratio"] = diag.q_ratio;
  rep["verdict"] = to_string(diag.verdict);
  rep["thresholds"] = {{"lower", DiscriminationConfig{cfg.delta}.lower(path.n())},
                       {"upper", DiscriminationConfig{cfg.delta}.upper(path.n())}};
  if (diag.sigma_ratio_estimate) rep["sigma_ratio_estimate"] = *diag.sigma_ratio_estimate;
  if (diag.zero_denominator) rep["zero_denominator"] = true;
  return rep.dump(2) + "\n";
}

std::string run_blocks(const RunConfig& cfg) {
  const SamplePath path = load_input(cfg);
  const BlockScan scan = block_scan(path, cfg.block_len, cfg.alpha, resolve_test_order(cfg.order), cfg.lrv);
  if (cfg.format == OutputFormat::Csv) {
    std::ostringstream os;
    os << "block,start,length,statistic,p_value,reject,hurst,degenerate\n";
    for (std::size_t i = 0; i < scan.blocks.size(); ++i) {
      const BlockResult& b = scan.blocks[i];
      os << i << ',' << b.start << ',' << b.length << ',';
      if (b.test) {
        os << format_double(b.test->statistic) << ',' << format_double(b.test->p_value) << ','
           << (b.test->rejects(cfg.alpha) ? 1 : 0);
      } else {
        os << ",,";
      }
      os << ',' << (b.hurst ? format_double(b.hurst->hurst) : std::string()) << ',' << (b.degenerate ? 1 : 0)
         << '\n';
    }
    return os.str();
  }
  json rep = base_report(cfg);
  rep["input"] = input_digest(path, cfg.input_path);
  rep["n"] = path.n();
  json blocks = json::array();
  for (const BlockResult& b : scan.blocks) {
    json jb{{"start", b.start}, {"length", b.length}, {"degenerate", b.degenerate}};
    if (b.test) {
      jb["statistic"] = b.test->statistic;
      jb["p_value"] = b.test->p_value;
      jb["reject"] = b.test->rejects(cfg.alpha);
    }
    if (b.hurst) jb["hurst"] = b.hurst->hurst;
    if (!b.error.empty()) jb["error"] = b.error;
    blocks.push_back(std::move(jb));
  }
  rep["per_block"] = std::move(blocks);
  rep["blocks_tested"] = scan.tested;
  rep["blocks_rejected"] = scan.rejected;
  rep["non_rejection_fraction"] = scan.non_rejection_fraction();
  return rep.dump(2) + "\n";
}

std::string run_mc(const RunConfig& cfg) {
  McExperiment exp;
  exp.null_params = {cfg.hurst, cfg.sigma};
  exp.n = cfg.n;
  exp.reps = cfg.reps;
  exp.order = resolve_mc_order(cfg.order, cfg.hurst);
  exp.lrv = cfg.lrv;
  exp.master_seed = cfg.seed;
  exp.alpha_grid = kReportLevels;
  if (std::find(exp.alpha_grid.begin(), exp.alpha_grid.end(), cfg.alpha) == exp.alpha_grid.end()) {
    exp.alpha_grid.push_back(cfg.alpha);
  }
  if (cfg.command == Command::McPower) {
    exp.scenario = Scenario::Power;
    exp.alt_spec = ChangeSpec{cfg.theta,
                              exp.null_params,
                              {cfg.hurst2.value_or(cfg.hurst), cfg.sigma2.value_or(cfg.sigma)},
                              cfg.glue};
  }
  const McReport rep = run_experiment(exp, cfg.threads);
  if (cfg.format == OutputFormat::Csv) return curves_csv(rep);
  json out = base_report(cfg);
  out["n"] = cfg.n;
  out["mc"] = mc_to_json(rep, exp);
  return out.dump(2) + "\n";
}

std::string run_ks_table(const RunConfig& cfg) {
  const std::vector<double> probs = {0.50, 0.80, 0.90, 0.95, 0.975, 0.99, 0.995, 0.999};
  if (cfg.format == OutputFormat::Csv) {
    std::ostringstream os;
    os << "p,quantile\n";
    for (double p : probs) os << format_double(p) << ',' << format_double(ks_quantile(p)) << '\n';
    return os.str();
  }
  json rep = base_report(cfg);
  json q = json::object();
  for (double p : probs) q[format_double(p)] = ks_quantile(p);
  rep["quantiles"] = q;
  return rep.dump(2) + "\n";
}

}  // namespace

SeriesParseError::SeriesParseError(const std::string& path, std::size_t line, const std::string& what)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

SamplePath parse_series(std::istream& in, DataKind kind, const std::string& name) {
  std::vector<double> values;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_row = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const bool first_row = !seen_row;
    seen_row = true;

    std::string field = line;
    if (const auto comma = line.find(','); comma != std::string::npos) {
      if (line.find(',', comma + 1) != std::string::npos) {
        throw SeriesParseError(name, line_no, "expected one or two comma-separated fields");
      }
      field = trim(std::string_view(line).substr(comma + 1));
    }
    const auto v = parse_number(field);
    if (!v) {
      if (first_row) continue;  // header
      throw SeriesParseError(name, line_no, "not a number: '" + field + "'");
    }
    if (!std::isfinite(*v)) throw SeriesParseError(name, line_no, "non-finite value");
    values.push_back(*v);
  }
  if (values.empty()) throw SeriesParseError(name, line_no, "no data rows");
  if (kind == DataKind::Increments) return SamplePath::from_increments(values);
  if (values.size() < 2) throw SeriesParseError(name, line_no, "levels need at least two rows");
  return SamplePath::from_levels(std::move(values));
}

SamplePath read_series(const std::string& path, DataKind kind) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  return parse_series(in, kind, path);
}

void write_path_csv(std::ostream& out, const SamplePath& path) {
  out << "t,level\n";
  const double n = static_cast<double>(path.n());
  for (std::size_t j = 0; j <= path.n(); ++j) {
    out << format_double(static_cast<double>(j) / n) << ',' << format_double(path[j]) << '\n';
  }
}

std::string to_string(Command command) {
  switch (command) {
    case Command::Simulate:
      return "simulate";
    case Command::Test:
      return "test";
    case Command::Breakpoint:
      return "breakpoint";
    case Command::Blocks:
      return "blocks";
    case Command::McSize:
      return "mc-size";
    case Command::McPower:
      return "mc-power";
    case Command::KsTable:
      return "ks-table";
  }
  return "unknown";
}

void RunConfig::validate() const {
  const bool needs_input =
      command == Command::Test || command == Command::Breakpoint || command == Command::Blocks;
  if (needs_input && !input_path) throw UsageError(to_string(command) + " needs an input file");
  if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
  if (command == Command::Blocks && block_len == 0) throw UsageError("blocks needs --block-len");
  if (command == Command::McPower && !hurst2 && !sigma2) {
    throw UsageError("mc-power needs --h2 and/or --sigma2");
  }
  if (command == Command::Simulate || command == Command::McSize || command == Command::McPower) {
    if (n < 1) throw UsageError("--n must be positive");
  }
  if (threads < 1) throw UsageError("--threads must be positive");
}

json RunConfig::to_json() const {
  json j{{"command", to_string(command)},
         {"data_kind", data_kind == DataKind::Levels ? "levels" : "increments"},
         {"alpha", alpha},
         {"order", order == OrderChoice::Auto ? "auto" : (order == OrderChoice::First ? "1" : "2")},
         {"kernel", to_string(lrv.kernel)},
         {"seed", seed},
         {"format", format == OutputFormat::Json ? "json" : "csv"},
         {"h", hurst},
         {"sigma", sigma},
         {"theta", theta},
         {"glue", to_string(glue)},
         {"n", n},
         {"reps", reps},
         {"delta", delta},
         {"threads", threads}};
  j["bandwidth"] = lrv.bandwidth ? json(*lrv.bandwidth) : json("auto");
  if (input_path) j["input"] = *input_path;
  if (out_path) j["out"] = *out_path;
  if (hurst2) j["h2"] = *hurst2;
  if (sigma2) j["sigma2"] = *sigma2;
  if (block_len > 0) j["block_len"] = block_len;
  return j;
}

json to_json(const CusumResult& r, bool with_trace) {
  json levels = json::object();
  for (const auto& [alpha, rej] : r.reject_at) levels[format_double(alpha)] = rej;
  json j{{"order", to_string(r.order)},     {"statistic", r.statistic},
         {"p_value", r.p_value},            {"argmax_index", r.argmax_index},
         {"long_run_sd", r.long_run_sd},    {"reject_at", levels}};
  if (with_trace) j["trace"] = r.trace;
  return j;
}

std::string execute(const RunConfig& config) {
  config.validate();
  switch (config.command) {
    case Command::Simulate:
      return run_simulate(config);
    case Command::Test:
      return run_test_command(config);
    case Command::Breakpoint:
      return run_breakpoint(config);
    case Command::Blocks:
      return run_blocks(config);
    case Command::McSize:
    case Command::McPower:
      return run_mc(config);
    case Command::KsTable:
      return run_ks_table(config);
  }
  throw UsageError("unknown command");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cusum change-point tests for the Hurst exponent and volatility of fractional Brownian motion",
               "fbm-cusum"};
  app.require_subcommand(1);
  // --h is the Hurst exponent, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", kToolVersion);

  RunConfig cfg;
  std::string order = "auto";
  std::string kernel = "bartlett";
  std::string bandwidth = "auto";
  std::string kind = "levels";
  std::string format;
  std::string glue = "independent";
  std::string input;
  std::string out_file;
  double h2 = 0.0, sigma2 = 0.0;
  bool full_scale = false;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out,-o", out_file, "Write the report to this file instead of stdout");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input,--input,-i", input, "CSV series: one value per row, optional label column")
        ->required();
    sub->add_option("--data-kind", kind, "Whether rows are levels or increments")
        ->check(CLI::IsMember({"levels", "increments"}));
  };
  auto add_test = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "Test level")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--order", order, "Increment order: 1, 2 or auto")->check(CLI::IsMember({"1", "2", "auto"}));
    sub->add_option("--kernel", kernel, "Long-run variance kernel")
        ->check(CLI::IsMember({"bartlett", "flat", "literal"}));
    sub->add_option("--bandwidth", bandwidth, "Kernel bandwidth: auto (floor(N^(1/3))) or an integer");
  };
  auto add_sim = [&](CLI::App* sub, bool with_change) {
    sub->add_option("--h", cfg.hurst, "Hurst exponent");
    sub->add_option("--sigma", cfg.sigma, "Volatility");
    sub->add_option("--n", cfg.n, "Number of increments");
    sub->add_option("--seed", cfg.seed, "Random seed");
    if (with_change) {
      sub->add_option("--h2", h2, "Hurst exponent after the break");
      sub->add_option("--sigma2", sigma2, "Volatility after the break");
      sub->add_option("--theta", cfg.theta, "Break time in (0, 1)");
      sub->add_option("--glue", glue, "Dependence across the break")
          ->check(CLI::IsMember({"independent", "appended"}));
    }
  };
  auto add_mc = [&](CLI::App* sub) {
    sub->add_option("--reps", cfg.reps, "Monte Carlo replications");
    sub->add_flag("--full-scale", full_scale, "Use 10000 replications");
    sub->add_option("--threads", cfg.threads, "Worker threads");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "Simulate an fBm path, optionally with one change");
  add_sim(simulate, true);
  add_output(simulate);
  CLI::App* test = app.add_subcommand("test", "Cusum test for a change in H or sigma");
  add_input(test);
  add_test(test);
  add_output(test);
  CLI::App* breakpoint = app.add_subcommand("breakpoint", "Test, estimate the break date and classify the change");
  add_input(breakpoint);
  add_test(breakpoint);
  breakpoint->add_option("--delta", cfg.delta, "Verdict thresholds n^(+-delta)");
  add_output(breakpoint);
  CLI::App* blocks = app.add_subcommand("blocks", "Test and estimate H on disjoint blocks");
  add_input(blocks);
  add_test(blocks);
  blocks->add_option("--block-len", cfg.block_len, "Increments per block")->required();
  add_output(blocks);
  CLI::App* mc_size = app.add_subcommand("mc-size", "Monte Carlo size study under no change");
  add_sim(mc_size, false);
  add_test(mc_size);
  add_mc(mc_size);
  add_output(mc_size);
  CLI::App* mc_power = app.add_subcommand("mc-power", "Monte Carlo power study under one change");
  add_sim(mc_power, true);
  add_test(mc_power);
  add_mc(mc_power);
  add_output(mc_power);
  CLI::App* ks_table = app.add_subcommand("ks-table", "Kolmogorov-Smirnov law quantiles");
  add_output(ks_table);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const std::map<CLI::App*, Command> commands = {
        {simulate, Command::Simulate}, {test, Command::Test},       {breakpoint, Command::Breakpoint},
        {blocks, Command::Blocks},     {mc_size, Command::McSize}, {mc_power, Command::McPower},
        {ks_table, Command::KsTable}};
    for (const auto& [sub, command] : commands) {
      if (sub->parsed()) {
        cfg.command = command;
        auto given = [sub](const char* name) {
          const CLI::Option* opt = sub->get_option_no_throw(name);
          return opt != nullptr && opt->count() > 0;
        };
        if (given("--h2")) cfg.hurst2 = h2;
        if (given("--sigma2")) cfg.sigma2 = sigma2;
        if (!given("--reps") && full_scale) cfg.reps = kFullScaleReps;
        if (!given("--format")) format = command == Command::Simulate ? "csv" : "json";
      }
    }
    if (!input.empty()) cfg.input_path = input;
    if (!out_file.empty()) cfg.out_path = out_file;
    cfg.order = order == "1" ? OrderChoice::First : (order == "2" ? OrderChoice::Second : OrderChoice::Auto);
    cfg.lrv.kernel = kernel == "flat" ? Kernel::TruncatedFlat
                                      : (kernel == "literal" ? Kernel::AllLagsLiteral : Kernel::Bartlett);
    if (bandwidth != "auto") {
      std::size_t l = 0;
      const auto [ptr, ec] = std::from_chars(bandwidth.data(), bandwidth.data() + bandwidth.size(), l);
      if (ec != std::errc() || ptr != bandwidth.data() + bandwidth.size()) {
        throw UsageError("--bandwidth must be 'auto' or a non-negative integer");
      }
      cfg.lrv.bandwidth = l;
    }
    cfg.data_kind = kind == "increments" ? DataKind::Increments : DataKind::Levels;
    cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    cfg.glue = glue == "appended" ? Glue::AppendedIncrements : Glue::IndependentPieces;

    const std::string report = execute(cfg);
    if (cfg.out_path) {
      std::ofstream file(*cfg.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + *cfg.out_path + "'");
      file << report;
    } else {
      out << report;
    }
    return kExitOk;
  } catch (const DegenerateDataError& e) {
    err << "degenerate data: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace fbmcusum
