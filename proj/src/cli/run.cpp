#include "common.hpp"

#include "moduli/correlators/engine.hpp"
#include "moduli/graphs/stable_graph.hpp"
#include "moduli/harmonic/harmonic.hpp"
#include "moduli/numeric/errors.hpp"
#include "moduli/siegel_veech/siegel_veech.hpp"
#include "moduli/volumes/volumes.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace moduli::cli {

using numeric::BigFloat;
using numeric::PiValue;

std::string format_float(const BigFloat& x, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << x;
  return out.str();
}

Json pi_json(const PiValue& value) {
  Json out = Json::object();
  if (value.is_zero()) {
    out["coefficient"] = "0";
    out["pi_power"] = 0;
    return out;
  }
  if (auto mono = value.monomial()) {
    out["coefficient"] = numeric::to_string(mono->second);
    out["pi_power"] = mono->first;
    return out;
  }
  out["terms"] = value.to_string();
  return out;
}

IntRange parse_range(const std::string& text) {
  auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    std::string rest = text.substr(colon + 1);
    int hi = std::stoi(rest, &used);
    if (used != rest.size() || hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("expected an integer or lo:hi range, got '" + text + "'");
  }
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError("empty integer list");
  return out;
}

void Table::render(std::ostream& out, OutputFormat format) const {
  if (format == OutputFormat::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(columns);
    for (const auto& row : rows) line(row);
    return;
  }
  if (format == OutputFormat::json) {
    Json array = Json::array();
    for (const auto& row : rows) {
      Json object = Json::object();
      for (std::size_t i = 0; i < columns.size(); ++i) object[columns[i]] = row[i];
      array.push_back(std::move(object));
    }
    out << array.dump() << '\n';
    return;
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "");
      if (i + 1 == cells.size()) out << cells[i];
      else out << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
    }
    out << '\n';
  };
  line(columns);
  for (const auto& row : rows) line(row);
}

namespace {

int single(const std::optional<IntRange>& range, const char* flag) {
  if (!range) throw CLI::ValidationError(std::string(flag) + " is required");
  if (range->lo != range->hi) throw CLI::ValidationError(std::string(flag) + " must be a single value");
  return range->lo;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

void cmd_correlator(const RunConfig& config, const correlators::CorrelatorEngine& engine,
                    std::ostream& out) {
  int g = single(config.g, "--g");
  if (config.d.empty()) throw CLI::ValidationError("--d is required");
  auto normalized = engine.normalized(g, config.d);
  auto raw = engine.raw(g, config.d);
  switch (config.format) {
    case OutputFormat::json: {
      Json j = Json::object();
      j["normalized"] = numeric::to_string(normalized);
      j["raw"] = numeric::to_string(raw);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "g,d,normalized,raw\n"
          << g << ",\"" << join(config.d) << "\"," << numeric::to_string(normalized) << ","
          << numeric::to_string(raw) << '\n';
      break;
    case OutputFormat::text:
      out << "g = " << g << ", d = (" << join(config.d) << ")\n"
          << "normalized = " << numeric::to_string(normalized) << '\n'
          << "raw        = " << numeric::to_string(raw) << '\n';
      break;
  }
}

void cmd_volume(const RunConfig& config, const correlators::CorrelatorEngine& engine,
                std::ostream& out) {
  int g = single(config.g, "--g");
  int n = single(config.n, "--n");
  auto result = volumes::volume_breakdown(engine, g, n, {config.threads});
  auto mono = result.total.monomial();
  Json coefficient = pi_json(result.total);
  BigFloat value = result.total.to_float(config.precision);
  switch (config.format) {
    case OutputFormat::json: {
      Json j = Json::object();
      j["kind"] = "volume";
      j["g"] = g;
      j["n"] = n;
      j["pi_power"] = coefficient["pi_power"];
      j["coefficient"] = coefficient["coefficient"];
      j["float"] = static_cast<double>(value);
      Json breakdown = Json::array();
      for (const auto& [key, part] : result.strata) {
        Json cell = Json::object();
        cell["V"] = key.V;
        cell["S"] = key.S;
        cell["T"] = key.T;
        cell["coefficient"] = pi_json(part)["coefficient"];
        breakdown.push_back(std::move(cell));
      }
      j["breakdown"] = std::move(breakdown);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv: {
      Table table{{"g", "n", "V", "S", "T", "coefficient", "pi_power"}, {}};
      for (const auto& [key, part] : result.strata) {
        auto cell = pi_json(part);
        table.rows.push_back({std::to_string(g), std::to_string(n), std::to_string(key.V),
                              std::to_string(key.S), std::to_string(key.T),
                              cell["coefficient"].get<std::string>(),
                              std::to_string(mono ? mono->first : 0)});
      }
      table.render(out, OutputFormat::csv);
      break;
    }
    case OutputFormat::text: {
      out << "Vol Q_{" << g << "," << n << "} = " << result.total.to_string() << '\n'
          << "float = " << format_float(value, 30) << '\n'
          << "graphs = " << result.graph_count << '\n';
      Table table{{"V", "S", "T", "contribution"}, {}};
      for (const auto& [key, part] : result.strata)
        table.rows.push_back({std::to_string(key.V), std::to_string(key.S), std::to_string(key.T),
                              part.to_string()});
      table.render(out, OutputFormat::text);
      break;
    }
  }
}

void cmd_svc(const RunConfig& config, const correlators::CorrelatorEngine& engine,
             std::ostream& out) {
  int g = single(config.g, "--g");
  int n = single(config.n, "--n");
  volumes::VolumeCalculator calculator(engine, {config.threads});
  auto d = siegel_veech::c_area(calculator, g, n);
  BigFloat value = d.c_area.to_float(config.precision);
  switch (config.format) {
    case OutputFormat::json: {
      Json j = Json::object();
      j["kind"] = "c_area";
      j["g"] = g;
      j["n"] = n;
      j["kappa"] = Json::array({pi_json(d.kappa1), pi_json(d.kappa2), pi_json(d.kappa3)});
      j["c_area"] = pi_json(d.c_area);
      j["float"] = static_cast<double>(value);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv: {
      Table table{{"g", "n", "kappa1", "kappa2", "kappa3", "c_area", "float"}, {}};
      table.rows.push_back({std::to_string(g), std::to_string(n), d.kappa1.to_string(),
                            d.kappa2.to_string(), d.kappa3.to_string(), d.c_area.to_string(),
                            format_float(value)});
      table.render(out, OutputFormat::csv);
      break;
    }
    case OutputFormat::text: {
      PiValue lyapunov = siegel_veech::lyapunov_sum(d);
      out << "kappa1 = " << d.kappa1.to_string() << '\n'
          << "kappa2 = " << d.kappa2.to_string() << '\n'
          << "kappa3 = " << d.kappa3.to_string() << '\n'
          << "c_area = " << d.c_area.to_string() << " ~ " << format_float(value) << '\n'
          << "lyapunov sum = " << lyapunov.to_string() << " ~ "
          << format_float(lyapunov.to_float(config.precision)) << '\n';
      break;
    }
  }
}

void cmd_hsum(const RunConfig& config, std::ostream& out) {
  int k = single(config.k, "--k");
  int N = single(config.N, "--N");
  if (k < 1 || N < k) throw DomainError("hsum needs N >= k >= 1");
  numeric::ScopedDigits guard(config.precision);
  Table table{{"quantity", "exact", "float"}, {}};
  std::string label = "(" + std::to_string(k) + "," + std::to_string(N) + ")";
  constexpr int kExactHorizon = 60;
  if (N <= kExactHorizon) {
    auto h = harmonic::harmonic_H_exact(k, N);
    auto z = harmonic::harmonic_Z_exact(k, N);
    table.rows.push_back({"H" + label, numeric::to_string(h), format_float(numeric::to_float(h))});
    table.rows.push_back({"Z" + label, z.to_string(), format_float(z.to_float())});
  } else {
    for (auto kind : {harmonic::SumKind::H, harmonic::SumKind::Z}) {
      auto t = harmonic::series_table(kind, k, N, config.precision);
      table.rows.push_back({std::string(harmonic::to_string(kind)) + label, "",
                            format_float(t.coefficients[N])});
    }
  }
  if (N >= 3) {
    for (auto kind : {harmonic::SumKind::H, harmonic::SumKind::Z}) {
      auto s = harmonic::weighted_sum(kind, N, config.omega, config.precision);
      table.rows.push_back({std::string("weighted ") + harmonic::to_string(kind) + "(N=" +
                                std::to_string(N) + ")",
                            "", format_float(s)});
      table.rows.push_back({std::string("limit ") + harmonic::to_string(kind), "",
                            format_float(harmonic::weighted_sum_limit(kind))});
    }
  }
  table.render(out, config.format);
}

void cmd_graphs(const RunConfig& config, std::ostream& out) {
  int g = single(config.g, "--g");
  int n = single(config.n, "--n");
  auto graphs = graphs::enumerate_stable_graphs(g, n);
  Table table{{"V", "S", "T", "aut", "graph"}, {}};
  for (const auto& stratum : graphs::stratify(graphs)) {
    for (const auto& entry : stratum.graphs)
      table.rows.push_back({std::to_string(stratum.key.V), std::to_string(stratum.key.S),
                            std::to_string(stratum.key.T), numeric::to_string(entry.automorphisms),
                            graphs::to_string(entry.graph)});
  }
  table.render(out, config.format);
  if (config.format == OutputFormat::text) out << "total = " << graphs.size() << '\n';
}

int cmd_verify(const RunConfig& config, const correlators::CorrelatorEngine& engine,
               std::ostream& out) {
  auto lines = verify_suite(config, engine);
  bool ok = true;
  Table table{{"status", "suite", "check", "detail"}, {}};
  for (const auto& line : lines) {
    ok = ok && line.passed;
    table.rows.push_back({line.passed ? "PASS" : "FAIL", line.suite, line.check, line.detail});
  }
  table.render(out, config.format);
  return ok ? kExitOk : kExitVerification;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  auto cache = std::make_shared<correlators::CorrelatorCache>();
  if (!config.cache_path.empty() && std::filesystem::exists(config.cache_path))
    cache->load(config.cache_path);
  correlators::CorrelatorEngine engine(cache);
  numeric::ScopedDigits guard(config.precision);

  int status = kExitOk;
  if (config.command == "correlator") {
    cmd_correlator(config, engine, out);
  } else if (config.command == "volume") {
    cmd_volume(config, engine, out);
  } else if (config.command == "svc") {
    cmd_svc(config, engine, out);
  } else if (config.command == "hsum") {
    cmd_hsum(config, out);
  } else if (config.command == "graphs") {
    cmd_graphs(config, out);
  } else if (config.command == "report") {
    report_convergence(config, engine).render(out, config.format);
  } else if (config.command == "verify") {
    status = cmd_verify(config, engine, out);
  }
  if (!config.cache_path.empty()) cache->save(config.cache_path);
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection numbers, Masur-Veech volumes and Siegel-Veech constants", "moduli"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig config;
  if (const char* env = std::getenv("MODULI_CACHE")) config.cache_path = env;
  config.threads = std::max(1u, std::thread::hardware_concurrency());

  std::string g, n, E, k, N, d, format = "text";
  app.add_option("--g", g, "genus, or lo:hi");
  app.add_option("--n", n, "number of points or legs, or lo:hi");
  app.add_option("--d", d, "comma-separated exponents");
  app.add_option("--E", E, "number of edges, or lo:hi");
  app.add_option("--k", k, "order of the harmonic sum");
  app.add_option("--N", N, "harmonic sum horizon");
  app.add_option("--omega", config.omega, "truncation factor for weighted sums")->check(CLI::PositiveNumber);
  app.add_option("--epsilon", config.epsilon, "report window n < epsilon sqrt(g)")->check(CLI::PositiveNumber);
  app.add_option("--precision", config.precision, "float digits")->check(CLI::Range(10u, 10000u));
  app.add_option("--cache", config.cache_path, "correlator cache file");
  app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", config.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--max-dim", config.max_dim, "largest |d| in exhaustive checks")->check(CLI::Range(0, 40));
  app.add_option("--suite", config.suite, "verification suite")
      ->check(CLI::IsMember({"all", "correlators", "walk", "harmonic", "graphs", "volumes", "svc",
                             "inequalities"}));

  for (const char* name : {"correlator", "volume", "svc", "hsum", "graphs", "report", "verify"}) {
    app.add_subcommand(name)->callback([&config, name] { config.command = name; });
  }
  app.get_subcommand("correlator")->description("normalized and raw intersection numbers");
  app.get_subcommand("volume")->description("Masur-Veech volume of Q_{g,n} with strata breakdown");
  app.get_subcommand("svc")->description("area Siegel-Veech constant and Lyapunov sum");
  app.get_subcommand("hsum")->description("harmonic sums H_k(N), Z_k(N) and weighted sums");
  app.get_subcommand("graphs")->description("stable graphs of genus g with n legs");
  app.get_subcommand("report")->description("convergence tables");
  app.get_subcommand("verify")->description("run invariant suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!g.empty()) config.g = parse_range(g);
    if (!n.empty()) config.n = parse_range(n);
    if (!E.empty()) config.E = parse_range(E);
    if (!k.empty()) config.k = parse_range(k);
    if (!N.empty()) config.N = parse_range(N);
    if (!d.empty()) config.d = parse_list(d);
    config.format = format == "json" ? OutputFormat::json
                    : format == "csv" ? OutputFormat::csv
                                      : OutputFormat::text;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    return dispatch(config, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << " (achieved " << e.achieved() << ")\n";
    return kExitDomain;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace moduli::cli
