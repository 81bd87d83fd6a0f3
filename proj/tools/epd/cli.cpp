// Copyright 2026 The epdkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "epd/engine.hpp"
#include "epd/errors.hpp"
#include "epd/gates.hpp"
#include "epd/matrix_io.hpp"
#include "epd/tools/acceptance.hpp"
#include "epd/tools/studies.hpp"
#include "output.hpp"

#ifndef EPD_VERSION
#define EPD_VERSION "unknown"
#endif

namespace epd::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;
constexpr const char* kParameterNames[] = {"theta", "alpha", "beta", "delta", "phi", "b1", "b2", "b3", "d"};

struct GlobalOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 100000;
  std::string method;  // empty: command default
  std::string out;
  std::string format = "csv";
  std::size_t threads = 0;
  bool format_given = false;
};

/// Validation failure raised by the CLI itself (bad flag combinations).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double parse_plain(std::string_view text, std::string_view whole) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(v)) {
    throw FormatError("cannot parse number '" + std::string(whole) + "'");
  }
  return v;
}

Method parse_method(std::string_view name) {
  if (name == "closed") return Method::closed_form;
  if (name == "dense") return Method::exact_dense;
  if (name == "cycle") return Method::exact_cycle;
  if (name == "mc") return Method::monte_carlo;
  throw UsageError("method '" + std::string(name) + "' is not valid here");
}

tools::EngineSettings engine_settings(const GlobalOptions& g, Method m) {
  tools::EngineSettings s;
  s.method = m;
  s.sampler.seed = g.seed;
  s.sampler.samples = g.samples;
  s.threads = g.threads;
  return s;
}

std::map<std::string, double> collect_params(const std::map<std::string, std::string>& raw) {
  std::map<std::string, double> out;
  for (const auto& [name, text] : raw)
    if (!text.empty()) out[name] = parse_real(text);
  return out;
}

nlohmann::ordered_json params_json(const std::map<std::string, double>& params) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

std::string eta_text(const EpEpdResult& r) {
  return r.ep > 1e-14 ? format_number(r.epd / r.ep) : std::string("undefined");
}

Cell eta_cell(const EpEpdResult& r) { return r.ep > 1e-14 ? Cell(r.epd / r.ep) : Cell(); }

class Session {
 public:
  Session(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
      : args_(args), out_(out), err_(err) {}

  int run();

 private:
  int compute();
  int sweep();
  int scan_kak();
  int verify();
  int replay();

  RunManifest manifest(std::string command, nlohmann::ordered_json params) const;
  /// Writes `table` to --out (with a sidecar manifest) or to stdout.
  void emit(RunManifest m, const Table& table);
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  const std::vector<std::string>& args_;
  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  GlobalOptions g_;
  std::string gate_;
  std::string file_;
  std::map<std::string, std::string> compute_params_, sweep_params_;
  std::string family_;
  std::vector<std::string> grids_;
  std::size_t resolution_ = 21;
  std::string level_ = "quick";
  std::string manifest_path_;
};

RunManifest Session::manifest(std::string command, nlohmann::ordered_json params) const {
  RunManifest m;
  m.args = args_;
  m.command = std::move(command);
  m.seed = g_.seed;
  m.version = EPD_VERSION;
  m.params = std::move(params);
  return m;
}

void Session::emit(RunManifest m, const Table& table) {
  const Format format = parse_format(g_.format);
  if (g_.out.empty()) {
    write_table(out_, format, m, table);
    return;
  }
  {
    std::ofstream f(g_.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + g_.out + "'");
    write_table(f, format, m, table);
  }
  m.wall_seconds = elapsed();
  std::ofstream side(g_.out + ".manifest.json", std::ios::binary);
  if (!side) throw UsageError("cannot write manifest next to '" + g_.out + "'");
  side << m.sidecar_json().dump(2) << '\n';
}

int Session::compute() {
  if (gate_.empty() == file_.empty()) throw UsageError("compute needs exactly one of a gate name or --file");
  const auto params = collect_params(compute_params_);

  std::optional<GateSpec> spec;
  ComplexMatrix u;
  std::size_t d1 = 0, d2 = 0;
  std::string label;
  if (!gate_.empty()) {
    spec = make_spec(parse_family(gate_), params);
    u = build(*spec);
    d1 = spec->d1;
    d2 = spec->d2;
    label = spec->label();
  } else {
    if (!params.empty()) throw UsageError("gate parameters cannot be combined with --file");
    auto op = read_matrix_file(file_);
    u = std::move(op.matrix);
    d1 = op.layout.dim(0);
    d2 = op.layout.dim(1);
    label = file_;
  }
  require_unitary(u, d1, d2);

  std::vector<Method> methods;
  const std::string choice = g_.method.empty() ? "all" : g_.method;
  if (choice == "all") {
    if (spec) methods.push_back(Method::closed_form);
    if (d1 * d2 <= kDenseFourCopyLimit) methods.push_back(Method::exact_dense);
    if (d1 * d2 <= kCycleLimit) methods.push_back(Method::exact_cycle);
    methods.push_back(Method::monte_carlo);
  } else {
    methods.push_back(parse_method(choice));
    if (methods.front() == Method::closed_form && !spec) throw UsageError("closed form needs a catalog gate");
  }

  std::vector<EpEpdResult> results;
  for (Method m : methods) {
    const auto s = engine_settings(g_, m);
    results.push_back(spec ? tools::evaluate(*spec, s) : tools::evaluate(u, d1, d2, s));
  }

  Table table{{"method", "ep", "epd", "eta", "se_ep", "se_epd"}, {}};
  for (const auto& r : results) {
    table.rows.push_back({std::string(method_name(r.method)), r.ep, r.epd, eta_cell(r), r.se_ep, r.se_epd});
  }

  nlohmann::ordered_json p;
  p["target"] = label;
  p["d1"] = d1;
  p["d2"] = d2;
  if (spec) p["gate_params"] = params_json(spec->params);
  p["methods"] = nlohmann::ordered_json::array();
  for (Method m : methods) p["methods"].push_back(method_name(m));
  p["samples"] = g_.samples;
  const RunManifest m = manifest("compute", p);

  if (!g_.out.empty() || g_.format_given) {
    emit(m, table);
    if (g_.out.empty()) return kExitOk;
  }

  auto& os = out_;
  os << "gate    " << label << " (d1=" << d1 << ", d2=" << d2 << ")\n";
  os << std::left << std::setw(13) << "method" << std::setw(20) << "ep" << std::setw(20) << "epd" << std::setw(20)
     << "eta" << std::setw(20) << "se_ep" << "se_epd\n";
  for (const auto& r : results) {
    os << std::setw(13) << method_name(r.method) << std::setw(20) << format_number(r.ep) << std::setw(20)
       << format_number(r.epd) << std::setw(20) << eta_text(r) << std::setw(20) << format_number(r.se_ep)
       << format_number(r.se_epd) << '\n';
  }
  // Deltas against the most complete exact method that ran.
  std::optional<std::size_t> ref;
  for (Method want : {Method::exact_cycle, Method::exact_dense, Method::closed_form}) {
    for (std::size_t i = 0; i < results.size() && !ref; ++i)
      if (results[i].method == want) ref = i;
    if (ref) break;
  }
  if (ref && results.size() > 1) {
    os << "deltas vs " << method_name(results[*ref].method) << ":\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i == *ref) continue;
      const auto& r = results[i];
      os << "  " << std::setw(13) << method_name(r.method) << "d_ep " << std::setw(20)
         << format_number(r.ep - results[*ref].ep) << "d_epd " << format_number(r.epd - results[*ref].epd);
      if (r.method == Method::monte_carlo && r.se_ep > 0 && r.se_epd > 0) {
        os << "  (" << format_number(std::abs(r.ep - results[*ref].ep) / r.se_ep) << " se, "
           << format_number(std::abs(r.epd - results[*ref].epd) / r.se_epd) << " se)";
      }
      os << '\n';
    }
  }
  os << "manifest fnv1a64:" << m.hash() << '\n';
  return kExitOk;
}

tools::GridAxis parse_grid(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw FormatError("grid '" + text + "' is not NAME=FROM:TO:STEP");
  tools::GridAxis axis;
  axis.name = trim(std::string_view(text).substr(0, eq));
  std::vector<std::string> parts;
  std::stringstream rest(text.substr(eq + 1));
  for (std::string part; std::getline(rest, part, ':');) parts.push_back(part);
  if (axis.name.empty() || parts.size() != 3) throw FormatError("grid '" + text + "' is not NAME=FROM:TO:STEP");
  axis.from = parse_real(parts[0]);
  axis.to = parse_real(parts[1]);
  axis.step = parse_real(parts[2]);
  return axis;
}

int Session::sweep() {
  tools::SweepRequest req;
  req.family = parse_family(family_);
  req.fixed = collect_params(sweep_params_);
  if (grids_.empty()) throw UsageError("sweep needs at least one --grid NAME=FROM:TO:STEP");
  for (const auto& g : grids_) req.axes.push_back(parse_grid(g));
  const Method engine = parse_method(g_.method.empty() ? "cycle" : g_.method);
  if (engine == Method::closed_form) throw UsageError("sweep compares the closed form to an engine method");
  req.engine = engine_settings(g_, engine);
  req.threads = g_.threads;
  const auto rows = tools::run_sweep(req);

  const bool mc = engine == Method::monte_carlo;
  Table table;
  for (const auto& a : req.axes) table.columns.push_back(a.name);
  for (const char* c : {"ep_closed", "epd_closed", "ep_engine", "epd_engine", "eta"}) table.columns.push_back(c);
  if (mc) {
    table.columns.push_back("se_ep_engine");
    table.columns.push_back("se_epd_engine");
  }
  for (const auto& r : rows) {
    std::vector<Cell> cells(r.params.begin(), r.params.end());
    cells.insert(cells.end(), {r.closed.ep, r.closed.epd, r.engine.ep, r.engine.epd,
                               std::isfinite(r.eta) ? Cell(r.eta) : Cell()});
    if (mc) cells.insert(cells.end(), {r.engine.se_ep, r.engine.se_epd});
    table.rows.push_back(std::move(cells));
  }

  nlohmann::ordered_json p;
  p["family"] = std::string(family_name(req.family));
  p["fixed"] = params_json(req.fixed);
  p["grid"] = nlohmann::ordered_json::array();
  for (const auto& a : req.axes) p["grid"].push_back({{"name", a.name}, {"from", a.from}, {"to", a.to}, {"step", a.step}});
  p["engine"] = method_name(engine);
  if (mc) p["samples"] = g_.samples;
  emit(manifest("sweep", p), table);
  return kExitOk;
}

int Session::scan_kak() {
  const Method method = parse_method(g_.method.empty() ? "closed" : g_.method);
  const auto scan = tools::scan_kak(resolution_, engine_settings(g_, method), g_.threads);

  Table table{{"b1", "b2", "b3", "ep", "epd", "flag"}, {}};
  for (const auto& pt : scan.points) {
    std::string flag = pt.max_ep ? (pt.max_epd ? "max_ep;max_epd" : "max_ep") : (pt.max_epd ? "max_epd" : "");
    table.rows.push_back({pt.b1, pt.b2, pt.b3, pt.ep, pt.epd, flag});
  }
  nlohmann::ordered_json p;
  p["resolution"] = resolution_;
  p["method"] = method_name(method);
  if (method == Method::monte_carlo) p["samples"] = g_.samples;
  emit(manifest("scan-kak", p), table);

  std::ostream& note = g_.out.empty() ? err_ : out_;
  note << "max ep " << format_number(scan.max_ep) << " (bound " << format_number(tools::kKakEpBound) << "), max epd "
       << format_number(scan.max_epd) << " (bound " << format_number(tools::kKakEpdBound) << "), points at both maxima "
       << scan.joint_count << '\n';
  if (!scan.within_bounds) {
    err_ << "bound check failed: a grid point exceeds the two-qubit maxima\n";
    return kExitAcceptance;
  }
  return kExitOk;
}

int Session::verify() {
  tools::SuiteOptions opts;
  opts.level = tools::parse_level(level_);
  opts.seed = g_.seed;
  opts.mc_samples = g_.samples;
  opts.threads = g_.threads;
  const auto results = tools::run_suite(opts);

  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();

  if (!g_.out.empty() || g_.format_given) {
    Table table{{"criterion", "check", "expected", "computed", "delta", "tolerance", "status"}, {}};
    for (const auto& r : results)
      for (const auto& c : r.checks) {
        table.rows.push_back({static_cast<double>(r.id), c.name, c.expected, c.computed, c.delta(), c.tolerance,
                              std::string(c.passed() ? "ok" : "FAIL")});
      }
    nlohmann::ordered_json p;
    p["level"] = std::string(tools::level_name(opts.level));
    p["samples"] = g_.samples;
    emit(manifest("verify", p), table);
  }
  if (g_.out.empty() && g_.format_given) {
    tools::print_summary(err_, results);
  } else {
    tools::print_checks(out_, results);
    tools::print_summary(out_, results);
  }
  return ok ? kExitOk : kExitAcceptance;
}

int Session::replay() {
  std::ifstream f(manifest_path_);
  if (!f) throw UsageError("cannot read manifest '" + manifest_path_ + "'");
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("manifest: ") + e.what());
  }
  const auto m = RunManifest::from_json(j);
  if (m.args.empty() || m.args.front() == "replay") throw FormatError("manifest does not describe a replayable run");
  if (m.version != EPD_VERSION) {
    err_ << "note: manifest written by version " << m.version << ", running " << EPD_VERSION << '\n';
  }
  return cli::run(m.args, out_, err_);
}

int Session::run() {
  CLI::App app{"Entangling power and its deviation for bipartite unitaries", "epd"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", EPD_VERSION);

  app.add_option("--seed", g_.seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--samples", g_.samples, "Monte Carlo sample count")->capture_default_str()->check(CLI::Range(2ULL, 1ULL << 40));
  app.add_option("--method", g_.method, "closed, dense, cycle, mc or all")
      ->check(CLI::IsMember({"closed", "dense", "cycle", "mc", "all"}));
  app.add_option("--out", g_.out, "Output file (a .manifest.json sidecar is written next to it)");
  auto* format = app.add_option("--format", g_.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", g_.threads, "Worker threads, 0 = all cores; never changes results")->capture_default_str();

  auto add_gate_params = [](CLI::App* cmd, std::map<std::string, std::string>& slots) {
    for (const char* name : kParameterNames) {
      cmd->add_option(std::string("--") + name, slots[name], "Gate parameter (accepts multiples of pi, e.g. 3pi/4)");
    }
  };

  auto* compute = app.add_subcommand("compute", "EP/EPD of a catalog gate or a matrix file");
  compute->add_option("gate", gate_, "Catalog gate name");
  compute->add_option("--file", file_, "Matrix JSON file with mandatory dims");
  add_gate_params(compute, compute_params_);

  auto* sweep = app.add_subcommand("sweep", "Closed form vs engine along a parameter grid");
  sweep->add_option("family", family_, "Catalog family")->required();
  sweep->add_option("--grid", grids_, "NAME=FROM:TO:STEP, once or twice");
  add_gate_params(sweep, sweep_params_);

  auto* scan = app.add_subcommand("scan-kak", "Scan the KAK cube [0, pi/4]^3");
  scan->add_option("--resolution", resolution_, "Points per axis")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("level", level_, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();

  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", manifest_path_, "Sidecar .manifest.json")->required();

  try {
    std::vector<std::string> reversed(args_.rbegin(), args_.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kExitOk : kExitValidation;
  }
  g_.format_given = format->count() > 0;

  if (compute->parsed()) return this->compute();
  if (sweep->parsed()) return this->sweep();
  if (scan->parsed()) return this->scan_kak();
  if (verify->parsed()) return this->verify();
  return this->replay();
}

}  // namespace

double parse_real(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s.empty()) throw FormatError("empty number");

  std::string num = s, den;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (den.empty()) throw FormatError("cannot parse number '" + std::string(text) + "'");
  }
  double value = 0.0;
  if (const auto pi = num.find("pi"); pi != std::string::npos) {
    if (pi + 2 != num.size()) throw FormatError("cannot parse number '" + std::string(text) + "'");
    std::string coeff = num.substr(0, pi);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    double c = 1.0;
    if (coeff == "-") {
      c = -1.0;
    } else if (coeff == "+") {
      c = 1.0;
    } else if (!coeff.empty()) {
      c = parse_plain(coeff, text);
    }
    value = c * std::numbers::pi;
  } else {
    value = parse_plain(num, text);
  }
  if (!den.empty()) {
    const double d = parse_plain(den, text);
    if (d == 0.0) throw FormatError("division by zero in '" + std::string(text) + "'");
    value /= d;
  }
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Session session(args, out, err);
    return session.run();
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
  } catch (const FeasibilityError& e) {
    err << "not feasible: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "validation error: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitValidation;
}

}  // namespace epd::cli
