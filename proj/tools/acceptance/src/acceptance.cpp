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

#include "epd/tools/acceptance.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#include "epd/engine.hpp"
#include "epd/errors.hpp"
#include "epd/gates.hpp"
#include "epd/group_sum.hpp"
#include "epd/haar_moments.hpp"
#include "epd/monte_carlo.hpp"
#include "epd/permutation.hpp"
#include "epd/random.hpp"
#include "epd/rational.hpp"
#include "epd/tools/studies.hpp"
#include "epd/trace_terms.hpp"

namespace epd::tools {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExactTol = 1e-9;
constexpr double kVanishTol = 1e-10;
constexpr std::size_t kPropertyCases = 200;

struct Reference {
  std::string name;
  GateSpec spec;
  double ep;
  double epd;
};

std::vector<Reference> reference_gates() {
  const double s11 = std::sqrt(11.0), s5 = std::sqrt(5.0);
  return {
      {"CNOT", make_spec(GateFamily::cnot), 2.0 / 9.0, 2.0 * s11 / 45.0},
      {"B", make_spec(GateFamily::kak, {{"b1", kPi / 4}, {"b2", kPi / 8}, {"b3", 0.0}}), 2.0 / 9.0,
       std::sqrt(7.0 / 5.0) / 9.0},
      {"sqrt-SWAP", make_spec(GateFamily::swap_alpha, {{"alpha", 0.5}}), 1.0 / 6.0, 1.0 / (3.0 * s5)},
      {"F4", make_spec(GateFamily::f4), 1.0 / 9.0, s11 / 45.0},
  };
}

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}
  void near(std::string name, double expected, double computed, double tol) {
    r_.checks.push_back({std::move(name), expected, computed, tol});
  }
  void zero(std::string name, double computed, double tol) { near(std::move(name), 0.0, computed, tol); }
  void no_failures(std::string name, std::size_t failures) {
    near(std::move(name), 0.0, static_cast<double>(failures), 0.0);
  }

 private:
  CriterionResult& r_;
};

double dense_ep(const SuiteOptions& o, const ComplexMatrix& u, std::size_t d1, std::size_t d2) {
  return o.dense_ep ? o.dense_ep(u, d1, d2) : ep_exact(u, d1, d2);
}

CycleOptions cycle_options(const SuiteOptions& o) { return {.threads = o.threads}; }

// Criterion 1: four reference gates on both exact paths.
void reference_values(const SuiteOptions& o, Recorder& rec) {
  for (const auto& g : reference_gates()) {
    const auto u = build(g.spec);
    rec.near(g.name + " ep dense", g.ep, dense_ep(o, u, 2, 2), kExactTol);
    rec.near(g.name + " epd dense", g.epd, epd_exact_dense(u, 2, 2), kExactTol);
    const auto net = epd_cycle_breakdown(u, 2, 2, cycle_options(o));
    rec.near(g.name + " ep network", g.ep, net.ep, kExactTol);
    rec.near(g.name + " epd network", g.epd, net.epd, kExactTol);
  }
}

// Criterion 2: the epd/ep ratio along three families, from engine values.
void ratio_sweeps(const SuiteOptions& o, Recorder& rec) {
  const std::size_t points = 20;
  auto engine_eta = [&](const GateSpec& spec) {
    const auto r = epd_cycle_breakdown(build(spec), 2, 2, cycle_options(o));
    return r.epd / r.ep;
  };
  const double cu_eta = std::sqrt(11.0) / 5.0;
  const double swap_eta = 2.0 * std::sqrt(5.0) / 5.0;
  for (std::size_t k = 0; k < points; ++k) {
    const double t = (static_cast<double>(k) + 0.5) / static_cast<double>(points);
    const auto cu = make_spec(GateFamily::cu, {{"theta", 2 * kPi * t}, {"alpha", 0.3}, {"beta", 0.5}, {"delta", 0.1}});
    rec.near("cu theta=" + fmt("%.6f", 2 * kPi * t) + " eta", cu_eta, engine_eta(cu), kExactTol);
  }
  for (std::size_t k = 0; k < points; ++k) {
    const double a = (static_cast<double>(k) + 0.5) / static_cast<double>(points);
    const auto sw = make_spec(GateFamily::swap_alpha, {{"alpha", a}});
    rec.near("swap_alpha alpha=" + fmt("%.6f", a) + " eta", swap_eta, engine_eta(sw), kExactTol);
  }
  for (std::size_t k = 0; k < points; ++k) {
    const double theta = kPi * (static_cast<double>(k) + 0.5) / static_cast<double>(points);
    const auto is = make_spec(GateFamily::iswap, {{"theta", theta}, {"phi", 0.7}});
    rec.near("iswap theta=" + fmt("%.6f", theta) + " eta", eta_ratio(is), engine_eta(is), kExactTol);
  }
}

ComplexMatrix identity_on(std::size_t n) { return ComplexMatrix::identity(n); }

// Criterion 3: gates that create no entanglement.
void vanishing_cases(const SuiteOptions& o, Recorder& rec) {
  struct Case {
    std::string name;
    ComplexMatrix u;
    std::size_t d1, d2;
  };
  std::vector<Case> cases;
  for (auto [d1, d2] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
    cases.push_back({"identity " + std::to_string(d1) + "x" + std::to_string(d2), identity_on(d1 * d2), d1, d2});
  }
  const std::pair<std::size_t, std::size_t> dims[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto [d1, d2] = dims[s % 5];
    CounterRng rng(o.seed, 1000 + s);
    cases.push_back({"product seed " + std::to_string(s) + " " + std::to_string(d1) + "x" + std::to_string(d2),
                     sample_product_unitary(d1, d2, rng), d1, d2});
  }
  for (std::size_t d : {2, 3, 4}) {
    cases.push_back({"swap d=" + std::to_string(d), build(make_spec(GateFamily::swap, {{"d", double(d)}})), d, d});
  }
  for (const auto& c : cases) {
    rec.zero(c.name + " ep dense", std::abs(dense_ep(o, c.u, c.d1, c.d2)), kVanishTol);
    const auto net = epd_cycle_breakdown(c.u, c.d1, c.d2, cycle_options(o));
    rec.zero(c.name + " ep network", std::abs(net.ep), kVanishTol);
    rec.zero(c.name + " epd network", net.epd, kVanishTol);
    if (c.d1 * c.d2 <= kDenseFourCopyLimit) rec.zero(c.name + " epd dense", epd_exact_dense(c.u, c.d1, c.d2), kVanishTol);
  }
}

ComplexMatrix special_unitary(std::size_t n, CounterRng& rng) {
  ComplexMatrix u = sample_haar_unitary(n, rng);
  Eigen::MatrixXcd m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = u(r, c);
  const Complex det = m.determinant();
  return u * std::pow(det, -1.0 / static_cast<double>(n));
}

// Criterion 4: network and dense four-copy evaluations agree.
void oracle_equivalence(const SuiteOptions& o, Recorder& rec) {
  auto compare = [&](const std::string& name, const ComplexMatrix& u) {
    const auto net = epd_cycle_breakdown(u, 2, 2, cycle_options(o));
    rec.near(name + " ep network vs dense", dense_ep(o, u, 2, 2), net.ep, kExactTol);
    rec.near(name + " epd network vs dense", epd_exact_dense(u, 2, 2), net.epd, kExactTol);
  };
  for (std::uint64_t i = 0; i < 25; ++i) {
    CounterRng rng(o.seed, 2000 + i);
    compare("random SU(4) #" + std::to_string(i), special_unitary(4, rng));
  }
  for (GateFamily f : all_families()) {
    const auto spec = make_spec(f);
    if (spec.d1 != 2 || spec.d2 != 2) continue;
    compare(spec.label(), build(spec));
  }
}

// Criterion 5: Monte Carlo estimates bracket the engine values.
void monte_carlo_concordance(const SuiteOptions& o, Recorder& rec) {
  const GateSpec gates[] = {
      make_spec(GateFamily::cnot),
      make_spec(GateFamily::swap_alpha, {{"alpha", 0.5}}),
      make_spec(GateFamily::iswap, {{"theta", kPi / 2}, {"phi", 0.0}}),
      make_spec(GateFamily::gcx, {{"d", 3.0}}),
  };
  for (const auto& g : gates) {
    const auto u = build(g);
    const auto exact = epd_cycle_breakdown(u, g.d1, g.d2, cycle_options(o));
    const auto mc = estimate_ep_epd(u, {o.seed, o.mc_samples, g.d1, g.d2, o.threads});
    rec.near(g.label() + " mean vs ep (4 se)", exact.ep, mc.mean, 4.0 * mc.se_mean);
    rec.near(g.label() + " std vs epd (4 se)", exact.epd, mc.std, 4.0 * mc.se_std);
  }
}

// Even-dimension numerator of EPD²·(d+1)⁴(d+2)²(d+3)² for the generalized CX.
double even_branch(double d) { return 8 * std::pow(d, 5) + 34 * std::pow(d, 4) + 8 * std::pow(d, 3) - 38 * d * d - 4 * d; }
double odd_offset(double d) { return -2 * d * (d + 1) * (d + 1); }

// Criterion 6: generalized CX over d = 2..6 and its parity split.
void generalized_cx(const SuiteOptions& o, Recorder& rec) {
  std::size_t below_even_curve = 0, odd_count = 0;
  for (std::size_t d = 2; d <= 6; ++d) {
    const double x = static_cast<double>(d);
    const auto spec = make_spec(GateFamily::gcx, {{"d", x}});
    const auto net = epd_cycle_breakdown(build(spec), d, d, cycle_options(o));
    const std::string tag = "gcx d=" + std::to_string(d);
    rec.near(tag + " ep", x * (x - 1) / ((x + 1) * (x + 1)), net.ep, kExactTol);
    rec.near(tag + " epd vs closed form", closed_form_ep_epd(spec).epd, net.epd, 1e-8);

    const double scale = std::pow(x + 1, 4) * std::pow(x + 2, 2) * std::pow(x + 3, 2);
    const double scaled = net.epd * net.epd * scale;
    const double tol = 1e-6 * std::max(1.0, even_branch(x));
    const bool odd = d % 2 == 1;
    rec.near(tag + " scaled epd^2 on " + (odd ? "odd" : "even") + " branch", even_branch(x) + (odd ? odd_offset(x) : 0.0),
             scaled, tol);
    rec.near(tag + " offset from even branch", odd ? odd_offset(x) : 0.0, scaled - even_branch(x), tol);
    if (odd) {
      ++odd_count;
      if (scaled < even_branch(x) - tol) ++below_even_curve;
    }
    if (d == 2) rec.near("gcx d=2 epd^2", 44.0 / 2025.0, net.epd * net.epd, kExactTol);
  }
  rec.no_failures("odd dimensions on or above the even curve", odd_count - below_even_curve);
}

// Criterion 7: KAK landscape maxima on the 21-point grid.
void kak_landscape(const SuiteOptions& o, Recorder& rec) {
  const std::size_t resolution = 21;
  const auto scan = scan_kak(resolution, {Method::closed_form, {}, 0}, o.threads);
  rec.near("max ep over grid", kKakEpBound, scan.max_ep, kExactTol);
  rec.near("max epd over grid", kKakEpdBound, scan.max_epd, kExactTol);

  const std::size_t n = resolution;
  const std::size_t quarter = n - 1, eighth = (n - 1) / 2;
  const auto& cnot_like = scan.points[quarter * n * n];                          // (π/4, 0, 0)
  const auto& center = scan.points[eighth * n * n + eighth * n + eighth];        // (π/8, π/8, π/8)
  rec.near("ep at (pi/4, 0, 0)", kKakEpBound, cnot_like.ep, kExactTol);
  rec.near("epd at (pi/8, pi/8, pi/8)", kKakEpdBound, center.epd, kExactTol);

  std::size_t over_ep = 0, over_epd = 0;
  for (const auto& p : scan.points) {
    over_ep += p.ep > kKakEpBound + kBoundSlack;
    over_epd += p.epd > kKakEpdBound + kBoundSlack;
  }
  rec.no_failures("points above the ep bound", over_ep);
  rec.no_failures("points above the epd bound", over_epd);
  rec.no_failures("points attaining both maxima", scan.joint_count);

  const std::pair<const KakPoint*, std::string> probes[] = {{&cnot_like, "(pi/4, 0, 0)"},
                                                              {&center, "(pi/8, pi/8, pi/8)"}};
  for (const auto& [p, where] : probes) {
    const auto spec = make_spec(GateFamily::kak, {{"b1", p->b1}, {"b2", p->b2}, {"b3", p->b3}});
    const auto net = epd_cycle_breakdown(build(spec), 2, 2, cycle_options(o));
    rec.near("network ep at " + where, p->ep, net.ep, kExactTol);
    rec.near("network epd at " + where, p->epd, net.epd, kExactTol);
  }
}

Permutation random_permutation(std::size_t degree, std::mt19937_64& gen) {
  std::vector<std::size_t> image(degree);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), gen);
  return Permutation(std::move(image));
}

ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = {normal(gen), normal(gen)};
  return m;
}

// Criterion 8: algebraic property suites over randomized cases.
void property_suites(const SuiteOptions& o, Recorder& rec) {
  std::mt19937_64 gen(o.seed);
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(gen); };

  std::size_t group_failures = 0;
  for (std::size_t i = 0; i < kPropertyCases; ++i) {
    const std::size_t n = pick(1, 8);
    const auto a = random_permutation(n, gen), b = random_permutation(n, gen), c = random_permutation(n, gen);
    const Permutation id(n);
    bool ok = compose(compose(a, b), c) == compose(a, compose(b, c));
    ok = ok && compose(a, id) == a && compose(id, a) == a;
    ok = ok && compose(a, a.inverse()).is_identity() && compose(a.inverse(), a).is_identity();
    ok = ok && compose(a, b).sign() == a.sign() * b.sign();
    ok = ok && Permutation::parse(a.to_string(), n) == a;
    if (n <= 4) {
      const auto layout = SubsystemLayout::uniform(2, n);
      ok = ok && max_abs_diff(realize(compose(a, b), layout), realize(a, layout) * realize(b, layout)) < 1e-12;
    }
    group_failures += !ok;
  }
  rec.no_failures("permutation group laws", group_failures);

  std::size_t projector_failures = 0, trace_failures = 0;
  for (std::size_t i = 0; i < kPropertyCases; ++i) {
    std::size_t d = 0, k = 0;
    do {
      d = pick(1, 4);
      k = pick(1, 4);
    } while (std::pow(d, k) > 81);
    const auto layout = SubsystemLayout::uniform(d, k);
    const ComplexMatrix sym = realize(symmetrizer(k), layout);
    std::vector<std::size_t> all(k);
    std::iota(all.begin(), all.end(), 0);
    const ComplexMatrix anti = realize(symmetric_projector(k, all, -1), layout);
    bool ok = max_abs_diff(sym * sym, sym) < 1e-12 && max_abs_diff(anti * anti, anti) < 1e-12;
    ok = ok && is_hermitian(sym) && is_hermitian(anti);
    if (k >= 2) ok = ok && max_abs(sym * anti) < 1e-12;
    projector_failures += !ok;
    const auto dd = static_cast<std::int64_t>(d), kk = static_cast<std::int64_t>(k);
    const bool traces = std::abs(trace(sym).real() - static_cast<double>(binomial(dd + kk - 1, kk))) < 1e-9 &&
                        std::abs(trace(anti).real() - static_cast<double>(binomial(dd, kk))) < 1e-9;
    trace_failures += !traces;
  }
  rec.no_failures("projector idempotence and orthogonality", projector_failures);
  rec.no_failures("symmetric projector trace equals binomial", trace_failures);

  std::size_t cycle_failures = 0;
  for (std::size_t i = 0; i < kPropertyCases; ++i) {
    std::size_t n = 0, k = 0;
    do {
      n = pick(1, 3);
      k = pick(1, 4);
    } while (std::pow(n, k) > 81);
    std::vector<ComplexMatrix> factors;
    for (std::size_t j = 0; j < k; ++j) factors.push_back(random_matrix(n, gen));
    ComplexMatrix product = factors.front();
    for (std::size_t j = 1; j < k; ++j) product = kron(product, factors[j]);
    const auto p = random_permutation(k, gen);
    const Complex dense = trace_with_permutation(product, p, SubsystemLayout::uniform(n, k));
    const Complex cyc = cycle_trace(factors, p);
    cycle_failures += !(std::abs(dense - cyc) <= 1e-9 * std::max(1.0, std::abs(dense)));
  }
  rec.no_failures("cycle traces vs dense", cycle_failures);
}

struct Entry {
  int id;
  std::string_view title;
  double time_limit;
  void (*run)(const SuiteOptions&, Recorder&);
};

constexpr double kNoLimit = std::numeric_limits<double>::infinity();

const Entry kEntries[] = {
    {1, "reference gate values", 5.0, reference_values},
    {2, "family ratio sweeps", kNoLimit, ratio_sweeps},
    {3, "vanishing cases", kNoLimit, vanishing_cases},
    {4, "network vs dense agreement", 60.0, oracle_equivalence},
    {5, "Monte Carlo concordance", 60.0, monte_carlo_concordance},
    {6, "generalized CX dimension study", 300.0, generalized_cx},
    {7, "KAK landscape", kNoLimit, kak_landscape},
    {8, "algebraic property suites", kNoLimit, property_suites},
};

const Entry& entry(int id) {
  for (const auto& e : kEntries)
    if (e.id == id) return e;
  throw FormatError("unknown acceptance criterion " + std::to_string(id));
}

}  // namespace

Level parse_level(std::string_view text) {
  if (text == "quick") return Level::quick;
  if (text == "full") return Level::full;
  throw FormatError("unknown verify level '" + std::string(text) + "' (expected quick or full)");
}

std::string_view level_name(Level level) { return level == Level::quick ? "quick" : "full"; }

double Check::delta() const { return std::abs(computed - expected); }

bool Check::passed() const { return std::isfinite(computed) && delta() <= tolerance; }

bool CriterionResult::passed() const { return error.empty() && failures() == 0 && within_time(); }

std::size_t CriterionResult::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed(); }));
}

std::vector<int> criteria_for(Level level) {
  if (level == Level::quick) return {1, 2, 3, 7};
  return {1, 2, 3, 4, 5, 6, 7, 8};
}

std::string_view criterion_title(int id) { return entry(id).title; }

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  const Entry& e = entry(id);
  CriterionResult result;
  result.id = id;
  result.title = std::string(e.title);
  result.time_limit = e.time_limit;
  Recorder rec(result);
  const auto start = std::chrono::steady_clock::now();
  try {
    e.run(options, rec);
  } catch (const std::exception& ex) {
    result.error = ex.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> results;
  for (int id : criteria_for(options.level)) results.push_back(run_criterion(id, options));
  return results;
}

void print_checks(std::ostream& os, const std::vector<CriterionResult>& results) {
  char line[512];
  std::snprintf(line, sizeof line, "%-3s %-52s %20s %20s %10s %10s  %s\n", "#", "check", "expected", "computed", "delta",
                "tol", "status");
  os << line;
  for (const auto& r : results) {
    for (const auto& c : r.checks) {
      std::snprintf(line, sizeof line, "%-3d %-52s %20.12g %20.12g %10.3g %10.3g  %s\n", r.id, c.name.c_str(), c.expected,
                    c.computed, c.delta(), c.tolerance, c.passed() ? "ok" : "FAIL");
      os << line;
    }
    if (!r.error.empty()) os << r.id << "   error: " << r.error << '\n';
  }
}

void print_summary(std::ostream& os, const std::vector<CriterionResult>& results) {
  char line[512];
  for (const auto& r : results) {
    std::string detail = std::to_string(r.checks.size() - r.failures()) + "/" + std::to_string(r.checks.size()) +
                         " checks";
    if (!r.error.empty()) detail += ", error: " + r.error;
    if (!r.within_time()) detail += ", over time limit " + fmt("%.0f s", r.time_limit);
    std::snprintf(line, sizeof line, "%s criterion %d: %s (%s, %.2f s)\n", r.passed() ? "PASS" : "FAIL", r.id,
                  r.title.c_str(), detail.c_str(), r.seconds);
    os << line;
  }
}

}  // namespace epd::tools
