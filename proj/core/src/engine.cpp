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

#include "epd/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

#include "epd/errors.hpp"
#include "epd/group_sum.hpp"
#include "epd/haar_moments.hpp"
#include "epd/trace_terms.hpp"
#include "tensor_kernel.hpp"

namespace epd {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::exact_dense:
      return "exact-dense";
    case Method::exact_cycle:
      return "exact-cycle";
    case Method::closed_form:
      return "closed-form";
    case Method::monte_carlo:
      return "monte-carlo";
  }
  return "unknown";
}

double linear_entropy(std::span<const Complex> amplitudes, std::size_t d1, std::size_t d2) {
  if (amplitudes.size() != d1 * d2) throw DimensionError("linear_entropy: amplitude count does not match d1*d2");
  // Tr ρ_A² = Tr ρ_B²; build the Gram matrix on the smaller side.
  const bool rows_small = d1 <= d2;
  const std::size_t n = rows_small ? d1 : d2;
  const std::size_t m = rows_small ? d2 : d1;
  auto at = [&](std::size_t small, std::size_t large) {
    return rows_small ? amplitudes[small * d2 + large] : amplitudes[large * d2 + small];
  };
  double purity = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Complex g = 0.0;
      for (std::size_t k = 0; k < m; ++k) g += at(a, k) * std::conj(at(b, k));
      purity += (a == b ? 1.0 : 2.0) * std::norm(g);
    }
  }
  return 1.0 - purity;
}

double linear_entropy(const PureState& state, std::span<const std::size_t> keep) {
  double norm = 0.0;
  for (const auto& a : state.amplitudes()) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-10) throw DomainError("linear_entropy: state is not normalized");
  const auto& layout = state.layout();
  for (std::size_t k : keep)
    if (k >= layout.count()) throw DimensionError("linear_entropy: subsystem index out of range");

  if (layout.count() == 2 && keep.size() == 1) {
    return linear_entropy(state.amplitudes(), layout.dim(0), layout.dim(1));
  }
  const ComplexMatrix rho = partial_trace(state.density(), layout, keep);
  double purity = 0.0;
  for (const auto& v : rho.entries()) purity += std::norm(v);
  return 1.0 - purity;
}

void require_unitary(const ComplexMatrix& u, std::size_t d1, std::size_t d2) {
  if (d1 == 0 || d2 == 0) throw DomainError("dimensions must be positive");
  if (u.rows() != d1 * d2 || u.cols() != d1 * d2) {
    throw DimensionError("operator is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                         " but d1*d2 = " + std::to_string(d1 * d2));
  }
  const double defect = unitarity_defect(u);
  if (!(defect <= kUnitarityTol)) {
    std::ostringstream msg;
    msg << "operator is not unitary: max-norm defect |U^dag U - 1| = " << defect;
    throw DomainError(msg.str());
  }
}

namespace {

void require_feasible(std::size_t d1, std::size_t d2, std::size_t limit, const char* what) {
  if (d1 * d2 > limit) {
    throw FeasibilityError(std::string(what) + " supports d1*d2 <= " + std::to_string(limit) + ", got " +
                           std::to_string(d1 * d2) +
                           (limit == kDenseFourCopyLimit ? "; use the cycle (network) path" : ""));
  }
}

double finish_radicand(double radicand) {
  if (radicand < -kRadicandClamp) {
    std::ostringstream msg;
    msg << "EPD radicand " << radicand << " is negative beyond the clamp window";
    throw ConsistencyError(msg.str());
  }
  return std::sqrt(std::max(radicand, 0.0));
}

FormalGroupSum antisymmetric_pairs(std::size_t wires, std::size_t pairs) {
  FormalGroupSum out = FormalGroupSum::single(Permutation(wires));
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t pts[] = {4 * p, 4 * p + 2};
    out = multiply_sums(out, symmetric_projector(wires, pts, -1));
  }
  return out;
}

struct FourCopyJob {
  TermClass cls;
  std::size_t sum_index;
};

// Grouped four-copy terms for the identity, 1↔3 and 1↔3·5↔7 sums. They do
// not depend on U or the dimensions, so they are built once.
struct FourCopyTerms {
  std::vector<FourCopyJob> jobs;
  std::array<std::size_t, 4> first_job{};
  std::size_t term_count = 0;
};

const FourCopyTerms& four_copy_terms() {
  static const FourCopyTerms plan = [] {
    FourCopyTerms p;
    const std::size_t wires = 8;
    const Permutation taus[3] = {
        Permutation(wires),
        Permutation::transposition(wires, 0, 2),
        compose(Permutation::transposition(wires, 0, 2), Permutation::transposition(wires, 4, 6)),
    };
    for (std::size_t s = 0; s < 3; ++s) {
      const auto terms = moment_terms(4, taus[s]);
      p.term_count += terms.size();
      p.first_job[s] = p.jobs.size();
      for (auto& cls : group_terms(terms)) p.jobs.push_back({std::move(cls), s});
    }
    p.first_job[3] = p.jobs.size();
    return p;
  }();
  return plan;
}

template <typename Real>
Real pairwise_sum(std::span<const Real> values) {
  if (values.empty()) return Real{0};
  if (values.size() == 1) return values.front();
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace

namespace detail {

double ep_with_projector_sign(const ComplexMatrix& u, std::size_t d1, std::size_t d2, int sign) {
  require_unitary(u, d1, d2);
  require_feasible(d1, d2, kCycleLimit, "dense two-copy EP");
  const MomentState moment = omega(2, d1, d2);
  const ComplexMatrix evolved = conjugate_tensor_power(u, moment.realize(), 2);
  const std::size_t pts[] = {0, 2};
  return 2.0 * trace_with_sum(evolved, symmetric_projector(4, pts, sign), moment.layout).real();
}

}  // namespace detail

double ep_exact(const ComplexMatrix& u, std::size_t d1, std::size_t d2) {
  return detail::ep_with_projector_sign(u, d1, d2, -1);
}

OperatorEntanglement operator_entanglement(const ComplexMatrix& u, std::size_t d1, std::size_t d2,
                                           Precision precision) {
  require_unitary(u, d1, d2);
  const auto t13 = Permutation::transposition(4, 0, 2);
  const auto t24 = Permutation::transposition(4, 1, 3);
  const double norm = static_cast<double>(d1 * d1 * d2 * d2);
  return {1.0 - sandwich_trace(u, d1, d2, t13, t13, precision).real() / norm,
          1.0 - sandwich_trace(u, d1, d2, t24, t13, precision).real() / norm};
}

double ep_from_operator_entanglement(const OperatorEntanglement& oe, std::size_t d1, std::size_t d2) {
  const double a = static_cast<double>(d1), b = static_cast<double>(d2);
  return a * b / ((a + 1.0) * (b + 1.0)) * (oe.direct + oe.swapped + 1.0 / (a * b) - 1.0);
}

double epd_exact_dense(const ComplexMatrix& u, std::size_t d1, std::size_t d2) {
  require_unitary(u, d1, d2);
  require_feasible(d1, d2, kDenseFourCopyLimit, "dense four-copy EPD");
  const double e = ep_exact(u, d1, d2);
  const MomentState moment = omega(4, d1, d2);
  const ComplexMatrix evolved = conjugate_tensor_power(u, moment.realize(), 4);
  const double fourth = 4.0 * trace_with_sum(evolved, antisymmetric_pairs(8, 2), moment.layout).real();
  return finish_radicand(fourth - e * e);
}

EpEpdResult ep_epd_dense(const ComplexMatrix& u, std::size_t d1, std::size_t d2) {
  return {ep_exact(u, d1, d2), epd_exact_dense(u, d1, d2), Method::exact_dense, 0.0, 0.0};
}

CycleBreakdown epd_cycle_breakdown(const ComplexMatrix& u, std::size_t d1, std::size_t d2,
                                   const CycleOptions& options) {
  require_unitary(u, d1, d2);
  require_feasible(d1, d2, kCycleLimit, "network four-copy EPD");

  const FourCopyTerms& plan = four_copy_terms();
  const auto& jobs = plan.jobs;
  const auto& first_job = plan.first_job;

  std::size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, jobs.size());

  // Each job writes only its own slot, so scheduling cannot change the sums.
  auto evaluate = [&]<typename Real>(auto&& trace_of) {
    std::vector<Real> values(jobs.size(), Real{0});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        const auto& cls = jobs[i].cls;
        values[i] = static_cast<Real>(cls.multiplicity) * static_cast<Real>(cls.representative.coefficient.num()) /
                    static_cast<Real>(cls.representative.coefficient.den()) *
                    trace_of(cls.representative);
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    std::array<Real, 3> f{};
    for (std::size_t s = 0; s < 3; ++s) {
      f[s] = pairwise_sum(std::span<const Real>(values).subspan(first_job[s], first_job[s + 1] - first_job[s]));
    }
    return f;
  };

  const Rational norm = moment_constants(d1).fourth * moment_constants(d2).fourth;
  auto run = [&](Precision precision) {
    CycleBreakdown out;
    out.term_count = plan.term_count;
    out.distinct_terms = jobs.size();
    out.precision = precision;
    if (precision == Precision::extended) {
      using detail::Quad;
      const auto f = evaluate.operator()<Quad>([&](const TraceTerm& t) {
        const auto nodes = sandwich_network(u, d1, d2, t.sigma, t.tau);
        return detail::contract_network_quad(nodes).real();
      });
      const auto t13 = Permutation::transposition(4, 0, 2);
      const auto t24 = Permutation::transposition(4, 1, 3);
      const Quad scale = static_cast<Quad>(d1 * d1 * d2 * d2);
      const Quad direct = 1 - detail::contract_network_quad(sandwich_network(u, d1, d2, t13, t13)).real() / scale;
      const Quad swapped = 1 - detail::contract_network_quad(sandwich_network(u, d1, d2, t24, t13)).real() / scale;
      const Quad a = static_cast<Quad>(d1), b = static_cast<Quad>(d2);
      const Quad ep = a * b / ((a + 1) * (b + 1)) * (direct + swapped + 1 / (a * b) - 1);
      const Quad c = static_cast<Quad>(norm.num()) / static_cast<Quad>(norm.den());
      out.ep = static_cast<double>(ep);
      out.f_identity = static_cast<double>(f[0]);
      out.f_single = static_cast<double>(f[1]);
      out.f_double = static_cast<double>(f[2]);
      out.radicand = static_cast<double>(c * (f[0] - 2 * f[1] + f[2]) - ep * ep);
    } else {
      const auto f = evaluate.operator()<double>(
          [&](const TraceTerm& t) { return sandwich_trace(u, d1, d2, t.sigma, t.tau).real(); });
      out.ep = ep_from_operator_entanglement(operator_entanglement(u, d1, d2), d1, d2);
      out.f_identity = f[0];
      out.f_single = f[1];
      out.f_double = f[2];
      out.radicand = norm.to_double() * (f[0] - 2.0 * f[1] + f[2]) - out.ep * out.ep;
    }
    return out;
  };

  CycleBreakdown out = run(options.precision);
  if (options.refine && out.precision == Precision::standard && out.radicand < kRefineBelow) {
    out = run(Precision::extended);
  }
  out.epd = finish_radicand(out.radicand);
  return out;
}

double epd_exact_cycle(const ComplexMatrix& u, std::size_t d1, std::size_t d2, const CycleOptions& options) {
  return epd_cycle_breakdown(u, d1, d2, options).epd;
}

EpEpdResult ep_epd_cycle(const ComplexMatrix& u, std::size_t d1, std::size_t d2, const CycleOptions& options) {
  const auto b = epd_cycle_breakdown(u, d1, d2, options);
  return {b.ep, b.epd, Method::exact_cycle, 0.0, 0.0};
}

VanishingReport check_vanishing_conditions(const ComplexMatrix& u, std::size_t d1, std::size_t d2, double tol) {
  require_unitary(u, d1, d2);
  const auto layout = SubsystemLayout::alternating(d1, d2, 2);
  const std::size_t first[] = {0, 2}, second[] = {1, 3};
  const auto sym13 = symmetric_projector(4, first, +1);
  const auto both = multiply_sums(sym13, symmetric_projector(4, second, +1));

  const ComplexMatrix udag = u.adjoint();
  auto commutator_defect = [&](const FormalGroupSum& sum) {
    const ComplexMatrix p = realize(sum, layout);
    // [U⊗², P] = U⊗²P − (U†⊗² P)† for Hermitian P.
    return max_abs_diff(apply_tensor_power(u, p, 2), apply_tensor_power(udag, p, 2).adjoint());
  };

  VanishingReport r;
  r.defect_i = commutator_defect(sym13);
  r.defect_ii = commutator_defect(both);
  r.condition_i = r.defect_i <= tol;
  r.condition_ii = r.defect_ii <= tol;
  r.ep = ep_exact(u, d1, d2);
  r.ep_zero = std::abs(r.ep) <= tol;
  r.implication_holds = !(r.condition_i || r.condition_ii) || r.ep_zero;
  return r;
}

}  // namespace epd
