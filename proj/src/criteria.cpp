// Copyright 2026 The entrosep authors
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

#include "entrosep/criteria.hpp"

#include <algorithm>
#include <cmath>

namespace entrosep {

namespace {

constexpr double kOrderTol = 1e-9;

double inverse_order(const EntropyOrder& order) {
  return order.is_infinite() ? 0.0 : 1.0 / order.value();
}

CriterionReport make_report(std::string id, std::vector<std::pair<std::string, double>> params,
                            double observed, double bound, char side, bool upper_bound = false) {
  CriterionReport report;
  report.criterion_id = std::move(id);
  report.params = std::move(params);
  report.observed = observed;
  report.bound = bound;
  report.margin = upper_bound ? bound - observed : observed - bound;
  report.violated = report.margin < -kViolationTol;
  report.side = side;
  return report;
}

double entropy_of(std::span<const double> p, EntropyOrder alpha, EntropyKind kind) {
  return kind == EntropyKind::kRenyi ? renyi(p, alpha) : tsallis(p, alpha);
}

void require_equal_layout(const ConvolutionPovm& m1, const ConvolutionPovm& m2,
                          const char* who) {
  if (m1.outcome_count != m2.outcome_count || m1.dim_a != m2.dim_a || m1.dim_b != m2.dim_b) {
    throw UsageError(std::string(who) + ": the two measurements must share layout");
  }
}

const RankOnePovm& require_rank_one(const LocalMeasurement& m, const char* who) {
  const RankOnePovm* p = as_rank_one(m);
  if (p == nullptr) {
    throw UsageError(std::string(who) + ": local measurements must be rank-one");
  }
  return *p;
}

/// Pick the subsystem whose bound is larger (the strictest valid test).
char pick_side(double bound_a, double bound_b) { return bound_b > bound_a ? 'B' : 'A'; }

double measured_purity(const Matrix& element) {
  return (element * element).trace().real();
}

}  // namespace

std::size_t local_dim(const LocalMeasurement& m) {
  return std::visit([](const auto& v) { return v.dim(); }, m);
}

std::size_t local_outcomes(const LocalMeasurement& m) {
  return std::visit([](const auto& v) { return v.outcome_count(); }, m);
}

std::vector<Matrix> local_elements(const LocalMeasurement& m) {
  if (const RankOnePovm* p = std::get_if<RankOnePovm>(&m)) return p->element_matrices();
  return std::get<GeneralPovm>(m).elements();
}

const RankOnePovm* as_rank_one(const LocalMeasurement& m) {
  return std::get_if<RankOnePovm>(&m);
}

ConvolutionPovm build_convolution_povm(const LocalMeasurement& na, const LocalMeasurement& nb) {
  const std::size_t outcomes = local_outcomes(na);
  if (outcomes != local_outcomes(nb)) {
    throw UsageError("build_convolution_povm: outcome counts must match");
  }
  if (local_dim(na) != local_dim(nb)) {
    throw UsageError("build_convolution_povm: local dimensions must match");
  }
  ConvolutionPovm povm{outcomes, local_dim(na), local_dim(nb), {}, na, nb};

  const std::vector<Matrix> ea = local_elements(na);
  const std::vector<Matrix> eb = local_elements(nb);
  const std::size_t joint = povm.dim_a * povm.dim_b;
  povm.elements.assign(outcomes, Matrix::Zero(joint, joint));
  for (std::size_t k = 0; k < outcomes; ++k) {
    for (std::size_t i = 0; i < outcomes; ++i) {
      povm.elements[k] += kron(ea[i], eb[(k + outcomes - i) % outcomes]);
    }
  }

  ValidationReport report = validate_general_povm(joint, povm.elements);
  if (!report.pass) {
    throw NumericError("build_convolution_povm: joint elements fail POVM validation: " +
                       report.summary());
  }
  return povm;
}

ProbabilityVector probabilities(const ConvolutionPovm& m, const DensityMatrix& rho) {
  if (rho.dim() != m.dim_a * m.dim_b) {
    throw UsageError("probabilities: state dimension does not match the joint POVM");
  }
  if (rho.subsystem_dims() &&
      *rho.subsystem_dims() != std::make_pair(m.dim_a, m.dim_b)) {
    throw UsageError("probabilities: state subsystem dims do not match the joint POVM");
  }
  std::vector<double> p(m.outcome_count);
  for (std::size_t k = 0; k < m.outcome_count; ++k) {
    p[k] = (m.elements[k] * rho.matrix()).trace().real();
  }
  return ProbabilityVector(std::move(p));
}

CriterionReport mu_criterion(const ConvolutionPovm& m1, const ConvolutionPovm& m2,
                             const DensityMatrix& rho, EntropyOrder alpha, EntropyOrder beta,
                             EntropyKind kind) {
  require_equal_layout(m1, m2, "mu_criterion");
  if (alpha.is_infinite() && beta.is_infinite()) {
    throw UsageError("mu_criterion: alpha and beta cannot both be infinite");
  }
  if (std::abs(inverse_order(alpha) + inverse_order(beta) - 2.0) > kOrderTol) {
    throw UsageError("mu_criterion: orders must satisfy 1/alpha + 1/beta = 2");
  }
  if (kind == EntropyKind::kTsallis && (alpha.is_infinite() || beta.is_infinite())) {
    throw UsageError("mu_criterion: the Tsallis form needs finite orders");
  }
  const RankOnePovm& a1 = require_rank_one(m1.local_a, "mu_criterion");
  const RankOnePovm& a2 = require_rank_one(m2.local_a, "mu_criterion");
  const RankOnePovm& b1 = require_rank_one(m1.local_b, "mu_criterion");
  const RankOnePovm& b2 = require_rank_one(m2.local_b, "mu_criterion");

  const double eta_a = eta(a1, a2);
  const double eta_b = eta(b1, b2);
  double bound_a = 0.0;
  double bound_b = 0.0;
  if (kind == EntropyKind::kRenyi) {
    bound_a = -2.0 * std::log(eta_a);
    bound_b = -2.0 * std::log(eta_b);
  } else {
    const EntropyOrder mu(std::max(alpha.value(), beta.value()));
    bound_a = alpha_log(1.0 / (eta_a * eta_a), mu);
    bound_b = alpha_log(1.0 / (eta_b * eta_b), mu);
  }
  const char side = pick_side(bound_a, bound_b);

  const ProbabilityVector p1 = probabilities(m1, rho);
  const ProbabilityVector p2 = probabilities(m2, rho);
  const double observed = entropy_of(p1, alpha, kind) + entropy_of(p2, beta, kind);
  const std::string id =
      kind == EntropyKind::kRenyi ? "mu-renyi" : "mu-tsallis";
  return make_report(id, {{"alpha", alpha.value()}, {"beta", beta.value()}}, observed,
                     std::max(bound_a, bound_b), side);
}

namespace {

SValueProfile side_profile(const ConvolutionPovm& m1, const ConvolutionPovm& m2, Subsystem s,
                           const char* who) {
  const RankOnePovm& first =
      require_rank_one(s == Subsystem::A ? m1.local_a : m1.local_b, who);
  const RankOnePovm& second =
      require_rank_one(s == Subsystem::A ? m2.local_a : m2.local_b, who);
  return s_values(overlap_matrix(first, second));
}

}  // namespace

CriterionReport maj_criterion(const ConvolutionPovm& m1, const ConvolutionPovm& m2,
                              const DensityMatrix& rho, EntropyOrder alpha, EntropyKind kind) {
  require_equal_layout(m1, m2, "maj_criterion");
  if (alpha.is_infinite()) {
    throw UsageError("maj_criterion: infinite order is not supported");
  }
  if (kind == EntropyKind::kRenyi && alpha.value() > 1.0 + kOrderTol) {
    throw UsageError(
        "maj_criterion: the Renyi form needs 0 < alpha <= 1; "
        "use maj_criterion_qubit for two qubits and 1 < alpha <= 2");
  }

  const SValueProfile prof_a = side_profile(m1, m2, Subsystem::A, "maj_criterion");
  const SValueProfile prof_b = side_profile(m1, m2, Subsystem::B, "maj_criterion");
  const double bound_a = entropy_of(prof_a.w, alpha, kind);
  const double bound_b = entropy_of(prof_b.w, alpha, kind);
  const char side = pick_side(bound_a, bound_b);

  const ProbabilityVector p1 = probabilities(m1, rho);
  const ProbabilityVector p2 = probabilities(m2, rho);
  const double observed = entropy_of(p1, alpha, kind) + entropy_of(p2, alpha, kind);
  const std::string id =
      kind == EntropyKind::kRenyi ? "maj-renyi" : "maj-tsallis";
  return make_report(id, {{"alpha", alpha.value()}}, observed, std::max(bound_a, bound_b),
                     side);
}

CriterionReport maj_criterion_qubit(const ConvolutionPovm& m1, const ConvolutionPovm& m2,
                                    const DensityMatrix& rho, EntropyOrder alpha,
                                    QubitMajVariant variant) {
  require_equal_layout(m1, m2, "maj_criterion_qubit");
  if (m1.dim_a != 2 || m1.dim_b != 2) {
    throw UsageError("maj_criterion_qubit: only defined for two qubits");
  }
  if (alpha.is_infinite() || alpha.value() <= 1.0 || alpha.value() > 2.0 + kOrderTol) {
    throw UsageError("maj_criterion_qubit: needs 1 < alpha <= 2");
  }
  for (const LocalMeasurement* local : {&m1.local_a, &m1.local_b, &m2.local_a, &m2.local_b}) {
    const RankOnePovm& basis = require_rank_one(*local, "maj_criterion_qubit");
    if (!basis.is_orthonormal_basis()) {
      throw UsageError("maj_criterion_qubit: local measurements must be orthonormal bases");
    }
  }

  const SValueProfile prof_a = side_profile(m1, m2, Subsystem::A, "maj_criterion_qubit");
  const SValueProfile prof_b = side_profile(m1, m2, Subsystem::B, "maj_criterion_qubit");
  const double a = alpha.value();
  auto bound_of = [&](const SValueProfile& prof) {
    if (variant == QubitMajVariant::kA) {
      double pow_sum = 0.0;
      for (double x : prof.w) {
        if (x > 0.0) pow_sum += std::pow(x, a);
      }
      return 2.0 / (1.0 - a) * std::log((1.0 + pow_sum) / 2.0);
    }
    return renyi(prof.w_prime, alpha);
  };
  const double bound_a = bound_of(prof_a);
  const double bound_b = bound_of(prof_b);
  const char side = pick_side(bound_a, bound_b);

  const ProbabilityVector p1 = probabilities(m1, rho);
  const ProbabilityVector p2 = probabilities(m2, rho);
  const double observed = renyi(p1, alpha) + renyi(p2, alpha);
  const std::string id =
      variant == QubitMajVariant::kA ? "maj-qubit-a" : "maj-qubit-b";
  return make_report(id, {{"alpha", alpha.value()}}, observed, std::max(bound_a, bound_b),
                     side);
}

namespace {

/// Shared layout checks for the structured-measurement criteria; returns the
/// common local dimension d.
std::size_t require_square_layout(const std::vector<ConvolutionPovm>& ms, const char* who) {
  if (ms.empty()) throw UsageError(std::string(who) + ": no measurements");
  const std::size_t d = ms.front().dim_a;
  for (const ConvolutionPovm& m : ms) {
    if (m.dim_a != d || m.dim_b != d) {
      throw UsageError(std::string(who) + ": subsystems must share one dimension");
    }
  }
  return d;
}

void require_unbiased_side(const std::vector<const RankOnePovm*>& bases, const char* who) {
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (!bases[i]->is_orthonormal_basis()) {
      throw UsageError(std::string(who) + ": local measurements must be orthonormal bases");
    }
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if (!validate_mub_pair(*bases[i], *bases[j]).pass) {
        throw UsageError(std::string(who) + ": local bases are not mutually unbiased");
      }
    }
  }
}

}  // namespace

CriterionReport mub_criterion(const std::vector<ConvolutionPovm>& ms, const DensityMatrix& rho,
                              EntropyOrder alpha, EntropyKind kind) {
  const std::size_t d = require_square_layout(ms, "mub_criterion");
  const std::size_t k = ms.size();
  if (alpha.is_infinite()) throw UsageError("mub_criterion: infinite order is not supported");
  if (kind == EntropyKind::kTsallis) {
    if (alpha.value() > 2.0 + kOrderTol) {
      throw UsageError("mub_criterion: the Tsallis form needs 0 < alpha <= 2");
    }
  } else {
    const double limit = (d == 2) ? 2.0 : 1.0;
    if (alpha.value() > limit + kOrderTol) {
      throw UsageError("mub_criterion: the Renyi form needs alpha <= 1 (alpha <= 2 for qubits)");
    }
  }
  std::vector<const RankOnePovm*> side_a, side_b;
  for (const ConvolutionPovm& m : ms) {
    if (m.outcome_count != d) {
      throw UsageError("mub_criterion: expected basis measurements with d outcomes");
    }
    side_a.push_back(&require_rank_one(m.local_a, "mub_criterion"));
    side_b.push_back(&require_rank_one(m.local_b, "mub_criterion"));
  }
  require_unbiased_side(side_a, "mub_criterion");
  require_unbiased_side(side_b, "mub_criterion");

  const double dd = static_cast<double>(d);
  const double kk = static_cast<double>(k);
  const double ratio = kk * dd / (dd + kk - 1.0);
  const double bound =
      kind == EntropyKind::kRenyi ? std::log(ratio) : alpha_log(ratio, alpha);

  double observed = 0.0;
  for (const ConvolutionPovm& m : ms) {
    observed += entropy_of(probabilities(m, rho), alpha, kind);
  }
  observed /= kk;
  const std::string id =
      kind == EntropyKind::kRenyi ? "mub-renyi" : "mub-tsallis";
  return make_report(id, {{"alpha", alpha.value()}, {"k", kk}}, observed, bound, '-');
}

CriterionReport mum_criterion(const std::vector<ConvolutionPovm>& ms, const DensityMatrix& rho,
                              EntropyOrder alpha) {
  const std::size_t d = require_square_layout(ms, "mum_criterion");
  const std::size_t k = ms.size();
  if (alpha.is_infinite() || alpha.value() > 2.0 + kOrderTol) {
    throw UsageError("mum_criterion: needs 0 < alpha <= 2");
  }

  auto side_kappa = [&](Subsystem s) {
    std::vector<GeneralPovm> povms;
    for (const ConvolutionPovm& m : ms) {
      const LocalMeasurement& local = (s == Subsystem::A) ? m.local_a : m.local_b;
      if (local_outcomes(local) != d) {
        throw UsageError("mum_criterion: expected d-outcome local measurements");
      }
      povms.push_back(GeneralPovm::make(d, local_elements(local)));
    }
    const double kappa = measured_purity(povms.front().elements().front());
    ValidationReport report = validate_mum(povms, kappa);
    if (!report.pass) {
      throw UsageError("mum_criterion: local measurements fail MUM validation: " +
                       report.summary());
    }
    return kappa;
  };
  const double kappa_a = side_kappa(Subsystem::A);
  const double kappa_b = side_kappa(Subsystem::B);

  const double dd = static_cast<double>(d);
  const double kk = static_cast<double>(k);
  const double bound_a = alpha_log(kk * dd / (kappa_a * dd + kk - 1.0), alpha);
  const double bound_b = alpha_log(kk * dd / (kappa_b * dd + kk - 1.0), alpha);
  const char side = pick_side(bound_a, bound_b);

  double observed = 0.0;
  for (const ConvolutionPovm& m : ms) {
    observed += tsallis(probabilities(m, rho), alpha);
  }
  observed /= kk;
  const double kappa_used = (side == 'A') ? kappa_a : kappa_b;
  return make_report("mum-tsallis",
                     {{"alpha", alpha.value()}, {"k", kk}, {"kappa", kappa_used}}, observed,
                     std::max(bound_a, bound_b), side);
}

CriterionReport sic_criterion(const ConvolutionPovm& m, const DensityMatrix& rho,
                              EntropyOrder alpha) {
  if (m.dim_a != m.dim_b) throw UsageError("sic_criterion: subsystems must share one dimension");
  if (alpha.is_infinite() || alpha.value() > 2.0 + kOrderTol) {
    throw UsageError("sic_criterion: needs 0 < alpha <= 2");
  }
  const RankOnePovm& fa = require_rank_one(m.local_a, "sic_criterion");
  const RankOnePovm& fb = require_rank_one(m.local_b, "sic_criterion");
  for (const RankOnePovm* f : {&fa, &fb}) {
    ValidationReport report = validate_sic(*f);
    if (!report.pass) {
      throw UsageError("sic_criterion: local measurement fails SIC validation: " +
                       report.summary());
    }
  }
  const double dd = static_cast<double>(m.dim_a);
  const double bound = alpha_log(dd * (dd + 1.0) / 2.0, alpha);
  const double observed = tsallis(probabilities(m, rho), alpha);
  return make_report("sic-tsallis", {{"alpha", alpha.value()}}, observed, bound, '-');
}

CriterionReport gsic_criterion(const ConvolutionPovm& m, const DensityMatrix& rho,
                               EntropyOrder alpha) {
  if (m.dim_a != m.dim_b) throw UsageError("gsic_criterion: subsystems must share one dimension");
  if (alpha.is_infinite() || alpha.value() > 2.0 + kOrderTol) {
    throw UsageError("gsic_criterion: needs 0 < alpha <= 2");
  }
  const double dd = static_cast<double>(m.dim_a);
  auto side_purity = [&](const LocalMeasurement& local) {
    if (local_outcomes(local) != m.dim_a * m.dim_a) {
      throw UsageError("gsic_criterion: local measurements need d^2 elements");
    }
    GeneralPovm povm = GeneralPovm::make(m.dim_a, local_elements(local));
    const double a = measured_purity(povm.elements().front());
    ValidationReport report = validate_gsic(povm, a);
    if (!report.pass) {
      throw UsageError("gsic_criterion: local measurement fails general-SIC validation: " +
                       report.summary());
    }
    return a;
  };
  const double a_a = side_purity(m.local_a);
  const double a_b = side_purity(m.local_b);
  const double bound_a = alpha_log(dd * (dd + 1.0) / (a_a * dd * dd + 1.0), alpha);
  const double bound_b = alpha_log(dd * (dd + 1.0) / (a_b * dd * dd + 1.0), alpha);
  const char side = pick_side(bound_a, bound_b);
  const double observed = tsallis(probabilities(m, rho), alpha);
  const double a_used = (side == 'A') ? a_a : a_b;
  return make_report("gsic-tsallis", {{"alpha", alpha.value()}, {"a", a_used}}, observed,
                     std::max(bound_a, bound_b), side);
}

CorrelationResult correlation_measure(const std::vector<BasisPairing>& pairs,
                                      const DensityMatrix& rho) {
  if (pairs.empty()) throw UsageError("correlation_measure: no basis pairs");
  const std::size_t d = pairs.front().basis_a.dim();
  std::vector<const RankOnePovm*> side_a, side_b;
  for (const BasisPairing& pair : pairs) {
    if (pair.basis_a.dim() != d || pair.basis_b.dim() != d) {
      throw UsageError("correlation_measure: bases must share one dimension");
    }
    side_a.push_back(&pair.basis_a);
    side_b.push_back(&pair.basis_b);
  }
  require_unbiased_side(side_a, "correlation_measure");
  require_unbiased_side(side_b, "correlation_measure");
  if (rho.dim() != d * d) {
    throw UsageError("correlation_measure: state dimension mismatch");
  }

  CorrelationResult result;
  for (const BasisPairing& pair : pairs) {
    std::vector<std::size_t> pairing = pair.pairing;
    if (pairing.empty()) {
      pairing.resize(d);
      for (std::size_t i = 0; i < d; ++i) pairing[i] = i;
    }
    if (pairing.size() != d) {
      throw UsageError("correlation_measure: pairing must list d outcome indices");
    }
    std::vector<bool> seen(d, false);
    for (std::size_t i : pairing) {
      if (i >= d || seen[i]) throw UsageError("correlation_measure: pairing must be a permutation");
      seen[i] = true;
    }
    for (std::size_t i = 0; i < d; ++i) {
      const Vector joint = kron(pair.basis_a.vector(i), pair.basis_b.vector(pairing[i]));
      result.j += (joint.adjoint() * rho.matrix() * joint)(0).real();
    }
  }
  const double kk = static_cast<double>(pairs.size());
  result.bound = 1.0 + (kk - 1.0) / static_cast<double>(d);
  result.violated = result.j > result.bound + kViolationTol;
  return result;
}

CriterionReport correlation_report(const std::vector<BasisPairing>& pairs,
                                   const DensityMatrix& rho) {
  const CorrelationResult result = correlation_measure(pairs, rho);
  return make_report("corr", {{"k", static_cast<double>(pairs.size())}}, result.j,
                     result.bound, '-', /*upper_bound=*/true);
}

}  // namespace entrosep
