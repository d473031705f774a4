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

#include "entrosep/measurements.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace entrosep {

namespace {

Complex root_of_unity(std::size_t d, long power) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(power) /
                       static_cast<double>(d);
  return Complex(std::cos(angle), std::sin(angle));
}

Matrix identity_deviation(std::size_t dim, const std::vector<Matrix>& terms) {
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix& t : terms) sum += t;
  return sum - Matrix::Identity(dim, dim);
}

double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (hermitian + hermitian.adjoint()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

void ValidationReport::add(std::string name, double deviation, double tolerance) {
  const bool ok = deviation <= tolerance;
  conditions.push_back({std::move(name), deviation, tolerance, ok});
  worst = std::max(worst, deviation);
  pass = pass && ok;
}

std::string ValidationReport::summary() const {
  std::ostringstream msg;
  msg << (pass ? "pass" : "fail");
  for (const auto& c : conditions) {
    if (!c.pass) msg << "; " << c.name << " deviates by " << c.deviation;
  }
  return msg.str();
}

ValidationReport validate_rank_one_povm(std::size_t dim, const std::vector<Vector>& vectors) {
  ValidationReport report;
  if (dim == 0 || vectors.size() < dim) {
    report.add("outcome count >= dim", 1.0, 0.0);
    return report;
  }
  for (const Vector& v : vectors) {
    if (static_cast<std::size_t>(v.size()) != dim) {
      report.add("vector length", 1.0, 0.0);
      return report;
    }
  }
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Vector& v : vectors) sum += v * v.adjoint();
  report.add("resolution of identity",
             (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff());
  return report;
}

ValidationReport validate_general_povm(std::size_t dim, const std::vector<Matrix>& elements) {
  ValidationReport report;
  if (dim == 0 || elements.empty()) {
    report.add("nonempty", 1.0, 0.0);
    return report;
  }
  double worst_shape = 0.0;
  double worst_herm = 0.0;
  double worst_neg = 0.0;
  for (const Matrix& n : elements) {
    if (static_cast<std::size_t>(n.rows()) != dim ||
        static_cast<std::size_t>(n.cols()) != dim) {
      worst_shape = 1.0;
      continue;
    }
    worst_herm = std::max(worst_herm, (n - n.adjoint()).cwiseAbs().maxCoeff());
    worst_neg = std::max(worst_neg, std::max(0.0, -min_eigenvalue(n)));
  }
  if (worst_shape > 0.0) {
    report.add("element shape", worst_shape, 0.0);
    return report;
  }
  report.add("hermitian elements", worst_herm);
  report.add("positive semidefinite", worst_neg);
  report.add("resolution of identity",
             identity_deviation(dim, elements).cwiseAbs().maxCoeff());
  return report;
}

ValidationReport validate_mub_pair(const RankOnePovm& e1, const RankOnePovm& e2) {
  ValidationReport report;
  if (e1.dim() != e2.dim() || !e1.is_orthonormal_basis() || !e2.is_orthonormal_basis()) {
    report.add("orthonormal bases of equal dim", 1.0, 0.0);
    return report;
  }
  // Deviations are reported in squared-overlap units, |<e|e'>|^2 vs 1/d.
  const double target = 1.0 / static_cast<double>(e1.dim());
  double worst = 0.0;
  for (const Vector& u : e1.vectors()) {
    for (const Vector& v : e2.vectors()) {
      worst = std::max(worst, std::abs(std::norm(u.dot(v)) - target));
    }
  }
  report.add("unbiased overlaps", worst);
  return report;
}

ValidationReport validate_mum(const std::vector<GeneralPovm>& povms, double kappa) {
  ValidationReport report;
  if (povms.empty()) {
    report.add("nonempty", 1.0, 0.0);
    return report;
  }
  const std::size_t d = povms.front().dim();
  for (const GeneralPovm& p : povms) {
    if (p.dim() != d || p.outcome_count() != d) {
      report.add("d elements per POVM", 1.0, 0.0);
      return report;
    }
  }
  if (!(kappa > 1.0 / static_cast<double>(d) && kappa <= 1.0 + kMeasurementTol)) {
    report.add("kappa in (1/d, 1]", 1.0, 0.0);
    return report;
  }

  double worst_povm = 0.0;
  double worst_trace = 0.0;
  double worst_intra = 0.0;
  double worst_cross = 0.0;
  const double off_diag = (1.0 - kappa) / (static_cast<double>(d) - 1.0);
  for (std::size_t t = 0; t < povms.size(); ++t) {
    const auto& elems = povms[t].elements();
    worst_povm = std::max(worst_povm,
                          validate_general_povm(d, elems).worst);
    for (std::size_t i = 0; i < d; ++i) {
      worst_trace = std::max(worst_trace, std::abs(elems[i].trace().real() - 1.0));
      for (std::size_t j = 0; j < d; ++j) {
        const double overlap = (elems[i] * elems[j]).trace().real();
        const double expected = (i == j) ? kappa : off_diag;
        worst_intra = std::max(worst_intra, std::abs(overlap - expected));
      }
    }
    for (std::size_t u = t + 1; u < povms.size(); ++u) {
      for (const Matrix& a : povms[t].elements()) {
        for (const Matrix& b : povms[u].elements()) {
          const double overlap = (a * b).trace().real();
          worst_cross = std::max(worst_cross,
                                 std::abs(overlap - 1.0 / static_cast<double>(d)));
        }
      }
    }
  }
  report.add("POVM structure", worst_povm);
  report.add("unit traces", worst_trace);
  report.add("intra-POVM overlaps", worst_intra);
  report.add("cross-POVM overlaps", worst_cross);
  return report;
}

ValidationReport validate_sic(const RankOnePovm& f) {
  ValidationReport report;
  const std::size_t d = f.dim();
  if (f.outcome_count() != d * d) {
    report.add("d^2 outcomes", 1.0, 0.0);
    return report;
  }
  report.add("resolution of identity",
             validate_rank_one_povm(d, f.vectors()).worst);
  const double norm_target = 1.0 / static_cast<double>(d);
  double worst_norm = 0.0;
  double worst_overlap = 0.0;
  const double overlap_target =
      1.0 / (static_cast<double>(d) * static_cast<double>(d) * (static_cast<double>(d) + 1.0));
  for (std::size_t i = 0; i < f.outcome_count(); ++i) {
    worst_norm = std::max(worst_norm,
                          std::abs(f.vector(i).squaredNorm() - norm_target));
    for (std::size_t j = 0; j < f.outcome_count(); ++j) {
      if (i == j) continue;
      // |<f_i|f_j>|^2 = (1/d^2) |<phi_i|phi_j>|^2 = 1/(d^2 (d+1)).
      const double overlap = std::norm(f.vector(i).dot(f.vector(j)));
      worst_overlap = std::max(worst_overlap, std::abs(overlap - overlap_target));
    }
  }
  report.add("subnormalization 1/d", worst_norm);
  report.add("symmetric overlaps", worst_overlap);
  return report;
}

ValidationReport validate_gsic(const GeneralPovm& povm, double purity_a) {
  ValidationReport report;
  const std::size_t d = povm.dim();
  const double dd = static_cast<double>(d);
  if (povm.outcome_count() != d * d) {
    report.add("d^2 elements", 1.0, 0.0);
    return report;
  }
  if (!(purity_a > 1.0 / (dd * dd * dd) && purity_a <= 1.0 / (dd * dd) + kMeasurementTol)) {
    report.add("a in (1/d^3, 1/d^2]", 1.0, 0.0);
    return report;
  }
  report.add("POVM structure", validate_general_povm(d, povm.elements()).worst);
  const double b = (1.0 - purity_a * dd) / (dd * (dd * dd - 1.0));
  double worst_trace = 0.0;
  double worst_purity = 0.0;
  double worst_pair = 0.0;
  const auto& elems = povm.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    worst_trace = std::max(worst_trace, std::abs(elems[i].trace().real() - 1.0 / dd));
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const double overlap = (elems[i] * elems[j]).trace().real();
      if (i == j) {
        worst_purity = std::max(worst_purity, std::abs(overlap - purity_a));
      } else {
        worst_pair = std::max(worst_pair, std::abs(overlap - b));
      }
    }
  }
  report.add("traces 1/d", worst_trace);
  report.add("constant purity a", worst_purity);
  report.add("pairwise overlaps b", worst_pair);
  return report;
}

RankOnePovm RankOnePovm::make(std::size_t dim, std::vector<Vector> vectors) {
  ValidationReport report = validate_rank_one_povm(dim, vectors);
  if (!report.pass) {
    throw InputError("rank-one POVM: " + report.summary());
  }
  return RankOnePovm(dim, std::move(vectors));
}

bool RankOnePovm::is_orthonormal_basis() const {
  if (outcome_count() != dim_) return false;
  for (const Vector& v : vectors_) {
    if (std::abs(v.squaredNorm() - 1.0) > kMeasurementTol) return false;
  }
  return true;
}

std::vector<Matrix> RankOnePovm::element_matrices() const {
  std::vector<Matrix> out;
  out.reserve(vectors_.size());
  for (const Vector& v : vectors_) out.push_back(v * v.adjoint());
  return out;
}

GeneralPovm GeneralPovm::make(std::size_t dim, std::vector<Matrix> elements) {
  ValidationReport report = validate_general_povm(dim, elements);
  if (!report.pass) {
    throw InputError("POVM: " + report.summary());
  }
  return GeneralPovm(dim, std::move(elements));
}

ProbabilityVector probabilities(const RankOnePovm& m, const DensityMatrix& rho) {
  if (m.dim() != rho.dim()) throw UsageError("probabilities: dimension mismatch");
  std::vector<double> p(m.outcome_count());
  for (std::size_t i = 0; i < m.outcome_count(); ++i) {
    p[i] = (m.vector(i).adjoint() * rho.matrix() * m.vector(i))(0).real();
  }
  return ProbabilityVector(std::move(p));
}

ProbabilityVector probabilities(const GeneralPovm& m, const DensityMatrix& rho) {
  if (m.dim() != rho.dim()) throw UsageError("probabilities: dimension mismatch");
  std::vector<double> p(m.outcome_count());
  for (std::size_t i = 0; i < m.outcome_count(); ++i) {
    p[i] = (m.elements()[i] * rho.matrix()).trace().real();
  }
  return ProbabilityVector(std::move(p));
}

double eta(const RankOnePovm& f, const RankOnePovm& g) {
  if (f.dim() != g.dim()) throw UsageError("eta: dimension mismatch");
  double best = 0.0;
  for (const Vector& u : f.vectors()) {
    for (const Vector& v : g.vectors()) {
      best = std::max(best, std::abs(u.dot(v)));
    }
  }
  return best;
}

Matrix overlap_matrix(const RankOnePovm& f, const RankOnePovm& g) {
  if (f.dim() != g.dim() || f.outcome_count() != g.outcome_count()) {
    throw UsageError("overlap_matrix: measurements must share dim and outcome count");
  }
  const std::size_t n = f.outcome_count();
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = f.vector(i).dot(g.vector(j));  // <f_i|g_j>
    }
  }
  return v;
}

double index_of_coincidence(const ProbabilityVector& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] * p[i];
  return sum;
}

Matrix gen_pauli_z(std::size_t d) {
  Matrix z = Matrix::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j) z(j, j) = root_of_unity(d, static_cast<long>(j));
  return z;
}

Matrix gen_pauli_x(std::size_t d) {
  Matrix x = Matrix::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

RankOnePovm computational_basis(std::size_t d) {
  std::vector<Vector> vectors;
  vectors.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    Vector v = Vector::Zero(d);
    v(k) = 1.0;
    vectors.push_back(std::move(v));
  }
  return RankOnePovm::make(d, std::move(vectors));
}

RankOnePovm pauli_x_basis(std::size_t d) {
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Vector> vectors;
  vectors.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    Vector v(d);
    for (std::size_t j = 0; j < d; ++j) {
      v(j) = norm * root_of_unity(d, -static_cast<long>(j * k));
    }
    vectors.push_back(std::move(v));
  }
  return RankOnePovm::make(d, std::move(vectors));
}

RankOnePovm rotated_qubit_basis(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2.0)) {
    throw UsageError("rotated_qubit_basis: theta must lie in (0, pi/2)");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Vector u0(2), u1(2);
  u0 << c, s;
  u1 << s, -c;
  return RankOnePovm::make(2, {u0, u1});
}

std::vector<RankOnePovm> qubit_pauli_mubs() {
  const double r = 1.0 / std::sqrt(2.0);
  Vector x0(2), x1(2), y0(2), y1(2);
  x0 << r, r;
  x1 << r, -r;
  y0 << r, Complex(0.0, r);
  y1 << r, Complex(0.0, -r);
  return {computational_basis(2), RankOnePovm::make(2, {x0, x1}),
          RankOnePovm::make(2, {y0, y1})};
}

std::vector<RankOnePovm> prime_pauli_mubs(std::size_t d) {
  if (d == 2) return qubit_pauli_mubs();
  if (d != 3 && d != 5) {
    throw UsageError("prime_pauli_mubs: supported dimensions are 2, 3, 5");
  }
  std::vector<RankOnePovm> bases;
  bases.push_back(computational_basis(d));
  bases.push_back(pauli_x_basis(d));
  // Eigenbases of X Z^m labeled by XZ^m |v_k> = omega^k |v_k>;
  // components v_j = omega^(m j(j-1)/2 - j k)/sqrt(d), valid for odd d.
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t m = 1; m < d; ++m) {
    std::vector<Vector> vectors;
    vectors.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
      Vector v(d);
      for (std::size_t j = 0; j < d; ++j) {
        const long phase = static_cast<long>(m) * static_cast<long>(j) *
                               (static_cast<long>(j) - 1) / 2 -
                           static_cast<long>(j) * static_cast<long>(k);
        v(j) = norm * root_of_unity(d, phase);
      }
      vectors.push_back(std::move(v));
    }
    bases.push_back(RankOnePovm::make(d, std::move(vectors)));
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      ValidationReport pair = validate_mub_pair(bases[i], bases[j]);
      if (!pair.pass) {
        throw NumericError("prime_pauli_mubs: constructed bases fail unbiasedness: " +
                           pair.summary());
      }
    }
  }
  return bases;
}

RankOnePovm sic_povm(std::size_t d) {
  std::vector<Vector> fiducials;
  if (d == 2) {
    // Tetrahedron orbit: Bloch vectors (0,0,1) and three tilted by
    // arccos(-1/3) at azimuths 0, 2pi/3, 4pi/3.
    Vector top(2);
    top << 1.0, 0.0;
    fiducials.push_back(top);
    const double c = 1.0 / std::sqrt(3.0);
    const double s = std::sqrt(2.0 / 3.0);
    for (int j = 0; j < 3; ++j) {
      Vector v(2);
      v << c, s * root_of_unity(3, j);
      fiducials.push_back(v);
    }
  } else if (d == 3) {
    // Weyl-Heisenberg orbit of the fiducial (0, 1, -1)/sqrt(2).
    Vector phi(3);
    phi << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    const Matrix x = gen_pauli_x(3);
    const Matrix z = gen_pauli_z(3);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        Matrix displacement = Matrix::Identity(3, 3);
        for (int i = 0; i < a; ++i) displacement = x * displacement;
        for (int i = 0; i < b; ++i) displacement = displacement * z;
        fiducials.push_back(displacement * phi);
      }
    }
  } else {
    throw UsageError("sic_povm: supported dimensions are 2 and 3");
  }

  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Vector> vectors;
  vectors.reserve(fiducials.size());
  for (const Vector& phi : fiducials) vectors.push_back(scale * phi);
  RankOnePovm povm = RankOnePovm::make(d, std::move(vectors));
  ValidationReport report = validate_sic(povm);
  if (!report.pass) {
    throw NumericError("sic_povm: construction fails SIC conditions: " + report.summary());
  }
  return povm;
}

MumSet mum_from_mubs(const std::vector<RankOnePovm>& bases, double t) {
  if (!(t > 0.0 && t <= 1.0)) throw UsageError("mum_from_mubs: t must lie in (0, 1]");
  if (bases.empty()) throw UsageError("mum_from_mubs: need at least one basis");
  const std::size_t d = bases.front().dim();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      ValidationReport pair = validate_mub_pair(bases[i], bases[j]);
      if (!pair.pass) {
        throw UsageError("mum_from_mubs: input bases are not mutually unbiased: " +
                         pair.summary());
      }
    }
  }
  const double dd = static_cast<double>(d);
  const double kappa = t * t + (1.0 - t * t) / dd;
  const Matrix mix = (1.0 - t) / dd * Matrix::Identity(d, d);
  std::vector<GeneralPovm> povms;
  povms.reserve(bases.size());
  for (const RankOnePovm& basis : bases) {
    std::vector<Matrix> elements;
    elements.reserve(d);
    for (const Vector& e : basis.vectors()) {
      elements.push_back(t * (e * e.adjoint()) + mix);
    }
    povms.push_back(GeneralPovm::make(d, std::move(elements)));
  }
  MumSet set{std::move(povms), kappa};
  ValidationReport report = validate_mum(set.povms, set.kappa);
  if (!report.pass) {
    throw NumericError("mum_from_mubs: construction fails MUM conditions: " +
                       report.summary());
  }
  return set;
}

GeneralSic gsic_from_sic(const RankOnePovm& sic, double t) {
  if (!(t > 0.0 && t <= 1.0)) throw UsageError("gsic_from_sic: t must lie in (0, 1]");
  ValidationReport sic_report = validate_sic(sic);
  if (!sic_report.pass) {
    throw UsageError("gsic_from_sic: input fails SIC validation: " + sic_report.summary());
  }
  const std::size_t d = sic.dim();
  const double dd = static_cast<double>(d);
  const double a = t * t / (dd * dd) + 2.0 * t * (1.0 - t) / (dd * dd * dd) +
                   (1.0 - t) * (1.0 - t) / (dd * dd * dd);
  const Matrix mix = (1.0 - t) / (dd * dd) * Matrix::Identity(d, d);
  std::vector<Matrix> elements;
  elements.reserve(sic.outcome_count());
  for (const Vector& f : sic.vectors()) {
    elements.push_back(t * (f * f.adjoint()) + mix);
  }
  GeneralSic gsic{GeneralPovm::make(d, std::move(elements)), a};
  ValidationReport report = validate_gsic(gsic.povm, gsic.purity_a);
  if (!report.pass) {
    throw NumericError("gsic_from_sic: construction fails general-SIC conditions: " +
                       report.summary());
  }
  return gsic;
}

}  // namespace entrosep
