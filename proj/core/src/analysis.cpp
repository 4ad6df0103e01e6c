// Copyright 2026 The condlo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "condlo/analysis.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "branches.hpp"
#include "condlo/errors.hpp"

namespace condlo {

namespace {

// Relative singular-value cut used when measuring the heralded output span.
constexpr double kSpanCutoff = 1e-8;

TestOperator make_test_operator(const CMatrix& raw) {
  TestOperator t;
  t.matrix = (raw + raw.adjoint()) / 2.0;
  if (t.matrix.size() > 0) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(t.matrix, Eigen::EigenvaluesOnly);
    t.eigenvalues = es.eigenvalues();
  }
  return t;
}

struct OutcomeData {
  std::vector<detail::Branch> branches;
  TestOperator test;
  TestVerdict verdict;
};

std::vector<OutcomeData> collect_outcomes(const ConditionalDevice& dev,
                                          const detail::LiftedInputs& lifted, double tolerance) {
  std::vector<OutcomeData> out;
  out.reserve(dev.outcomes().size());
  for (std::size_t l = 0; l < dev.outcomes().size(); ++l) {
    OutcomeData o;
    o.branches = detail::contract_outcome(dev, lifted, l);
    o.test = make_test_operator(detail::test_matrix(o.branches, dev.subspace_in().dimension()));
    o.verdict = test_condition(o.test, tolerance);
    out.push_back(std::move(o));
  }
  return out;
}

WMatrixFamily family_from(const ConditionalDevice& dev, const std::vector<OutcomeData>& outcomes,
                          const FockSubspaceBasis& output_basis, double tolerance) {
  if (!(output_basis.registry() == dev.computational_out())) {
    throw ValidationError("subspace_out", "output basis must live on the output computational modes");
  }
  const auto rows = static_cast<Eigen::Index>(output_basis.dimension());
  const auto cols = static_cast<Eigen::Index>(dev.subspace_in().dimension());
  WMatrixFamily fam;
  bool any = false;
  for (std::size_t l = 0; l < outcomes.size(); ++l) {
    const double tau = outcomes[l].verdict.tau;
    if (tau <= tolerance) continue;
    any = true;
    const auto& correction = dev.outcomes()[l].correction;
    if (correction && !(dev.subspace_out() && *dev.subspace_out() == output_basis)) {
      throw ValidationError("correction", "corrections are defined on the device's subspace_out");
    }
    for (const auto& br : outcomes[l].branches) {
      if (br.probability == 0.0) continue;
      CMatrix raw(rows, cols);
      for (Eigen::Index a = 0; a < rows; ++a) {
        for (Eigen::Index b = 0; b < cols; ++b) {
          raw(a, b) = inner(output_basis[static_cast<std::size_t>(a)],
                            br.images[static_cast<std::size_t>(b)]);
        }
      }
      CMatrix w = std::sqrt(br.probability / tau) * raw;
      if (correction) w = *correction * w;
      fam.members.push_back({l, br.signature, br.ancilla, std::move(w)});
    }
  }
  if (!any) {
    throw DegenerateDeviceError("no outcome has a nonzero success probability");
  }
  return fam;
}

FockSubspaceBasis detect_from(const ConditionalDevice& dev,
                              const std::vector<OutcomeData>& outcomes, double tolerance) {
  std::vector<FockVector> images;
  for (const auto& o : outcomes) {
    if (o.verdict.tau <= tolerance) continue;
    for (const auto& br : o.branches) {
      if (br.probability == 0.0) continue;
      for (const auto& v : br.images) {
        if (!v.is_zero()) images.push_back(v);
      }
    }
  }
  if (images.empty()) {
    throw DegenerateDeviceError("heralded output image is empty");
  }
  const FockSubspaceBasis columns(dev.computational_out(), images);
  const auto support = columns.support();
  const CMatrix a = columns.coordinates(support);

  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] <= kZeroProbability) {
    throw DegenerateDeviceError("heralded output image is empty");
  }
  Eigen::Index rank = 0;
  while (rank < s.size() && s[rank] > kSpanCutoff * s[0]) ++rank;
  const CMatrix u = svd.matrixU().leftCols(rank);
  const CMatrix projector = u * u.adjoint();

  std::vector<CVector> accepted;
  for (Eigen::Index k = 0; k < projector.cols() && Eigen::Index(accepted.size()) < rank; ++k) {
    CVector v = projector.col(k);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : accepted) v -= q * q.dot(v);
    }
    const double n = v.norm();
    if (n > kSpanCutoff) accepted.push_back(v / n);
  }

  std::vector<FockVector> basis;
  for (const auto& v : accepted) {
    FockVector f(dev.computational_out());
    for (Eigen::Index k = 0; k < v.size(); ++k) f.accumulate(support[static_cast<std::size_t>(k)], v[k]);
    f.prune();
    basis.push_back(std::move(f));
  }
  return FockSubspaceBasis(dev.computational_out(), std::move(basis));
}

}  // namespace

TestOperator test_operator(const ConditionalDevice& dev, std::size_t outcome,
                           const LiftOptions& options) {
  detail::check_outcome_index(dev, outcome);
  const auto lifted = detail::lift_inputs(dev, dev.subspace_in(), options.photon_cap);
  const auto branches = detail::contract_outcome(dev, lifted, outcome);
  return make_test_operator(detail::test_matrix(branches, dev.subspace_in().dimension()));
}

TestVerdict test_condition(const TestOperator& t, double tolerance) {
  TestVerdict v;
  const auto d = t.matrix.rows();
  if (d == 0) return v;
  v.tau = t.matrix.trace().real() / double(d);
  v.max_deviation = max_abs(t.matrix - v.tau * CMatrix::Identity(d, d));
  v.spread = t.eigenvalues.size() > 0 ? t.eigenvalues.maxCoeff() - t.eigenvalues.minCoeff() : 0.0;
  v.pass = v.max_deviation <= tolerance;
  v.degenerate = v.pass && std::abs(v.tau) <= tolerance;
  return v;
}

WMatrixFamily w_matrices(const ConditionalDevice& dev, const FockSubspaceBasis& output_basis,
                         double tolerance, const LiftOptions& options) {
  const auto lifted = detail::lift_inputs(dev, dev.subspace_in(), options.photon_cap);
  return family_from(dev, collect_outcomes(dev, lifted, tolerance), output_basis, tolerance);
}

ProportionalityResult proportionality_check(const WMatrixFamily& family, double tolerance) {
  std::vector<const CMatrix*> live;
  for (const auto& m : family.members) {
    if (m.matrix.norm() > tolerance) live.push_back(&m.matrix);
  }
  if (live.empty()) {
    throw DegenerateDeviceError("w-matrix family has no nonvanishing member");
  }
  const auto rows = live.front()->rows();
  const auto cols = live.front()->cols();
  for (const auto* m : live) {
    if (m->rows() != rows || m->cols() != cols) {
      throw ValidationError("w", "w-matrix family members differ in shape");
    }
  }

  CMatrix stacked(static_cast<Eigen::Index>(live.size()), rows * cols);
  for (std::size_t j = 0; j < live.size(); ++j) {
    for (Eigen::Index a = 0; a < rows; ++a) {
      for (Eigen::Index b = 0; b < cols; ++b) {
        stacked(static_cast<Eigen::Index>(j), a * cols + b) = (*live[j])(a, b);
      }
    }
  }
  Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeThinV);
  const auto& s = svd.singularValues();

  ProportionalityResult r;
  r.nonvanishing = live.size();
  r.relative_sigma2 = s.size() > 1 ? s[1] / s[0] : 0.0;
  r.pass = r.relative_sigma2 <= tolerance;

  // Right singular vector is proportional to conj(vec(w)).
  const CVector v = svd.matrixV().col(0).conjugate();
  CMatrix w(rows, cols);
  for (Eigen::Index a = 0; a < rows; ++a) {
    for (Eigen::Index b = 0; b < cols; ++b) w(a, b) = v[a * cols + b];
  }
  w *= std::sqrt(double(cols)) / w.norm();
  for (Eigen::Index a = 0; a < rows; ++a) {
    bool fixed = false;
    for (Eigen::Index b = 0; b < cols; ++b) {
      if (std::abs(w(a, b)) > tolerance) {
        w *= std::conj(w(a, b)) / std::abs(w(a, b));
        w(a, b) = std::abs(w(a, b));
        fixed = true;
        break;
      }
    }
    if (fixed) break;
  }

  const Complex wnorm2 = (w.adjoint() * w).trace();
  r.common.scalars.reserve(family.members.size());
  for (const auto& m : family.members) {
    r.common.scalars.push_back(m.matrix.rows() == rows && m.matrix.cols() == cols
                                   ? (w.adjoint() * m.matrix).trace() / wnorm2
                                   : Complex{});
  }
  r.common.w = std::move(w);
  return r;
}

double completeness_check(const CMatrix& w) {
  return max_abs(w.adjoint() * w - CMatrix::Identity(w.cols(), w.cols()));
}

EffectiveAction effective_action(const CMatrix& w, double t_eff, double tolerance) {
  if (w.rows() != w.cols() || w.rows() == 0) {
    throw ValidationError("w", "effective action needs a square matrix");
  }
  if (completeness_check(w) > tolerance) {
    throw ValidationError("w", "effective action needs a unitary matrix");
  }
  if (!(t_eff > 0.0)) {
    throw ValidationError("t_eff", "effective time must be positive");
  }
  // Schur form of a unitary is diagonal.
  Eigen::ComplexSchur<CMatrix> schur(w);
  const CMatrix& z = schur.matrixU();
  const auto n = w.rows();
  RVector q(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double phase = -std::arg(schur.matrixT()(j, j));
    if (phase <= -std::numbers::pi + 1e-12) phase = std::numbers::pi;
    q[j] = phase;
  }

  EffectiveAction a;
  a.q = z * q.cast<Complex>().asDiagonal() * z.adjoint();
  a.q = (a.q + a.q.adjoint()) / 2.0;
  a.eigenphases = q;
  std::sort(a.eigenphases.begin(), a.eigenphases.end());
  a.t_eff = t_eff;
  a.h_eff = a.q / t_eff;
  const CMatrix rebuilt = (Complex(0.0, -1.0) * a.q).exp();
  a.reconstruction_deviation = max_abs(rebuilt - w);
  return a;
}

FockSubspaceBasis detect_output_basis(const ConditionalDevice& dev, double tolerance,
                                      const LiftOptions& options) {
  const auto lifted = detail::lift_inputs(dev, dev.subspace_in(), options.photon_cap);
  return detect_from(dev, collect_outcomes(dev, lifted, tolerance), tolerance);
}

double randomized_d_probe(const ConditionalDevice& dev, std::size_t outcome, std::size_t trials,
                          std::uint64_t seed, const LiftOptions& options) {
  if (trials < 2) throw std::invalid_argument("randomized_d_probe needs at least two trials");
  detail::check_outcome_index(dev, outcome);
  const auto& basis = dev.subspace_in();
  const auto d = static_cast<Eigen::Index>(basis.dimension());

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  auto probe = [&](const CVector& c) {
    const double p = success_probability(dev, outcome, DensityOperator::pure(basis, c), options);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  };
  for (Eigen::Index k = 0; k < d; ++k) probe(CVector::Unit(d, k));
  for (std::size_t t = 0; t < trials; ++t) {
    CVector c(d);
    for (Eigen::Index k = 0; k < d; ++k) c[k] = Complex(gauss(rng), gauss(rng));
    probe(c);
  }
  return hi - lo;
}

AnalysisReport analyze(const ConditionalDevice& dev, const AnalysisOptions& options) {
  AnalysisReport r;
  r.options = options;
  r.sigma_source = dev.ancilla().source();
  r.input_dimension = dev.subspace_in().dimension();
  const double tol = options.tolerance;

  const auto lifted = detail::lift_inputs(dev, dev.subspace_in(), options.photon_cap);
  const auto outcomes = collect_outcomes(dev, lifted, tol);

  r.all_tests_pass = true;
  r.degenerate = true;
  for (std::size_t l = 0; l < outcomes.size(); ++l) {
    r.outcomes.push_back({l, outcomes[l].test, outcomes[l].verdict});
    r.total_tau += outcomes[l].verdict.tau;
    r.all_tests_pass = r.all_tests_pass && outcomes[l].verdict.pass;
    if (outcomes[l].verdict.tau > tol) r.degenerate = false;
  }
  if (r.degenerate) return r;

  try {
    if (dev.subspace_out()) {
      r.basis_source = BasisSource::User;
      r.output_basis = *dev.subspace_out();
    } else {
      r.basis_source = BasisSource::Detected;
      r.output_basis = detect_from(dev, outcomes, tol);
    }
    r.family = family_from(dev, outcomes, *r.output_basis, tol);
    r.proportionality = proportionality_check(*r.family, tol);
  } catch (const DegenerateDeviceError&) {
    r.degenerate = true;
    return r;
  }

  const auto& common = r.proportionality->common;
  if (r.proportionality->pass) r.family->common = common;
  r.completeness_deviation = completeness_check(common.w);

  r.operationally_unitary = r.all_tests_pass && r.proportionality->pass &&
                            *r.completeness_deviation <= tol;
  if (r.operationally_unitary && common.w.rows() == common.w.cols()) {
    r.action = effective_action(common.w, options.t_eff, tol);
  }
  return r;
}

}  // namespace condlo
