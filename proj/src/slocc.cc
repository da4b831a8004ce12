// Copyright 2026 The symstab Authors
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

#include "symstab/slocc.h"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "symstab/majorana.h"
#include "symstab/mobius.h"
#include "symstab/stabilizer.h"

namespace symstab {
namespace {

ProjectivePoint Sum(const ProjectivePoint& p, const ProjectivePoint& q) {
  return ProjectivePoint::Canonicalize(p.a() + q.a(), p.b() + q.b());
}

ProjectivePoint Orthogonal(const ProjectivePoint& p) {
  return ProjectivePoint::Canonicalize(-std::conj(p.b()), std::conj(p.a()));
}

std::optional<EquivalenceWitness> SmallCorrespondence(const MajoranaSet& source,
                                                      const MajoranaSet& target,
                                                      double tol) {
  const auto& s = source.clusters;
  const auto& t = target.clusters;
  if (source.diversity() == 1) {
    const ProjectivePoint s1 = Orthogonal(s[0].point);
    const ProjectivePoint t1 = Orthogonal(t[0].point);
    const MobiusMap f = FromThreePoints(s[0].point, s1, Sum(s[0].point, s1), t[0].point,
                                        t1, Sum(t[0].point, t1), tol);
    return EquivalenceWitness{f, {0}};
  }
  // Two clusters: try the multiplicity-preserving assignments.
  for (int swap = 0; swap < 2; ++swap) {
    const Cluster& u0 = t[swap];
    const Cluster& u1 = t[1 - swap];
    if (u0.multiplicity != s[0].multiplicity || u1.multiplicity != s[1].multiplicity) {
      continue;
    }
    const MobiusMap f =
        FromThreePoints(s[0].point, s[1].point, Sum(s[0].point, s[1].point), u0.point,
                        u1.point, Sum(u0.point, u1.point), tol);
    if (auto bijection = MatchClusters(f, source, target, tol)) {
      return EquivalenceWitness{f, std::move(*bijection)};
    }
  }
  return std::nullopt;
}

// Part of w^{(x)n} psi1 orthogonal to psi2, over `scale`.
Eigen::VectorXcd Misfit(const Mat2& w, const SymmetricState& psi1, const Eigen::VectorXcd& psi2,
                        double scale) {
  const std::vector<Complex> image = ApplySymmetricPower(w, psi1);
  const Eigen::VectorXcd y = Eigen::Map<const Eigen::VectorXcd>(image.data(), image.size());
  return (y - psi2 * psi2.dot(y)) / scale;
}

// Gauss-Newton on the amplitudes. The points fix the map only as well as
// the roots are conditioned; the amplitudes are the actual data.
MobiusMap PolishWitness(const MobiusMap& witness, const SymmetricState& psi1,
                        const SymmetricState& psi2) {
  const int n = psi1.n();
  Eigen::VectorXcd target(n + 1);
  for (int k = 0; k <= n; ++k) target(k) = psi2.amplitude(k);
  target.normalize();
  Mat2 w = witness.matrix();
  const std::vector<Complex> start = ApplySymmetricPower(w, psi1);
  double scale = 0.0;
  for (const Complex& y : start) scale += std::norm(y);
  scale = std::sqrt(scale);
  if (!(scale > 0.0)) return witness;

  Eigen::VectorXcd r = Misfit(w, psi1, target, scale);
  constexpr double kStep = 1e-6;
  for (int iter = 0; iter < 4 && r.norm() > 0.0; ++iter) {
    // Holomorphic in the entries, so real central differences suffice.
    Eigen::MatrixXcd jacobian(n + 1, 4);
    for (int e = 0; e < 4; ++e) {
      Mat2 direction = Mat2::Zero();
      direction(e / 2, e % 2) = 1.0;
      jacobian.col(e) = (Misfit(w * (Mat2::Identity() + kStep * direction), psi1, target, scale) -
                         Misfit(w * (Mat2::Identity() - kStep * direction), psi1, target, scale)) /
                        (2.0 * kStep);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jacobian, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-8);
    const Eigen::Vector4cd delta = svd.solve(-r);
    Mat2 step;
    step << delta(0), delta(1), delta(2), delta(3);
    const Mat2 next = w * (Mat2::Identity() + step);
    const Eigen::VectorXcd next_r = Misfit(next, psi1, target, scale);
    if (!(next_r.norm() < r.norm()) || std::abs(next.determinant()) <= 1e-12) break;
    w = next;
    r = next_r;
  }
  return MobiusMap(w);
}

}  // namespace

std::optional<EquivalenceWitness> FindCorrespondence(const MajoranaSet& source,
                                                     const MajoranaSet& target,
                                                     double tol) {
  if (source.n != target.n) throw PreconditionError("qubit counts differ");
  if (ComputeDegeneracyConfiguration(source) != ComputeDegeneracyConfiguration(target)) {
    return std::nullopt;
  }
  const int m = source.diversity();
  if (m < 3) return SmallCorrespondence(source, target, tol);

  const auto anchors = AnchorClusters(source);
  const auto& s = source.clusters;
  const auto& t = target.clusters;
  for (int j0 = 0; j0 < m; ++j0) {
    if (t[j0].multiplicity != s[anchors[0]].multiplicity) continue;
    for (int j1 = 0; j1 < m; ++j1) {
      if (j1 == j0 || t[j1].multiplicity != s[anchors[1]].multiplicity) continue;
      for (int j2 = 0; j2 < m; ++j2) {
        if (j2 == j0 || j2 == j1 || t[j2].multiplicity != s[anchors[2]].multiplicity) {
          continue;
        }
        const MobiusMap f =
            FromThreePoints(s[anchors[0]].point, s[anchors[1]].point, s[anchors[2]].point,
                            t[j0].point, t[j1].point, t[j2].point, tol);
        if (auto found = MatchWithRefit(f, source, target, tol)) {
          return EquivalenceWitness{found->map, std::move(found->permutation)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<EquivalenceWitness> SloccEquivalent(const SymmetricState& psi1,
                                                  const SymmetricState& psi2,
                                                  const Tolerances& tol) {
  if (psi1.n() != psi2.n()) {
    throw PreconditionError("qubit counts differ: " + std::to_string(psi1.n()) + " vs " +
                            std::to_string(psi2.n()));
  }
  auto witness = FindCorrespondence(MajoranaDecompose(psi1, tol), MajoranaDecompose(psi2, tol),
                                    tol.point);
  if (witness) witness->map = PolishWitness(witness->map, psi1, psi2);
  return witness;
}

ConnectingOperator Connect(const SymmetricState& psi1, const SymmetricState& psi2,
                           const MobiusMap& witness) {
  if (psi1.n() != psi2.n()) throw PreconditionError("qubit counts differ");
  const int n = psi1.n();
  const std::vector<Complex> image = ApplySymmetricPower(witness.matrix(), psi1);
  double norm2 = 0.0;
  for (const Complex& y : image) norm2 += std::norm(y);
  const double norm = std::sqrt(norm2);
  if (!(norm > 0.0)) throw InternalInconsistencyError("witness annihilates the state");
  const Mat2 g = witness.matrix() * std::pow(norm, -1.0 / n);
  Complex phase = 0.0;
  for (int k = 0; k <= n; ++k) phase += std::conj(psi2.amplitude(k)) * image[k] / norm;
  if (!(std::abs(phase) >= 1.0 - 1e-8)) {
    throw InternalInconsistencyError("connecting operator overlap " +
                                     std::to_string(std::abs(phase)) + " below 1 - 1e-8");
  }
  return {LocalOperator(g), phase};
}

double PMax(const Mat2& g, int n) {
  if (std::abs(g.determinant()) <= 1e-12) throw PreconditionError("p_max needs invertible g");
  if (n < 1) throw PreconditionError("p_max needs n >= 1");
  const Mat2 form = g.adjoint() * g;
  const double half_trace = 0.5 * (form(0, 0).real() + form(1, 1).real());
  const double det = form.determinant().real();
  const double lambda_max = half_trace + std::sqrt(std::max(0.0, half_trace * half_trace - det));
  return 1.0 / std::pow(lambda_max, n);
}

double PMax(const LocalOperator& g, int n) { return PMax(g.matrix(), n); }

std::optional<ConversionReport> Convert(const SymmetricState& psi1,
                                        const SymmetricState& psi2,
                                        const Tolerances& tol) {
  const auto witness = SloccEquivalent(psi1, psi2, tol);
  if (!witness) return std::nullopt;
  const ConnectingOperator op = Connect(psi1, psi2, witness->map);
  return ConversionReport{op.g, witness->map, PMax(op.g, psi1.n()), op.phase};
}

}  // namespace symstab
