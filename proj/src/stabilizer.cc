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

#include "symstab/stabilizer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/SVD>

#include "symstab/majorana.h"
#include "symstab/mobius.h"
#include "symstab/oracle.h"

namespace symstab {
namespace {

// Columns are the two point vectors.
Mat2 PointBasis(const ProjectivePoint& p, const ProjectivePoint& q) {
  Mat2 h;
  h.col(0) = p.vector();
  h.col(1) = q.vector();
  return h;
}

ProjectivePoint Orthogonal(const ProjectivePoint& p) {
  return ProjectivePoint::Canonicalize(-std::conj(p.b()), std::conj(p.a()));
}

void RequireDiversity(const MajoranaSet& points, int m, const char* who) {
  if (points.diversity() != m) {
    throw PreconditionError(std::string(who) + " needs diversity " + std::to_string(m) +
                            ", got " + std::to_string(points.diversity()));
  }
}

StabilizerCertificate FinishCertificate(const Mat2& g, const MajoranaSet& points,
                                        std::vector<int> permutation) {
  StabilizerCertificate cert{LocalOperator(g), std::move(permutation), {}};
  cert.lambdas = ExtractLambdas(g, points, cert.permutation);
  return cert;
}

// Rounding bound for evaluating g^{(x)n} x: the same evaluation on |g| and
// |x|, scaled by the operation count.
double RoundingFloor(const SymmetricState& state, const Mat2& g) {
  std::vector<Complex> magnitudes(state.n() + 1);
  for (int k = 0; k <= state.n(); ++k) magnitudes[k] = std::abs(state.amplitude(k));
  const std::vector<Complex> bound =
      ApplySymmetricPower(g.cwiseAbs().cast<Complex>(), SymmetricState(state.n(), magnitudes));
  double norm2 = 0.0;
  for (const Complex& b : bound) norm2 += std::norm(b);
  return 16.0 * (state.n() + 1) * std::numeric_limits<double>::epsilon() * std::sqrt(norm2);
}

// A residual above tolerance but inside the rounding floor comes from an
// ill-conditioned g (nearly coincident clusters), not from a wrong one.
CertificateCheck RequireStabilizes(const SymmetricState& state, const LocalOperator& g,
                                   const Tolerances& tol) {
  const CertificateCheck check = CheckCertificate(state, g);
  if (check.residual <= tol.certificate) return check;
  char residual[32];
  std::snprintf(residual, sizeof(residual), "%.3g", check.residual);
  if (check.residual <= RoundingFloor(state, g.matrix())) {
    throw NumericError(std::string("certificate residual ") + residual +
                           " is at the rounding floor of an ill-conditioned operator",
                       check.residual);
  }
  throw InternalInconsistencyError(std::string("certificate residual ") + residual +
                                   " exceeds tolerance");
}

void VerifyAgainst(const SymmetricState& state, const MajoranaSet& points,
                   const StabilizerCertificate& cert, const Tolerances& tol) {
  if (std::abs(cert.LambdaProduct(points) - 1.0) > LambdaTolerance(points, cert)) {
    throw InternalInconsistencyError("certificate lambda product differs from 1");
  }
  if (cert.g.IsScalar()) {
    throw InternalInconsistencyError("certificate operator is a scalar");
  }
  RequireStabilizes(state, cert.g, tol);
}

// Diagonal stabilizer in the eigenbasis of the two points with eigenvalues
// e^{i theta k2}, e^{-i theta k1}; the product constraint holds for every
// theta. Theta is chosen so g stays within a bounded distance of the
// identity however close the points are.
StabilizerCertificate M2SmallRotation(const SymmetricState& state, const MajoranaSet& points,
                                      const Tolerances& tol) {
  const int k1 = points.clusters[0].multiplicity;
  const int k2 = points.clusters[1].multiplicity;
  const Mat2 h_inv = PointBasis(points.clusters[0].point, points.clusters[1].point);
  const Mat2 projector = h_inv * Eigen::Vector2cd(1.0, 0.0).asDiagonal() * h_inv.inverse();
  const double theta = 0.25 / ((k1 + k2) * projector.norm());
  const Mat2 g = h_inv *
                 Eigen::Vector2cd(std::polar(1.0, theta * k2), std::polar(1.0, -theta * k1))
                     .asDiagonal() *
                 h_inv.inverse();
  StabilizerCertificate cert = FinishCertificate(g, points, {0, 1});
  VerifyAgainst(state, points, cert, tol);
  return cert;
}

// Gauss-Newton on g^{(x)n} x - x. A map read off inexact points misses the
// state by its point errors raised through the tensor power; the
// amplitudes pin g down much better.
Mat2 PolishOnState(const SymmetricState& state, const Mat2& g0) {
  const int n = state.n();
  const Eigen::Map<const Eigen::VectorXcd> x(state.amplitudes().data(), n + 1);
  auto misfit = [&](const Mat2& g) {
    const std::vector<Complex> y = ApplySymmetricPower(g, state);
    return Eigen::VectorXcd(Eigen::Map<const Eigen::VectorXcd>(y.data(), n + 1) - x);
  };
  Mat2 g = g0;
  Eigen::VectorXcd r = misfit(g);
  constexpr double kStep = 1e-6;
  for (int iter = 0; iter < 4 && r.norm() > 0.0; ++iter) {
    Eigen::MatrixXcd jacobian(n + 1, 4);
    for (int e = 0; e < 4; ++e) {
      Mat2 direction = Mat2::Zero();
      direction(e / 2, e % 2) = 1.0;
      jacobian.col(e) = (misfit(g * (Mat2::Identity() + kStep * direction)) -
                         misfit(g * (Mat2::Identity() - kStep * direction))) /
                        (2.0 * kStep);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jacobian, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-8);
    const Eigen::Vector4cd delta = svd.solve(-r);
    Mat2 step;
    step << delta(0), delta(1), delta(2), delta(3);
    const Mat2 next = g * (Mat2::Identity() + step);
    const Eigen::VectorXcd next_r = misfit(next);
    if (!(next_r.norm() < r.norm())) break;
    g = next;
    r = next_r;
  }
  return g;
}

}  // namespace

std::optional<std::vector<int>> MatchClusters(const MobiusMap& f,
                                              const MajoranaSet& source,
                                              const MajoranaSet& target,
                                              double tol) {
  const int m = source.diversity();
  if (target.diversity() != m) return std::nullopt;
  std::vector<int> assignment(m, -1);
  std::vector<bool> used(m, false);
  for (int i = 0; i < m; ++i) {
    const ProjectivePoint image = Apply(f, source.clusters[i].point);
    // Chordal stretch of the unimodular map at the source point.
    const Eigen::Vector2cd unit_point = source.clusters[i].point.vector().normalized();
    const double stretch = 1.0 / (f.matrix() * unit_point).squaredNorm();
    int best = -1;
    double best_distance = std::numeric_limits<double>::infinity();
    for (int j = 0; j < m; ++j) {
      if (used[j] || target.clusters[j].multiplicity != source.clusters[i].multiplicity) {
        continue;
      }
      // Excess over the tolerance the two point errors can explain.
      const double d = CrossDeterminant(image, target.clusters[j].point) -
                       4.0 * (stretch * source.clusters[i].error + target.clusters[j].error);
      if (d < best_distance) {
        best_distance = d;
        best = j;
      }
    }
    if (best < 0 || !(best_distance <= tol)) return std::nullopt;
    assignment[i] = best;
    used[best] = true;
  }
  return assignment;
}

std::optional<PermutingMap> MatchWithRefit(const MobiusMap& f, const MajoranaSet& source,
                                           const MajoranaSet& target, double tol) {
  if (auto exact = MatchClusters(f, source, target, tol)) return PermutingMap{f, *exact};
  const auto tentative = MatchClusters(f, source, target, std::sqrt(tol));
  if (!tentative) return std::nullopt;
  std::vector<ProjectivePoint> from;
  std::vector<ProjectivePoint> to;
  for (size_t i = 0; i < tentative->size(); ++i) {
    from.push_back(source.clusters[i].point);
    to.push_back(target.clusters[(*tentative)[i]].point);
  }
  try {
    const MobiusMap refit = FitMobius(from, to);
    if (auto permutation = MatchClusters(refit, source, target, tol)) {
      return PermutingMap{refit, std::move(*permutation)};
    }
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

std::array<int, 3> AnchorClusters(const MajoranaSet& points) {
  if (points.diversity() < 3) throw PreconditionError("anchors need three clusters");
  std::vector<int> order(points.diversity());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return points.clusters[i].point < points.clusters[j].point;
  });
  return {order[0], order[1], order[2]};
}

std::optional<PermutingMap> FindPermutingMobius(const MajoranaSet& points, double tol) {
  if (points.diversity() < 3) {
    throw PreconditionError("Mobius search needs at least three distinct points");
  }
  const auto anchors = AnchorClusters(points);
  const int m = points.diversity();
  auto mult = [&](int i) { return points.clusters[i].multiplicity; };
  const ProjectivePoint& p0 = points.clusters[anchors[0]].point;
  const ProjectivePoint& p1 = points.clusters[anchors[1]].point;
  const ProjectivePoint& p2 = points.clusters[anchors[2]].point;
  for (int j0 = 0; j0 < m; ++j0) {
    if (mult(j0) != mult(anchors[0])) continue;
    for (int j1 = 0; j1 < m; ++j1) {
      if (j1 == j0 || mult(j1) != mult(anchors[1])) continue;
      for (int j2 = 0; j2 < m; ++j2) {
        if (j2 == j0 || j2 == j1 || mult(j2) != mult(anchors[2])) continue;
        const MobiusMap f = FromThreePoints(p0, p1, p2, points.clusters[j0].point,
                                            points.clusters[j1].point,
                                            points.clusters[j2].point, tol);
        if (IsIdentity(f)) continue;
        if (auto found = MatchWithRefit(f, points, points, tol)) {
          if (!IsIdentity(found->map)) return found;
        }
      }
    }
  }
  return std::nullopt;
}

double LambdaTolerance(const MajoranaSet& points, const StabilizerCertificate& cert) {
  const Mat2& g = cert.g.matrix();
  const double g_norm = g.norm();
  double spread = 0.0;
  for (size_t i = 0; i < cert.permutation.size() && i < points.clusters.size(); ++i) {
    const Cluster& source = points.clusters[i];
    const Cluster& target = points.clusters[cert.permutation[i]];
    const double image = (g * source.point.vector().normalized()).norm();
    if (!(image > 0.0)) return 1e-9;
    spread += source.multiplicity * (g_norm * source.error / image + target.error);
  }
  return 1e-9 + 4.0 * spread;
}

std::vector<Complex> ExtractLambdas(const Mat2& g, const MajoranaSet& points,
                                    std::span<const int> permutation) {
  std::vector<Complex> lambdas;
  lambdas.reserve(points.clusters.size());
  for (size_t i = 0; i < points.clusters.size(); ++i) {
    const Eigen::Vector2cd image = g * points.clusters[i].point.vector();
    const Eigen::Vector2cd target = points.clusters[permutation[i]].point.vector();
    const int j = std::abs(target(0)) >= std::abs(target(1)) ? 0 : 1;
    lambdas.push_back(image(j) / target(j));
  }
  return lambdas;
}

StabilizerCertificate CertificateFromMobius(const SymmetricState& state,
                                            const MajoranaSet& points,
                                            const MobiusMap& f,
                                            std::span<const int> permutation,
                                            const Tolerances& tol) {
  const int n = state.n();
  Mat2 g = f.matrix();
  Complex product = 1.0;
  const std::vector<Complex> raw = ExtractLambdas(g, points, permutation);
  for (size_t i = 0; i < raw.size(); ++i) {
    for (int r = 0; r < points.clusters[i].multiplicity; ++r) product *= raw[i];
  }
  if (!(std::abs(product) > 0.0)) {
    throw InternalInconsistencyError("Mobius map collapses a Majorana point");
  }
  g *= std::pow(product, -1.0 / n);
  if (CheckCertificate(state, LocalOperator(g)).residual > tol.certificate) {
    g = PolishOnState(state, g);
  }
  StabilizerCertificate cert =
      FinishCertificate(g, points, std::vector<int>(permutation.begin(), permutation.end()));
  VerifyAgainst(state, points, cert, tol);
  return cert;
}

StabilizerCertificate M1Certificate(const MajoranaSet& points) {
  RequireDiversity(points, 1, "m1 certificate");
  const ProjectivePoint& eps = points.clusters[0].point;
  const Mat2 h_inv = PointBasis(eps, Orthogonal(eps));
  const Mat2 g = h_inv * Eigen::Vector2cd(1.0, 2.0).asDiagonal() * h_inv.inverse();
  StabilizerCertificate cert = FinishCertificate(g, points, {0});
  VerifyAgainst(MajoranaCompose(points), points, cert, Tolerances{});
  return cert;
}

StabilizerCertificate M2Certificate(const MajoranaSet& points) {
  RequireDiversity(points, 2, "m2 certificate");
  const int k1 = points.clusters[0].multiplicity;
  const int k2 = points.clusters[1].multiplicity;
  const Mat2 h_inv = PointBasis(points.clusters[0].point, points.clusters[1].point);
  Mat2 core;
  std::vector<int> permutation;
  if (k1 != k2) {
    const Complex lambda1 = k1 > 1 ? std::polar(1.0, 2.0 * std::numbers::pi / k1) : 1.0;
    const Complex lambda2 = k1 > 1 ? 1.0 : std::polar(1.0, 2.0 * std::numbers::pi / k2);
    core << lambda1, 0.0, 0.0, lambda2;
    permutation = {0, 1};
  } else {
    // Swap form (0, l2; l1, 0) with l1 = l2 = 1, so (l1 l2)^k = 1.
    core << 0.0, 1.0, 1.0, 0.0;
    permutation = {1, 0};
  }
  const Mat2 g = h_inv * core * h_inv.inverse();
  StabilizerCertificate cert = FinishCertificate(g, points, std::move(permutation));
  VerifyAgainst(MajoranaCompose(points), points, cert, Tolerances{});
  return cert;
}

CertificateCheck CheckCertificate(const SymmetricState& state, const LocalOperator& g) {
  if (state.n() <= oracle::kDenseQubitLimit) {
    return {oracle::VerifyCertificate(state, g), true};
  }
  const std::vector<Complex> image = ApplySymmetricPower(g.matrix(), state);
  double d2 = 0.0;
  for (int k = 0; k <= state.n(); ++k) d2 += std::norm(image[k] - state.amplitude(k));
  return {std::sqrt(d2), false};
}

StabilizerVerdict DecideStabilizer(const SymmetricState& state, const Tolerances& tol) {
  return DecideStabilizer(state, MajoranaDecompose(state, tol), tol);
}

StabilizerVerdict DecideStabilizer(const SymmetricState& state, const MajoranaSet& points,
                                   const Tolerances& tol) {
  StabilizerVerdict verdict;
  const int m = points.diversity();
  if (m == 1) {
    verdict.method = CertificateMethod::kM1Construction;
    verdict.certificate = M1Certificate(points);
  } else if (m == 2) {
    verdict.method = CertificateMethod::kM2Construction;
    try {
      verdict.certificate = M2Certificate(points);
      RequireStabilizes(state, verdict.certificate->g, tol);
    } catch (const NumericError&) {
      // Nearly coincident points make the standard eigenvalues too
      // ill-conditioned to verify.
      if (points.clusters[0].multiplicity == points.clusters[1].multiplicity) throw;
      verdict.certificate = M2SmallRotation(state, points, tol);
    }
  } else {
    verdict.method = CertificateMethod::kMobiusSearch;
    if (auto found = FindPermutingMobius(points, tol.point)) {
      verdict.certificate =
          CertificateFromMobius(state, points, found->map, found->permutation, tol);
    }
  }
  if (verdict.certificate) {
    const CertificateCheck check = RequireStabilizes(state, verdict.certificate->g, tol);
    verdict.trivial = false;
    verdict.dense_verified = check.dense;
    verdict.residual = check.residual;
  }
  return verdict;
}

const char* ToString(PrecheckResult result) {
  switch (result) {
    case PrecheckResult::kTrivial:
      return "trivial";
    case PrecheckResult::kNontrivial:
      return "nontrivial";
    case PrecheckResult::kUnknown:
      return "unknown";
  }
  return "unknown";
}

PrecheckResult ConfigPrecheck(const DegeneracyConfiguration& config) {
  const int m = config.diversity;
  if (m <= 2) return PrecheckResult::kNontrivial;
  std::map<int, int> counts;
  for (int k : config.multiplicities) ++counts[k];
  int unique = 0;
  for (const auto& [k, count] : counts) unique += (count == 1);
  if (unique >= 3) return PrecheckResult::kTrivial;
  if (m == 3) return PrecheckResult::kNontrivial;
  return PrecheckResult::kUnknown;
}

TwoQubitStabilizer SolveTwoQubitStabilizer(const SymmetricState& state, double tol) {
  if (state.n() != 2) throw PreconditionError("two-qubit solver needs n = 2");
  const double r2 = std::sqrt(2.0);
  Mat2 x;
  x << state.amplitude(0), state.amplitude(1) / r2, state.amplitude(1) / r2,
      state.amplitude(2);

  // Unknowns: A (row-major) at 0..3, C (row-major) at 4..7; rows (A X - X C)_ij.
  Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(4, 8);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        system(2 * i + j, 2 * i + k) += x(k, j);
        system(2 * i + j, 4 + 2 * k + j) -= x(i, k);
      }
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(system);
  lu.setThreshold(1e-10);
  const Eigen::MatrixXcd kernel = lu.kernel();
  const int dimension = static_cast<int>(kernel.cols());

  const oracle::DenseState v = oracle::DenseFromSymmetric(state);
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXcd weights(dimension);
    for (int c = 0; c < dimension; ++c) weights(c) = Complex(normal(rng), normal(rng));
    const Eigen::VectorXcd u = kernel * weights;
    Mat2 a;
    Mat2 c;
    a << u(0), u(1), u(2), u(3);
    c << u(4), u(5), u(6), u(7);
    const double scale = u.norm();
    if (std::abs(c.determinant()) < 1e-6 * scale * scale ||
        std::abs(a.determinant()) < 1e-6 * scale * scale) {
      continue;
    }
    const Complex s = std::sqrt(c.determinant());
    a /= s;
    c /= s;
    const Mat2 b = c.inverse().transpose();
    const LocalOperator op_a(a);
    const LocalOperator op_b(b);
    if (op_a.IsScalar() && op_b.IsScalar()) continue;
    const std::vector<Mat2> ops = {a, b};
    const double residual =
        oracle::Distance(oracle::ApplyLocal(std::span<const Mat2>(ops), v), v);
    if (residual <= tol) return {op_a, op_b, residual, dimension};
  }
  throw InternalInconsistencyError("two-qubit linear system produced no verified stabilizer");
}

}  // namespace symstab
