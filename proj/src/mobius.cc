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

#include "symstab/mobius.h"

#include <cmath>

#include <Eigen/SVD>

namespace symstab {
namespace {

// [p, q] = p_a q_b - p_b q_a, proportional to (p - q) in plane coordinates.
Complex Bracket(const ProjectivePoint& p, const ProjectivePoint& q) {
  return p.a() * q.b() - p.b() * q.a();
}

// Sends q -> 0, r -> 1, s -> infinity.
Mat2 ToStandardFrame(const ProjectivePoint& q, const ProjectivePoint& r,
                     const ProjectivePoint& s) {
  const Complex rs = Bracket(r, s);
  const Complex rq = Bracket(r, q);
  Mat2 t;
  t << rs * q.b(), -rs * q.a(), rq * s.b(), -rq * s.a();
  return t;
}

void RequireDistinct(const ProjectivePoint& q, const ProjectivePoint& r,
                     const ProjectivePoint& s, double tol) {
  if (PointsCoincide(q, r, tol) || PointsCoincide(r, s, tol) ||
      PointsCoincide(q, s, tol)) {
    throw DomainError("three-point Mobius construction needs distinct points");
  }
}

constexpr double kParabolicGap = 1e-9;

}  // namespace

MobiusMap FromThreePoints(const ProjectivePoint& q, const ProjectivePoint& r,
                          const ProjectivePoint& s, const ProjectivePoint& q2,
                          const ProjectivePoint& r2, const ProjectivePoint& s2,
                          double tol) {
  RequireDistinct(q, r, s, tol);
  RequireDistinct(q2, r2, s2, tol);
  const Mat2 source = ToStandardFrame(q, r, s);
  const Mat2 target = ToStandardFrame(q2, r2, s2);
  // target^{-1} up to scale is its adjugate.
  Mat2 adjugate;
  adjugate << target(1, 1), -target(0, 1), -target(1, 0), target(0, 0);
  return MobiusMap(adjugate * source);
}

MobiusMap FitMobius(std::span<const ProjectivePoint> from, std::span<const ProjectivePoint> to) {
  if (from.size() != to.size() || from.size() < 3) {
    throw DomainError("Mobius fit needs three or more point pairs");
  }
  // (f p)_0 q_1 - (f p)_1 q_0 = 0 for each pair (p, q).
  Eigen::MatrixXcd equations(from.size(), 4);
  for (size_t i = 0; i < from.size(); ++i) {
    const Eigen::Vector2cd p = from[i].vector();
    const Eigen::Vector2cd q = to[i].vector();
    equations.row(i) << p(0) * q(1), p(1) * q(1), -p(0) * q(0), -p(1) * q(0);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(equations, Eigen::ComputeFullV);
  const Eigen::Vector4cd f = svd.matrixV().col(3);
  return MobiusMap(f(0), f(1), f(2), f(3));
}

ProjectivePoint Apply(const MobiusMap& f, const ProjectivePoint& p) {
  const Eigen::Vector2cd image = f.matrix() * p.vector();
  return ProjectivePoint::Canonicalize(image(0), image(1));
}

MobiusMap Compose(const MobiusMap& f, const MobiusMap& g) {
  return MobiusMap(f.matrix() * g.matrix());
}

MobiusMap Inverse(const MobiusMap& f) {
  return MobiusMap(f.d(), -f.b(), -f.c(), f.a());
}

bool IsIdentity(const MobiusMap& f, double tol) {
  const Mat2& m = f.matrix();
  return (m - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol ||
         (m + Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

FixedPoints ComputeFixedPoints(const MobiusMap& f) {
  FixedPoints out;
  if (IsIdentity(f)) {
    out.all = true;
    return out;
  }
  const Mat2& m = f.matrix();
  const Complex trace = m.trace();
  const Complex root = std::sqrt(trace * trace - 4.0);
  std::vector<Complex> eigenvalues = {(trace + root) / 2.0};
  if (std::abs(root) >= kParabolicGap) eigenvalues.push_back((trace - root) / 2.0);
  for (const Complex& lambda : eigenvalues) {
    const Eigen::Vector2cd v1(m(0, 1), lambda - m(0, 0));
    const Eigen::Vector2cd v2(lambda - m(1, 1), m(1, 0));
    const Eigen::Vector2cd& v = v1.norm() >= v2.norm() ? v1 : v2;
    out.points.push_back(ProjectivePoint::Canonicalize(v(0), v(1)));
  }
  return out;
}

Complex CrossRatio(const ProjectivePoint& z, const ProjectivePoint& q,
                   const ProjectivePoint& r, const ProjectivePoint& s) {
  return Bracket(z, q) * Bracket(r, s) / (Bracket(z, s) * Bracket(r, q));
}

}  // namespace symstab
