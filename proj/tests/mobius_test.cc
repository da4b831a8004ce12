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

#include <gtest/gtest.h>

#include "test_util.h"

namespace symstab {
namespace {

using testing::kOmega;

const ProjectivePoint kZero = ProjectivePoint::FromPlane(0.0);
const ProjectivePoint kOne = ProjectivePoint::FromPlane(1.0);
const ProjectivePoint kInf = ProjectivePoint::Infinity();

void ExpectSamePoint(const ProjectivePoint& p, const ProjectivePoint& q, double tol = 1e-12) {
  EXPECT_LE(CrossDeterminant(p, q), tol)
      << "(" << p.a() << ", " << p.b() << ") vs (" << q.a() << ", " << q.b() << ")";
}

MobiusMap RandomMap(std::mt19937_64& rng) { return MobiusMap(testing::RandomMatrix(rng)); }

TEST(FromThreePointsTest, IdentityTriple) {
  const MobiusMap f = FromThreePoints(kZero, kOne, kInf, kZero, kOne, kInf);
  EXPECT_TRUE(IsIdentity(f));
}

TEST(FromThreePointsTest, Reflection) {
  const MobiusMap f = FromThreePoints(kZero, kOne, kInf, kOne, kZero, kInf);
  ExpectSamePoint(Apply(f, kZero), kOne);
  ExpectSamePoint(Apply(f, kOne), kZero);
  ExpectSamePoint(Apply(f, kInf), kInf);
  // f(z) = 1 - z.
  const ProjectivePoint z = ProjectivePoint::FromPlane(Complex(0.3, -2.0));
  ExpectSamePoint(Apply(f, z), ProjectivePoint::FromPlane(1.0 - Complex(0.3, -2.0)));
}

TEST(FromThreePointsTest, CubeRootRotation) {
  const auto w = [](int j) { return ProjectivePoint::FromPlane(std::pow(kOmega, j)); };
  const MobiusMap f = FromThreePoints(w(0), w(1), w(2), w(1), w(2), w(0));
  EXPECT_NEAR(std::abs(f.b()), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(f.c()), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(f.a() / f.d() - kOmega), 0.0, 1e-12);
}

TEST(FromThreePointsTest, CoincidentInputThrows) {
  EXPECT_THROW(FromThreePoints(kZero, kZero, kInf, kZero, kOne, kInf), DomainError);
  EXPECT_THROW(FromThreePoints(kZero, kOne, kInf, kZero, kOne, kOne), DomainError);
}

TEST(FromThreePointsTest, InterpolatesRandomTriples) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 1000; ++t) {
    ProjectivePoint p[3] = {testing::RandomPoint(rng), testing::RandomPoint(rng),
                            testing::RandomPoint(rng)};
    ProjectivePoint q[3] = {testing::RandomPoint(rng), testing::RandomPoint(rng),
                            testing::RandomPoint(rng)};
    const MobiusMap f = FromThreePoints(p[0], p[1], p[2], q[0], q[1], q[2]);
    for (int i = 0; i < 3; ++i) EXPECT_LE(CrossDeterminant(Apply(f, p[i]), q[i]), 1e-8);
    EXPECT_NEAR(std::abs(f.matrix().determinant() - 1.0), 0.0, 1e-10);
  }
}

TEST(FitMobiusTest, RecoversMapFromManyPairs) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    const MobiusMap f = RandomMap(rng);
    std::vector<ProjectivePoint> from;
    std::vector<ProjectivePoint> to;
    for (int i = 0; i < 3 + t % 5; ++i) {
      from.push_back(testing::RandomPoint(rng));
      to.push_back(Apply(f, from.back()));
    }
    const MobiusMap fit = FitMobius(from, to);
    const ProjectivePoint probe = testing::RandomPoint(rng);
    EXPECT_LE(CrossDeterminant(Apply(fit, probe), Apply(f, probe)), 1e-8) << "trial " << t;
  }
}

TEST(FitMobiusTest, TooFewPairsThrows) {
  const ProjectivePoint two[2] = {kZero, kOne};
  EXPECT_THROW(FitMobius(two, two), DomainError);
}

TEST(ApplyTest, Examples) {
  std::mt19937_64 rng(32);
  const ProjectivePoint p = testing::RandomPoint(rng);
  EXPECT_EQ(Apply(MobiusMap::Identity(), p), p);
  ExpectSamePoint(Apply(MobiusMap(kOmega, 0.0, 0.0, 1.0), kInf), kInf);
  ExpectSamePoint(Apply(MobiusMap(0.0, 1.0, 1.0, 0.0), kZero), kInf);
}

TEST(ApplyTest, PoleGoesToInfinity) {
  const MobiusMap f(2.0, 1.0, 3.0, 5.0);  // pole at -d/c
  ExpectSamePoint(Apply(f, ProjectivePoint::FromPlane(-5.0 / 3.0)), kInf);
  ExpectSamePoint(Apply(f, kInf), ProjectivePoint::FromPlane(2.0 / 3.0));
}

TEST(ComposeTest, GroupAxioms) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    const MobiusMap f = RandomMap(rng);
    const MobiusMap g = RandomMap(rng);
    const MobiusMap h = RandomMap(rng);
    const ProjectivePoint p = testing::RandomPoint(rng);
    EXPECT_TRUE(IsIdentity(Compose(f, Inverse(f))));
    EXPECT_LE(CrossDeterminant(Apply(Compose(f, g), p), Apply(f, Apply(g, p))), 1e-10);
    EXPECT_LE(CrossDeterminant(Apply(Compose(Compose(f, g), h), p),
                               Apply(Compose(f, Compose(g, h)), p)),
              1e-10);
  }
}

TEST(ComposeTest, Translations) {
  const MobiusMap shift(1.0, 1.0, 0.0, 1.0);
  const MobiusMap twice = Compose(shift, shift);
  EXPECT_NEAR(std::abs(twice.b() / twice.d() - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(twice.c()), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(twice.a() / twice.d() - 1.0), 0.0, 1e-15);
}

TEST(FixedPointsTest, Examples) {
  const FixedPoints shift = ComputeFixedPoints(MobiusMap(1.0, 1.0, 0.0, 1.0));
  ASSERT_FALSE(shift.all);
  ASSERT_EQ(shift.points.size(), 1u);
  ExpectSamePoint(shift.points[0], kInf);

  const FixedPoints rotation = ComputeFixedPoints(MobiusMap(kOmega, 0.0, 0.0, 1.0));
  ASSERT_EQ(rotation.points.size(), 2u);
  EXPECT_TRUE((CrossDeterminant(rotation.points[0], kZero) < 1e-12 &&
               CrossDeterminant(rotation.points[1], kInf) < 1e-12) ||
              (CrossDeterminant(rotation.points[0], kInf) < 1e-12 &&
               CrossDeterminant(rotation.points[1], kZero) < 1e-12));

  const FixedPoints inversion = ComputeFixedPoints(MobiusMap(0.0, 1.0, 1.0, 0.0));
  ASSERT_EQ(inversion.points.size(), 2u);
  const ProjectivePoint minus_one = ProjectivePoint::FromPlane(-1.0);
  for (const ProjectivePoint& p : inversion.points) {
    EXPECT_TRUE(CrossDeterminant(p, kOne) < 1e-12 || CrossDeterminant(p, minus_one) < 1e-12);
  }
  EXPECT_TRUE(ComputeFixedPoints(MobiusMap::Identity()).all);
}

TEST(FixedPointsTest, AtMostTwoAndActuallyFixed) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 200; ++t) {
    const MobiusMap f = RandomMap(rng);
    const FixedPoints fp = ComputeFixedPoints(f);
    EXPECT_FALSE(fp.all);
    EXPECT_LE(fp.points.size(), 2u);
    for (const ProjectivePoint& p : fp.points) EXPECT_LE(CrossDeterminant(Apply(f, p), p), 1e-9);
  }
}

TEST(IsIdentityTest, Examples) {
  EXPECT_TRUE(IsIdentity(MobiusMap::Identity()));
  EXPECT_TRUE(IsIdentity(MobiusMap(-Mat2::Identity())));
  EXPECT_TRUE(IsIdentity(MobiusMap(5.0 * Mat2::Identity())));
  EXPECT_FALSE(IsIdentity(MobiusMap(kOmega, 0.0, 0.0, 1.0)));
  std::mt19937_64 rng(35);
  const ProjectivePoint p = testing::RandomPoint(rng);
  const ProjectivePoint q = testing::RandomPoint(rng);
  const ProjectivePoint r = testing::RandomPoint(rng);
  EXPECT_TRUE(IsIdentity(FromThreePoints(p, q, r, p, q, r)));
}

TEST(CrossRatioTest, InvariantUnderMaps) {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 500; ++t) {
    const MobiusMap f = RandomMap(rng);
    const ProjectivePoint p[4] = {testing::RandomPoint(rng), testing::RandomPoint(rng),
                                  testing::RandomPoint(rng), testing::RandomPoint(rng)};
    const Complex before = CrossRatio(p[0], p[1], p[2], p[3]);
    const Complex after =
        CrossRatio(Apply(f, p[0]), Apply(f, p[1]), Apply(f, p[2]), Apply(f, p[3]));
    EXPECT_LE(std::abs(after - before), 1e-8 * std::max(1.0, std::abs(before)));
  }
}

TEST(CrossRatioTest, HandlesInfinity) {
  // (z - 0)(1 - inf)/((z - inf)(1 - 0)) = z.
  const Complex z(0.7, -1.3);
  const Complex value = CrossRatio(ProjectivePoint::FromPlane(z), kZero, kOne, kInf);
  EXPECT_NEAR(std::abs(value - z), 0.0, 1e-14);
}

}  // namespace
}  // namespace symstab
