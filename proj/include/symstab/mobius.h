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

// Mobius transformations as projective linear maps on point pairs (a : b).
// Nothing here branches on the point at infinity.

#ifndef SYMSTAB_MOBIUS_H_
#define SYMSTAB_MOBIUS_H_

#include <span>
#include <vector>

#include "symstab/model.h"

namespace symstab {

/// The unique map with q -> q2, r -> r2, s -> s2. Throws DomainError when
/// either triple contains coincident points.
MobiusMap FromThreePoints(const ProjectivePoint& q, const ProjectivePoint& r,
                          const ProjectivePoint& s, const ProjectivePoint& q2,
                          const ProjectivePoint& r2, const ProjectivePoint& s2,
                          double tol = Tolerances{}.point);

/// Least-squares map with from[i] -> to[i] over three or more pairs: the
/// smallest singular vector of the cross-determinant equations, which are
/// linear in the entries of f. Throws DomainError on fewer than three pairs
/// or a degenerate fit.
MobiusMap FitMobius(std::span<const ProjectivePoint> from, std::span<const ProjectivePoint> to);

ProjectivePoint Apply(const MobiusMap& f, const ProjectivePoint& p);

/// f o g.
MobiusMap Compose(const MobiusMap& f, const MobiusMap& g);
MobiusMap Inverse(const MobiusMap& f);

/// f = +-I entrywise within tol (identity of PSL(2, C)).
bool IsIdentity(const MobiusMap& f, double tol = 1e-9);

struct FixedPoints {
  bool all = false;  // identity map
  std::vector<ProjectivePoint> points;
};

/// Eigenvector directions; a single point for parabolic maps.
FixedPoints ComputeFixedPoints(const MobiusMap& f);

/// (z - q)(r - s) / ((z - s)(r - q)) evaluated projectively; the value is
/// infinite when z = s or r = q.
Complex CrossRatio(const ProjectivePoint& z, const ProjectivePoint& q,
                   const ProjectivePoint& r, const ProjectivePoint& s);

}  // namespace symstab

#endif  // SYMSTAB_MOBIUS_H_
