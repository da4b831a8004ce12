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

// Local stabilizers of symmetric states.
//
// A symmetric state has a nontrivial stabilizer g^{(x)n} exactly when some
// non-identity Mobius map permutes its Majorana points (respecting
// multiplicities). For three or more distinct points such a map is pinned
// down by the images of three anchor points, so enumerating anchor images
// is exhaustive. One or two distinct points always admit a stabilizer and
// are handled by explicit constructions.

#ifndef SYMSTAB_STABILIZER_H_
#define SYMSTAB_STABILIZER_H_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "symstab/model.h"

namespace symstab {

struct PermutingMap {
  MobiusMap map;
  std::vector<int> permutation;  // cluster i -> cluster permutation[i]
};

/// Assigns each source cluster to the target cluster containing its image
/// under f (equal multiplicity, coincident within tol widened by the
/// clusters' error estimates). nullopt when some image has no partner.
std::optional<std::vector<int>> MatchClusters(const MobiusMap& f,
                                              const MajoranaSet& source,
                                              const MajoranaSet& target,
                                              double tol = Tolerances{}.point);

/// MatchClusters at the looser tolerance sqrt(tol), then a least-squares
/// refit of the map over every matched cluster, kept when the refit matches
/// within tol. Maps built from three nearby anchors extrapolate their point
/// errors to distant clusters; the refit spreads them over all clusters.
std::optional<PermutingMap> MatchWithRefit(const MobiusMap& f, const MajoranaSet& source,
                                           const MajoranaSet& target,
                                           double tol = Tolerances{}.point);

/// Indices of the three clusters with lexicographically smallest points.
std::array<int, 3> AnchorClusters(const MajoranaSet& points);

/// Requires diversity >= 3.
std::optional<PermutingMap> FindPermutingMobius(const MajoranaSet& points,
                                                double tol = Tolerances{}.point);

/// Allowed |prod lambda - 1|: 1e-9 plus what the clusters' point errors can
/// move the lambdas read off them.
double LambdaTolerance(const MajoranaSet& points, const StabilizerCertificate& cert);

/// g|phi_i> = lambda_i |phi_perm(i)> using the larger component of each
/// target point.
std::vector<Complex> ExtractLambdas(const Mat2& g, const MajoranaSet& points,
                                    std::span<const int> permutation);

/// Scales f's coefficient array so the lambda product is 1 and verifies the
/// result against the state. Throws InternalInconsistencyError when the
/// certificate does not verify.
StabilizerCertificate CertificateFromMobius(const SymmetricState& state,
                                            const MajoranaSet& points,
                                            const MobiusMap& f,
                                            std::span<const int> permutation,
                                            const Tolerances& tol = {});

/// Product states: g has the single Majorana point as eigenvector with
/// eigenvalue 1 and a second eigenvalue 2.
StabilizerCertificate M1Certificate(const MajoranaSet& points);

/// Two distinct points: diagonal in the point basis for unequal
/// multiplicities, the point swap for equal ones.
StabilizerCertificate M2Certificate(const MajoranaSet& points);

/// Residual of a certificate against a state: dense oracle when n is within
/// its limit, symmetric-power action otherwise.
struct CertificateCheck {
  double residual;
  bool dense;
};
CertificateCheck CheckCertificate(const SymmetricState& state, const LocalOperator& g);

StabilizerVerdict DecideStabilizer(const SymmetricState& state,
                                   const Tolerances& tol = {});
StabilizerVerdict DecideStabilizer(const SymmetricState& state,
                                   const MajoranaSet& points,
                                   const Tolerances& tol = {});

enum class PrecheckResult { kTrivial, kNontrivial, kUnknown };

const char* ToString(PrecheckResult result);

/// Decides from multiplicities alone where that is possible: three
/// multiplicities that each occur once force any permuting map to fix three
/// points; m <= 2 always, and m = 3 with a repeated multiplicity, admit a
/// stabilizer. Everything else is left to the geometric search.
PrecheckResult ConfigPrecheck(const DegeneracyConfiguration& config);

/// (A (x) B)|psi> = |psi> for a two-qubit symmetric state, from the linear
/// system A X = X C with X the amplitude matrix and B^T = C^{-1}.
struct TwoQubitStabilizer {
  LocalOperator a;
  LocalOperator b;  // det b = 1
  double residual;
  int solution_dimension;  // kernel dimension of the 4 x 8 system
};

TwoQubitStabilizer SolveTwoQubitStabilizer(const SymmetricState& state,
                                           double tol = Tolerances{}.certificate);

}  // namespace symstab

#endif  // SYMSTAB_STABILIZER_H_
