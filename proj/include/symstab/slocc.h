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

// SLOCC equivalence of symmetric states. Two symmetric states are related by
// an invertible g^{(x)n} exactly when a Mobius map carries one Majorana set
// onto the other with multiplicities preserved.

#ifndef SYMSTAB_SLOCC_H_
#define SYMSTAB_SLOCC_H_

#include <optional>
#include <vector>

#include "symstab/model.h"

namespace symstab {

struct EquivalenceWitness {
  MobiusMap map;
  std::vector<int> bijection;  // source cluster i -> target cluster bijection[i]
};

/// Witness from a Majorana set onto another, or nullopt. Configurations must
/// agree. For fewer than three clusters the map is pinned by auxiliary points
/// built from the cluster vectors.
std::optional<EquivalenceWitness> FindCorrespondence(const MajoranaSet& source,
                                                     const MajoranaSet& target,
                                                     double tol = Tolerances{}.point);

/// The witness found from the points is then refined by least squares on
/// the amplitudes. Throws PreconditionError when the qubit counts differ.
std::optional<EquivalenceWitness> SloccEquivalent(const SymmetricState& psi1,
                                                  const SymmetricState& psi2,
                                                  const Tolerances& tol = {});

struct ConnectingOperator {
  LocalOperator g;  // g^{(x)n} psi1 has unit norm
  Complex phase;    // <psi2| g^{(x)n} |psi1>
};

/// Rescales the witness coefficients by a positive real. Throws
/// InternalInconsistencyError when |phase| < 1 - 1e-8.
ConnectingOperator Connect(const SymmetricState& psi1, const SymmetricState& psi2,
                           const MobiusMap& witness);

/// 1 / lambda_max(g^dagger g)^n. Throws PreconditionError for singular g.
double PMax(const Mat2& g, int n);
double PMax(const LocalOperator& g, int n);

/// Witness, connecting operator and p_max from psi1 to psi2; nullopt when
/// the states are inequivalent. p_max uses the first witness found, so when
/// psi1 has a nontrivial stabilizer it is a value for that witness only.
std::optional<ConversionReport> Convert(const SymmetricState& psi1,
                                        const SymmetricState& psi2,
                                        const Tolerances& tol = {});

}  // namespace symstab

#endif  // SYMSTAB_SLOCC_H_
