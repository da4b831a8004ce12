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

// Brute-force dense 2^n state vectors. This is the ground truth the rest of
// the library is checked against, so it deliberately shares no code paths
// with the Dicke/Majorana machinery (it has its own binomials, its own
// symmetrization, its own tensor contraction).
//
// Bit order: qubit 0 is the most significant bit of the basis index.

#ifndef SYMSTAB_ORACLE_H_
#define SYMSTAB_ORACLE_H_

#include <span>
#include <vector>

#include "symstab/model.h"

namespace symstab::oracle {

inline constexpr int kDenseQubitLimit = 20;
inline constexpr int kSymmetrizeQubitLimit = 12;

struct DenseState {
  int n = 0;
  std::vector<Complex> amplitudes;

  double Norm() const;
};

/// Amplitude of a bitstring with k ones is x_k / sqrt(C(n,k)).
DenseState DenseFromSymmetric(const SymmetricState& state);

/// Normalized sum over permutations of the tensor product of the points,
/// each point repeated by its multiplicity.
DenseState DenseSymmetrize(const MajoranaSet& points);
DenseState DenseSymmetrize(std::span<const ProjectivePoint> points);

/// ops[q] acts on qubit q. The matrices need not be invertible.
DenseState ApplyLocal(std::span<const Mat2> ops, const DenseState& v);
DenseState ApplyLocal(std::span<const LocalOperator> ops, const DenseState& v);
/// g on every qubit.
DenseState ApplyUniform(const Mat2& g, const DenseState& v);

/// ||g^{(x)n} v - v|| for the dense image of `state`.
double VerifyCertificate(const SymmetricState& state, const LocalOperator& g);

Mat2 DensePartialTrace(const DenseState& v, int qubit);

/// <u|v>.
Complex Inner(const DenseState& u, const DenseState& v);
/// u^T v (no conjugation).
Complex Bilinear(const DenseState& u, const DenseState& v);

/// Swaps two qubits.
DenseState SwapQubits(const DenseState& v, int q1, int q2);

double Distance(const DenseState& u, const DenseState& v);

}  // namespace symstab::oracle

#endif  // SYMSTAB_ORACLE_H_
