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

// SL-invariant polynomials and the criticality test.
//
// The bilinear form (u, v) = u^T sigma_y^{(x)m} v is preserved by g^{(x)m}
// whenever det g = 1, which is what makes f2 and f4 SL-invariant.

#ifndef SYMSTAB_INVARIANTS_H_
#define SYMSTAB_INVARIANTS_H_

#include "symstab/model.h"

namespace symstab {

/// f2(psi) = <psi*| sigma_y^{(x)n} |psi>. Dense evaluation up to the oracle
/// limit, Dicke closed form above it.
Complex F2(const SymmetricState& state);
Complex F2Dense(const SymmetricState& state);
/// i^n sum_k (-1)^(n-k) x_k x_{n-k}.
Complex F2Dicke(const SymmetricState& state);

/// det [(psi_i, psi_j)] for psi = |0>psi_0 + |1>psi_1 split on qubit 0,
/// with the bilinear form on the remaining n - 1 qubits. Requires n >= 2.
Complex F4(const SymmetricState& state);
Complex F4Dense(const SymmetricState& state);
Complex F4Dicke(const SymmetricState& state);

/// Single-qubit marginal equals I/2 within tol (max-entry norm).
bool IsCritical(const SymmetricState& state, double tol = 1e-9);

}  // namespace symstab

#endif  // SYMSTAB_INVARIANTS_H_
