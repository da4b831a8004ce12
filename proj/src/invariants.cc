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

#include "symstab/invariants.h"

#include <cmath>
#include <vector>

#include "symstab/majorana.h"
#include "symstab/oracle.h"

namespace symstab {
namespace {

Mat2 SigmaY() {
  Mat2 y;
  y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return y;
}

Complex IPower(int m) {
  static const Complex kPowers[4] = {1.0, Complex(0.0, 1.0), -1.0, Complex(0.0, -1.0)};
  return kPowers[((m % 4) + 4) % 4];
}

// (u, v) for Dicke coefficient vectors on m qubits.
Complex DickeBilinear(const std::vector<Complex>& u, const std::vector<Complex>& v) {
  const int m = static_cast<int>(u.size()) - 1;
  Complex sum = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * u[k] * v[m - k];
  }
  return IPower(m) * sum;
}

Complex DenseBilinearForm(const oracle::DenseState& u, const oracle::DenseState& v) {
  return oracle::Bilinear(u, oracle::ApplyUniform(SigmaY(), v));
}

}  // namespace

Complex F2Dense(const SymmetricState& state) {
  const oracle::DenseState v = oracle::DenseFromSymmetric(state);
  return DenseBilinearForm(v, v);
}

Complex F2Dicke(const SymmetricState& state) {
  const std::vector<Complex> x(state.amplitudes().begin(), state.amplitudes().end());
  return DickeBilinear(x, x);
}

Complex F2(const SymmetricState& state) {
  return state.n() <= oracle::kDenseQubitLimit ? F2Dense(state) : F2Dicke(state);
}

Complex F4Dense(const SymmetricState& state) {
  const int n = state.n();
  if (n < 2) throw PreconditionError("f4 needs n >= 2");
  const oracle::DenseState v = oracle::DenseFromSymmetric(state);
  const std::size_t half = v.amplitudes.size() / 2;
  const oracle::DenseState psi0{n - 1, {v.amplitudes.begin(), v.amplitudes.begin() + half}};
  const oracle::DenseState psi1{n - 1, {v.amplitudes.begin() + half, v.amplitudes.end()}};
  const Complex g00 = DenseBilinearForm(psi0, psi0);
  const Complex g01 = DenseBilinearForm(psi0, psi1);
  const Complex g10 = DenseBilinearForm(psi1, psi0);
  const Complex g11 = DenseBilinearForm(psi1, psi1);
  return g00 * g11 - g01 * g10;
}

Complex F4Dicke(const SymmetricState& state) {
  const int n = state.n();
  if (n < 2) throw PreconditionError("f4 needs n >= 2");
  // psi_0 carries x_k sqrt((n-k)/n) on D(n-1, k); psi_1 carries
  // x_k sqrt(k/n) on D(n-1, k-1).
  std::vector<Complex> psi0(n, 0.0);
  std::vector<Complex> psi1(n, 0.0);
  for (int k = 0; k <= n; ++k) {
    if (k < n) psi0[k] = state.amplitude(k) * std::sqrt(static_cast<double>(n - k) / n);
    if (k > 0) psi1[k - 1] = state.amplitude(k) * std::sqrt(static_cast<double>(k) / n);
  }
  return DickeBilinear(psi0, psi0) * DickeBilinear(psi1, psi1) -
         DickeBilinear(psi0, psi1) * DickeBilinear(psi1, psi0);
}

Complex F4(const SymmetricState& state) {
  return state.n() <= oracle::kDenseQubitLimit ? F4Dense(state) : F4Dicke(state);
}

bool IsCritical(const SymmetricState& state, double tol) {
  const Mat2 deviation = ReducedDensityMatrix(state) - 0.5 * Mat2::Identity();
  return deviation.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace symstab
