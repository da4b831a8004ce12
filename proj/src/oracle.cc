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

#include "symstab/oracle.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace symstab::oracle {
namespace {

void RequireDenseLimit(int n, int limit) {
  if (n > limit) {
    throw ResourceError("dense computation limited to " + std::to_string(limit) +
                        " qubits, got " + std::to_string(n));
  }
}

std::vector<std::vector<double>> PascalTriangle(int n) {
  std::vector<std::vector<double>> rows(n + 1);
  for (int i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1.0);
    for (int k = 1; k < i; ++k) rows[i][k] = rows[i - 1][k - 1] + rows[i - 1][k];
  }
  return rows;
}

void Normalize(DenseState& v) {
  const double norm = v.Norm();
  if (!(norm > 0.0)) throw DomainError("dense state has zero norm");
  for (Complex& x : v.amplitudes) x /= norm;
}

}  // namespace

double DenseState::Norm() const {
  double sum = 0.0;
  for (const Complex& x : amplitudes) sum += std::norm(x);
  return std::sqrt(sum);
}

DenseState DenseFromSymmetric(const SymmetricState& state) {
  const int n = state.n();
  RequireDenseLimit(n, kDenseQubitLimit);
  const auto pascal = PascalTriangle(n);
  DenseState v{n, std::vector<Complex>(std::size_t{1} << n)};
  for (std::uint64_t s = 0; s < v.amplitudes.size(); ++s) {
    const int k = std::popcount(s);
    v.amplitudes[s] = state.amplitude(k) / std::sqrt(pascal[n][k]);
  }
  return v;
}

DenseState DenseSymmetrize(std::span<const ProjectivePoint> points) {
  const int n = static_cast<int>(points.size());
  if (n < 1) throw DomainError("cannot symmetrize an empty point list");
  RequireDenseLimit(n, kSymmetrizeQubitLimit);
  // partial[mask] holds the sum over orderings of the points in `mask`
  // placed on the first popcount(mask) qubits.
  std::vector<std::vector<Complex>> partial(std::size_t{1} << n);
  partial[0] = {1.0};
  for (std::uint32_t mask = 1; mask < partial.size(); ++mask) {
    const int j = std::popcount(mask);
    std::vector<Complex> acc(std::size_t{1} << j, 0.0);
    for (int p = 0; p < n; ++p) {
      if (!(mask & (1u << p))) continue;
      const std::vector<Complex>& prev = partial[mask & ~(1u << p)];
      for (std::size_t i = 0; i < prev.size(); ++i) {
        acc[2 * i] += prev[i] * points[p].a();
        acc[2 * i + 1] += prev[i] * points[p].b();
      }
    }
    partial[mask] = std::move(acc);
  }
  DenseState v{n, std::move(partial.back())};
  Normalize(v);
  return v;
}

DenseState DenseSymmetrize(const MajoranaSet& points) {
  std::vector<ProjectivePoint> expanded;
  for (const Cluster& c : points.clusters) {
    expanded.insert(expanded.end(), c.multiplicity, c.point);
  }
  return DenseSymmetrize(expanded);
}

DenseState ApplyLocal(std::span<const Mat2> ops, const DenseState& v) {
  if (static_cast<int>(ops.size()) != v.n) {
    throw PreconditionError("need one local operator per qubit");
  }
  DenseState out = v;
  const int n = v.n;
  for (int q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    const Mat2& g = ops[q];
    for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
      if (i & bit) continue;
      const Complex v0 = out.amplitudes[i];
      const Complex v1 = out.amplitudes[i | bit];
      out.amplitudes[i] = g(0, 0) * v0 + g(0, 1) * v1;
      out.amplitudes[i | bit] = g(1, 0) * v0 + g(1, 1) * v1;
    }
  }
  return out;
}

DenseState ApplyLocal(std::span<const LocalOperator> ops, const DenseState& v) {
  std::vector<Mat2> matrices;
  for (const LocalOperator& op : ops) matrices.push_back(op.matrix());
  return ApplyLocal(std::span<const Mat2>(matrices), v);
}

DenseState ApplyUniform(const Mat2& g, const DenseState& v) {
  const std::vector<Mat2> ops(v.n, g);
  return ApplyLocal(std::span<const Mat2>(ops), v);
}

double VerifyCertificate(const SymmetricState& state, const LocalOperator& g) {
  const DenseState v = DenseFromSymmetric(state);
  return Distance(ApplyUniform(g.matrix(), v), v);
}

Mat2 DensePartialTrace(const DenseState& v, int qubit) {
  if (qubit < 0 || qubit >= v.n) throw PreconditionError("qubit index out of range");
  const std::size_t bit = std::size_t{1} << (v.n - 1 - qubit);
  Mat2 rho = Mat2::Zero();
  for (std::size_t i = 0; i < v.amplitudes.size(); ++i) {
    if (i & bit) continue;
    const Complex v0 = v.amplitudes[i];
    const Complex v1 = v.amplitudes[i | bit];
    rho(0, 0) += v0 * std::conj(v0);
    rho(0, 1) += v0 * std::conj(v1);
    rho(1, 0) += v1 * std::conj(v0);
    rho(1, 1) += v1 * std::conj(v1);
  }
  return rho;
}

Complex Inner(const DenseState& u, const DenseState& v) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < u.amplitudes.size(); ++i) {
    sum += std::conj(u.amplitudes[i]) * v.amplitudes[i];
  }
  return sum;
}

Complex Bilinear(const DenseState& u, const DenseState& v) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < u.amplitudes.size(); ++i) {
    sum += u.amplitudes[i] * v.amplitudes[i];
  }
  return sum;
}

DenseState SwapQubits(const DenseState& v, int q1, int q2) {
  const std::size_t b1 = std::size_t{1} << (v.n - 1 - q1);
  const std::size_t b2 = std::size_t{1} << (v.n - 1 - q2);
  DenseState out = v;
  for (std::size_t i = 0; i < v.amplitudes.size(); ++i) {
    const bool x1 = i & b1;
    const bool x2 = i & b2;
    std::size_t j = i & ~(b1 | b2);
    if (x1) j |= b2;
    if (x2) j |= b1;
    out.amplitudes[j] = v.amplitudes[i];
  }
  return out;
}

double Distance(const DenseState& u, const DenseState& v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < u.amplitudes.size(); ++i) {
    sum += std::norm(u.amplitudes[i] - v.amplitudes[i]);
  }
  return std::sqrt(sum);
}

}  // namespace symstab::oracle
