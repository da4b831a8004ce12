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

// Conversions between the Dicke and Majorana (stellar) representations of
// symmetric qubit states.
//
// Root convention: the state prod-symmetrized from points a_i|0> + b_i|1>
// has root polynomial P(z) = sum_k (-1)^k x_k sqrt(C(n,k)) z^k proportional
// to prod_i (a_i - b_i z), so each finite root z_i is the point (z_i : 1)
// and each missing degree is the point (1 : 0) = |0>.

#ifndef SYMSTAB_MAJORANA_H_
#define SYMSTAB_MAJORANA_H_

#include <cstdint>
#include <span>
#include <vector>

#include "symstab/model.h"

namespace symstab {

/// C(n, k); exact integer arithmetic for n <= 60.
double Binomial(int n, int k);

struct RootPolynomial {
  std::vector<Complex> coefficients;  // c_0..c_n
  int effective_degree = 0;           // largest k with |c_k| > eps max|c|
  /// Smallest k with |c_k| > eps max|c|; that many roots sit at z = 0.
  int low_order = 0;
};

RootPolynomial DickeToPolynomial(const SymmetricState& state,
                                 double degree_eps = Tolerances{}.degree);

/// Aberth-Ehrlich simultaneous iteration. Requires coefficients[0] and
/// coefficients.back() nonzero. Throws NumericError when it fails to
/// converge within 200 sweeps.
std::vector<Complex> AberthRoots(std::span<const Complex> coefficients);

/// Homogeneous residual sum_k c_k a^k b^(n-k) at a canonical point; the
/// scale-free version of |P(a/b)|.
Complex HomogeneousValue(std::span<const Complex> coefficients,
                         const ProjectivePoint& point);

/// Coefficients of prod_i (a_i - b_i z) over the given points.
std::vector<Complex> ProductCoefficients(std::span<const ProjectivePoint> points);

MajoranaSet MajoranaDecompose(const SymmetricState& state,
                              const Tolerances& tol = {});

/// Normalized state whose Majorana points are `points`. Global phase: the
/// first non-negligible Dicke amplitude is real positive.
SymmetricState MajoranaCompose(const MajoranaSet& points);

DegeneracyConfiguration ComputeDegeneracyConfiguration(const MajoranaSet& points);
DegeneracyConfiguration ConfigurationFromMultiplicities(std::vector<int> multiplicities);

/// Single-qubit marginal, computed in closed form from Dicke amplitudes.
Mat2 ReducedDensityMatrix(const SymmetricState& state);

/// Dicke amplitudes (unnormalized) of g^{(x)n}|psi>, evaluated by substitution
/// in the homogeneous polynomial of the state. No dense vector is formed.
std::vector<Complex> ApplySymmetricPower(const Mat2& g, const SymmetricState& state);

/// min over phases of || x - e^{i t} y/|y| || for Dicke vectors; x normalized.
double PhaseAlignedDistance(std::span<const Complex> x, std::span<const Complex> y);

}  // namespace symstab

#endif  // SYMSTAB_MAJORANA_H_
