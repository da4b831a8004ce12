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

#include "symstab/model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace symstab {

SymmetricState::SymmetricState(int n, std::vector<Complex> amplitudes)
    : n_(n), amplitudes_(std::move(amplitudes)) {
  if (n_ < 1) throw DomainError("symmetric state needs n >= 1");
  if (static_cast<int>(amplitudes_.size()) != n_ + 1) {
    throw DomainError("symmetric state of " + std::to_string(n_) +
                      " qubits needs " + std::to_string(n_ + 1) +
                      " Dicke amplitudes, got " +
                      std::to_string(amplitudes_.size()));
  }
  double norm2 = 0.0;
  double largest = 0.0;
  for (const Complex& x : amplitudes_) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw DomainError("non-finite Dicke amplitude");
    }
    norm2 += std::norm(x);
    largest = std::max(largest, std::abs(x));
  }
  if (largest <= 1e-12) throw DomainError("all Dicke amplitudes vanish");
  const double norm = std::sqrt(norm2);
  for (Complex& x : amplitudes_) x /= norm;
}

SymmetricState SymmetricState::Dicke(int n, int k) {
  if (k < 0 || k > n) throw DomainError("Dicke index out of range");
  std::vector<Complex> x(n + 1, 0.0);
  x[k] = 1.0;
  return SymmetricState(n, std::move(x));
}

double Fidelity(const SymmetricState& a, const SymmetricState& b) {
  if (a.n() != b.n()) throw PreconditionError("fidelity of states with different n");
  Complex overlap = 0.0;
  for (int k = 0; k <= a.n(); ++k) {
    overlap += std::conj(a.amplitude(k)) * b.amplitude(k);
  }
  return std::abs(overlap);
}

ProjectivePoint ProjectivePoint::Canonicalize(Complex a, Complex b) {
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("projective point needs a nonzero finite pair");
  }
  // Already-normalized input is left untouched so canonicalization is
  // bitwise idempotent.
  if (std::abs(norm - 1.0) > 4 * std::numeric_limits<double>::epsilon()) {
    a /= norm;
    b /= norm;
  }
  const bool use_a = std::norm(a) >= 0.5 - 1e-12;
  const Complex lead = use_a ? a : b;
  if (lead.imag() != 0.0 || lead.real() <= 0.0) {
    const double magnitude = std::abs(lead);
    const Complex phase = std::conj(lead) / magnitude;
    a *= phase;
    b *= phase;
    if (use_a) {
      a = magnitude;
    } else {
      b = magnitude;
    }
  }
  return ProjectivePoint(a, b);
}

std::optional<Complex> ProjectivePoint::plane() const {
  if (b_ == Complex(0.0)) return std::nullopt;
  return a_ / b_;
}

bool operator<(const ProjectivePoint& p, const ProjectivePoint& q) {
  return std::make_tuple(p.a_.real(), p.a_.imag(), p.b_.real(), p.b_.imag()) <
         std::make_tuple(q.a_.real(), q.a_.imag(), q.b_.real(), q.b_.imag());
}

double CrossDeterminant(const ProjectivePoint& p, const ProjectivePoint& q) {
  return std::abs(p.a() * q.b() - q.a() * p.b());
}

bool PointsCoincide(const ProjectivePoint& p, const ProjectivePoint& q,
                    double tol) {
  return CrossDeterminant(p, q) <= tol;
}

void MajoranaSet::Validate(double tol) const {
  int total = 0;
  for (const Cluster& c : clusters) {
    if (c.multiplicity < 1) throw DomainError("cluster multiplicity must be positive");
    total += c.multiplicity;
  }
  if (total != n) {
    throw DomainError("cluster multiplicities sum to " + std::to_string(total) +
                      ", expected n = " + std::to_string(n));
  }
  for (size_t i = 0; i < clusters.size(); ++i) {
    for (size_t j = i + 1; j < clusters.size(); ++j) {
      if (PointsCoincide(clusters[i].point, clusters[j].point, tol)) {
        throw DomainError("clusters " + std::to_string(i) + " and " +
                          std::to_string(j) + " coincide");
      }
    }
  }
}

void MajoranaSet::Sort() {
  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const Cluster& x, const Cluster& y) { return x.point < y.point; });
}

LocalOperator::LocalOperator(const Mat2& matrix) : matrix_(matrix) {
  if (!matrix_.allFinite() || std::abs(matrix_.determinant()) <= 1e-12) {
    throw DomainError("local operator is not invertible");
  }
}

LocalOperator LocalOperator::NormalizedToUnitDeterminant() const {
  return LocalOperator(matrix_ / std::sqrt(matrix_.determinant()));
}

bool LocalOperator::IsScalar(double tol) const {
  const Mat2 g = NormalizedToUnitDeterminant().matrix();
  const Complex half_trace = g.trace() / 2.0;
  return (g - half_trace * Mat2::Identity()).norm() <= tol;
}

LocalOperator LocalOperator::Diagonal(Complex d0, Complex d1) {
  Mat2 m;
  m << d0, 0.0, 0.0, d1;
  return LocalOperator(m);
}

MobiusMap::MobiusMap(const Mat2& coefficients) {
  const Complex det = coefficients.determinant();
  if (!coefficients.allFinite() || std::abs(det) <= 1e-12) {
    throw DomainError("Mobius coefficients must satisfy ad - bc != 0");
  }
  m_ = coefficients / std::sqrt(det);
}

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d)
    : MobiusMap((Mat2() << a, b, c, d).finished()) {}

std::string ToString(CertificateMethod method) {
  switch (method) {
    case CertificateMethod::kMobiusSearch:
      return "mobius-search";
    case CertificateMethod::kM1Construction:
      return "m1-construction";
    case CertificateMethod::kM2Construction:
      return "m2-construction";
    case CertificateMethod::kTwoQubitLinearSystem:
      return "two-qubit-linear-system";
  }
  return "unknown";
}

Complex StabilizerCertificate::LambdaProduct(const MajoranaSet& points) const {
  Complex product = 1.0;
  for (size_t i = 0; i < lambdas.size(); ++i) {
    for (int r = 0; r < points.clusters[i].multiplicity; ++r) product *= lambdas[i];
  }
  return product;
}

}  // namespace symstab
