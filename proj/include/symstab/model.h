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

#ifndef SYMSTAB_MODEL_H_
#define SYMSTAB_MODEL_H_

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace symstab {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

/// Numeric thresholds shared by all modules. The defaults are the library
/// contract; the CLI exposes them as flags.
struct Tolerances {
  /// Two projective points coincide when |a_p b_q - a_q b_p| <= point.
  double point = 1e-8;
  /// Relative cutoff below which a polynomial coefficient counts as zero.
  double degree = 1e-10;
  /// Maximum dense residual ||g^{(x)n} v - v|| accepted for a certificate.
  double certificate = 1e-9;
};

// Errors. Every failure mode of the library is one of these.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain (zero vector, singular matrix...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation precondition (wrong n, wrong diversity...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An iterative numeric method failed; carries the achieved residual.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Problem too large for a dense computation.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its own post-verification.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed state file or report input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Normalized n-qubit symmetric state in the Dicke basis: amplitude k is the
/// coefficient of |D(n,k)>.
class SymmetricState {
 public:
  /// Normalizes `amplitudes`; requires n >= 1 and some |x_k| > 1e-12.
  SymmetricState(int n, std::vector<Complex> amplitudes);

  int n() const { return n_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex amplitude(int k) const { return amplitudes_[k]; }

  /// Convenience constructor for |D(n,k)>.
  static SymmetricState Dicke(int n, int k);

 private:
  int n_;
  std::vector<Complex> amplitudes_;
};

/// |<a|b>| for two symmetric states of equal n.
double Fidelity(const SymmetricState& a, const SymmetricState& b);

/// A single-qubit state a|0> + b|1> up to scale, i.e. the extended-plane
/// coordinate z = a/b (b = 0 is infinity). Always held in canonical form:
/// unit norm, and the first component with |.|^2 >= 1/2 is real positive.
class ProjectivePoint {
 public:
  /// Throws DomainError for (0, 0).
  static ProjectivePoint Canonicalize(Complex a, Complex b);
  static ProjectivePoint FromPlane(Complex z) { return Canonicalize(z, 1.0); }
  static ProjectivePoint Infinity() { return ProjectivePoint(1.0, 0.0); }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Eigen::Vector2cd vector() const { return {a_, b_}; }

  /// Plane coordinate a/b; nullopt for the point at infinity (b == 0).
  std::optional<Complex> plane() const;

  /// Lexicographic order on (Re a, Im a, Re b, Im b).
  friend bool operator<(const ProjectivePoint& p, const ProjectivePoint& q);
  friend bool operator==(const ProjectivePoint& p,
                         const ProjectivePoint& q) = default;

 private:
  ProjectivePoint(Complex a, Complex b) : a_(a), b_(b) {}
  Complex a_;
  Complex b_;
};

/// |a_p b_q - a_q b_p|; half the chordal distance on the Bloch sphere.
double CrossDeterminant(const ProjectivePoint& p, const ProjectivePoint& q);

bool PointsCoincide(const ProjectivePoint& p, const ProjectivePoint& q,
                    double tol = Tolerances{}.point);

struct Cluster {
  ProjectivePoint point;
  int multiplicity;
  /// Estimated chordal error of `point` from rounding in the coefficients,
  /// large for ill-conditioned roots. Zero when the point is exact.
  double error = 0.0;
};

/// Majorana points of a symmetric state grouped into distinct clusters.
/// Clusters are kept in ascending lexicographic order of their points.
struct MajoranaSet {
  int n = 0;
  std::vector<Cluster> clusters;

  int diversity() const { return static_cast<int>(clusters.size()); }
  /// Checks multiplicity sum and pairwise non-coincidence.
  void Validate(double tol = Tolerances{}.point) const;
  /// Sorts clusters by point.
  void Sort();
};

struct DegeneracyConfiguration {
  std::vector<int> multiplicities;  // descending
  int diversity = 0;
  std::vector<int> partition;  // sizes of equal-multiplicity groups

  friend bool operator==(const DegeneracyConfiguration&,
                         const DegeneracyConfiguration&) = default;
};

/// Invertible single-qubit operator acting on kets (column vectors).
class LocalOperator {
 public:
  /// Throws DomainError when |det| <= 1e-12.
  explicit LocalOperator(const Mat2& matrix);

  const Mat2& matrix() const { return matrix_; }
  Complex determinant() const { return matrix_.determinant(); }
  /// Same operator scaled to determinant 1 (principal square root).
  LocalOperator NormalizedToUnitDeterminant() const;
  /// True when the operator is mu * I; tested after det-1 normalization.
  bool IsScalar(double tol = 1e-9) const;

  static LocalOperator Identity() { return LocalOperator(Mat2::Identity()); }
  static LocalOperator Diagonal(Complex d0, Complex d1);

 private:
  Mat2 matrix_;
};

/// f(z) = (az + b)/(cz + d), stored with ad - bc = 1.
class MobiusMap {
 public:
  /// Normalizes to determinant 1; throws DomainError for |det| <= 1e-12.
  explicit MobiusMap(const Mat2& coefficients);
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  const Mat2& matrix() const { return m_; }
  Complex a() const { return m_(0, 0); }
  Complex b() const { return m_(0, 1); }
  Complex c() const { return m_(1, 0); }
  Complex d() const { return m_(1, 1); }

  static MobiusMap Identity() { return MobiusMap(Mat2::Identity()); }

 private:
  Mat2 m_;
};

enum class CertificateMethod {
  kMobiusSearch,
  kM1Construction,
  kM2Construction,
  kTwoQubitLinearSystem,
};

std::string ToString(CertificateMethod method);

/// g with g^{(x)n}|psi> = |psi>: g maps cluster i onto cluster
/// permutation[i] with g|phi_i> = lambdas[i] |phi_perm(i)>.
struct StabilizerCertificate {
  LocalOperator g;
  std::vector<int> permutation;
  std::vector<Complex> lambdas;  // one per cluster

  /// prod_i lambda_i over all n points (cluster lambdas to the multiplicity).
  Complex LambdaProduct(const MajoranaSet& points) const;
};

struct StabilizerVerdict {
  bool trivial = true;
  std::optional<StabilizerCertificate> certificate;
  CertificateMethod method = CertificateMethod::kMobiusSearch;
  /// True when the certificate was checked against the dense oracle.
  bool dense_verified = false;
  /// ||g^{(x)n} psi - psi||, from the dense oracle when dense_verified and
  /// from the symmetric-power action otherwise; 0 for trivial verdicts.
  double residual = 0.0;
};

struct ConversionReport {
  LocalOperator g;
  MobiusMap witness;
  double p_max;
  /// <psi2| g^{(x)n} |psi1>, unit modulus up to tolerance.
  Complex phase;
};

}  // namespace symstab

#endif  // SYMSTAB_MODEL_H_
