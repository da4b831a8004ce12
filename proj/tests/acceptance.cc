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

// Acceptance checks, one line per criterion:
//
//   acceptance        run all criteria
//   acceptance 5      run criterion 5 only
//
// Exit status is 0 when every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "symstab/experiments.h"
#include "symstab/invariants.h"
#include "symstab/majorana.h"
#include "symstab/oracle.h"
#include "symstab/slocc.h"
#include "symstab/stabilizer.h"
#include "test_util.h"

namespace symstab {
namespace {

using testing::Diag;
using testing::Ghz;
using testing::MakeState;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Num(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3g", value);
  return buffer;
}

bool Verified(const SymmetricState& s, const StabilizerVerdict& v) {
  return !v.trivial && v.certificate && !v.certificate->g.IsScalar() &&
         oracle::VerifyCertificate(s, v.certificate->g) <= 1e-9;
}

Complex SigmaYForm(const oracle::DenseState& u, const oracle::DenseState& v) {
  Mat2 y;
  y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return oracle::Bilinear(u, oracle::ApplyUniform(y, v));
}

// f2 and f4 evaluated directly on an unnormalized dense vector.
Complex DenseF2(const oracle::DenseState& v) { return SigmaYForm(v, v); }

Complex DenseF4(const oracle::DenseState& v) {
  const std::size_t half = v.amplitudes.size() / 2;
  const oracle::DenseState p0{v.n - 1, {v.amplitudes.begin(), v.amplitudes.begin() + half}};
  const oracle::DenseState p1{v.n - 1, {v.amplitudes.begin() + half, v.amplitudes.end()}};
  return SigmaYForm(p0, p0) * SigmaYForm(p1, p1) - SigmaYForm(p0, p1) * SigmaYForm(p1, p0);
}

Outcome C1() {
  const auto start = Clock::now();
  const SymmetricState ghz = Ghz(3);
  const MajoranaSet points = MajoranaDecompose(ghz);
  double worst = 0.0;
  for (int j = 0; j < 3; ++j) {
    const ProjectivePoint root =
        ProjectivePoint::FromPlane(std::polar(1.0, 2 * kPi * j / 3));
    double best = 1.0;
    for (const Cluster& c : points.clusters) best = std::min(best, CrossDeterminant(c.point, root));
    worst = std::max(worst, best);
  }
  const DegeneracyConfiguration config = ComputeDegeneracyConfiguration(points);
  const StabilizerVerdict v = DecideStabilizer(ghz);
  const double residual = v.certificate ? oracle::VerifyCertificate(ghz, v.certificate->g) : 1.0;
  const double elapsed = Seconds(start);
  const bool pass = points.diversity() == 3 && worst <= 1e-10 &&
                    config.multiplicities == std::vector<int>{1, 1, 1} && Verified(ghz, v) &&
                    elapsed < 1.0;
  return {pass, "GHZ3 roots off by " + Num(worst) + ", residual " + Num(residual) + ", " +
                    Num(elapsed) + " s"};
}

Outcome C2() {
  const SymmetricState w = SymmetricState::Dicke(3, 1);
  const double paper = oracle::VerifyCertificate(
      w, LocalOperator::Diagonal(std::polar(1.0, kPi / 4), std::polar(1.0, -kPi / 2)));
  const StabilizerVerdict v = DecideStabilizer(w);
  const bool pass = paper <= 1e-12 && Verified(w, v);
  return {pass, "W3 paper certificate residual " + Num(paper) + ", search certificate " +
                    (Verified(w, v) ? "verified" : "missing")};
}

Outcome C3() {
  const double d41 = oracle::VerifyCertificate(
      SymmetricState::Dicke(4, 1),
      LocalOperator::Diagonal(std::polar(1.0, kPi / 6), std::polar(1.0, 3 * kPi / 2)));
  const LocalOperator sigma_z = LocalOperator::Diagonal(1.0, -1.0);
  const double d42 = oracle::VerifyCertificate(SymmetricState::Dicke(4, 2), sigma_z);
  double mixed = 0.0;
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const Complex a = t == 0 ? Complex(1.0) : testing::Gaussian(rng);
    const Complex b = t == 0 ? Complex(1.0) : testing::Gaussian(rng);
    mixed = std::max(mixed,
                     oracle::VerifyCertificate(MakeState(4, {{2, a}, {0, b}}), sigma_z));
  }
  const bool pass = d41 <= 1e-12 && d42 <= 1e-12 && mixed <= 1e-12;
  return {pass, "D(4,1) " + Num(d41) + ", D(4,2) sigma_z " + Num(d42) +
                    ", D(4,2)+D(4,0) sigma_z " + Num(mixed)};
}

Outcome C4() {
  const auto start = Clock::now();
  int nontrivial = 0;
  for (int t = 0; t < 500; ++t) {
    const SamplingSpec spec = t % 2 == 0 ? SamplingSpec::Amplitudes()
                                         : SamplingSpec::Points(1 + (t / 2) % 4);
    const SymmetricState s = SampleSymmetric(4, spec, TrialSeed(4, t));
    if (Verified(s, DecideStabilizer(s))) ++nontrivial;
  }
  const double elapsed = Seconds(start);
  return {nontrivial == 500 && elapsed < 60.0,
          std::to_string(nontrivial) + "/500 four-qubit states nontrivial and verified, " +
              Num(elapsed) + " s"};
}

Outcome C5() {
  std::mt19937_64 rng(5);
  int trivial = 0;
  double flip = 0.0;
  for (int t = 0; t < 20; ++t) {
    const SymmetricState s =
        MakeState(9, {{3, testing::Gaussian(rng)}, {7, testing::Gaussian(rng)},
                      {9, testing::Gaussian(rng)}});
    if (DecideStabilizer(s).trivial) ++trivial;
    flip = std::max(flip, oracle::VerifyCertificate(s, LocalOperator::Diagonal(-1.0, 1.0)));
  }
  return {trivial == 20, std::to_string(trivial) +
                             "/20 trivial for n=9, k=7, l=3; diag(-1,1) residual " + Num(flip)};
}

Outcome C6() {
  std::mt19937_64 rng(6);
  double worst = 0.0;
  for (int n : {3, 5, 7}) {
    for (int t = 0; t < 100; ++t) worst = std::max(worst, std::abs(F2(testing::RandomState(n, rng))));
  }
  return {worst <= 1e-12, "max |f2| over odd n " + Num(worst)};
}

Outcome C7() {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 7;
    const SymmetricState s = testing::RandomState(n, rng);
    const oracle::DenseState v = oracle::DenseFromSymmetric(s);
    const oracle::DenseState image =
        oracle::ApplyUniform(testing::RandomUnitDeterminant(rng), v);
    if (n % 2 == 0) {
      const Complex before = DenseF2(v);
      worst = std::max(worst, std::abs(DenseF2(image) - before) / std::abs(before));
    }
    const Complex before = DenseF4(v);
    worst = std::max(worst, std::abs(DenseF4(image) - before) / std::abs(before));
  }
  return {worst <= 1e-8, "max relative change of f2, f4 " + Num(worst)};
}

Outcome C8() {
  const double identity = PMax(Mat2::Identity(), 3);
  const double closed = PMax(Diag(2.0, 0.5), 3);
  // Dense 8 x 8 form (g^{(x)3})^dagger g^{(x)3}.
  Eigen::MatrixXcd g3 = Eigen::MatrixXcd::Zero(8, 8);
  const Mat2 g = Diag(2.0, 0.5);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Complex entry = 1.0;
      for (int q = 0; q < 3; ++q) entry *= g((i >> (2 - q)) & 1, (j >> (2 - q)) & 1);
      g3(i, j) = entry;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g3.adjoint() * g3);
  const double dense = 1.0 / solver.eigenvalues().maxCoeff();
  const bool pass = identity == 1.0 && std::abs(closed - 1.0 / 64) <= 1e-12 &&
                    std::abs(closed - dense) <= 1e-12;
  return {pass, "p_max(I) = " + Num(identity) + ", p_max(diag(2,1/2), 3) = " + Num(closed) +
                    ", dense " + Num(dense)};
}

Outcome C9() {
  const auto start = Clock::now();
  const TrivialFractionRow five = TrivialFraction(7, SamplingSpec::Points(5), 1000, 9);
  const TrivialFractionRow six = TrivialFraction(8, SamplingSpec::Points(6), 1000, 9);
  const double elapsed = Seconds(start);
  return {five.fraction == 1.0 && six.fraction == 1.0 && elapsed < 300.0,
          "trivial fraction " + Num(five.fraction) + " (n=7, m=5), " + Num(six.fraction) +
              " (n=8, m=6), " + Num(elapsed) + " s"};
}

Outcome C10() {
  std::mt19937_64 rng(10);
  double round_trip = 1.0;
  double symmetrize = 1.0;
  double marginal = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 10;
    const SymmetricState s = testing::RandomState(n, rng);
    const MajoranaSet points = MajoranaDecompose(s);
    const SymmetricState back = MajoranaCompose(points);
    round_trip = std::min(round_trip, Fidelity(s, back));
    const oracle::DenseState sym = oracle::DenseSymmetrize(points);
    const oracle::DenseState dense = oracle::DenseFromSymmetric(back);
    symmetrize = std::min(symmetrize, std::abs(oracle::Inner(sym, dense)));
    marginal = std::max(marginal, (ReducedDensityMatrix(s) -
                                   oracle::DensePartialTrace(oracle::DenseFromSymmetric(s), 0))
                                      .cwiseAbs()
                                      .maxCoeff());
  }
  const bool pass = round_trip >= 1 - 1e-10 && symmetrize >= 1 - 1e-10 && marginal <= 1e-10;
  return {pass, "min round-trip fidelity 1-" + Num(1 - round_trip) + ", min symmetrize fidelity 1-" +
                    Num(1 - symmetrize) + ", max marginal error " + Num(marginal)};
}

Outcome C11() {
  std::mt19937_64 rng(11);
  int recovered = 0;
  double worst = 1.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 8;
    const SymmetricState s = testing::RandomState(n, rng);
    const SymmetricState target = testing::DenseTransform(testing::RandomMatrix(rng), s);
    const auto w = SloccEquivalent(s, target);
    if (!w) continue;
    const ConnectingOperator op = Connect(s, target, w->map);
    const double overlap = std::abs(op.phase);
    worst = std::min(worst, overlap);
    if (overlap >= 1 - 1e-8) ++recovered;
  }
  return {recovered == 100, std::to_string(recovered) + "/100 recovered, min overlap 1-" +
                                Num(1 - worst)};
}

Outcome C12() {
  std::mt19937_64 rng(12);
  int verified = 0;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const SymmetricState s = testing::RandomState(2, rng);
    const TwoQubitStabilizer sol = SolveTwoQubitStabilizer(s);
    const std::vector<Mat2> ops = {sol.a.matrix(), sol.b.matrix()};
    const oracle::DenseState v = oracle::DenseFromSymmetric(s);
    const double residual =
        oracle::Distance(oracle::ApplyLocal(std::span<const Mat2>(ops), v), v);
    worst = std::max(worst, residual);
    if (residual <= 1e-9 && !(sol.a.IsScalar() && sol.b.IsScalar())) ++verified;
  }
  return {verified == 100,
          std::to_string(verified) + "/100 two-qubit pairs verified, max residual " + Num(worst)};
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace symstab

int main(int argc, char** argv) {
  using symstab::Criterion;
  const std::vector<Criterion> criteria = {
      {"GHZ3 Majorana points and stabilizer", symstab::C1},
      {"W3 certificate", symstab::C2},
      {"D(4,1), D(4,2) certificates", symstab::C3},
      {"four-qubit universality", symstab::C4},
      {"n=9, k=7, l=3 instance trivial", symstab::C5},
      {"odd-n f2 vanishing", symstab::C6},
      {"SL-invariance of f2, f4", symstab::C7},
      {"p_max values", symstab::C8},
      {"genericity at m >= 5", symstab::C9},
      {"round trip and oracle consistency", symstab::C10},
      {"SLOCC recovery", symstab::C11},
      {"two-qubit stabilizer", symstab::C12},
  };
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: acceptance [1-%zu]\n", criteria.size());
      return 2;
    }
  }
  bool all_pass = true;
  for (int id = 1; id <= static_cast<int>(criteria.size()); ++id) {
    if (only && id != only) continue;
    symstab::Outcome outcome;
    try {
      outcome = criteria[id - 1].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] C%d %s: %s\n", outcome.pass ? "PASS" : "FAIL", id, criteria[id - 1].title,
                outcome.detail.c_str());
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}
