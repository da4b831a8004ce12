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

// Monte Carlo sampling of symmetric states and trivial-stabilizer fractions.
//
// Seed splitting: trial i of a run with master seed s uses
//   SplitMix64(s + (i + 1) * 0x9E3779B97F4A7C15)
// to seed a std::mt19937_64. Trials are therefore independent of each other
// and of evaluation order.

#ifndef SYMSTAB_EXPERIMENTS_H_
#define SYMSTAB_EXPERIMENTS_H_

#include <cstdint>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "symstab/model.h"

namespace symstab {

enum class SamplingMode { kAmplitudes, kPoints };

struct SamplingSpec {
  SamplingMode mode = SamplingMode::kAmplitudes;
  int m = 0;  // distinct points, kPoints only

  static SamplingSpec Amplitudes() { return {SamplingMode::kAmplitudes, 0}; }
  static SamplingSpec Points(int m) { return {SamplingMode::kPoints, m}; }
};

std::uint64_t SplitMix64(std::uint64_t x);
std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t trial);

/// Uniformly random composition of n into m positive parts.
std::vector<int> SampleComposition(int n, int m, std::mt19937_64& rng);

/// Uniform point on the sphere (normalized complex Gaussian pair).
ProjectivePoint SampleSpherePoint(std::mt19937_64& rng);

/// m i.i.d. sphere points with composition multiplicities. Throws
/// PreconditionError unless 1 <= m <= n.
MajoranaSet SamplePoints(int n, int m, std::uint64_t seed);

SymmetricState SampleSymmetric(int n, const SamplingSpec& spec, std::uint64_t seed);

struct TrivialFractionRow {
  int n = 0;
  SamplingSpec spec;
  int trials = 0;
  int trivial = 0;
  double fraction = 0.0;
  std::uint64_t seed = 0;
  /// n above the dense oracle limit: certificates checked by the
  /// symmetric-power action only.
  bool unverified_dense = false;
};

/// Runs DecideStabilizer on `trials` sampled states. Throws
/// PreconditionError when trials < 1.
TrivialFractionRow TrivialFraction(int n, const SamplingSpec& spec, int trials,
                                   std::uint64_t master_seed, const Tolerances& tol = {});

inline constexpr const char* kCsvHeader = "n,mode,m,trials,trivial,fraction,seed";

std::string CsvRow(const TrivialFractionRow& row);
void WriteCsv(std::ostream& out, std::span<const TrivialFractionRow> rows);

}  // namespace symstab

#endif  // SYMSTAB_EXPERIMENTS_H_
