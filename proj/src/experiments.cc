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

#include "symstab/experiments.h"

#include <algorithm>
#include <cinttypes>
#include <cstdio>

#include "symstab/majorana.h"
#include "symstab/oracle.h"
#include "symstab/stabilizer.h"

namespace symstab {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t trial) {
  return SplitMix64(master_seed + (trial + 1) * 0x9E3779B97F4A7C15ULL);
}

std::vector<int> SampleComposition(int n, int m, std::mt19937_64& rng) {
  if (m < 1 || m > n) throw PreconditionError("composition needs 1 <= m <= n");
  // m - 1 distinct cut positions in 1..n-1 by a partial Fisher-Yates shuffle.
  std::vector<int> positions(n - 1);
  for (int i = 0; i < n - 1; ++i) positions[i] = i + 1;
  for (int i = 0; i < m - 1; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 2);
    std::swap(positions[i], positions[pick(rng)]);
  }
  std::vector<int> cuts(positions.begin(), positions.begin() + (m - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> parts;
  int previous = 0;
  for (int c : cuts) {
    parts.push_back(c - previous);
    previous = c;
  }
  parts.push_back(n - previous);
  return parts;
}

ProjectivePoint SampleSpherePoint(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    const Complex a(normal(rng), normal(rng));
    const Complex b(normal(rng), normal(rng));
    if (std::norm(a) + std::norm(b) > 1e-24) return ProjectivePoint::Canonicalize(a, b);
  }
}

MajoranaSet SamplePoints(int n, int m, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (m < 1 || m > n) {
    throw PreconditionError("points mode needs 1 <= m <= n, got m = " + std::to_string(m));
  }
  std::mt19937_64 rng(seed);
  const std::vector<int> parts = SampleComposition(n, m, rng);
  MajoranaSet set;
  set.n = n;
  for (int k : parts) set.clusters.push_back({SampleSpherePoint(rng), k});
  set.Sort();
  return set;
}

SymmetricState SampleSymmetric(int n, const SamplingSpec& spec, std::uint64_t seed) {
  if (spec.mode == SamplingMode::kPoints) return MajoranaCompose(SamplePoints(n, spec.m, seed));
  if (n < 1) throw PreconditionError("n must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Complex> x(n + 1);
  for (Complex& v : x) {
    const double re = normal(rng);
    v = Complex(re, normal(rng));
  }
  return SymmetricState(n, std::move(x));
}

TrivialFractionRow TrivialFraction(int n, const SamplingSpec& spec, int trials,
                                   std::uint64_t master_seed, const Tolerances& tol) {
  if (trials < 1) throw PreconditionError("trials must be at least 1");
  if (spec.mode == SamplingMode::kPoints && (spec.m < 1 || spec.m > n)) {
    throw PreconditionError("points mode needs 1 <= m <= n");
  }
  TrivialFractionRow row;
  row.n = n;
  row.spec = spec;
  row.trials = trials;
  row.seed = master_seed;
  row.unverified_dense = n > oracle::kDenseQubitLimit;
  for (int t = 0; t < trials; ++t) {
    const SymmetricState state = SampleSymmetric(n, spec, TrialSeed(master_seed, t));
    if (DecideStabilizer(state, tol).trivial) ++row.trivial;
  }
  row.fraction = static_cast<double>(row.trivial) / trials;
  return row;
}

std::string CsvRow(const TrivialFractionRow& row) {
  const bool amp = row.spec.mode == SamplingMode::kAmplitudes;
  std::string mode = amp ? "amp" : "points";
  if (row.unverified_dense) mode += ":unverified-dense";
  const std::string m = amp ? "amp" : std::to_string(row.spec.m);
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), "%d,%s,%s,%d,%d,%.6f,%" PRIu64, row.n, mode.c_str(),
                m.c_str(), row.trials, row.trivial, row.fraction, row.seed);
  return buffer;
}

void WriteCsv(std::ostream& out, std::span<const TrivialFractionRow> rows) {
  out << kCsvHeader << '\n';
  for (const TrivialFractionRow& row : rows) out << CsvRow(row) << '\n';
}

}  // namespace symstab
