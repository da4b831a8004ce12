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

#include "symstab/majorana.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace symstab {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kAberthMaxSweeps = 200;
constexpr double kAberthUpdateTol = 1e-12;

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  // Returns the new root.
  int Unite(int i, int j) {
    i = Find(i);
    j = Find(j);
    if (i != j) parent_[j] = i;
    return i;
  }

 private:
  std::vector<int> parent_;
};

// Mean of nearby points computed in the affine chart of the first member;
// nullopt when some member falls outside that chart.
std::optional<ProjectivePoint> Centroid(std::span<const ProjectivePoint> points) {
  const ProjectivePoint& first = points.front();
  const bool z_chart = std::abs(first.b()) >= std::abs(first.a());
  Complex sum = 0.0;
  for (const ProjectivePoint& p : points) {
    sum += z_chart ? p.a() / p.b() : p.b() / p.a();
  }
  const Complex mean = sum / static_cast<double>(points.size());
  if (!std::isfinite(mean.real()) || !std::isfinite(mean.imag())) return std::nullopt;
  return z_chart ? ProjectivePoint::Canonicalize(mean, 1.0)
                 : ProjectivePoint::Canonicalize(1.0, mean);
}

std::vector<Complex> DickeFromCoefficients(std::span<const Complex> c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<Complex> x(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    x[k] = sign * c[k] / std::sqrt(Binomial(n, k));
  }
  return x;
}

// Chart polynomial (lowest degree first) in the chart where `point` has
// modulus at most one, and the point's chart coordinate.
struct ChartView {
  std::vector<Complex> q;
  Complex t;
};

ChartView InChart(std::span<const Complex> coefficients, const ProjectivePoint& point) {
  const int n = static_cast<int>(coefficients.size()) - 1;
  const bool z_chart = std::abs(point.b()) >= std::abs(point.a());
  ChartView view{std::vector<Complex>(n + 1),
                 z_chart ? point.a() / point.b() : point.b() / point.a()};
  for (int k = 0; k <= n; ++k) view.q[k] = z_chart ? coefficients[k] : coefficients[n - k];
  return view;
}

ProjectivePoint FromChart(const ProjectivePoint& reference, Complex t) {
  const bool z_chart = std::abs(reference.b()) >= std::abs(reference.a());
  return z_chart ? ProjectivePoint::Canonicalize(t, 1.0) : ProjectivePoint::Canonicalize(1.0, t);
}

// Taylor coefficients q^(j)(t)/j! for j = 0..order.
std::vector<Complex> Taylor(std::vector<Complex> q, Complex t, int order) {
  std::vector<Complex> a;
  for (int j = 0; j <= order && !q.empty(); ++j) {
    // Synthetic division by (x - t): the remainder is the value and the
    // quotient lands in q[0..size-2].
    Complex carry = 0.0;
    for (size_t k = q.size(); k-- > 0;) {
      const Complex next = q[k] + carry * t;
      q[k] = carry;
      carry = next;
    }
    a.push_back(carry);
    q.pop_back();
  }
  return a;
}

// Center of a candidate `order`-fold root: Newton on the (order-1)th
// derivative, where a multiple root is simple, started from the centroid.
ProjectivePoint RefinedCenter(std::span<const ProjectivePoint> members,
                              std::span<const Complex> coefficients) {
  const int order = static_cast<int>(members.size());
  const auto center = Centroid(members);
  if (!center) return members.front();
  ChartView view = InChart(coefficients, *center);
  std::vector<Complex>& q = view.q;
  for (int d = 0; d < order - 1 && q.size() > 1; ++d) {
    for (size_t k = 1; k < q.size(); ++k) q[k - 1] = static_cast<double>(k) * q[k];
    q.pop_back();
  }
  if (q.size() < 2) return *center;
  double spread = 0.0;
  for (const ProjectivePoint& p : members) spread = std::max(spread, CrossDeterminant(p, *center));
  Complex t = view.t;
  for (int iter = 0; iter < 50; ++iter) {
    const std::vector<Complex> a = Taylor(q, t, 1);
    if (a.size() < 2 || a[1] == Complex(0.0)) break;
    const Complex step = a[0] / a[1];
    t -= step;
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) return *center;
    if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(t))) break;
  }
  const ProjectivePoint refined = FromChart(*center, t);
  // Newton wandered off to some other root of the derivative.
  if (CrossDeterminant(refined, *center) > spread + 1e-6) return *center;
  return refined;
}

// Whether the polynomial has a root at `center` of multiplicity
// members.size() up to rounding: every local Taylor coefficient a_j below
// that order sits at its own rounding level (or at the size a root spread
// of point_tol would give), while a_order does not.
bool LooksLikeMultipleRoot(std::span<const Complex> coefficients, const ProjectivePoint& center,
                           std::span<const ProjectivePoint> members,
                           std::span<const ProjectivePoint> others, double point_tol) {
  const int order = static_cast<int>(members.size());
  constexpr double kSlack = 64.0;
  const ChartView view = InChart(coefficients, center);
  const std::vector<Complex> a = Taylor(view.q, view.t, order);
  std::vector<Complex> magnitudes(view.q.size());
  for (size_t k = 0; k < view.q.size(); ++k) magnitudes[k] = std::abs(view.q[k]);
  const std::vector<Complex> bounds = Taylor(magnitudes, std::abs(view.t), order);
  if (static_cast<int>(a.size()) <= order) return false;
  const double unit = kSlack * static_cast<double>(coefficients.size()) * kEps;
  const double leading = std::abs(a[order]);
  if (!(leading > unit * bounds[order].real())) return false;  // higher order root
  for (int j = 0; j < order; ++j) {
    const double allowed = unit * bounds[j].real() +
                           leading * Binomial(order, j) * std::pow(point_tol, order - j);
    if (!(std::abs(a[j]) <= allowed)) return false;
  }
  // The members must be the root finder's approximations of those roots;
  // for high multiplicity they can be far off, but never farther than
  // anything else.
  double spread = 0.0;
  for (const ProjectivePoint& p : members) spread = std::max(spread, CrossDeterminant(p, center));
  for (const ProjectivePoint& p : others) {
    if (!(CrossDeterminant(p, center) > spread)) return false;
  }
  return true;
}

// How far rounding in the coefficients can move the center of an
// `order`-fold root, chordal units. The center is a simple root of the
// (order-1)th derivative, so this is linear in the rounding even though the
// individual roots split much further.
double RootError(std::span<const Complex> coefficients, const ProjectivePoint& center,
                 int order) {
  const ChartView view = InChart(coefficients, center);
  const std::vector<Complex> a = Taylor(view.q, view.t, order);
  std::vector<Complex> magnitudes(view.q.size());
  for (size_t k = 0; k < view.q.size(); ++k) magnitudes[k] = std::abs(view.q[k]);
  const std::vector<Complex> bounds = Taylor(magnitudes, std::abs(view.t), order);
  if (static_cast<int>(a.size()) <= order || a[order] == Complex(0.0)) return 1.0;
  const double unit = static_cast<double>(coefficients.size()) * kEps;
  const double radius = unit * bounds[order - 1].real() / (order * std::abs(a[order]));
  return std::min(1.0, radius / (1.0 + std::norm(view.t)));
}

// Agglomerative clustering of raw root points. Points within the
// coincidence tolerance always merge. Beyond it, a candidate cluster of k
// points is accepted when the polynomial looks like a k-fold root at the
// refined center of the k points.
std::vector<Cluster> ClusterRawPoints(const std::vector<ProjectivePoint>& raw,
                                      std::span<const Complex> coefficients,
                                      double point_tol) {
  const int n = static_cast<int>(raw.size());

  struct Node {
    std::vector<int> members;
    int left = -1;
    int right = -1;
    bool pass = true;
    ProjectivePoint center;
  };
  std::vector<Node> nodes;
  auto member_points = [&](const std::vector<int>& members) {
    std::vector<ProjectivePoint> pts;
    for (int m : members) pts.push_back(raw[m]);
    return pts;
  };

  struct Edge {
    double distance;
    int i;
    int j;
  };
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.push_back({CrossDeterminant(raw[i], raw[j]), i, j});
    }
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& x, const Edge& y) { return x.distance < y.distance; });

  UnionFind forced(n);
  for (const Edge& e : edges) {
    if (e.distance > point_tol) break;
    forced.Unite(e.i, e.j);
  }
  UnionFind uf(n);
  std::vector<int> node_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = forced.Find(i);
    if (node_of[root] < 0) {
      node_of[root] = static_cast<int>(nodes.size());
      nodes.push_back({.members = {}, .center = raw[root]});
    }
    nodes[node_of[root]].members.push_back(i);
    uf.Unite(root, i);
  }
  for (Node& node : nodes) node.center = RefinedCenter(member_points(node.members), coefficients);

  for (const Edge& e : edges) {
    if (e.distance <= point_tol) continue;
    const int ri = uf.Find(e.i);
    const int rj = uf.Find(e.j);
    if (ri == rj) continue;
    Node merged{.members = nodes[node_of[ri]].members,
                .left = node_of[ri],
                .right = node_of[rj],
                .center = raw[e.i]};
    merged.members.insert(merged.members.end(), nodes[merged.right].members.begin(),
                          nodes[merged.right].members.end());
    const std::vector<ProjectivePoint> points = member_points(merged.members);
    std::vector<bool> inside(n, false);
    for (int m : merged.members) inside[m] = true;
    std::vector<ProjectivePoint> others;
    for (int i = 0; i < n; ++i) {
      if (!inside[i]) others.push_back(raw[i]);
    }
    merged.center = RefinedCenter(points, coefficients);
    merged.pass = LooksLikeMultipleRoot(coefficients, merged.center, points, others, point_tol);
    const int root = uf.Unite(ri, rj);
    node_of[root] = static_cast<int>(nodes.size());
    nodes.push_back(std::move(merged));
  }

  std::vector<Cluster> clusters;
  std::vector<int> stack = {node_of[uf.Find(0)]};
  while (!stack.empty()) {
    const Node& node = nodes[stack.back()];
    stack.pop_back();
    if (node.pass) {
      clusters.push_back({node.center, static_cast<int>(node.members.size())});
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }

  // Centroids of separate clusters may still land within tolerance.
  bool merged_any = true;
  while (merged_any) {
    merged_any = false;
    for (size_t i = 0; i < clusters.size() && !merged_any; ++i) {
      for (size_t j = i + 1; j < clusters.size() && !merged_any; ++j) {
        if (PointsCoincide(clusters[i].point, clusters[j].point, point_tol)) {
          clusters[i].multiplicity += clusters[j].multiplicity;
          clusters.erase(clusters.begin() + static_cast<long>(j));
          merged_any = true;
        }
      }
    }
  }
  for (Cluster& c : clusters) c.error = RootError(coefficients, c.point, c.multiplicity);
  return clusters;
}

}  // namespace

double Binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  if (n <= 60) {
    unsigned __int128 value = 1;
    for (int i = 1; i <= k; ++i) value = value * static_cast<unsigned>(n - k + i) / i;
    return static_cast<double>(value);
  }
  long double value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return static_cast<double>(value);
}

RootPolynomial DickeToPolynomial(const SymmetricState& state, double degree_eps) {
  const int n = state.n();
  RootPolynomial poly;
  poly.coefficients.resize(n + 1);
  double largest = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    poly.coefficients[k] = sign * state.amplitude(k) * std::sqrt(Binomial(n, k));
    largest = std::max(largest, std::abs(poly.coefficients[k]));
  }
  const double cutoff = degree_eps * largest;
  poly.effective_degree = 0;
  poly.low_order = n;
  for (int k = 0; k <= n; ++k) {
    if (std::abs(poly.coefficients[k]) > cutoff) {
      poly.effective_degree = k;
      poly.low_order = std::min(poly.low_order, k);
    }
  }
  return poly;
}

std::vector<Complex> AberthRoots(std::span<const Complex> q) {
  const int d = static_cast<int>(q.size()) - 1;
  if (d < 1) return {};
  if (q[0] == Complex(0.0) || q[d] == Complex(0.0)) {
    throw DomainError("Aberth iteration needs nonzero constant and leading terms");
  }
  if (d == 1) return {-q[0] / q[1]};

  std::vector<double> abs_q(d + 1);
  for (int k = 0; k <= d; ++k) abs_q[k] = std::abs(q[k]);
  const double radius = std::pow(abs_q[0] / abs_q[d], 1.0 / d);
  std::vector<Complex> z(d);
  for (int j = 0; j < d; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / d + 0.4;
    z[j] = std::polar(radius * (1.0 + 0.01 * j / d), angle);
  }

  std::vector<bool> done(d, false);
  double worst_residual = 0.0;
  for (int sweep = 0; sweep < kAberthMaxSweeps; ++sweep) {
    bool all_done = true;
    worst_residual = 0.0;
    for (int j = 0; j < d; ++j) {
      if (done[j]) continue;
      Complex p = q[d];
      Complex dp = 0.0;
      double bound = abs_q[d];
      const double az = std::abs(z[j]);
      for (int k = d - 1; k >= 0; --k) {
        dp = dp * z[j] + p;
        p = p * z[j] + q[k];
        bound = bound * az + abs_q[k];
      }
      worst_residual = std::max(worst_residual, std::abs(p) / bound);
      if (std::abs(p) <= 4.0 * d * kEps * bound) {
        done[j] = true;
        continue;
      }
      all_done = false;
      const Complex ratio = (dp == Complex(0.0)) ? Complex(1e-8 * std::max(1.0, az)) : p / dp;
      Complex repulsion = 0.0;
      for (int k = 0; k < d; ++k) {
        if (k != j) repulsion += 1.0 / (z[j] - z[k]);
      }
      const Complex w = ratio / (1.0 - ratio * repulsion);
      z[j] -= w;
      if (std::abs(w) <= kAberthUpdateTol * std::max(1.0, std::abs(z[j]))) done[j] = true;
    }
    if (all_done) return z;
  }
  if (std::all_of(done.begin(), done.end(), [](bool b) { return b; })) return z;
  throw NumericError("Aberth iteration did not converge", worst_residual);
}

Complex HomogeneousValue(std::span<const Complex> c, const ProjectivePoint& point) {
  const int n = static_cast<int>(c.size()) - 1;
  // sum_k c_k a^k b^(n-k), Horner in the larger of the two coordinates.
  const Complex a = point.a();
  const Complex b = point.b();
  Complex value = 0.0;
  if (std::abs(b) >= std::abs(a)) {
    const Complex t = a / b;
    for (int k = n; k >= 0; --k) value = value * t + c[k];
    for (int k = 0; k < n; ++k) value *= b;
  } else {
    const Complex t = b / a;
    for (int k = 0; k <= n; ++k) value = value * t + c[k];
    for (int k = 0; k < n; ++k) value *= a;
  }
  return value;
}

std::vector<Complex> ProductCoefficients(std::span<const ProjectivePoint> points) {
  std::vector<Complex> c = {1.0};
  c.reserve(points.size() + 1);
  for (const ProjectivePoint& p : points) {
    c.push_back(0.0);
    for (size_t k = c.size() - 1; k > 0; --k) c[k] = p.a() * c[k] - p.b() * c[k - 1];
    c[0] *= p.a();
  }
  return c;
}

MajoranaSet MajoranaDecompose(const SymmetricState& state, const Tolerances& tol) {
  const int n = state.n();
  const RootPolynomial poly = DickeToPolynomial(state, tol.degree);
  const int lo = poly.low_order;
  const int hi = poly.effective_degree;

  std::vector<ProjectivePoint> raw;
  raw.reserve(n);
  for (int k = 0; k < lo; ++k) raw.push_back(ProjectivePoint::FromPlane(0.0));
  const std::vector<Complex> roots = AberthRoots(
      std::span<const Complex>(poly.coefficients).subspan(lo, hi - lo + 1));
  for (const Complex& z : roots) raw.push_back(ProjectivePoint::FromPlane(z));
  for (int k = hi; k < n; ++k) raw.push_back(ProjectivePoint::Infinity());

  MajoranaSet set;
  set.n = n;
  set.clusters = ClusterRawPoints(raw, poly.coefficients, tol.point);
  set.Sort();

  double largest = 0.0;
  for (const Complex& c : poly.coefficients) largest = std::max(largest, std::abs(c));
  for (const Cluster& cluster : set.clusters) {
    const double residual =
        std::abs(HomogeneousValue(poly.coefficients, cluster.point)) / largest;
    if (!(residual <= 1e-9)) {
      throw NumericError("Majorana point fails the root residual check", residual);
    }
  }
  return set;
}

SymmetricState MajoranaCompose(const MajoranaSet& points) {
  if (points.clusters.empty() || points.n < 1) {
    throw DomainError("cannot compose an empty Majorana set");
  }
  std::vector<ProjectivePoint> expanded;
  for (const Cluster& c : points.clusters) {
    if (c.multiplicity < 1) throw DomainError("cluster multiplicity must be positive");
    expanded.insert(expanded.end(), c.multiplicity, c.point);
  }
  if (static_cast<int>(expanded.size()) != points.n) {
    throw DomainError("cluster multiplicities do not sum to n");
  }
  std::vector<Complex> x = DickeFromCoefficients(ProductCoefficients(expanded));
  double norm2 = 0.0;
  for (const Complex& v : x) norm2 += std::norm(v);
  const double norm = std::sqrt(norm2);
  for (const Complex& v : x) {
    if (std::abs(v) / norm > 1e-12) {
      const Complex phase = std::conj(v) / std::abs(v);
      for (Complex& w : x) w *= phase;
      break;
    }
  }
  return SymmetricState(points.n, std::move(x));
}

DegeneracyConfiguration ConfigurationFromMultiplicities(std::vector<int> multiplicities) {
  DegeneracyConfiguration config;
  std::sort(multiplicities.begin(), multiplicities.end(), std::greater<>());
  config.multiplicities = std::move(multiplicities);
  config.diversity = static_cast<int>(config.multiplicities.size());
  for (size_t i = 0; i < config.multiplicities.size();) {
    size_t j = i;
    while (j < config.multiplicities.size() &&
           config.multiplicities[j] == config.multiplicities[i]) {
      ++j;
    }
    config.partition.push_back(static_cast<int>(j - i));
    i = j;
  }
  return config;
}

DegeneracyConfiguration ComputeDegeneracyConfiguration(const MajoranaSet& points) {
  std::vector<int> multiplicities;
  for (const Cluster& c : points.clusters) multiplicities.push_back(c.multiplicity);
  return ConfigurationFromMultiplicities(std::move(multiplicities));
}

Mat2 ReducedDensityMatrix(const SymmetricState& state) {
  const int n = state.n();
  double p0 = 0.0;
  double p1 = 0.0;
  Complex coherence = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double weight = std::norm(state.amplitude(k));
    p0 += weight * (n - k) / n;
    p1 += weight * k / n;
    if (k < n) {
      coherence += state.amplitude(k) * std::conj(state.amplitude(k + 1)) *
                   std::sqrt(static_cast<double>((k + 1) * (n - k))) / static_cast<double>(n);
    }
  }
  Mat2 rho;
  rho << p0, coherence, std::conj(coherence), p1;
  return rho;
}

std::vector<Complex> ApplySymmetricPower(const Mat2& g, const SymmetricState& state) {
  const int n = state.n();
  // |0> -> g00|0> + g10|1>, |1> -> g01|0> + g11|1>; in the dehomogenized
  // variable t = v/u these are the linear polynomials below.
  const std::vector<Complex> u_image = {g(0, 0), g(1, 0)};
  const std::vector<Complex> v_image = {g(0, 1), g(1, 1)};
  auto powers = [n](const std::vector<Complex>& linear) {
    std::vector<std::vector<Complex>> out(n + 1);
    out[0] = {1.0};
    for (int j = 1; j <= n; ++j) {
      out[j].assign(j + 1, 0.0);
      for (int i = 0; i < j; ++i) {
        out[j][i] += out[j - 1][i] * linear[0];
        out[j][i + 1] += out[j - 1][i] * linear[1];
      }
    }
    return out;
  };
  const auto u_pow = powers(u_image);
  const auto v_pow = powers(v_image);
  std::vector<Complex> result(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    const Complex f = state.amplitude(k) * std::sqrt(Binomial(n, k));
    if (f == Complex(0.0)) continue;
    const auto& up = u_pow[n - k];
    const auto& vp = v_pow[k];
    for (size_t i = 0; i < up.size(); ++i) {
      for (size_t j = 0; j < vp.size(); ++j) result[i + j] += f * up[i] * vp[j];
    }
  }
  for (int j = 0; j <= n; ++j) result[j] /= std::sqrt(Binomial(n, j));
  return result;
}

double PhaseAlignedDistance(std::span<const Complex> x, std::span<const Complex> y) {
  double norm_y2 = 0.0;
  Complex overlap = 0.0;
  for (size_t k = 0; k < x.size(); ++k) {
    norm_y2 += std::norm(y[k]);
    overlap += std::conj(y[k]) * x[k];
  }
  const double norm_y = std::sqrt(norm_y2);
  if (!(norm_y > 0.0)) return std::numeric_limits<double>::infinity();
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  double d2 = 0.0;
  for (size_t k = 0; k < x.size(); ++k) d2 += std::norm(x[k] - phase * y[k] / norm_y);
  return std::sqrt(d2);
}

}  // namespace symstab
