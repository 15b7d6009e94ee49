// Copyright 2026 The dqc1 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dqc1/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "dqc1/io.hpp"

namespace dqc1::bounds {

namespace {

constexpr double kResidualTolerance = 1e-10;
constexpr int kScanPoints = 4001;

void require_n(long N) {
  if (N < 2) throw std::invalid_argument("bounds: N must be >= 2");
}

double s123_target(long N, int s) {
  return trace_power(N, 1.0, s);
}

SpectrumSolution make_solution(std::vector<double> values, std::vector<long> degs) {
  SpectrumSolution s;
  s.distinct_values = std::move(values);
  s.degeneracies = std::move(degs);
  for (std::size_t i = 0; i < s.degeneracies.size(); ++i) {
    s.total += s.degeneracies[i];
    s.m_value += static_cast<double>(s.degeneracies[i]) * std::abs(s.distinct_values[i]);
  }
  return s;
}

// Real solutions of d1 x + d2 y = 1, d1 x^2 + d2 y^2 = 1/N.
std::vector<std::array<double, 2>> two_value_solutions(long N, double d1, double d2) {
  const double disc = 4.0 * d2 * d2 - 4.0 * d2 * (d1 + d2) * (1.0 - d1 / N);
  if (disc < 0.0) return {};
  std::vector<std::array<double, 2>> out;
  for (double sign : {-1.0, 1.0}) {
    const double y = (2.0 * d2 + sign * std::sqrt(disc)) / (2.0 * d2 * (d1 + d2));
    out.push_back({(1.0 - d2 * y) / d1, y});
    if (disc == 0.0) break;
  }
  return out;
}

// Three nonzero degeneracies.  B is scanned over the interval where the
// first two constraints admit real (A, C); each of the two branches of that
// conic gives a function g(B), the third constraint's residual, whose roots
// are bracketed on the grid and bisected.
class ThreeValueSolver {
 public:
  ThreeValueSolver(long N, double u, double v, double w)
      : N_(N), u_(u), v_(v), w_(w) {}

  std::vector<std::array<double, 3>> solve() const {
    std::vector<std::array<double, 3>> roots;
    // 2N v B^2 - 2 v B + 1 - (u + w)/N <= 0
    const double qa = 2.0 * N_ * v_;
    const double qb = -2.0 * v_;
    const double qc = 1.0 - (u_ + w_) / N_;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc <= 0.0) return roots;
    const double lo = (-qb - std::sqrt(disc)) / (2.0 * qa);
    const double hi = (-qb + std::sqrt(disc)) / (2.0 * qa);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    // Cosine spacing crowds the grid toward the ends, where the branches
    // have infinite slope.
    auto at = [&](double theta) { return mid - half * std::cos(theta); };

    for (double branch : {-1.0, 1.0}) {
      std::vector<double> g(kScanPoints);
      const double step = std::numbers::pi / (kScanPoints - 1);
      for (int i = 0; i < kScanPoints; ++i) g[i] = residual(at(i * step), branch);
      for (int i = 0; i + 1 < kScanPoints; ++i) {
        double t0 = i * step;
        double t1 = (i + 1) * step;
        if (g[i] == 0.0) {
          keep(roots, at(t0), branch);
          continue;
        }
        if ((g[i] < 0.0) != (g[i + 1] < 0.0) && g[i + 1] != 0.0) {
          double g0 = g[i];
          for (int it = 0; it < 200 && t1 - t0 > 1e-17; ++it) {
            const double tm = 0.5 * (t0 + t1);
            const double gm = residual(at(tm), branch);
            if ((gm < 0.0) == (g0 < 0.0)) {
              t0 = tm;
              g0 = gm;
            } else {
              t1 = tm;
            }
          }
          keep(roots, at(0.5 * (t0 + t1)), branch);
        } else if (i > 0 && std::abs(g[i]) < std::abs(g[i - 1]) &&
                   std::abs(g[i]) <= std::abs(g[i + 1])) {
          // A touching root shows up as a local minimum of |g|.
          double a = (i - 1) * step;
          double b = (i + 1) * step;
          for (int it = 0; it < 200; ++it) {
            const double m1 = a + (b - a) / 3.0;
            const double m2 = b - (b - a) / 3.0;
            if (std::abs(residual(at(m1), branch)) < std::abs(residual(at(m2), branch))) {
              b = m2;
            } else {
              a = m1;
            }
          }
          keep(roots, at(0.5 * (a + b)), branch);
        }
      }
    }
    return roots;
  }

 private:
  // (A, C) on the chosen branch for a given B; the discriminant is clamped
  // at the interval ends.
  std::array<double, 3> point(double b, double branch) const {
    const double p = 1.0 - v_ * b;
    const double q = 1.0 / N_ - v_ * b * b;
    const double d = std::max(0.0, w_ * u_ * ((u_ + w_) * q - p * p));
    const double c = (p * w_ + branch * std::sqrt(d)) / (w_ * (w_ + u_));
    const double a = (p - w_ * c) / u_;
    return {a, b, c};
  }

  double residual(double b, double branch) const {
    const auto [a, bb, c] = point(b, branch);
    return u_ * a * a * a + v_ * bb * bb * bb + w_ * c * c * c - 1.0 / (double(N_) * N_);
  }

  void keep(std::vector<std::array<double, 3>>& roots, double b, double branch) const {
    const auto p = point(b, branch);
    for (const auto& r : roots) {
      if (std::abs(r[0] - p[0]) < 1e-8 && std::abs(r[1] - p[1]) < 1e-8 &&
          std::abs(r[2] - p[2]) < 1e-8) {
        return;
      }
    }
    roots.push_back(p);
  }

  long N_;
  double u_, v_, w_;
};

bool better(const SpectrumSolution& cand, const Degeneracies& cd,
            const std::optional<SpectrumSolution>& best, const Degeneracies& bd) {
  if (!best) return true;
  if (cand.m_value > best->m_value + 1e-12) return true;
  if (cand.m_value < best->m_value - 1e-12) return false;
  return std::tie(cd.u, cd.v, cd.w) < std::tie(bd.u, bd.v, bd.w);
}

}  // namespace

double trace_power(long N, double alpha, int s) {
  require_n(N);
  if (s < 1 || s > 3) {
    throw std::invalid_argument("trace_power: s must be 1, 2 or 3, got " + std::to_string(s));
  }
  const double nn = static_cast<double>(N);
  return (std::pow(1.0 + alpha, s) + std::pow(1.0 - alpha, s)) /
         (std::pow(2.0, s) * std::pow(nn, s - 1));
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kS12Continuous: return "s12_continuous";
    case BoundKind::kS12Integer: return "s12_integer";
    case BoundKind::kS123Numeric: return "s123_numeric";
    case BoundKind::kS123Asymptotic: return "s123_asymptotic";
  }
  return "?";
}

double s12_value(long N, double alpha, double t) {
  return (N - t + alpha * std::sqrt(t * (2.0 * N - t))) / N;
}

double s12_optimal_t(long N, double alpha) {
  return N * (1.0 - 1.0 / std::sqrt(1.0 + alpha * alpha));
}

SpectrumSolution s12_spectrum(long N, double alpha, double t) {
  const double two_n = 2.0 * N;
  const double minus = (1.0 - alpha * std::sqrt((two_n - t) / t)) / two_n;
  const double plus = (1.0 + alpha * std::sqrt(t / (two_n - t))) / two_n;
  SpectrumSolution s;
  s.distinct_values = {minus, plus};
  // Degeneracies are only meaningful for integer t; the continuous witness
  // keeps the rounded values and m_value from t itself.
  s.degeneracies = {std::lround(t), 2 * N - std::lround(t)};
  s.total = 2 * N;
  s.m_value = -t * minus + (two_n - t) * plus;
  return s;
}

S12Bounds bound_s12(long N, double alpha) {
  require_n(N);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("bound_s12: alpha must lie in [0, 1]");
  }
  S12Bounds out;
  out.continuous.N = out.integer.N = N;
  out.continuous.alpha = out.integer.alpha = alpha;
  out.continuous.kind = BoundKind::kS12Continuous;
  out.integer.kind = BoundKind::kS12Integer;
  if (alpha == 0.0) {
    out.continuous.bound = out.integer.bound = 1.0;
    out.continuous.degenerate = out.integer.degenerate = true;
    return out;
  }
  const double t_star = s12_optimal_t(N, alpha);
  out.continuous.bound = std::sqrt(1.0 + alpha * alpha);
  out.continuous.t = t_star;
  out.continuous.witness = s12_spectrum(N, alpha, t_star);

  double best_t = -1.0;
  double best = 0.0;
  for (double t : {std::floor(t_star), std::ceil(t_star)}) {
    if (t < 1.0 || t > 2.0 * N - 1.0) continue;
    const double m = s12_value(N, alpha, t);
    if (best_t < 0.0 || m > best + 1e-12) {
      best_t = t;
      best = m;
    }
  }
  // M(t) > 1 exactly when lambda_- < 0.  If neither neighbour of t* gets
  // there, no integer degeneracy produces a negative eigenvalue and the
  // bound is the separable value.
  if (best_t < 0.0 || best <= 1.0) {
    out.integer.bound = 1.0;
    out.integer.t = 0.0;
    out.integer.degenerate = true;
    return out;
  }
  out.integer.bound = best;
  out.integer.t = best_t;
  out.integer.witness = s12_spectrum(N, alpha, best_t);
  return out;
}

double s123_residual(long N, const SpectrumSolution& s) {
  double worst = 0.0;
  for (int p = 1; p <= 3; ++p) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s.distinct_values.size(); ++i) {
      sum += s.degeneracies[i] * std::pow(s.distinct_values[i], p);
    }
    worst = std::max(worst, std::abs(sum - s123_target(N, p)));
  }
  return worst;
}

std::vector<SpectrumSolution> solve_s123(long N, long u, long v, long w) {
  require_n(N);
  if (u < 0 || v < 0 || w < 0 || u + v + w != 2 * N) {
    throw std::invalid_argument("solve_s123: need nonnegative u + v + w = 2N");
  }
  std::vector<long> degs;
  for (long d : {u, v, w}) {
    if (d > 0) degs.push_back(d);
  }

  std::vector<SpectrumSolution> candidates;
  if (degs.size() == 1) {
    candidates.push_back(make_solution({1.0 / (2.0 * N)}, degs));
  } else if (degs.size() == 2) {
    for (const auto& xy : two_value_solutions(N, degs[0], degs[1])) {
      candidates.push_back(make_solution({xy[0], xy[1]}, degs));
    }
  } else {
    const ThreeValueSolver solver(N, u, v, w);
    for (const auto& abc : solver.solve()) {
      candidates.push_back(make_solution({abc[0], abc[1], abc[2]}, degs));
    }
  }

  std::vector<SpectrumSolution> out;
  for (auto& c : candidates) {
    if (s123_residual(N, c) <= kResidualTolerance) out.push_back(std::move(c));
  }
  return out;
}

Degeneracies canonical_degeneracies(const SpectrumSolution& s) {
  std::vector<std::size_t> order(s.distinct_values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return s.distinct_values[x] < s.distinct_values[y];
  });
  Degeneracies d;
  if (order.empty()) return d;
  d.u = s.degeneracies[order.front()];
  d.a = s.distinct_values[order.front()];
  if (order.size() >= 2) {
    d.v = s.degeneracies[order.back()];
    d.b = s.distinct_values[order.back()];
  }
  if (order.size() == 3) {
    d.w = s.degeneracies[order[1]];
    d.c = s.distinct_values[order[1]];
  }
  return d;
}

Degeneracies expected_maximizer(long N) {
  require_n(N);
  Degeneracies d;
  d.u = std::lround(N * (1.0 - 1.0 / std::numbers::sqrt2));
  d.v = 1;
  d.w = 2 * N - 1 - d.u;
  return d;
}

BoundResult bound_s123(long N) {
  require_n(N);
  const long two_n = 2 * N;
  std::optional<SpectrumSolution> best;
  Degeneracies best_deg;

  auto consider = [&](long u, long v, long w) {
    for (auto& s : solve_s123(N, u, v, w)) {
      const Degeneracies d = canonical_degeneracies(s);
      if (better(s, d, best, best_deg)) {
        best = std::move(s);
        best_deg = d;
      }
    }
  };

  if (two_n <= kExhaustiveLimit) {
    for (long u = 0; u <= two_n; ++u) {
      for (long v = 0; u + v <= two_n; ++v) consider(u, v, two_n - u - v);
    }
  } else {
    const Degeneracies guide = expected_maximizer(N);
    for (long u = std::max(0L, guide.u - 3); u <= guide.u + 3; ++u) {
      for (long v = std::max(0L, guide.v - 3); v <= guide.v + 3; ++v) {
        if (u + v <= two_n) consider(u, v, two_n - u - v);
      }
    }
  }
  if (!best) {
    throw std::runtime_error("bound_s123: no real solution for 2N = " + std::to_string(two_n));
  }

  BoundResult r;
  r.N = N;
  r.alpha = 1.0;
  r.kind = BoundKind::kS123Numeric;
  r.bound = best->m_value;
  r.t = static_cast<double>(best_deg.u);
  r.witness = std::move(best);
  return r;
}

double bound_s123_asymptotic(long N) {
  require_n(N);
  return std::numbers::sqrt2 -
         std::pow(2.0, -7.0 / 6.0) * std::pow(static_cast<double>(N), -1.0 / 3.0);
}

void write_bounds_csv_header(std::ostream& out) {
  out << "two_N,kind,bound,u,v,w,A,B,C\n";
}

void write_bounds_csv_row(std::ostream& out, const BoundResult& r) {
  out << 2 * r.N << ',' << to_string(r.kind) << ',' << format_double(r.bound) << ',';
  switch (r.kind) {
    case BoundKind::kS12Continuous:
    case BoundKind::kS12Integer:
      if (r.degenerate) {
        out << ",,,,,";
      } else {
        const auto& w = *r.witness;
        out << format_double(r.t) << ",," << format_double(2.0 * r.N - r.t) << ','
            << format_double(w.distinct_values[0]) << ",,"
            << format_double(w.distinct_values[1]);
      }
      break;
    case BoundKind::kS123Numeric: {
      const Degeneracies d = canonical_degeneracies(*r.witness);
      out << d.u << ',' << d.v << ',' << d.w << ',' << format_double(d.a) << ','
          << format_double(d.b) << ',' << format_double(d.c);
      break;
    }
    case BoundKind::kS123Asymptotic:
      out << ",,,,,";
      break;
  }
  out << '\n';
}

}  // namespace dqc1::bounds
