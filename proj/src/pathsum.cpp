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

#include "dqc1/pathsum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "dqc1/random.hpp"

namespace dqc1::pathsum {

namespace {

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Working form during compilation: XOR-toggled monomial set.
using PolySet = std::set<Monomial>;

void toggle(PolySet& p, const Monomial& m) {
  if (auto it = p.find(m); it != p.end()) {
    p.erase(it);
  } else {
    p.insert(m);
  }
}

void add_into(PolySet& dst, const PolySet& src) {
  for (const auto& m : src) toggle(dst, m);
}

int degree_of(const PolySet& p) {
  int d = 0;
  for (const auto& m : p) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

PolySet multiply(const PolySet& a, const PolySet& b) {
  PolySet out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Monomial m;
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(m));
      toggle(out, m);
    }
  }
  return out;
}

Z2Polynomial finish(const PolySet& p) {
  Z2Polynomial out;
  out.terms.assign(p.begin(), p.end());
  std::sort(out.terms.begin(), out.terms.end(), canonical_less);
  return out;
}

void check_budget(const PathPolynomials& p) {
  if (p.n_path_bits > kEnumerationBudget) {
    throw BudgetExceeded(p.n_path_bits, kEnumerationBudget);
  }
}

std::uint32_t mask_of(const Monomial& m) {
  std::uint32_t mask = 0;
  for (int v : m) mask |= std::uint32_t{1} << v;
  return mask;
}

}  // namespace

int Z2Polynomial::degree() const {
  int d = 0;
  for (const auto& m : terms) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

bool Z2Polynomial::evaluate(const std::vector<std::uint8_t>& bits) const {
  bool value = false;
  for (const auto& m : terms) {
    bool all = true;
    for (int v : m) all = all && bits[v];
    value ^= all;
  }
  return value;
}

const Z2Polynomial& PathPolynomials::sign_polynomial() const {
  return mode == Mode::kToffoli ? psi : phi;
}

int PathPolynomials::phase_index(const std::vector<std::uint8_t>& bits) const {
  int k = sign_polynomial().evaluate(bits) ? 4 : 0;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (bits[i]) k += chi[i];
  }
  return k & 7;
}

GateCircuit hadamard_bracket(const GateCircuit& c) {
  GateCircuit out(c.n_qubits());
  for (int q = 0; q < c.n_qubits(); ++q) out.add(Gate::h(q));
  for (const auto& g : c.gates()) out.add(g);
  for (int q = 0; q < c.n_qubits(); ++q) out.add(Gate::h(q));
  return out;
}

GateCircuit rewrite_for_degree(const GateCircuit& c, Mode mode) {
  GateCircuit out(c.n_qubits());
  for (const auto& g : c.gates()) {
    if (mode == Mode::kToffoli) {
      if (g.kind != GateKind::kH && g.kind != GateKind::kToffoli) {
        throw std::invalid_argument("toffoli mode accepts only H and TOFFOLI, found " +
                                    std::string(gate_name(g.kind)));
      }
      out.add(g);
      if (g.kind == GateKind::kToffoli) {
        out.add(Gate::h(g.target()));
        out.add(Gate::h(g.target()));
      }
    } else {
      if (g.kind == GateKind::kToffoli) {
        throw std::invalid_argument("t_gate mode accepts only H, T and CNOT, found TOFFOLI");
      }
      if (g.kind == GateKind::kT) {
        out.add(Gate::h(g.qubits[0]));
        out.add(Gate::h(g.qubits[0]));
      }
      out.add(g);
    }
  }
  return out;
}

PathPolynomials compile(const GateCircuit& c, Mode mode) {
  const int n = c.n_qubits();
  const auto& gates = c.gates();
  const std::size_t count = gates.size();
  bool bracketed = count >= 2 * static_cast<std::size_t>(n);
  for (int q = 0; bracketed && q < n; ++q) {
    bracketed = gates[q] == Gate::h(q) && gates[count - n + q] == Gate::h(q);
  }
  if (!bracketed) {
    throw std::invalid_argument("compile: circuit is not bracketed by H on every qubit");
  }

  PathPolynomials p;
  p.mode = mode;
  p.n_qubits = n;
  std::vector<PolySet> wire(n);
  for (int q = 0; q < n; ++q) wire[q] = {Monomial{q}};
  int next_bit = n;
  PolySet sign;
  std::vector<int> chi;

  for (std::size_t idx = 0; idx < count; ++idx) {
    const Gate& g = gates[idx];
    switch (g.kind) {
      case GateKind::kH: {
        const int q = g.qubits[0];
        const bool closing = idx >= count - n;
        const int out = closing ? q : next_bit++;
        if (degree_of(wire[q]) + 1 > (mode == Mode::kToffoli ? 3 : 2)) {
          throw std::logic_error("compile: phase polynomial degree overflow at gate " +
                                 std::to_string(idx) + "; rewrite_for_degree was skipped");
        }
        add_into(sign, multiply(wire[q], {Monomial{out}}));
        wire[q] = {Monomial{out}};
        break;
      }
      case GateKind::kT: {
        if (mode != Mode::kTGate) {
          throw std::invalid_argument("compile: T gate in toffoli mode");
        }
        const PolySet& w = wire[g.qubits[0]];
        if (w.size() != 1 || w.begin()->size() != 1) {
          throw std::logic_error("compile: T input at gate " + std::to_string(idx) +
                                 " is not a single path bit; rewrite_for_degree was skipped");
        }
        const int v = w.begin()->front();
        if (static_cast<int>(chi.size()) <= v) chi.resize(v + 1, 0);
        chi[v] = (chi[v] + 1) & 7;
        break;
      }
      case GateKind::kCnot:
        if (mode != Mode::kTGate) {
          throw std::invalid_argument("compile: CNOT in toffoli mode");
        }
        add_into(wire[g.qubits[1]], wire[g.qubits[0]]);
        break;
      case GateKind::kToffoli:
        if (mode != Mode::kToffoli) {
          throw std::invalid_argument("compile: TOFFOLI in t_gate mode");
        }
        add_into(wire[g.qubits[2]], multiply(wire[g.qubits[0]], wire[g.qubits[1]]));
        break;
    }
  }

  p.n_path_bits = next_bit;
  p.hadamard_count = next_bit - 2 * n;
  if (mode == Mode::kToffoli) {
    p.psi = finish(sign);
  } else {
    p.phi = finish(sign);
    for (const auto& m : p.phi.terms) {
      if (m.size() != 2) throw std::logic_error("compile: phi is not purely quadratic");
    }
    chi.resize(p.n_path_bits, 0);
    p.chi = std::move(chi);
  }
  return p;
}

PathPolynomials compile_circuit(const GateCircuit& c, Mode mode) {
  return compile(hadamard_bracket(rewrite_for_degree(c, mode)), mode);
}

BudgetExceeded::BudgetExceeded(int required, int budget)
    : std::runtime_error("path enumeration needs " + std::to_string(required) +
                         " path bits, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

void CyclotomicInt::add_power(int k) {
  k &= 7;
  if (k < 4) {
    ++coords[k];
  } else {
    --coords[k - 4];
  }
}

Complex CyclotomicInt::to_complex() const {
  const double r = std::numbers::sqrt2 / 2.0;
  const double re = coords[0] + r * (coords[1] - coords[3]);
  const double im = coords[2] + r * (coords[1] + coords[3]);
  return {re, im};
}

double path_normalization(const PathPolynomials& p) {
  const int h = p.hadamard_count;
  double scale = std::ldexp(1.0, -(p.n_qubits + h / 2));
  if (h % 2 != 0) scale /= std::numbers::sqrt2;
  return scale;
}

Complex exact_trace_enumeration(const PathPolynomials& p) {
  check_budget(p);
  const int bits = p.n_path_bits;
  // Gray-code walk: flipping bit i changes the sign by the parity of the
  // monomials through i whose other variables are all set.
  std::vector<std::vector<std::uint32_t>> rest(bits);
  bool sign = false;
  for (const auto& m : p.sign_polynomial().terms) {
    if (m.empty()) {
      sign = !sign;
      continue;
    }
    const std::uint32_t mask = mask_of(m);
    for (int v : m) rest[v].push_back(mask & ~(std::uint32_t{1} << v));
  }
  std::vector<int> chi(p.chi);
  chi.resize(bits, 0);

  CyclotomicInt total;
  std::uint32_t x = 0;
  int chi_value = 0;
  const std::uint64_t paths = std::uint64_t{1} << bits;
  for (std::uint64_t g = 0;; ++g) {
    total.add_power((sign ? 4 : 0) + chi_value);
    if (g + 1 == paths) break;
    const int i = std::countr_zero(g + 1);
    for (std::uint32_t r : rest[i]) sign ^= (x & r) == r;
    const std::uint32_t bit = std::uint32_t{1} << i;
    x ^= bit;
    chi_value = (x & bit) ? chi_value + chi[i] : chi_value - chi[i];
    chi_value &= 7;
  }
  return total.to_complex() * path_normalization(p);
}

PhaseCounts count_paths(const PathPolynomials& p) {
  check_budget(p);
  std::vector<std::uint32_t> masks;
  for (const auto& m : p.sign_polynomial().terms) masks.push_back(mask_of(m));
  PhaseCounts counts{};
  const std::uint64_t paths = std::uint64_t{1} << p.n_path_bits;
  for (std::uint64_t xx = 0; xx < paths; ++xx) {
    const auto x = static_cast<std::uint32_t>(xx);
    int s = 0;
    for (std::uint32_t m : masks) s ^= (x & m) == m;
    int j = 0;
    for (std::size_t i = 0; i < p.chi.size(); ++i) {
      if ((x >> i) & 1) j += p.chi[i];
    }
    ++counts[j & 7][s];
  }
  return counts;
}

Complex trace_by_counting(const PathPolynomials& p) {
  const PhaseCounts counts = count_paths(p);
  CyclotomicInt total;
  for (int j = 0; j < 8; ++j) {
    const auto diff = static_cast<std::int64_t>(counts[j][0]) - static_cast<std::int64_t>(counts[j][1]);
    // w^j = +-w^(j mod 4)
    total.coords[j % 4] += j < 4 ? diff : -diff;
  }
  return total.to_complex() * path_normalization(p);
}

SampledTrace sampled_trace(const PathPolynomials& p, int samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("sampled_trace: samples must be >= 2");
  Rng rng(seed);
  const double magnitude = std::pow(2.0, p.hadamard_count / 2.0);
  std::vector<Complex> phases(8);
  for (int k = 0; k < 8; ++k) phases[k] = std::polar(magnitude, std::numbers::pi / 4.0 * k);

  std::vector<std::uint8_t> bits(p.n_path_bits);
  // Tallies per phase class keep the mean and variance exact in count form.
  std::array<std::int64_t, 8> tally{};
  for (int s = 0; s < samples; ++s) {
    std::uint64_t word = 0;
    for (int i = 0; i < p.n_path_bits; ++i) {
      if (i % 64 == 0) word = rng();
      bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1);
    }
    ++tally[p.phase_index(bits)];
  }
  Complex mean = 0.0;
  for (int k = 0; k < 8; ++k) mean += phases[k] * static_cast<double>(tally[k]);
  mean /= static_cast<double>(samples);
  double sq = 0.0;
  for (int k = 0; k < 8; ++k) sq += std::norm(phases[k] - mean) * static_cast<double>(tally[k]);
  SampledTrace out;
  out.estimate = mean;
  out.samples = samples;
  out.standard_error = std::sqrt(sq / (samples - 1) / samples);
  return out;
}

Complex dense_trace(const GateCircuit& c) {
  return circuit_unitary(c).trace();
}

}  // namespace dqc1::pathsum
