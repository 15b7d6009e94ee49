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

#include "dqc1/circuit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dqc1/io.hpp"

namespace dqc1 {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "H";
    case GateKind::kT: return "T";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kToffoli: return "TOFFOLI";
  }
  return "?";
}

int Gate::arity() const {
  switch (kind) {
    case GateKind::kH:
    case GateKind::kT: return 1;
    case GateKind::kCnot: return 2;
    case GateKind::kToffoli: return 3;
  }
  return 0;
}

GateCircuit::GateCircuit(int n_qubits) : n_(n_qubits) {
  if (n_ < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

void GateCircuit::add(const Gate& gate) {
  const int arity = gate.arity();
  for (int i = 0; i < arity; ++i) {
    if (gate.qubits[i] < 0 || gate.qubits[i] >= n_) {
      throw std::invalid_argument(std::string(gate_name(gate.kind)) +
                                  ": qubit " + std::to_string(gate.qubits[i]) +
                                  " out of range");
    }
    for (int j = 0; j < i; ++j) {
      if (gate.qubits[i] == gate.qubits[j]) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) +
                                    ": repeated operand");
      }
    }
  }
  Gate g = gate;
  for (int i = arity; i < 3; ++i) g.qubits[i] = -1;
  gates_.push_back(g);
}

std::size_t GateCircuit::count(GateKind kind) const {
  std::size_t k = 0;
  for (const auto& g : gates_) k += g.kind == kind;
  return k;
}

namespace {

bool parse_int(const std::string& token, int& out) {
  auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  return res.ec == std::errc() && res.ptr == token.data() + token.size();
}

}  // namespace

GateCircuit read_circuit(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<GateCircuit> circuit;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;

    std::vector<int> args;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      int v = 0;
      if (!parse_int(tokens[i], v)) {
        throw ParseError(line_no, "expected integer, got '" + tokens[i] + "'");
      }
      args.push_back(v);
    }
    const std::string& op = tokens[0];
    if (!circuit) {
      if (op != "qubits" || args.size() != 1 || args[0] < 1) {
        throw ParseError(line_no, "expected header 'qubits <n>'");
      }
      circuit.emplace(args[0]);
      continue;
    }

    auto expect = [&](std::size_t count) {
      if (args.size() != count) {
        throw ParseError(line_no, op + " takes " + std::to_string(count) +
                                      " operand(s)");
      }
    };
    try {
      if (op == "H") {
        expect(1);
        circuit->add(Gate::h(args[0]));
      } else if (op == "T") {
        expect(1);
        circuit->add(Gate::t(args[0]));
      } else if (op == "CNOT") {
        expect(2);
        circuit->add(Gate::cnot(args[0], args[1]));
      } else if (op == "TOFFOLI") {
        expect(3);
        circuit->add(Gate::toffoli(args[0], args[1], args[2]));
      } else {
        throw ParseError(line_no, "unknown gate '" + op + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError(line_no, "missing 'qubits <n>' header");
  return *circuit;
}

void write_circuit(std::ostream& out, const GateCircuit& c) {
  out << "qubits " << c.n_qubits() << '\n';
  for (const auto& g : c.gates()) {
    out << gate_name(g.kind);
    for (int i = 0; i < g.arity(); ++i) out << ' ' << g.qubits[i];
    out << '\n';
  }
}

GateCircuit load_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_circuit(in);
}

ComplexMatrix circuit_unitary(const GateCircuit& c) {
  const int n = c.n_qubits();
  if (n > kMaxDenseCircuitQubits) {
    throw std::invalid_argument("circuit_unitary: more than " +
                                std::to_string(kMaxDenseCircuitQubits) +
                                " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  const double r = std::numbers::sqrt2 / 2.0;
  Eigen::Matrix2cd hadamard;
  hadamard << r, r, r, -r;
  Eigen::Matrix2cd t_gate;
  t_gate << 1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4.0);

  auto bit = [n](int q) { return Eigen::Index{1} << (n - 1 - q); };

  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kH:
        apply_one_qubit_left(u, hadamard, g.qubits[0], n);
        break;
      case GateKind::kT:
        apply_one_qubit_left(u, t_gate, g.qubits[0], n);
        break;
      case GateKind::kCnot:
      case GateKind::kToffoli: {
        Eigen::Index controls = 0;
        for (int i = 0; i + 1 < g.arity(); ++i) controls |= bit(g.qubits[i]);
        const Eigen::Index target = bit(g.target());
        for (Eigen::Index row = 0; row < dim; ++row) {
          if ((row & controls) == controls && !(row & target)) {
            u.row(row).swap(u.row(row | target));
          }
        }
        break;
      }
    }
  }
  return u;
}

}  // namespace dqc1
