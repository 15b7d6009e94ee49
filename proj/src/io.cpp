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

#include "dqc1/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dqc1 {

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const char* end = token.data() + token.size();
  auto res = std::from_chars(token.data(), end, out);
  return res.ec == std::errc() && res.ptr == end;
}

ComplexMatrix read_matrix(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(line_no, "missing dimension line");
  Eigen::Index dim = 0;
  {
    std::istringstream ls(line);
    std::string token, extra;
    ls >> token;
    long long value = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size() ||
        value < 1 || (ls >> extra)) {
      throw ParseError(line_no, "expected a positive integer dimension");
    }
    dim = static_cast<Eigen::Index>(value);
  }

  ComplexMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    if (!next_line()) {
      throw ParseError(line_no + 1, "expected " + std::to_string(dim) +
                                        " matrix rows, got " + std::to_string(r));
    }
    std::istringstream ls(line);
    std::string token;
    Eigen::Index c = 0;
    while (ls >> token) {
      if (c >= dim) throw ParseError(line_no, "too many entries in row");
      const auto comma = token.find(',');
      double re = 0.0, im = 0.0;
      if (comma == std::string::npos ||
          !parse_double(std::string_view(token).substr(0, comma), re) ||
          !parse_double(std::string_view(token).substr(comma + 1), im)) {
        throw ParseError(line_no, "bad entry '" + token + "', expected re,im");
      }
      m(r, c++) = Complex(re, im);
    }
    if (c != dim) {
      throw ParseError(line_no, "row has " + std::to_string(c) +
                                    " entries, expected " + std::to_string(dim));
    }
  }
  if (next_line()) throw ParseError(line_no, "trailing content after matrix");
  return m;
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  out << m.rows() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
    }
    out << '\n';
  }
}

ComplexMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_matrix(in);
}

void save_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_matrix(out, m);
}

}  // namespace dqc1
