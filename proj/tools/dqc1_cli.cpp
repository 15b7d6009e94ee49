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

// Command-line driver.  Every subcommand writes CSV to stdout or --output.
//
//   dqc1 negativity    (--family | --random | --file U) --n N [--alpha A] [--k K]
//   dqc1 sweep         (--range A..B | --nplus1 M) [--split half|one|K] [--all-splits]
//   dqc1 bounds        --kind s12|s123|asymptote --two-n A[..B] [--alpha A]
//   dqc1 trace         (--family | --random | --file U) --n N --epsilon E --p-error P
//   dqc1 trace         --pathsum CIRCUIT [--mode auto|toffoli|t] (--exact | --samples S)
//   dqc1 family-verify [--range A..B] [--alpha A]
//
// Any subcommand takes --config FILE with key=value lines naming long
// options; options given on the command line win.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dqc1/bounds.hpp"
#include "dqc1/circuit.hpp"
#include "dqc1/ensemble.hpp"
#include "dqc1/family.hpp"
#include "dqc1/io.hpp"
#include "dqc1/negativity.hpp"
#include "dqc1/pathsum.hpp"
#include "dqc1/state.hpp"

namespace {

using dqc1::format_double;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  long lo = 0;
  long hi = 0;
};

long parse_long(const std::string& s, const std::string& what) {
  long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw UsageError("bad " + what + " '" + s + "'");
  }
  return v;
}

// "a..b" or a single integer.
Range parse_range(const std::string& s, const std::string& what) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(s, what);
    return {v, v};
  }
  Range r{parse_long(s.substr(0, dots), what), parse_long(s.substr(dots + 2), what)};
  if (r.lo > r.hi) throw UsageError("empty " + what + " range '" + s + "'");
  return r;
}

int thread_count() {
  if (const char* env = std::getenv("DQC1_THREADS")) {
    const long v = parse_long(env, "DQC1_THREADS");
    if (v < 1) throw UsageError("DQC1_THREADS must be >= 1");
    return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Applies key=value lines to options of `app` that were not given on the
// command line.
void apply_config(CLI::App& app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw dqc1::ParseError(line_no, path + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    CLI::Option* opt = nullptr;
    try {
      opt = app.get_option("--" + key);
    } catch (const CLI::OptionNotFound&) {
      throw dqc1::ParseError(line_no, path + ": unknown key '" + key + "'");
    }
    if (opt->count() > 0 || key == "config") continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// Shared unitary selection for negativity and trace.
struct UnitarySource {
  bool family = false;
  bool random = false;
  std::string file;
  int n = 0;
  std::uint64_t seed = 0;
  int j = 40;

  void add_to(CLI::App* sub) {
    sub->add_flag("--family", family, "family unitary U_n");
    sub->add_flag("--random", random, "pseudo-random unitary");
    sub->add_option("--file", file, "unitary matrix file");
    sub->add_option("--n", n, "number of unpolarized qubits");
    sub->add_option("--seed", seed, "seed for --random and sampling");
    sub->add_option("--j", j, "random layers for --random");
  }

  dqc1::ComplexMatrix load() const {
    const int chosen = int(family) + int(random) + int(!file.empty());
    if (chosen != 1) throw UsageError("choose exactly one of --family, --random, --file");
    if (!file.empty()) {
      dqc1::ComplexMatrix u;
      try {
        u = dqc1::load_matrix_file(file);
      } catch (const dqc1::ParseError& e) {
        throw std::runtime_error(file + ": " + e.what());
      }
      const int file_n = dqc1::qubit_count(u.rows());
      if (n != 0 && n != file_n) {
        throw UsageError("--n " + std::to_string(n) + " does not match " + file + " (" +
                         std::to_string(file_n) + " qubits)");
      }
      return u;
    }
    if (n < 1) throw UsageError("--n is required");
    if (family) return dqc1::build_family(n, dqc1::canonical_u2());
    return dqc1::pseudo_random_unitary({n, j, seed});
  }
};

struct NegativityCmd {
  UnitarySource source;
  double alpha = 1.0;
  std::vector<int> ks;
  bool all_splits = false;
  std::string method = "eigen";

  void add_to(CLI::App* sub) {
    source.add_to(sub);
    sub->add_option("--alpha", alpha, "polarization");
    sub->add_option("--k", ks, "size of the trailing part (repeatable)");
    sub->add_flag("--all-splits", all_splits, "every k = 1..n");
    sub->add_option("--method", method, "eigen | singular | both");
  }

  void run(std::ostream& out) const {
    const dqc1::ComplexMatrix u = source.load();
    const dqc1::Dqc1State state = dqc1::build_state(u, alpha);
    const int n = state.n();
    std::vector<int> sizes = ks;
    if (all_splits) {
      sizes.clear();
      for (int k = 1; k <= n; ++k) sizes.push_back(k);
    }
    if (sizes.empty()) sizes.push_back(dqc1::half_split_k(n));
    if (method != "eigen" && method != "singular" && method != "both") {
      throw UsageError("--method must be eigen, singular or both");
    }
    out << "n_plus_1,k,alpha,m_value,n_value,method\n";
    for (int k : sizes) {
      if (k < 1 || k > n) throw UsageError("--k " + std::to_string(k) + " out of range");
      const auto part = dqc1::Bipartition::trailing(n + 1, k);
      std::vector<dqc1::NegativityResult> rows;
      if (method != "singular") rows.push_back(dqc1::negativity_eigen(state.rho(), part));
      if (method != "eigen") rows.push_back(dqc1::negativity_singular(state, part));
      for (const auto& r : rows) {
        out << n + 1 << ',' << k << ',' << format_double(alpha) << ','
            << format_double(r.m_value) << ',' << format_double(r.n_value) << ','
            << dqc1::to_string(r.method) << '\n';
      }
    }
  }
};

struct SweepCmd {
  std::string range;
  std::vector<int> nplus1;
  std::string split = "half";
  bool all_splits = false;
  int samples = 0;
  std::uint64_t seed = 0;
  int j = 40;

  void add_to(CLI::App* sub) {
    sub->add_option("--range", range, "register sizes n+1 as A..B");
    sub->add_option("--nplus1", nplus1, "register size n+1 (repeatable)");
    sub->add_option("--split", split, "half | one | K");
    sub->add_flag("--all-splits", all_splits, "every k = 1..n");
    sub->add_option("--samples", samples, "unitaries per size (default 100, 30 above 8)");
    sub->add_option("--seed", seed, "base seed");
    sub->add_option("--j", j, "random layers");
  }

  void run(std::ostream& out) const {
    dqc1::SweepRequest req;
    if (!range.empty()) {
      const Range r = parse_range(range, "--range");
      for (long v = r.lo; v <= r.hi; ++v) req.n_plus_1_values.push_back(static_cast<int>(v));
    }
    req.n_plus_1_values.insert(req.n_plus_1_values.end(), nplus1.begin(), nplus1.end());
    if (req.n_plus_1_values.empty()) throw UsageError("sweep needs --range or --nplus1");
    using Rule = dqc1::SplitSelection::Rule;
    if (all_splits) {
      req.splits.rule = Rule::kAll;
    } else if (split == "half") {
      req.splits.rule = Rule::kHalf;
    } else if (split == "one") {
      req.splits.rule = Rule::kOne;
    } else {
      req.splits.rule = Rule::kExplicit;
      req.splits.ks = {static_cast<int>(parse_long(split, "--split"))};
    }
    if (samples < 0 || samples == 1) throw UsageError("--samples must be >= 2");
    req.samples = samples;
    req.seed = seed;
    req.j = j;
    req.threads = thread_count();
    dqc1::write_sweep_csv(out, dqc1::negativity_sweep(req));
  }
};

struct BoundsCmd {
  std::string kind;
  std::string two_n;
  double alpha = 1.0;

  void add_to(CLI::App* sub) {
    sub->add_option("--kind", kind, "s12 | s123 | asymptote");
    sub->add_option("--two-n", two_n, "2N as a value or A..B (even values used)");
    sub->add_option("--alpha", alpha, "polarization (s12 only)");
  }

  void run(std::ostream& out) const {
    if (two_n.empty()) throw UsageError("bounds needs --two-n");
    const Range r = parse_range(two_n, "--two-n");
    if (kind != "s12" && kind != "s123" && kind != "asymptote") {
      throw UsageError("--kind must be s12, s123 or asymptote");
    }
    if (kind != "s12" && alpha != 1.0) {
      throw UsageError("--alpha applies only to --kind s12");
    }
    dqc1::bounds::write_bounds_csv_header(out);
    bool any = false;
    for (long t = r.lo; t <= r.hi; ++t) {
      if (t % 2 != 0) continue;
      if (t < 4) throw UsageError("--two-n values must be >= 4");
      any = true;
      const long N = t / 2;
      if (kind == "s12") {
        const auto b = dqc1::bounds::bound_s12(N, alpha);
        dqc1::bounds::write_bounds_csv_row(out, b.continuous);
        dqc1::bounds::write_bounds_csv_row(out, b.integer);
      } else if (kind == "s123") {
        dqc1::bounds::write_bounds_csv_row(out, dqc1::bounds::bound_s123(N));
      } else {
        dqc1::bounds::BoundResult res;
        res.N = N;
        res.alpha = 1.0;
        res.kind = dqc1::bounds::BoundKind::kS123Asymptotic;
        res.bound = dqc1::bounds::bound_s123_asymptotic(N);
        dqc1::bounds::write_bounds_csv_row(out, res);
      }
    }
    if (!any) throw UsageError("--two-n contains no even value");
  }
};

struct TraceCmd {
  UnitarySource source;
  double alpha = 1.0;
  double epsilon = 0.05;
  double p_error = 0.01;
  std::string pathsum;
  std::string mode = "auto";
  bool exact = false;
  int samples = 0;

  void add_to(CLI::App* sub) {
    source.add_to(sub);
    sub->add_option("--alpha", alpha, "polarization");
    sub->add_option("--epsilon", epsilon, "target accuracy");
    sub->add_option("--p-error", p_error, "failure probability");
    sub->add_option("--pathsum", pathsum, "circuit file evaluated by path sum");
    sub->add_option("--mode", mode, "auto | toffoli | t");
    sub->add_flag("--exact", exact, "enumerate every path");
    sub->add_option("--samples", samples, "sampled paths");
  }

  void run(std::ostream& out) const {
    if (!pathsum.empty()) {
      run_pathsum(out);
      return;
    }
    const dqc1::ComplexMatrix u = source.load();
    const dqc1::TraceEstimate est = dqc1::estimate_trace(u, alpha, epsilon, p_error, source.seed);
    const dqc1::Complex exact_value = dqc1::normalized_trace(u);
    out << "n,alpha,epsilon,p_error,runs_used,estimate_re,estimate_im,exact_re,exact_im,"
           "abs_error,seed\n";
    out << dqc1::qubit_count(u.rows()) << ',' << format_double(alpha) << ','
        << format_double(epsilon) << ',' << format_double(p_error) << ',' << est.runs_used
        << ',' << format_double(est.estimate.real()) << ','
        << format_double(est.estimate.imag()) << ',' << format_double(exact_value.real())
        << ',' << format_double(exact_value.imag()) << ','
        << format_double(std::abs(est.estimate - exact_value)) << ',' << est.seed << '\n';
  }

  void run_pathsum(std::ostream& out) const {
    dqc1::GateCircuit c(1);
    try {
      c = dqc1::load_circuit_file(pathsum);
    } catch (const dqc1::ParseError& e) {
      throw std::runtime_error(pathsum + ": " + e.what());
    }
    using dqc1::pathsum::Mode;
    Mode m;
    if (mode == "toffoli") {
      m = Mode::kToffoli;
    } else if (mode == "t") {
      m = Mode::kTGate;
    } else if (mode == "auto") {
      m = c.count(dqc1::GateKind::kT) + c.count(dqc1::GateKind::kCnot) > 0 ? Mode::kTGate
                                                                           : Mode::kToffoli;
    } else {
      throw UsageError("--mode must be auto, toffoli or t");
    }
    if (exact == (samples > 0)) throw UsageError("choose exactly one of --exact, --samples");
    const auto poly = dqc1::pathsum::compile_circuit(c, m);
    const double scale = std::ldexp(1.0, -c.n_qubits());
    out << "n,mode,path_bits,h,method,normalized_re,normalized_im,standard_error,samples,"
           "seed\n";
    out << c.n_qubits() << ',' << (m == Mode::kToffoli ? "toffoli" : "t") << ','
        << poly.n_path_bits << ',' << poly.hadamard_count << ',';
    if (exact) {
      const dqc1::Complex tr = dqc1::pathsum::exact_trace_enumeration(poly) * scale;
      out << "exact," << format_double(tr.real()) << ',' << format_double(tr.imag())
          << ",0,,\n";
    } else {
      const auto s = dqc1::pathsum::sampled_trace(poly, samples, source.seed);
      out << "sampled," << format_double(s.estimate.real()) << ','
          << format_double(s.estimate.imag()) << ',' << format_double(s.standard_error)
          << ',' << s.samples << ',' << source.seed << '\n';
    }
  }
};

struct FamilyVerifyCmd {
  std::string range = "2..8";
  double alpha = 1.0;

  void add_to(CLI::App* sub) {
    sub->add_option("--range", range, "unpolarized qubit counts n as A..B");
    sub->add_option("--alpha", alpha, "polarization");
  }

  // Returns false when a numeric value departs from the closed form.
  bool run(std::ostream& out) const {
    const Range r = parse_range(range, "--range");
    bool ok = true;
    out << "n_plus_1,k,alpha,m_value,expected,abs_diff\n";
    for (long n = r.lo; n <= r.hi; ++n) {
      const dqc1::Dqc1State state =
          dqc1::build_state(dqc1::build_family(static_cast<int>(n), dqc1::canonical_u2()), alpha);
      for (int k = 1; k <= n; ++k) {
        const auto part = dqc1::Bipartition::trailing(static_cast<int>(n) + 1, k);
        const double m = dqc1::negativity_eigen(state.rho(), part).m_value;
        const double expected = dqc1::family_negativity(static_cast<int>(n), alpha, part);
        const double diff = std::abs(m - expected);
        ok = ok && diff <= 1e-9;
        out << n + 1 << ',' << k << ',' << format_double(alpha) << ',' << format_double(m)
            << ',' << format_double(expected) << ',' << format_double(diff) << '\n';
      }
    }
    return ok;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-clean-qubit entanglement and trace tools"};
  app.require_subcommand(1);
  std::string output;
  std::string config;

  NegativityCmd negativity;
  SweepCmd sweep;
  BoundsCmd bounds;
  TraceCmd trace;
  FamilyVerifyCmd family_verify;

  std::vector<CLI::App*> subs = {
      app.add_subcommand("negativity", "negativity of one state"),
      app.add_subcommand("sweep", "negativity statistics over random unitaries"),
      app.add_subcommand("bounds", "trace-power upper bounds"),
      app.add_subcommand("trace", "normalized trace estimation"),
      app.add_subcommand("family-verify", "check the family against its closed form"),
  };
  negativity.add_to(subs[0]);
  sweep.add_to(subs[1]);
  bounds.add_to(subs[2]);
  trace.add_to(subs[3]);
  family_verify.add_to(subs[4]);
  for (auto* sub : subs) {
    sub->add_option("--output", output, "write CSV here instead of stdout");
    sub->add_option("--config", config, "key=value defaults file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    CLI::App* sub = nullptr;
    for (auto* s : subs) {
      if (s->parsed()) sub = s;
    }
    if (!config.empty()) apply_config(*sub, config);

    // Build the CSV in memory so a failure leaves no partial output.
    std::ostringstream csv;
    bool ok = true;
    const std::string name = sub->get_name();
    if (name == "negativity") {
      negativity.run(csv);
    } else if (name == "sweep") {
      sweep.run(csv);
    } else if (name == "bounds") {
      bounds.run(csv);
    } else if (name == "trace") {
      trace.run(csv);
    } else {
      ok = family_verify.run(csv);
    }
    Output out(output);
    out.stream() << csv.str();
    out.stream().flush();
    if (!ok) {
      std::cerr << "error: family negativity differs from closed form\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
