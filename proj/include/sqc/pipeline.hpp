#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqc/gadget.hpp"
#include "sqc/parser.hpp"
#include "sqc/rewrite.hpp"
#include "sqc/synth.hpp"
#include "sqc/transform.hpp"
#include "sqc/trotter.hpp"

namespace sqc {

/// Command-line overrides; unset fields fall back to the program's simulate block, then to defaults.
struct CompileOptions {
  std::optional<Target> target;
  std::optional<TrotterAlgorithm> algorithm;
  std::optional<int> m;
  std::optional<int> N;
  std::optional<double> epsilon;
  std::optional<double> time;
  std::optional<std::uint64_t> seed;
  std::optional<bool> gadget;
  std::optional<double> gadget_lambda;  // 0 or unset selects lambda_max / 2
  std::optional<bool> drop_trivial;
  std::optional<std::string> order;
};

struct Settings {
  Target target = Target::Digital;
  TrotterAlgorithm algorithm = TrotterAlgorithm::Standard;
  int m = 1;
  int N = 100;
  std::optional<double> epsilon;
  double time = 1.0;
  std::uint64_t seed = 0;
  bool gadget = false;
  std::optional<double> gadget_lambda;
  bool drop_trivial = false;
  std::vector<PauliString> order;
};

Settings resolve(const ProgramFile& program, const CompileOptions& flags, std::size_t width);

/// Comma-separated Pauli strings, e.g. "ZZ,YY,XX".
std::vector<PauliString> parse_order(const std::string& s, std::size_t width);

enum class Stage { Check, Canonical, Qubit, Pauli, Plan, Artifact };

struct Compilation {
  ProgramFile program;
  Settings settings;
  Kind kind = Kind::Plain;
  CanonicalExpr canonical;
  std::optional<Transformed> qubit;
  PauliHamiltonian full;     // Pauli canonical form before dropping
  PauliHamiltonian kept;
  PauliHamiltonian dropped;
  double drop_penalty = 0.0;
  std::optional<GadgetOutput> gadget;
  PauliHamiltonian evolved;  // Hamiltonian handed to the Trotter stage
  std::optional<TrotterPlan> plan;
  std::optional<Artifact> artifact;
  std::vector<std::pair<std::string, double>> timings;  // milliseconds per stage
};

/// Runs the pipeline up to and including `stop`; each stage throws its own Error.
Compilation compile(const ProgramFile& program, const CompileOptions& flags = {}, Stage stop = Stage::Artifact);

}  // namespace sqc
