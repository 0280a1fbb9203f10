#include "sqc/pipeline.hpp"

#include <chrono>
#include <sstream>

#include "sqc/pauli.hpp"
#include "sqc/typecheck.hpp"

namespace sqc {

std::vector<PauliString> parse_order(const std::string& s, std::size_t width) {
  std::vector<PauliString> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::Usage, "empty entry in --order");
    item = item.substr(b, e - b + 1);
    PauliString p;
    try {
      p = PauliString::parse(item);
    } catch (const Error&) {
      throw Error(ErrorCode::Usage, "bad Pauli string '" + item + "' in --order");
    }
    if (p.size() != width)
      throw Error(ErrorCode::Usage, "order entry '" + item + "' has width " + std::to_string(p.size()) +
                                        ", expected " + std::to_string(width));
    out.push_back(p);
  }
  return out;
}

Settings resolve(const ProgramFile& program, const CompileOptions& flags, std::size_t width) {
  Settings s;
  SimulationBlock b = program.simulate.value_or(SimulationBlock{});
  if (auto t = flags.target) s.target = *t;
  else if (b.target) s.target = target_from_string(*b.target);
  if (auto a = flags.algorithm) s.algorithm = *a;
  else if (b.algorithm) {
    if (*b.algorithm == "standard") s.algorithm = TrotterAlgorithm::Standard;
    else if (*b.algorithm == "qdrift") s.algorithm = TrotterAlgorithm::QDrift;
    else throw Error(ErrorCode::Usage, "unknown algorithm '" + *b.algorithm + "'");
  }
  s.m = flags.m.value_or(b.steps.value_or(1));
  s.N = flags.N.value_or(b.samples.value_or(100));
  s.epsilon = flags.epsilon ? flags.epsilon : b.epsilon;
  s.time = flags.time.value_or(b.time.value_or(1.0));
  s.seed = flags.seed.value_or(b.seed.value_or(0));
  s.drop_trivial = flags.drop_trivial.value_or(b.drop_trivial.value_or(false));
  if (flags.gadget) {
    s.gadget = *flags.gadget;
    if (flags.gadget_lambda && *flags.gadget_lambda > 0) s.gadget_lambda = flags.gadget_lambda;
  } else if (b.gadget_lambda) {
    s.gadget = true;
    if (*b.gadget_lambda > 0) s.gadget_lambda = b.gadget_lambda;
  }
  auto order = flags.order ? flags.order : b.order;
  if (order && !order->empty()) s.order = parse_order(*order, width);
  if (s.m < 1) throw Error(ErrorCode::Usage, "--m must be positive");
  if (s.N < 1) throw Error(ErrorCode::Usage, "--N must be positive");
  if (s.epsilon && !(*s.epsilon > 0)) throw Error(ErrorCode::Usage, "--epsilon must be positive");
  return s;
}

namespace {

class Timer {
 public:
  explicit Timer(Compilation& c) : c_(c), t0_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    auto t = std::chrono::steady_clock::now();
    c_.timings.emplace_back(stage, std::chrono::duration<double, std::milli>(t - t0_).count());
    t0_ = t;
  }

 private:
  Compilation& c_;
  std::chrono::steady_clock::time_point t0_;
};

template <class F>
void stage(const char* name, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(name) + ": " + e.what(), e.line(), e.column());
  }
}

}  // namespace

Compilation compile(const ProgramFile& program, const CompileOptions& flags, Stage stop) {
  Compilation c;
  c.program = program;
  if (!program.hamiltonian) throw Error(ErrorCode::Parse, "program declares no Hamiltonian");
  Timer timer(c);

  stage("typecheck", [&] { admit_simulation(program.hamiltonian, program.shape); });
  c.kind = Kind::Hermitian;
  timer.lap("typecheck");
  if (stop == Stage::Check) return c;

  stage("canonicalize", [&] { c.canonical = dag_canonicalize(program.hamiltonian, program.shape); });
  timer.lap("canonicalize");
  if (stop == Stage::Canonical) return c;

  stage("transform", [&] {
    c.qubit = transform_expr(c.canonical, program.shape);
    c.settings = resolve(program, flags, c.qubit->layout.width);
  });
  std::size_t width = c.qubit->layout.width;
  timer.lap("transform");
  if (stop == Stage::Qubit) return c;

  stage("pauli", [&] {
    c.full = canonicalize(c.qubit->expr, width);
    if (c.settings.drop_trivial) {
      auto split = drop_trivial(c.full);
      c.kept = split.kept;
      c.dropped = split.dropped;
    } else {
      c.kept = c.full;
      c.dropped = PauliHamiltonian(width);
    }
    c.drop_penalty = drop_penalty(c.dropped, c.settings.time);
    c.evolved = c.kept;
  });
  timer.lap("pauli");
  if (c.settings.gadget) {
    stage("gadget", [&] {
      c.gadget = gadgetize(c.kept, c.settings.gadget_lambda);
      c.evolved = c.gadget->hamiltonian;
    });
    timer.lap("gadget");
  }
  if (stop == Stage::Pauli) return c;

  const auto& s = c.settings;
  stage("trotter", [&] {
    if (c.evolved.empty()) throw Error(ErrorCode::Usage, "nothing left to simulate after dropping trivial terms");
    if (s.algorithm == TrotterAlgorithm::Standard) {
      std::vector<PauliString> order = s.order;
      if (c.gadget) {
        for (auto& p : order) {
          PauliString w(c.evolved.width());
          for (std::size_t q = 0; q < p.size(); ++q) w[q] = p[q];
          p = w;
        }
      }
      int m = s.epsilon ? choose_m(c.evolved, s.time, *s.epsilon, c.drop_penalty, order) : s.m;
      c.plan = plan_standard(c.evolved, s.time, m, order);
    } else {
      c.plan = plan_qdrift(c.evolved, s.time, s.N, s.seed);
    }
    c.plan->drop_penalty = c.drop_penalty;
  });
  timer.lap("trotter");
  if (stop == Stage::Plan) return c;

  stage("synth", [&] { c.artifact = synth_plan(*c.plan, s.target); });
  timer.lap("synth");
  return c;
}

}  // namespace sqc
