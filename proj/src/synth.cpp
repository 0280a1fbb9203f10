#include "sqc/synth.hpp"

#include <cmath>
#include <numbers>

namespace sqc {

using std::numbers::pi;

const char* to_string(Target t) {
  switch (t) {
    case Target::Digital: return "digital";
    case Target::IBM: return "ibm";
    case Target::Indiana: return "indiana";
  }
  return "?";
}

Target target_from_string(const std::string& s) {
  if (s == "digital") return Target::Digital;
  if (s == "ibm") return Target::IBM;
  if (s == "indiana") return Target::Indiana;
  throw Error(ErrorCode::Usage, "unknown target '" + s + "' (expected digital, ibm or indiana)");
}

Circuit synth_digital_step(double theta, const PauliString& p) {
  Circuit c;
  c.width = p.size();
  auto sup = p.support();
  if (sup.empty()) {
    c.global_phase = -theta;
    return c;
  }
  if (sup.size() == 1) {
    std::size_t q = sup[0];
    switch (p[q]) {
      case Pauli::X: c.gates.push_back(Gate::rx(2 * theta, q)); break;
      case Pauli::Y: c.gates.push_back(Gate::ry(2 * theta, q)); break;
      default: c.gates.push_back(Gate::rz(2 * theta, q)); break;
    }
    return c;
  }
  for (auto q : sup) {
    if (p[q] == Pauli::X) c.gates.push_back(Gate::h(q));
    if (p[q] == Pauli::Y) {
      c.gates.push_back(Gate::rz(-pi / 2, q));
      c.gates.push_back(Gate::h(q));
    }
  }
  for (std::size_t j = sup.size() - 1; j >= 1; --j) c.gates.push_back(Gate::cx(sup[j], sup[j - 1]));
  c.gates.push_back(Gate::rz(2 * theta, sup[0]));
  for (std::size_t j = 1; j < sup.size(); ++j) c.gates.push_back(Gate::cx(sup[j], sup[j - 1]));
  for (auto q : sup) {
    if (p[q] == Pauli::X) c.gates.push_back(Gate::h(q));
    if (p[q] == Pauli::Y) {
      c.gates.push_back(Gate::h(q));
      c.gates.push_back(Gate::rz(pi / 2, q));
    }
  }
  return c;
}

double fold_duration(double theta) {
  double d = std::fmod(theta, 2 * pi);
  if (d < 0) d += 2 * pi;
  if (d >= 2 * pi) d -= 2 * pi;
  return d;
}

namespace {

PauliString single(std::size_t width, std::size_t q, Pauli op) {
  PauliString s(width);
  s[q] = op;
  return s;
}

void pulse(AnalogSchedule& s, double duration, PauliString str) {
  s.pulses.push_back({duration, std::move(str)});
}

// exp(pi/4 X) exp(pi/4 Z) exp(pi/4 X), a Hadamard up to phase
void hadamard_pulses(AnalogSchedule& s, std::size_t q) {
  pulse(s, pi / 4, single(s.width, q, Pauli::X));
  pulse(s, pi / 4, single(s.width, q, Pauli::Z));
  pulse(s, pi / 4, single(s.width, q, Pauli::X));
}

}  // namespace

AnalogSchedule synth_analog_step(double theta, const PauliString& p, Machine machine) {
  AnalogSchedule s;
  s.machine = machine;
  s.width = p.size();
  auto sup = p.support();
  if (machine == Machine::IBM && sup.size() > 2)
    throw Error(ErrorCode::LocalityExceeded,
                "IBM pulses need 2-local strings; " + p.str() + " is " + std::to_string(sup.size()) +
                    "-local (enable --gadget)");
  double d = fold_duration(theta);
  if (sup.empty() || d == 0.0) return s;

  // native core pulse: IBM uses Z on every site, Indiana uses X
  Pauli core = machine == Machine::IBM ? Pauli::Z : Pauli::X;
  Pauli other = machine == Machine::IBM ? Pauli::X : Pauli::Z;
  PauliString core_string(p.size());
  for (auto q : sup) core_string[q] = core;

  if (sup.size() == 1 && p[sup[0]] != Pauli::Y) {
    pulse(s, d, p);
    return s;
  }
  for (auto q : sup)
    if (p[q] == Pauli::Y) pulse(s, 7 * pi / 4, single(s.width, q, Pauli::Z));
  if (sup.size() == 1) {
    pulse(s, d, single(s.width, sup[0], Pauli::X));
  } else {
    // Y is reached from X by the Z(pi/4) conjugation, so Y sites need the Hadamard when the core is Z
    auto needs_h = [&](Pauli op) { return op == other || (op == Pauli::Y && core == Pauli::Z); };
    for (auto q : sup)
      if (needs_h(p[q])) hadamard_pulses(s, q);
    pulse(s, d, core_string);
    for (auto q : sup)
      if (needs_h(p[q])) hadamard_pulses(s, q);
  }
  for (auto q : sup)
    if (p[q] == Pauli::Y) pulse(s, pi / 4, single(s.width, q, Pauli::Z));
  return s;
}

Artifact synth_plan(const TrotterPlan& plan, Target target) {
  if (target == Target::Digital) {
    Circuit c;
    c.width = plan.width;
    for (const auto& st : plan.steps) {
      auto part = synth_digital_step(st.theta, st.string);
      c.gates.insert(c.gates.end(), part.gates.begin(), part.gates.end());
      c.global_phase += part.global_phase;
    }
    return c;
  }
  AnalogSchedule s;
  s.machine = target == Target::IBM ? Machine::IBM : Machine::Indiana;
  s.width = plan.width;
  for (const auto& st : plan.steps) {
    auto part = synth_analog_step(st.theta, st.string, s.machine);
    s.pulses.insert(s.pulses.end(), part.pulses.begin(), part.pulses.end());
  }
  return s;
}

std::size_t artifact_size(const Artifact& a) {
  if (const auto* c = std::get_if<Circuit>(&a)) return c->gates.size();
  return std::get<AnalogSchedule>(a).pulses.size();
}

}  // namespace sqc
