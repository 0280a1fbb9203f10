#include "sqc/emit.hpp"

#include <cstdio>
#include <sstream>

#include "sqc/parser.hpp"

namespace sqc {

using nlohmann::json;

namespace {

std::string angle(double x) { return format_real(x); }

std::string qasm_gate(const Gate& g) {
  auto q = [](std::size_t k) { return "q[" + std::to_string(k) + "]"; };
  switch (g.kind) {
    case GateKind::H: return "h " + q(g.q) + ";";
    case GateKind::Rx: return "rx(" + angle(g.theta) + ") " + q(g.q) + ";";
    case GateKind::Ry: return "ry(" + angle(g.theta) + ") " + q(g.q) + ";";
    case GateKind::Rz: return "rz(" + angle(g.theta) + ") " + q(g.q) + ";";
    case GateKind::CX: return "cx " + q(g.q) + "," + q(g.q2) + ";";
  }
  return "";
}

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::Rx: return "rx";
    case GateKind::Ry: return "ry";
    case GateKind::Rz: return "rz";
    case GateKind::CX: return "cx";
  }
  return "?";
}

}  // namespace

std::string to_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "// global phase: " << angle(c.global_phase) << "\n";
  os << "qreg q[" << c.width << "];\n";
  for (const auto& g : c.gates) os << qasm_gate(g) << "\n";
  return os.str();
}

json to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates) {
    json j = {{"gate", gate_name(g.kind)}};
    if (g.kind == GateKind::CX) {
      j["control"] = g.q;
      j["target"] = g.q2;
    } else {
      j["qubit"] = g.q;
      if (g.kind != GateKind::H) j["theta"] = g.theta;
    }
    gates.push_back(j);
  }
  return {{"width", c.width}, {"global_phase", c.global_phase}, {"gates", gates}};
}

json to_json(const AnalogSchedule& s) {
  json pulses = json::array();
  for (const auto& p : s.pulses) pulses.push_back({{"duration", p.duration}, {"string", p.string.str()}});
  return {{"machine", to_string(s.machine)}, {"pulses", pulses}};
}

json to_json(const PauliHamiltonian& h) {
  json out = json::array();
  for (const auto& t : h.terms()) out.push_back({{"coeff", t.coeff}, {"string", t.string.str()}});
  return out;
}

json to_json(const GadgetOutput& g) {
  return {{"lambda", g.lambda},
          {"lambda_max", g.lambda_max},
          {"terms", to_json(g.hamiltonian)},
          {"ancilla_map", g.ancilla_map}};
}

json to_json(const TrotterPlan& p) {
  json steps = json::array();
  for (const auto& s : p.steps) steps.push_back({{"theta", s.theta}, {"string", s.string.str()}});
  json out = {{"algorithm", to_string(p.algorithm)}, {"steps", steps}, {"bound", p.bound},
              {"drop_penalty", p.drop_penalty}};
  if (p.algorithm == TrotterAlgorithm::Standard) out["m"] = p.m;
  else {
    out["N"] = p.N;
    out["seed"] = p.seed;
  }
  return out;
}

json to_json(const DenseOperator& m) {
  json data = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

json to_json(const Report& r) {
  json out = {{"mode", r.mode},
              {"algorithm", to_string(r.algorithm)},
              {"distance", r.distance},
              {"bound", r.bound},
              {"pass", r.pass},
              {"bound_only", r.bound_only},
              {"width", r.width},
              {"operations", r.operations},
              {"notes", r.notes}};
  if (r.source_error) out["source_error"] = *r.source_error;
  if (r.qdrift)
    out["qdrift"] = {{"distance", r.qdrift->distance}, {"sigma", r.qdrift->sigma}, {"bound", r.qdrift->bound},
                     {"seeds", r.qdrift->seeds}, {"pass", r.qdrift->pass}};
  if (r.two_local) out["two_local"] = *r.two_local;
  if (r.native) out["native"] = *r.native;
  if (!r.gadget_gaps.empty()) out["gadget_gaps"] = r.gadget_gaps;
  json t = json::object();
  for (const auto& [k, v] : r.timings) t[k] = v;
  out["timings_ms"] = t;
  return out;
}

std::string report_table(const Report& r) {
  std::ostringstream os;
  auto row = [&](const std::string& k, const std::string& v) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-16s %s\n", k.c_str(), v.c_str());
    os << buf;
  };
  auto num = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
  };
  os << "verification " << (r.pass ? "PASS" : "FAIL") << "\n";
  row("mode", r.mode);
  row("algorithm", to_string(r.algorithm));
  row("width", std::to_string(r.width));
  row("operations", std::to_string(r.operations));
  if (!r.bound_only) row("distance", num(r.distance));
  row("bound", num(r.bound));
  if (r.source_error) row("source error", num(*r.source_error));
  if (r.qdrift)
    row("qdrift channel", num(r.qdrift->distance) + " <= " + num(r.qdrift->bound) + " + 3*" +
                              num(r.qdrift->sigma) + " over " + std::to_string(r.qdrift->seeds) + " seeds");
  if (r.two_local) row("two-local", *r.two_local ? "yes" : "no");
  if (r.native) row("native pulses", *r.native ? "yes" : "no");
  for (std::size_t k = 0; k < r.gadget_gaps.size(); ++k)
    row(k == 0 ? "gap lmax/4" : "gap lmax/8", num(r.gadget_gaps[k]));
  for (const auto& n : r.notes) row("note", n);
  return os.str();
}

std::string render(const Artifact& a) {
  if (const auto* c = std::get_if<Circuit>(&a)) return to_qasm(*c);
  return to_json(std::get<AnalogSchedule>(a)).dump(2) + "\n";
}

}  // namespace sqc
