#pragma once

#include <string>

#include <json.hpp>

#include "sqc/gadget.hpp"
#include "sqc/pipeline.hpp"
#include "sqc/semantics.hpp"
#include "sqc/verify.hpp"

namespace sqc {

/// OpenQASM 2 text: header, a `// global phase` comment, `qreg q[n];`, then one gate per line.
/// Angles use %.17g.
std::string to_qasm(const Circuit& c);

nlohmann::json to_json(const Circuit& c);
nlohmann::json to_json(const AnalogSchedule& s);        // {machine, pulses:[{duration, string}]}
nlohmann::json to_json(const PauliHamiltonian& h);      // [{coeff, string}]
nlohmann::json to_json(const GadgetOutput& g);          // {lambda, lambda_max, terms, ancilla_map}
nlohmann::json to_json(const TrotterPlan& p);           // {algorithm, steps:[{theta, string}], bound, drop_penalty}
nlohmann::json to_json(const DenseOperator& m);         // {rows, cols, data:[[re, im], ...]} row-major
nlohmann::json to_json(const Report& r);

std::string report_table(const Report& r);

/// Text written for an artifact: QASM for circuits, JSON for schedules.
std::string render(const Artifact& a);

}  // namespace sqc
