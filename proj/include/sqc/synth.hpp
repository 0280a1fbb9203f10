#pragma once

#include <variant>

#include "sqc/ir.hpp"
#include "sqc/trotter.hpp"

namespace sqc {

enum class Target { Digital, IBM, Indiana };
const char* to_string(Target t);
Target target_from_string(const std::string& s);

/// exp(-i theta P) as H/Rx/Ry/Rz/CX gates. The parity of the support is collected onto
/// the first non-identity qubit by CX(m_j, m_{j-1}) ladders around Rz(2 theta); X sites
/// are conjugated by H and Y sites by Rz(-pi/2) H ... H Rz(pi/2). An all-identity string
/// yields no gates and a global phase of -theta.
Circuit synth_digital_step(double theta, const PauliString& p);

/// exp(-i theta P) as native pulses of the given machine, every duration in (0, 2 pi).
/// IBM accepts locality <= 2 (LocalityExceeded otherwise); Indiana accepts any locality.
AnalogSchedule synth_analog_step(double theta, const PauliString& p, Machine machine);

/// Duration in (0, 2 pi) equivalent to theta for a pulse of period 2 pi; 0 when theta is a multiple of 2 pi.
double fold_duration(double theta);

using Artifact = std::variant<Circuit, AnalogSchedule>;

Artifact synth_plan(const TrotterPlan& plan, Target target);

std::size_t artifact_size(const Artifact& a);

}  // namespace sqc
