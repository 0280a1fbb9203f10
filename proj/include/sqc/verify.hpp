#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqc/pipeline.hpp"
#include "sqc/semantics.hpp"
#include "sqc/trotter.hpp"

namespace sqc {

/// Gate product in application order, times exp(i global_phase). Qubit q is bit q of the index.
DenseOperator circuit_to_matrix(const Circuit& c);

/// Product of exp(-i duration string) in pulse order.
DenseOperator schedule_to_matrix(const AnalogSchedule& s);

/// Product of exp(-i theta string) in step order.
DenseOperator plan_to_matrix(const TrotterPlan& p);

DenseOperator artifact_to_matrix(const Artifact& a);

enum class DistanceMode { Exact, GlobalPhase };

/// Exact: ||U - V||. Global phase: ||U - e^{i phi} V|| with phi = arg tr(V^dag U).
double distance(const DenseOperator& U, const DenseOperator& V, DistanceMode mode);

struct Report {
  std::string mode;            // "digital", "ibm", "indiana"; "bound-only" when too wide
  TrotterAlgorithm algorithm = TrotterAlgorithm::Standard;
  double distance = 0.0;       // artifact vs exp(-i r H_full), up to global phase
  double bound = 0.0;          // plan bound plus drop penalty
  bool pass = false;
  bool bound_only = false;
  std::size_t width = 0;
  std::size_t operations = 0;  // gates or pulses
  std::optional<double> source_error;  // ||W^dag H_qubit W - H_source||
  std::optional<QDriftCheck> qdrift;
  std::optional<bool> two_local;
  std::optional<bool> native;
  std::vector<double> gadget_gaps;     // at lambda_max/4 and lambda_max/8
  std::optional<double> gadget_distance;  // artifact vs exp(-i r H_gad)
  std::vector<std::pair<std::string, double>> timings;
  std::vector<std::string> notes;
};

/// Checks a finished compilation against the dense oracle.
Report verify(const Compilation& c, int qdrift_seeds = 1000);

Report verify_pipeline(const ProgramFile& program, const CompileOptions& flags = {});

}  // namespace sqc
