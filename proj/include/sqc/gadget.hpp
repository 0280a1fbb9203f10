#pragma once

#include <optional>
#include <vector>

#include "sqc/ir.hpp"
#include "sqc/semantics.hpp"

namespace sqc {

/// 1/2 (I - Z(a) Z(b)) between two ancillas of one term.
struct AncillaCoupler {
  std::size_t a;
  std::size_t b;
};

/// coeff * P(qubit) X(ancilla)
struct CrossCoupling {
  double coeff;
  Pauli op;
  std::size_t qubit;
  std::size_t ancilla;
};

struct TermGadget {
  std::size_t term;                      // index into the sorted source terms
  std::vector<AncillaCoupler> couplers;  // m < n over the term's ancillas
  std::vector<CrossCoupling> couplings;  // unscaled by lambda
};

struct GadgetOutput {
  PauliHamiltonian hamiltonian;
  std::vector<std::vector<std::size_t>> ancilla_map;  // per source term; empty when passed through
  std::vector<TermGadget> parts;
  double lambda = 0.0;
  double lambda_max = 0.0;
};

/// (k-1)/4 * (sum |r_j| + N (k-1))^-1 over the terms of locality > 2.
double gadget_lambda_max(const PauliHamiltonian& h);

/// Two-local gadget Hamiltonian; ancillas follow the original qubits in term order.
/// Default lambda is lambda_max / 2. Throws LambdaTooLarge above lambda_max.
GadgetOutput gadgetize(const PauliHamiltonian& h, std::optional<double> lambda = std::nullopt);

/// Projector onto the (possibly degenerate) ground space, normalized to unit trace.
DenseOperator ground_state_density(const DenseOperator& h);

/// Keeps the low `keep` qubits of an operator on `width` qubits.
DenseOperator trace_out_high(const DenseOperator& rho, std::size_t keep, std::size_t width);

/// Spectral distance between the target ground state and the traced gadget ground state.
double gadget_ground_gap(const PauliHamiltonian& target, const GadgetOutput& g);

}  // namespace sqc
