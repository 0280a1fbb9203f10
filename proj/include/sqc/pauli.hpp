#pragma once

#include <map>

#include "sqc/ir.hpp"
#include "sqc/semantics.hpp"
#include "sqc/transform.hpp"

namespace sqc {

/// i^phase * op
struct PhasedPauli {
  int phase;
  Pauli op;
  bool operator==(const PhasedPauli&) const = default;
};

PhasedPauli pauli_mul(Pauli p, Pauli q);

/// z * i^k without rounding.
cplx times_i(cplx z, int k);

/// Product of two strings: i^phase * string.
std::pair<int, PauliString> string_mul(const PauliString& a, const PauliString& b);

/// Complex-weighted Pauli sum, before the realness check.
using PauliSum = std::map<PauliString, cplx>;

PauliSum expand(const QubitExpr& e, std::size_t width);

/// Real Pauli canonical form; throws NonRealResidual if an imaginary part exceeds 1e-12.
PauliHamiltonian canonicalize(const QubitExpr& e, std::size_t width);
PauliHamiltonian to_hamiltonian(const PauliSum& s, std::size_t width);

struct DropSplit {
  PauliHamiltonian kept;
  PauliHamiltonian dropped;
};

/// Splits off the identity term and single-qubit Z terms.
DropSplit drop_trivial(const PauliHamiltonian& h);

/// r * ||sum of non-identity dropped terms||; identity terms only shift the global phase.
double drop_penalty(const PauliHamiltonian& dropped, double r);

/// Exact spectral norm of a Hermitian Pauli sum for width <= 10, triangle bound beyond.
double pauli_norm(const PauliHamiltonian& h);
double pauli_norm(const PauliSum& s, std::size_t width);

/// Column action: P|c> = amp |row>.
std::pair<std::size_t, cplx> pauli_action(const PauliString& s, std::size_t column);

DenseOperator to_dense(const PauliString& s);
DenseOperator to_dense(const PauliHamiltonian& h);
DenseOperator to_dense(const PauliSum& s, std::size_t width);

/// exp(-i theta P) applied to a state vector.
void apply_exp(const PauliString& s, double theta, DenseVector& v);

}  // namespace sqc
