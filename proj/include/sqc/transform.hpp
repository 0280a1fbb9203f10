#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sqc/ir.hpp"
#include "sqc/rewrite.hpp"

namespace sqc {

// ---------------------------------------------------------------- qubit IR

enum class QOp { Scalar, Pauli, Sum, Prod };

struct QNode;
using QubitExpr = std::shared_ptr<const QNode>;

/// Operator expression over qubits; Prod is the operator product (left factor applied last).
struct QNode {
  QOp op;
  cplx z{1.0, 0.0};
  Pauli p = Pauli::I;
  std::size_t qubit = 0;
  QubitExpr lhs;
  QubitExpr rhs;
};

QubitExpr qscalar(cplx z);
QubitExpr qpauli(Pauli p, std::size_t qubit);
QubitExpr qsum(QubitExpr l, QubitExpr r);
QubitExpr qprod(QubitExpr l, QubitExpr r);

std::string print(const QubitExpr& e);

// ---------------------------------------------------------------- layout

/// Qubit block of each source site: fermions take one qubit, Boson(m) takes ceil(log2 m).
struct SiteLayout {
  std::vector<std::size_t> offset;
  std::vector<std::size_t> count;
  std::size_t width = 0;

  static SiteLayout of(const Shape& shape);
};

std::size_t boson_width(int m);

/// Shape of `n` two-level sites.
Shape qubit_shape(std::size_t n);

// ---------------------------------------------------------------- encodings

/// Fermion-to-qubit strategy; Jordan-Wigner is the only implementation.
class FermionMapping {
 public:
  virtual ~FermionMapping() = default;
  virtual const char* name() const = 0;
  /// Local image of a (dagger = false) or a^dag on the site's qubit.
  virtual QubitExpr ladder(std::size_t qubit, bool dagger) const = 0;
  /// Parity operator over the fermion qubits of a left tensor factor.
  virtual QubitExpr parity(const std::vector<std::size_t>& qubits) const = 0;
};

class JordanWigner final : public FermionMapping {
 public:
  const char* name() const override { return "jordan-wigner"; }
  QubitExpr ladder(std::size_t qubit, bool dagger) const override;
  QubitExpr parity(const std::vector<std::size_t>& qubits) const override;
};

/// Per-bit factor of the binary boson transition |from> -> |to>:
/// raise for 0->1, lower for 1->0, number projector for 1->1, vacancy projector for 0->0.
QubitExpr boson_bit_operator(int from, int to, int bit, std::size_t qubit);

/// sum_j sqrt(j) |j-1><j| (or its adjoint) on the site's qubit block.
QubitExpr boson_ladder(int m, std::size_t offset, bool dagger);

struct Transformed {
  QubitExpr expr;
  SiteLayout layout;
};

Transformed transform_expr(const CanonicalExpr& e, const Shape& shape,
                           const FermionMapping& mapping = JordanWigner{});

/// Fermion kets copied, boson |j> expanded LSB-first; result lives on qubit_shape(width).
StateVector transform_state(const StateVector& psi, const Shape& shape);

}  // namespace sqc
