#pragma once

#include <optional>

#include "sqc/ir.hpp"

namespace sqc {

struct TypeJudgment {
  Shape shape;
  Kind kind;
};

/// Least derivable kind of `e` over `shape`.
TypeJudgment infer(const Expr& e, const Shape& shape);

/// Syntactic adjoint check on canonical forms; never consults the dense oracle.
bool check_hermitian(const Expr& e, const Shape& shape);

/// Unitary judgment for exp(-i r e); throws NotHermitian with a witness term otherwise.
TypeJudgment admit_simulation(const Expr& e, const Shape& shape);

/// A canonical term of `e` without a matching adjoint partner, if any.
std::optional<Expr> hermitian_witness(const Expr& e, const Shape& shape);

}  // namespace sqc
