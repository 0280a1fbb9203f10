#pragma once

#include <string>
#include <vector>

#include "sqc/ir.hpp"

namespace sqc {

struct CanonicalTerm {
  cplx amp;
  Expr body;  // sum-free; daggers only on atoms; leaf amplitudes are 1
};

/// Linear combination of sum-free bodies, merged and deterministically ordered.
struct CanonicalExpr {
  std::vector<CanonicalTerm> terms;
};

CanonicalExpr dag_canonicalize(const Expr& e, const Shape& shape);

/// Equality of canonical forms as multisets, amplitudes compared to `tol`.
bool eq_modulo(const Expr& a, const Expr& b, const Shape& shape, double tol = 1e-12);
bool equal_terms(const CanonicalExpr& a, const CanonicalExpr& b, double tol = 1e-12);

/// Adjoint of a sum-free body; returns the sign picked up by fermionic reordering.
std::pair<int, Expr> dagger_body(const Expr& body, const Shape& shape);

/// Number of ladder leaves on fermion sites.
int fermion_leaves(const Expr& body, const Shape& shape);

/// Rebuilds an expression equal to the canonical sum.
Expr to_expr(const CanonicalExpr& c, const Shape& shape);

std::string print(const CanonicalExpr& c);

}  // namespace sqc
