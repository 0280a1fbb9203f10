#include "sqc/transform.hpp"

#include <cmath>

#include "sqc/parser.hpp"

namespace sqc {

QubitExpr qscalar(cplx z) {
  auto n = std::make_shared<QNode>();
  n->op = QOp::Scalar;
  n->z = z;
  return n;
}

QubitExpr qpauli(Pauli p, std::size_t qubit) {
  auto n = std::make_shared<QNode>();
  n->op = QOp::Pauli;
  n->p = p;
  n->qubit = qubit;
  return n;
}

static QubitExpr qbinary(QOp op, QubitExpr l, QubitExpr r) {
  auto n = std::make_shared<QNode>();
  n->op = op;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

QubitExpr qsum(QubitExpr l, QubitExpr r) { return qbinary(QOp::Sum, std::move(l), std::move(r)); }
QubitExpr qprod(QubitExpr l, QubitExpr r) { return qbinary(QOp::Prod, std::move(l), std::move(r)); }

std::string print(const QubitExpr& e) {
  switch (e->op) {
    case QOp::Scalar: return format_scalar(e->z);
    case QOp::Pauli: return std::string(1, to_char(e->p)) + "[" + std::to_string(e->qubit) + "]";
    case QOp::Sum: return "(" + print(e->lhs) + " + " + print(e->rhs) + ")";
    case QOp::Prod: return "(" + print(e->lhs) + " * " + print(e->rhs) + ")";
  }
  return "?";
}

std::size_t boson_width(int m) {
  std::size_t w = 0;
  while ((1 << w) < m) ++w;
  return w;
}

SiteLayout SiteLayout::of(const Shape& shape) {
  SiteLayout l;
  for (const auto& s : shape) {
    std::size_t c = s.is_fermion() ? 1 : boson_width(s.dimension());
    l.offset.push_back(l.width);
    l.count.push_back(c);
    l.width += c;
  }
  return l;
}

Shape qubit_shape(std::size_t n) { return Shape(n, SiteType::boson(2)); }

namespace {

// 0.5 * (P + sign * Q) on one qubit.
QubitExpr half(Pauli p, cplx coeff, Pauli q, std::size_t qubit) {
  return qsum(qprod(qscalar(0.5), qpauli(p, qubit)), qprod(qscalar(0.5 * coeff), qpauli(q, qubit)));
}

}  // namespace

QubitExpr JordanWigner::ladder(std::size_t qubit, bool dagger) const {
  return half(Pauli::X, dagger ? cplx(0.0, -1.0) : cplx(0.0, 1.0), Pauli::Y, qubit);
}

QubitExpr JordanWigner::parity(const std::vector<std::size_t>& qubits) const {
  QubitExpr acc = qscalar(1.0);
  for (auto q : qubits) acc = qprod(acc, qpauli(Pauli::Z, q));
  return acc;
}

QubitExpr boson_bit_operator(int from, int to, int bit, std::size_t qubit) {
  int a = (from >> bit) & 1, b = (to >> bit) & 1;
  if (a == 0 && b == 1) return half(Pauli::X, cplx(0.0, -1.0), Pauli::Y, qubit);
  if (a == 1 && b == 0) return half(Pauli::X, cplx(0.0, 1.0), Pauli::Y, qubit);
  if (a == 1) return half(Pauli::I, -1.0, Pauli::Z, qubit);
  return half(Pauli::I, 1.0, Pauli::Z, qubit);
}

QubitExpr boson_ladder(int m, std::size_t offset, bool dagger) {
  auto w = static_cast<int>(boson_width(m));
  QubitExpr acc;
  for (int j = 1; j < m; ++j) {
    int from = dagger ? j - 1 : j;
    int to = dagger ? j : j - 1;
    QubitExpr term = qscalar(std::sqrt(static_cast<double>(j)));
    for (int k = 0; k < w; ++k)
      term = qprod(term, boson_bit_operator(from, to, k, offset + static_cast<std::size_t>(k)));
    acc = acc ? qsum(acc, term) : term;
  }
  return acc;
}

namespace {

class Lowering {
 public:
  Lowering(const Shape& shape, const SiteLayout& layout, const FermionMapping& m)
      : shape_(shape), layout_(layout), map_(m) {}

  QubitExpr body(const Expr& b) const {
    switch (b->op) {
      case Op::Identity: return qscalar(1.0);
      case Op::Annihilate: return leaf(b->site, false);
      case Op::Dagger: return leaf(b->lhs->site, true);
      case Op::Compose: return qprod(body(b->lhs), body(b->rhs));
      case Op::Tensor: {
        QubitExpr l = body(b->lhs);
        if (fermion_leaves(b->rhs, shape_) % 2) {
          std::vector<std::size_t> qs;
          for (std::size_t s = b->lhs->lo; s < b->lhs->hi; ++s)
            if (shape_[s].is_fermion()) qs.push_back(layout_.offset[s]);
          if (!qs.empty()) l = qprod(l, map_.parity(qs));
        }
        return qprod(l, body(b->rhs));
      }
      case Op::Sum: break;
    }
    throw Error(ErrorCode::ShapeMismatch, "transform expects sum-free canonical bodies");
  }

 private:
  const Shape& shape_;
  const SiteLayout& layout_;
  const FermionMapping& map_;

  QubitExpr leaf(std::size_t site, bool dagger) const {
    if (shape_[site].is_fermion()) return map_.ladder(layout_.offset[site], dagger);
    return boson_ladder(shape_[site].dimension(), layout_.offset[site], dagger);
  }
};

}  // namespace

Transformed transform_expr(const CanonicalExpr& e, const Shape& shape, const FermionMapping& mapping) {
  Transformed out{nullptr, SiteLayout::of(shape)};
  Lowering low(shape, out.layout, mapping);
  for (const auto& t : e.terms) {
    QubitExpr term = qprod(qscalar(t.amp), low.body(t.body));
    out.expr = out.expr ? qsum(out.expr, term) : term;
  }
  if (!out.expr) out.expr = qscalar(0.0);
  return out;
}

StateVector transform_state(const StateVector& psi, const Shape& shape) {
  auto layout = SiteLayout::of(shape);
  StateVector out{qubit_shape(layout.width), {}};
  for (const auto& [k, z] : psi.amps) {
    Occupation bits(layout.width, 0);
    for (std::size_t s = 0; s < shape.size(); ++s)
      for (std::size_t b = 0; b < layout.count[s]; ++b)
        bits[layout.offset[s] + b] = (k[s] >> b) & 1;
    out.add(bits, z);
  }
  return out;
}

}  // namespace sqc
