#include "sqc/typecheck.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sqc/parser.hpp"
#include "sqc/rewrite.hpp"

namespace sqc {

namespace {

constexpr unsigned kEven = 1u, kOdd = 2u;

struct Info {
  Kind kind;
  unsigned parity;  // possible fermion-leaf parities of the terms
  std::set<std::size_t> support;
};

unsigned parity_sum(unsigned a, unsigned b) {
  unsigned out = 0;
  if ((a & kEven) && (b & kEven)) out |= kEven;
  if ((a & kOdd) && (b & kOdd)) out |= kEven;
  if ((a & kEven) && (b & kOdd)) out |= kOdd;
  if ((a & kOdd) && (b & kEven)) out |= kOdd;
  return out;
}

bool span_has_fermion(const Expr& e, const Shape& shape) {
  for (std::size_t s = e->lo; s < e->hi; ++s)
    if (shape[s].is_fermion()) return true;
  return false;
}

class Checker {
 public:
  explicit Checker(const Shape& shape) : shape_(shape) {}

  Info run(const Expr& e) {
    switch (e->op) {
      case Op::Annihilate: {
        check_site(e->site);
        return {Kind::Plain, shape_[e->site].is_fermion() ? kOdd : kEven, {e->site}};
      }
      case Op::Identity:
        check_site(e->site);
        return {Kind::Hermitian, kEven, {}};
      case Op::Dagger: return run(e->lhs);
      case Op::Tensor: {
        Info l = run(e->lhs), r = run(e->rhs);
        if (e->lhs->hi != e->rhs->lo)
          throw Error(ErrorCode::ShapeMismatch, "tensor factors must cover adjacent sites");
        Info out{Kind::Plain, parity_sum(l.parity, r.parity), l.support};
        out.support.insert(r.support.begin(), r.support.end());
        if (l.kind == Kind::Hermitian && r.kind == Kind::Hermitian) {
          bool commute = !span_has_fermion(e->lhs, shape_) || l.parity == kEven || r.parity == kEven;
          out.kind = commute ? Kind::Hermitian : Kind::Plain;
        } else {
          out.kind = l.kind == r.kind ? l.kind : Kind::Plain;
        }
        return out;
      }
      case Op::Sum:
      case Op::Compose: {
        Info l = run(e->lhs), r = run(e->rhs);
        if (e->lhs->lo != e->rhs->lo || e->lhs->hi != e->rhs->hi)
          throw Error(ErrorCode::ShapeMismatch, "operands act on different sites");
        Info out{Kind::Plain, 0u, l.support};
        out.support.insert(r.support.begin(), r.support.end());
        if (e->op == Op::Sum) {
          out.parity = l.parity | r.parity;
          out.kind = (l.kind == r.kind) ? l.kind : Kind::Plain;
        } else {
          out.parity = parity_sum(l.parity, r.parity);
          out.kind = join(l.kind, r.kind);
          if (out.kind == Kind::Hermitian) {
            bool disjoint = std::none_of(l.support.begin(), l.support.end(),
                                         [&](std::size_t s) { return r.support.count(s) > 0; });
            bool commute = disjoint && (l.parity == kEven || r.parity == kEven);
            if (!commute) out.kind = Kind::Plain;
          }
        }
        if (out.kind == Kind::Plain && check_hermitian(e, shape_)) out.kind = Kind::Hermitian;
        return out;
      }
    }
    return {Kind::Plain, kEven, {}};
  }

 private:
  const Shape& shape_;

  void check_site(std::size_t s) const {
    if (s >= shape_.size()) throw Error(ErrorCode::IndexOutOfRange, "leaf site outside the shape");
    if (shape_[s].is_fermion() && shape_[s].dimension() != 2)
      throw Error(ErrorCode::FermionDimension, "fermion site with dimension other than 2");
  }
};

}  // namespace

TypeJudgment infer(const Expr& e, const Shape& shape) {
  if (e->lo != 0 || e->hi != shape.size())
    throw Error(ErrorCode::ShapeMismatch, "expression does not span the whole shape");
  Checker c(shape);
  return {shape, c.run(e).kind};
}

bool check_hermitian(const Expr& e, const Shape& shape) {
  auto c = dag_canonicalize(e, shape);
  auto d = dag_canonicalize(dagger(e), shape);
  return equal_terms(c, d, 1e-12);
}

std::optional<Expr> hermitian_witness(const Expr& e, const Shape& shape) {
  auto c = dag_canonicalize(e, shape);
  auto d = dag_canonicalize(dagger(e), shape);
  std::map<std::string, cplx> partner;
  for (const auto& t : d.terms) partner[print(t.body)] += t.amp;
  for (const auto& t : c.terms) {
    auto it = partner.find(print(t.body));
    cplx other = it == partner.end() ? cplx(0.0) : it->second;
    if (std::abs(other - t.amp) > 1e-12) return scale(t.body, t.amp, shape);
  }
  if (!equal_terms(c, d)) return e;
  return std::nullopt;
}

TypeJudgment admit_simulation(const Expr& e, const Shape& shape) {
  auto j = infer(e, shape);
  if (j.kind != Kind::Hermitian) {
    auto w = hermitian_witness(e, shape);
    throw Error(ErrorCode::NotHermitian,
                "Hamiltonian is not Hermitian; witness term: " + print(w ? *w : e));
  }
  return {shape, Kind::Unitary};
}

}  // namespace sqc
