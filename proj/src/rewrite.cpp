#include "sqc/rewrite.hpp"

#include <algorithm>
#include <map>

#include "sqc/parser.hpp"

namespace sqc {

namespace {

bool span_has_fermion(const Expr& e, const Shape& shape) {
  for (std::size_t s = e->lo; s < e->hi; ++s)
    if (shape[s].is_fermion()) return true;
  return false;
}

bool is_identity_body(const Expr& b) {
  switch (b->op) {
    case Op::Identity: return true;
    case Op::Tensor:
    case Op::Compose: return is_identity_body(b->lhs) && is_identity_body(b->rhs);
    default: return false;
  }
}

void flatten_compose(const Expr& b, std::vector<Expr>& out) {
  if (b->op == Op::Compose) {
    flatten_compose(b->lhs, out);
    flatten_compose(b->rhs, out);
  } else {
    out.push_back(b);
  }
}

Expr normalize(const Expr& b, const Shape& shape);

// Right-nested chain with identity factors removed; E-Ten on boson-only spans.
Expr build_chain(std::vector<Expr> chain, const Shape& shape) {
  std::vector<Expr> kept;
  for (auto& f : chain)
    if (!is_identity_body(f)) kept.push_back(f);
  if (kept.empty()) return chain.front();
  if (kept.size() > 1 && !span_has_fermion(kept.front(), shape)) {
    bool all_tensor = std::all_of(kept.begin(), kept.end(), [&](const Expr& f) {
      return f->op == Op::Tensor && f->lhs->hi == kept.front()->lhs->hi;
    });
    if (all_tensor) {
      std::vector<Expr> left, right;
      for (auto& f : kept) {
        left.push_back(f->lhs);
        right.push_back(f->rhs);
      }
      return normalize(tensor(build_chain(left, shape), build_chain(right, shape)), shape);
    }
  }
  Expr acc = kept.back();
  for (std::size_t k = kept.size() - 1; k-- > 0;) acc = compose(kept[k], acc);
  return acc;
}

Expr normalize(const Expr& b, const Shape& shape) {
  switch (b->op) {
    case Op::Tensor: {
      auto l = normalize(b->lhs, shape);
      auto r = normalize(b->rhs, shape);
      if (l == b->lhs && r == b->rhs) return b;
      return tensor(l, r);
    }
    case Op::Compose: {
      std::vector<Expr> chain;
      flatten_compose(b, chain);
      for (auto& f : chain) f = normalize(f, shape);
      return build_chain(chain, shape);
    }
    default: return b;
  }
}

using Terms = std::vector<CanonicalTerm>;

Terms canon(const Expr& e, const Shape& shape) {
  switch (e->op) {
    case Op::Annihilate: return {{e->amp, annihilate(e->site)}};
    case Op::Identity: return {{1.0, e}};
    case Op::Dagger: {
      Terms out;
      for (const auto& t : canon(e->lhs, shape)) {
        auto [sign, body] = dagger_body(t.body, shape);
        out.push_back({static_cast<double>(sign) * std::conj(t.amp), body});
      }
      return out;
    }
    case Op::Sum: {
      Terms out = canon(e->lhs, shape);
      for (auto& t : canon(e->rhs, shape)) out.push_back(std::move(t));
      return out;
    }
    case Op::Tensor:
    case Op::Compose: {
      Terms l = canon(e->lhs, shape), r = canon(e->rhs, shape), out;
      out.reserve(l.size() * r.size());
      for (const auto& a : l)
        for (const auto& b : r) {
          Expr body = e->op == Op::Tensor ? tensor(a.body, b.body) : compose(a.body, b.body);
          out.push_back({a.amp * b.amp, normalize(body, shape)});
        }
      return out;
    }
  }
  return {};
}

struct LeafKey {
  std::vector<std::size_t> sites;
  std::vector<int> tags;
};

void leaf_key(const Expr& b, LeafKey& k) {
  switch (b->op) {
    case Op::Identity: k.sites.push_back(b->site); k.tags.push_back(0); return;
    case Op::Annihilate: k.sites.push_back(b->site); k.tags.push_back(1); return;
    case Op::Dagger: k.sites.push_back(b->lhs->site); k.tags.push_back(2); return;
    default: leaf_key(b->lhs, k); leaf_key(b->rhs, k);
  }
}

struct Keyed {
  LeafKey key;
  std::string text;
  CanonicalTerm term;
};

CanonicalExpr merge(const Terms& terms) {
  std::map<std::string, std::size_t> index;
  std::vector<Keyed> rows;
  for (const auto& t : terms) {
    std::string text = print(t.body);
    auto it = index.find(text);
    if (it != index.end()) {
      rows[it->second].term.amp += t.amp;
      continue;
    }
    index.emplace(text, rows.size());
    Keyed k{{}, text, t};
    leaf_key(t.body, k.key);
    rows.push_back(std::move(k));
  }
  std::erase_if(rows, [](const Keyed& k) { return k.term.amp == cplx(0.0); });
  std::sort(rows.begin(), rows.end(), [](const Keyed& a, const Keyed& b) {
    if (a.key.sites != b.key.sites) return a.key.sites < b.key.sites;
    if (a.key.tags != b.key.tags) return a.key.tags < b.key.tags;
    return a.text < b.text;
  });
  CanonicalExpr out;
  for (auto& r : rows) out.terms.push_back(r.term);
  return out;
}

}  // namespace

int fermion_leaves(const Expr& b, const Shape& shape) {
  switch (b->op) {
    case Op::Identity: return 0;
    case Op::Annihilate: return shape[b->site].is_fermion() ? 1 : 0;
    case Op::Dagger: return fermion_leaves(b->lhs, shape);
    default: return fermion_leaves(b->lhs, shape) + fermion_leaves(b->rhs, shape);
  }
}

std::pair<int, Expr> dagger_body(const Expr& b, const Shape& shape) {
  switch (b->op) {
    case Op::Annihilate: return {1, dagger(b)};
    case Op::Dagger: return {1, b->lhs};
    case Op::Identity: return {1, b};
    case Op::Tensor: {
      auto [s1, l] = dagger_body(b->lhs, shape);
      auto [s2, r] = dagger_body(b->rhs, shape);
      int k1 = span_has_fermion(b->lhs, shape) ? fermion_leaves(b->lhs, shape) : 0;
      int k2 = fermion_leaves(b->rhs, shape);
      int sign = s1 * s2 * ((k1 * k2) % 2 ? -1 : 1);
      return {sign, tensor(l, r)};
    }
    case Op::Compose: {
      auto [s1, l] = dagger_body(b->lhs, shape);
      auto [s2, r] = dagger_body(b->rhs, shape);
      return {s1 * s2, normalize(compose(r, l), shape)};
    }
    case Op::Sum: break;
  }
  throw Error(ErrorCode::ShapeMismatch, "dagger_body expects a sum-free body");
}

CanonicalExpr dag_canonicalize(const Expr& e, const Shape& shape) {
  return merge(canon(e, shape));
}

bool equal_terms(const CanonicalExpr& a, const CanonicalExpr& b, double tol) {
  std::map<std::string, std::pair<cplx, cplx>> m;
  for (const auto& t : a.terms) m[print(t.body)].first += t.amp;
  for (const auto& t : b.terms) m[print(t.body)].second += t.amp;
  for (const auto& [k, v] : m)
    if (std::abs(v.first - v.second) > tol) return false;
  return true;
}

bool eq_modulo(const Expr& a, const Expr& b, const Shape& shape, double tol) {
  return equal_terms(dag_canonicalize(a, shape), dag_canonicalize(b, shape), tol);
}

Expr to_expr(const CanonicalExpr& c, const Shape& shape) {
  if (c.terms.empty()) return scale(identity_chain(shape), 0.0, shape);
  Expr acc;
  for (const auto& t : c.terms) {
    Expr term = scale(t.body, t.amp, shape);
    acc = acc ? add(acc, term) : term;
  }
  return acc;
}

std::string print(const CanonicalExpr& c) {
  std::string out;
  for (const auto& t : c.terms) out += format_scalar(t.amp) + " * " + print(t.body) + "\n";
  return out;
}

}  // namespace sqc
