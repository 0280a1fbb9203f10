#include "sqc/ir.hpp"

#include <algorithm>
#include <cmath>

namespace sqc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MalformedRange: return "MalformedRange";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::FermionDimension: return "FermionDimension";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NonRealResidual: return "NonRealResidual";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::LambdaTooLarge: return "LambdaTooLarge";
    case ErrorCode::LocalityExceeded: return "LocalityExceeded";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::Usage: return "UsageError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& what, int line, int column)
    : std::runtime_error(what), code_(code), line_(line), column_(column) {}

SiteType SiteType::boson(int m) {
  if (m < 2) throw Error(ErrorCode::ShapeMismatch, "boson dimension must be at least 2");
  return SiteType{Tag::Boson, m};
}

std::size_t system_dimension(const Shape& shape, std::size_t limit) {
  if (shape.empty()) throw Error(ErrorCode::ShapeMismatch, "empty shape");
  std::size_t d = 1;
  for (const auto& s : shape) {
    d *= static_cast<std::size_t>(s.dimension());
    if (d > limit) throw Error(ErrorCode::TooLarge, "system too large for the dense oracle");
  }
  return d;
}

std::string to_string(const SiteType& site) {
  if (site.is_fermion()) return "fermion";
  return "boson(" + std::to_string(site.dim) + ")";
}

Kind join(Kind a, Kind b) {
  if (a == Kind::Plain || b == Kind::Plain) return Kind::Plain;
  if (a == b) return a;
  throw Error(ErrorCode::KindMismatch, "cannot join hermitian with unitary");
}

const char* to_string(Kind k) {
  switch (k) {
    case Kind::Plain: return "plain";
    case Kind::Hermitian: return "hermitian";
    case Kind::Unitary: return "unitary";
  }
  return "?";
}

// ---------------------------------------------------------------- expressions

namespace {

Expr leaf(Op op, std::size_t site, cplx amp) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->amp = amp;
  n->site = site;
  n->lo = site;
  n->hi = site + 1;
  return n;
}

Expr binary(Op op, Expr l, Expr r) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lo = l->lo;
  n->hi = op == Op::Tensor ? r->hi : l->hi;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

}  // namespace

Expr annihilate(std::size_t site, cplx amp) { return leaf(Op::Annihilate, site, amp); }
Expr identity(std::size_t site) { return leaf(Op::Identity, site, 1.0); }

Expr dagger(Expr e) {
  auto n = std::make_shared<Node>();
  n->op = Op::Dagger;
  n->lo = e->lo;
  n->hi = e->hi;
  n->lhs = std::move(e);
  return n;
}

Expr tensor(Expr l, Expr r) { return binary(Op::Tensor, std::move(l), std::move(r)); }
Expr add(Expr l, Expr r) { return binary(Op::Sum, std::move(l), std::move(r)); }
Expr compose(Expr l, Expr r) { return binary(Op::Compose, std::move(l), std::move(r)); }

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a == b) return true;
  if (!a || !b || a->op != b->op) return false;
  switch (a->op) {
    case Op::Annihilate: return a->site == b->site && a->amp == b->amp;
    case Op::Identity: return a->site == b->site;
    case Op::Dagger: return structurally_equal(a->lhs, b->lhs);
    default:
      return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
  }
}

std::size_t size(const Expr& e) {
  if (!e) return 0;
  return 1 + size(e->lhs) + size(e->rhs);
}

// ---------------------------------------------------------------- Pauli IR

char to_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
  }
  throw Error(ErrorCode::Parse, std::string("bad Pauli character '") + c + "'");
}

PauliString PauliString::parse(const std::string& s) {
  PauliString p;
  p.ops.reserve(s.size());
  for (char c : s) p.ops.push_back(pauli_from_char(c));
  return p;
}

std::size_t PauliString::locality() const {
  return static_cast<std::size_t>(
      std::count_if(ops.begin(), ops.end(), [](Pauli p) { return p != Pauli::I; }));
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ops.size(); ++k)
    if (ops[k] != Pauli::I) out.push_back(k);
  return out;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(ops.size());
  for (auto p : ops) s.push_back(to_char(p));
  return s;
}

bool anticommute(const PauliString& a, const PauliString& b) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k)
    if (a[k] != Pauli::I && b[k] != Pauli::I && a[k] != b[k]) ++n;
  return n % 2 == 1;
}

void PauliHamiltonian::add(double coeff, const PauliString& s) {
  if (s.size() != width_) throw Error(ErrorCode::ShapeMismatch, "Pauli string width mismatch");
  map_[s] += coeff;
}

void PauliHamiltonian::prune(double tol) {
  std::erase_if(map_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

std::vector<PauliTerm> PauliHamiltonian::terms() const {
  std::vector<PauliTerm> out;
  out.reserve(map_.size());
  for (const auto& [s, c] : map_) out.push_back({c, s});
  return out;
}

double PauliHamiltonian::coeff(const PauliString& s) const {
  auto it = map_.find(s);
  return it == map_.end() ? 0.0 : it->second;
}

double PauliHamiltonian::lambda() const {
  double l = 0.0;
  for (const auto& kv : map_) l += std::abs(kv.second);
  return l;
}

// ---------------------------------------------------------------- states

void StateVector::add(const Occupation& k, cplx z) {
  auto it = amps.find(k);
  if (it == amps.end()) {
    if (z != cplx(0.0)) amps.emplace(k, z);
    return;
  }
  it->second += z;
  if (it->second == cplx(0.0)) amps.erase(it);
}

StateVector StateVector::basis(const Shape& shape, const Occupation& k) {
  if (k.size() != shape.size()) throw Error(ErrorCode::ShapeMismatch, "occupation length mismatch");
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] < 0 || k[i] >= shape[i].dimension())
      throw Error(ErrorCode::IndexOutOfRange, "occupation out of range");
  StateVector v{shape, {}};
  v.amps.emplace(k, 1.0);
  return v;
}

StateVector operator+(const StateVector& a, const StateVector& b) {
  StateVector out = a;
  for (const auto& [k, z] : b.amps) out.add(k, z);
  return out;
}

StateVector operator*(cplx z, const StateVector& a) {
  StateVector out{a.shape, {}};
  if (z == cplx(0.0)) return out;
  for (const auto& [k, w] : a.amps) out.amps.emplace(k, z * w);
  return out;
}

std::size_t basis_index(const Shape& shape, const Occupation& k) {
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    idx += static_cast<std::size_t>(k[i]) * stride;
    stride *= static_cast<std::size_t>(shape[i].dimension());
  }
  return idx;
}

Occupation basis_occupation(const Shape& shape, std::size_t index) {
  Occupation k(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    auto d = static_cast<std::size_t>(shape[i].dimension());
    k[i] = static_cast<int>(index % d);
    index /= d;
  }
  return k;
}

// ---------------------------------------------------------------- machines

const char* to_string(Machine m) { return m == Machine::IBM ? "ibm" : "indiana"; }

bool is_native(Machine m, const PauliString& s) {
  auto sup = s.support();
  if (sup.empty()) return false;
  if (m == Machine::IBM) {
    if (sup.size() == 1) return s[sup[0]] == Pauli::X || s[sup[0]] == Pauli::Z;
    return sup.size() == 2 && s[sup[0]] == Pauli::Z && s[sup[1]] == Pauli::Z;
  }
  if (sup.size() == 1 && s[sup[0]] == Pauli::Z) return true;
  for (auto q : sup)
    if (s[q] != Pauli::X) return false;
  return true;
}

}  // namespace sqc
