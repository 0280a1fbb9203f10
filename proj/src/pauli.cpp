#include "sqc/pauli.hpp"

#include <cmath>

namespace sqc {

PhasedPauli pauli_mul(Pauli p, Pauli q) {
  if (p == Pauli::I) return {0, q};
  if (q == Pauli::I) return {0, p};
  if (p == q) return {0, Pauli::I};
  // cyclic X->Y->Z gives +i, anticyclic gives -i
  int a = static_cast<int>(p), b = static_cast<int>(q);
  auto r = static_cast<Pauli>(6 - a - b);
  bool cyclic = (b - a + 3) % 3 == 1;
  return {cyclic ? 1 : 3, r};
}

cplx times_i(cplx z, int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return {-z.real(), -z.imag()};
    default: return {z.imag(), -z.real()};
  }
}

std::pair<int, PauliString> string_mul(const PauliString& a, const PauliString& b) {
  PauliString out(a.size());
  int phase = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto m = pauli_mul(a[k], b[k]);
    phase += m.phase;
    out[k] = m.op;
  }
  return {phase % 4, out};
}

namespace {

void accumulate(PauliSum& s, const PauliString& p, cplx z) {
  auto [it, fresh] = s.emplace(p, z);
  if (!fresh) it->second += z;
}

void prune_zero(PauliSum& s) {
  std::erase_if(s, [](const auto& kv) { return kv.second == cplx(0.0); });
}

}  // namespace

PauliSum expand(const QubitExpr& e, std::size_t width) {
  PauliSum out;
  switch (e->op) {
    case QOp::Scalar:
      if (e->z != cplx(0.0)) out.emplace(PauliString(width), e->z);
      return out;
    case QOp::Pauli: {
      if (e->qubit >= width) throw Error(ErrorCode::IndexOutOfRange, "qubit outside the register");
      PauliString s(width);
      s[e->qubit] = e->p;
      out.emplace(s, 1.0);
      return out;
    }
    case QOp::Sum: {
      out = expand(e->lhs, width);
      for (const auto& [s, z] : expand(e->rhs, width)) accumulate(out, s, z);
      prune_zero(out);
      return out;
    }
    case QOp::Prod: {
      PauliSum l = expand(e->lhs, width), r = expand(e->rhs, width);
      for (const auto& [a, za] : l)
        for (const auto& [b, zb] : r) {
          auto [k, s] = string_mul(a, b);
          accumulate(out, s, times_i(za * zb, k));
        }
      prune_zero(out);
      return out;
    }
  }
  return out;
}

PauliHamiltonian to_hamiltonian(const PauliSum& s, std::size_t width) {
  PauliHamiltonian h(width);
  for (const auto& [p, z] : s) {
    if (std::abs(z.imag()) > 1e-12)
      throw Error(ErrorCode::NonRealResidual,
                  "imaginary coefficient on " + p.str() + ": input was not Hermitian");
    if (std::abs(z.real()) > 1e-12) h.add(z.real(), p);
  }
  return h;
}

PauliHamiltonian canonicalize(const QubitExpr& e, std::size_t width) {
  return to_hamiltonian(expand(e, width), width);
}

DropSplit drop_trivial(const PauliHamiltonian& h) {
  DropSplit out{PauliHamiltonian(h.width()), PauliHamiltonian(h.width())};
  for (const auto& t : h.terms()) {
    auto sup = t.string.support();
    bool trivial = sup.empty() || (sup.size() == 1 && t.string[sup[0]] == Pauli::Z);
    (trivial ? out.dropped : out.kept).add(t.coeff, t.string);
  }
  return out;
}

double drop_penalty(const PauliHamiltonian& dropped, double r) {
  PauliHamiltonian h(dropped.width());
  for (const auto& t : dropped.terms())
    if (!t.string.is_identity()) h.add(t.coeff, t.string);
  return std::abs(r) * pauli_norm(h);
}

std::pair<std::size_t, cplx> pauli_action(const PauliString& s, std::size_t c) {
  std::size_t row = c;
  int phase = 0;  // powers of i
  for (std::size_t q = 0; q < s.size(); ++q) {
    int bit = static_cast<int>((c >> q) & 1u);
    switch (s[q]) {
      case Pauli::I: break;
      case Pauli::X: row ^= (std::size_t{1} << q); break;
      case Pauli::Y:
        row ^= (std::size_t{1} << q);
        phase += bit ? 3 : 1;
        break;
      case Pauli::Z: phase += bit ? 2 : 0; break;
    }
  }
  return {row, times_i(1.0, phase)};
}

DenseOperator to_dense(const PauliString& s) {
  if (s.size() > 10) throw Error(ErrorCode::TooLarge, "Pauli string too wide for the dense oracle");
  auto d = std::size_t{1} << s.size();
  DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t c = 0; c < d; ++c) {
    auto [r, z] = pauli_action(s, c);
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z;
  }
  return m;
}

DenseOperator to_dense(const PauliSum& s, std::size_t width) {
  if (width > 10) throw Error(ErrorCode::TooLarge, "Pauli sum too wide for the dense oracle");
  auto d = static_cast<Eigen::Index>(std::size_t{1} << width);
  DenseOperator m = DenseOperator::Zero(d, d);
  for (const auto& [p, z] : s)
    for (std::size_t c = 0; c < static_cast<std::size_t>(d); ++c) {
      auto [r, a] = pauli_action(p, c);
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += z * a;
    }
  return m;
}

DenseOperator to_dense(const PauliHamiltonian& h) {
  PauliSum s;
  for (const auto& t : h.terms()) s.emplace(t.string, t.coeff);
  return to_dense(s, h.width());
}

double pauli_norm(const PauliSum& s, std::size_t width) {
  if (s.empty()) return 0.0;
  bool diagonal = true;
  for (const auto& [p, z] : s)
    for (auto op : p.ops)
      if (op == Pauli::X || op == Pauli::Y) diagonal = false;
  if (diagonal && width <= 24) {
    double best = 0.0;
    for (std::size_t c = 0; c < (std::size_t{1} << width); ++c) {
      cplx acc = 0.0;
      for (const auto& [p, z] : s) acc += z * pauli_action(p, c).second;
      best = std::max(best, std::abs(acc));
    }
    return best;
  }
  if (width <= 10) return spectral_norm(to_dense(s, width));
  double tri = 0.0;
  for (const auto& kv : s) tri += std::abs(kv.second);
  return tri;
}

double pauli_norm(const PauliHamiltonian& h) {
  PauliSum s;
  for (const auto& t : h.terms()) s.emplace(t.string, t.coeff);
  if (h.width() <= 10 && !s.empty()) {
    bool diagonal = true;
    for (const auto& t : h.terms())
      for (auto op : t.string.ops)
        if (op == Pauli::X || op == Pauli::Y) diagonal = false;
    if (!diagonal) return hermitian_norm(to_dense(s, h.width()));
  }
  return pauli_norm(s, h.width());
}

void apply_exp(const PauliString& s, double theta, DenseVector& v) {
  // exp(-i theta P) = cos(theta) I - i sin(theta) P
  DenseVector pv = DenseVector::Zero(v.size());
  for (Eigen::Index c = 0; c < v.size(); ++c) {
    if (v(c) == cplx(0.0)) continue;
    auto [r, a] = pauli_action(s, static_cast<std::size_t>(c));
    pv(static_cast<Eigen::Index>(r)) += a * v(c);
  }
  v = std::cos(theta) * v + cplx(0.0, -std::sin(theta)) * pv;
}

}  // namespace sqc
