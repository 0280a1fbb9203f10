#include "sqc/semantics.hpp"

#include <cmath>
#include <map>

namespace sqc {

std::optional<LadderResult> ladder_apply(Ladder op, int m, int k) {
  if (op == Ladder::Raise) {
    if (k + 1 >= m) return std::nullopt;
    return LadderResult{std::sqrt(static_cast<double>(k + 1)), k + 1};
  }
  if (k == 0) return std::nullopt;
  return LadderResult{std::sqrt(static_cast<double>(k)), k - 1};
}

int fermion_sign(const Shape& shape, const Occupation& k, std::size_t j) {
  int g = 0;
  for (std::size_t s = 0; s < j && s < shape.size(); ++s)
    if (shape[s].is_fermion()) g += k[s];
  return g % 2 ? -1 : 1;
}

namespace {

using Ket = std::map<Occupation, cplx>;

void accumulate(Ket& out, const Occupation& k, cplx z) {
  if (z == cplx(0.0)) return;
  auto [it, fresh] = out.emplace(k, z);
  if (!fresh) {
    it->second += z;
    if (it->second == cplx(0.0)) out.erase(it);
  }
}

class Evaluator {
 public:
  explicit Evaluator(const Shape& shape) : shape_(shape) {}

  Ket eval(const Expr& e, int g, const Occupation& w) {
    Ket out;
    switch (e->op) {
      case Op::Identity: out.emplace(w, 1.0); break;
      case Op::Annihilate: leaf(e->site, e->amp, Ladder::Lower, g, w, out); break;
      case Op::Dagger:
        if (e->lhs->op == Op::Annihilate) {
          leaf(e->lhs->site, std::conj(e->lhs->amp), Ladder::Raise, g, w, out);
        } else {
          adjoint(e, g, w, out);
        }
        break;
      case Op::Sum: {
        out = eval(e->lhs, g, w);
        for (const auto& [k, z] : eval(e->rhs, g, w)) accumulate(out, k, z);
        break;
      }
      case Op::Compose: {
        for (const auto& [k1, z1] : eval(e->rhs, g, w))
          for (const auto& [k2, z2] : eval(e->lhs, g, k1)) accumulate(out, k2, z1 * z2);
        break;
      }
      case Op::Tensor: {
        int s = 0;
        for (std::size_t site = e->lhs->lo; site < e->lhs->hi; ++site)
          if (shape_[site].is_fermion()) s += w[site];
        for (const auto& [k1, z1] : eval(e->lhs, g, w))
          for (const auto& [k2, z2] : eval(e->rhs, g + s, k1)) accumulate(out, k2, z1 * z2);
        break;
      }
    }
    return out;
  }

 private:
  const Shape& shape_;
  std::map<std::pair<const Node*, int>, DenseOperator> cache_;

  void leaf(std::size_t site, cplx z, Ladder op, int g, const Occupation& w, Ket& out) {
    auto r = ladder_apply(op, shape_[site].dimension(), w[site]);
    if (!r) return;
    if (shape_[site].is_fermion() && g % 2) z = -z;
    Occupation k = w;
    k[site] = r->k;
    accumulate(out, k, z * r->amp);
  }

  std::size_t span_dim(const Expr& e) const {
    std::size_t d = 1;
    for (std::size_t s = e->lo; s < e->hi; ++s) d *= static_cast<std::size_t>(shape_[s].dimension());
    return d;
  }

  std::size_t span_index(const Expr& e, const Occupation& k) const {
    std::size_t idx = 0, stride = 1;
    for (std::size_t s = e->lo; s < e->hi; ++s) {
      idx += static_cast<std::size_t>(k[s]) * stride;
      stride *= static_cast<std::size_t>(shape_[s].dimension());
    }
    return idx;
  }

  void set_span(const Expr& e, std::size_t idx, Occupation& k) const {
    for (std::size_t s = e->lo; s < e->hi; ++s) {
      auto d = static_cast<std::size_t>(shape_[s].dimension());
      k[s] = static_cast<int>(idx % d);
      idx /= d;
    }
  }

  // Dagger of a compound: the conjugate transpose of the span-local map under context g.
  void adjoint(const Expr& e, int g, const Occupation& w, Ket& out) {
    const Expr& inner = e->lhs;
    auto key = std::make_pair(inner.get(), g % 2);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      std::size_t d = span_dim(inner);
      DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
      Occupation k = w;
      for (std::size_t c = 0; c < d; ++c) {
        set_span(inner, c, k);
        for (const auto& [r, z] : eval(inner, g, k))
          m(static_cast<Eigen::Index>(span_index(inner, r)), static_cast<Eigen::Index>(c)) += z;
      }
      it = cache_.emplace(key, m.adjoint()).first;
    }
    const DenseOperator& adj = it->second;
    auto col = static_cast<Eigen::Index>(span_index(inner, w));
    Occupation k = w;
    for (Eigen::Index r = 0; r < adj.rows(); ++r) {
      if (adj(r, col) == cplx(0.0)) continue;
      set_span(inner, static_cast<std::size_t>(r), k);
      accumulate(out, k, adj(r, col));
    }
  }
};

}  // namespace

StateVector apply(const Expr& e, const Shape& shape, const StateVector& psi) {
  if (psi.shape != shape) throw Error(ErrorCode::ShapeMismatch, "state shape differs from program shape");
  if (e->lo != 0 || e->hi != shape.size())
    throw Error(ErrorCode::ShapeMismatch, "expression does not span the whole shape");
  Evaluator ev(shape);
  StateVector out{shape, {}};
  for (const auto& [k, z] : psi.amps)
    for (const auto& [r, w] : ev.eval(e, 0, k)) out.add(r, z * w);
  return out;
}

DenseOperator to_matrix(const Expr& e, const Shape& shape, std::size_t limit) {
  std::size_t d = system_dimension(shape, limit);
  if (e->lo != 0 || e->hi != shape.size())
    throw Error(ErrorCode::ShapeMismatch, "expression does not span the whole shape");
  DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  Evaluator ev(shape);
  for (std::size_t c = 0; c < d; ++c) {
    for (const auto& [r, z] : ev.eval(e, 0, basis_occupation(shape, c)))
      m(static_cast<Eigen::Index>(basis_index(shape, r)), static_cast<Eigen::Index>(c)) += z;
  }
  return m;
}

DenseOperator simulate(const DenseOperator& H, double r) {
  if (H.rows() != H.cols()) throw Error(ErrorCode::ShapeMismatch, "simulate needs a square matrix");
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
    throw Error(ErrorCode::NotHermitian, "simulate needs a Hermitian matrix");
  DenseOperator Hs = 0.5 * (H + H.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(Hs);
  const auto& lam = es.eigenvalues();
  DenseVector phase(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) phase(k) = std::exp(cplx(0.0, -r * lam(k)));
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

DenseVector to_dense(const StateVector& psi, std::size_t limit) {
  std::size_t d = system_dimension(psi.shape, limit);
  DenseVector v = DenseVector::Zero(static_cast<Eigen::Index>(d));
  for (const auto& [k, z] : psi.amps) v(static_cast<Eigen::Index>(basis_index(psi.shape, k))) += z;
  return v;
}

StateVector from_dense(const Shape& shape, const DenseVector& v, double tol) {
  StateVector out{shape, {}};
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > tol) out.add(basis_occupation(shape, static_cast<std::size_t>(i)), v(i));
  return out;
}

double spectral_norm(const DenseOperator& A) {
  if (A.size() == 0) return 0.0;
  if (A.rows() <= 64) {
    Eigen::JacobiSVD<DenseOperator> svd(A);
    return svd.singularValues()(0);
  }
  DenseOperator G = A.adjoint() * A;
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(0.5 * (G + G.adjoint()), Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double hermitian_norm(const DenseOperator& A) {
  if (A.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(0.5 * (A + A.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace sqc
