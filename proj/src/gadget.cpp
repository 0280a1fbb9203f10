#include "sqc/gadget.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "sqc/pauli.hpp"

namespace sqc {

double gadget_lambda_max(const PauliHamiltonian& h) {
  std::size_t k = 0, n = 0;
  double mass = 0.0;
  for (const auto& t : h.terms()) {
    if (t.string.locality() <= 2) continue;
    k = std::max(k, t.string.locality());
    mass += std::abs(t.coeff);
    ++n;
  }
  if (n == 0) return std::numeric_limits<double>::infinity();
  double km1 = static_cast<double>(k - 1);
  return km1 / 4.0 / (mass + static_cast<double>(n) * km1);
}

GadgetOutput gadgetize(const PauliHamiltonian& h, std::optional<double> lambda) {
  GadgetOutput out;
  out.lambda_max = gadget_lambda_max(h);
  out.lambda = lambda.value_or(std::isinf(out.lambda_max) ? 0.0 : out.lambda_max / 2.0);
  if (out.lambda > out.lambda_max)
    throw Error(ErrorCode::LambdaTooLarge, "gadget coupling " + std::to_string(out.lambda) +
                                               " exceeds lambda_max " + std::to_string(out.lambda_max));

  auto terms = h.terms();
  std::size_t width = h.width();
  for (const auto& t : terms)
    if (t.string.locality() > 2) width += t.string.locality();

  out.hamiltonian = PauliHamiltonian(width);
  auto widen = [&](const PauliString& s) {
    PauliString w(width);
    for (std::size_t q = 0; q < s.size(); ++q) w[q] = s[q];
    return w;
  };

  std::size_t next = h.width();
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const auto& t = terms[j];
    auto sup = t.string.support();
    if (sup.size() <= 2) {
      out.hamiltonian.add(t.coeff, widen(t.string));
      out.ancilla_map.emplace_back();
      continue;
    }
    std::vector<std::size_t> anc(sup.size());
    for (auto& a : anc) a = next++;
    out.ancilla_map.push_back(anc);

    TermGadget part{j, {}, {}};
    for (std::size_t m = 0; m < anc.size(); ++m)
      for (std::size_t n = m + 1; n < anc.size(); ++n) {
        part.couplers.push_back({anc[m], anc[n]});
        PauliString zz(width);
        zz[anc[m]] = Pauli::Z;
        zz[anc[n]] = Pauli::Z;
        out.hamiltonian.add(0.5, PauliString(width));
        out.hamiltonian.add(-0.5, zz);
      }
    for (std::size_t n = 0; n < sup.size(); ++n) {
      CrossCoupling c{n == 0 ? t.coeff : 1.0, t.string[sup[n]], sup[n], anc[n]};
      part.couplings.push_back(c);
      PauliString px(width);
      px[c.qubit] = c.op;
      px[c.ancilla] = Pauli::X;
      out.hamiltonian.add(out.lambda * c.coeff, px);
    }
    out.parts.push_back(std::move(part));
  }
  out.hamiltonian.prune();
  return out;
}

DenseOperator ground_state_density(const DenseOperator& h) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(h);
  const auto& w = es.eigenvalues();
  double tol = 1e-8 * std::max(1.0, w.cwiseAbs().maxCoeff());
  Eigen::Index deg = 0;
  while (deg < w.size() && w(deg) - w(0) <= tol) ++deg;
  DenseOperator v = es.eigenvectors().leftCols(deg);
  return v * v.adjoint() / static_cast<double>(deg);
}

DenseOperator trace_out_high(const DenseOperator& rho, std::size_t keep, std::size_t width) {
  auto d = Eigen::Index{1} << keep;
  auto rest = Eigen::Index{1} << (width - keep);
  DenseOperator out = DenseOperator::Zero(d, d);
  for (Eigen::Index a = 0; a < rest; ++a) out += rho.block(a * d, a * d, d, d);
  return out;
}

double gadget_ground_gap(const PauliHamiltonian& target, const GadgetOutput& g) {
  if (g.hamiltonian.width() > 10) throw Error(ErrorCode::TooLarge, "gadget system too wide for the dense oracle");
  DenseOperator pt = ground_state_density(to_dense(target));
  DenseOperator pg = ground_state_density(to_dense(g.hamiltonian));
  return spectral_norm(pt - trace_out_high(pg, target.width(), g.hamiltonian.width()));
}

}  // namespace sqc
