#include "sqc/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "sqc/pauli.hpp"
#include "sqc/semantics.hpp"

namespace sqc {

const char* to_string(TrotterAlgorithm a) {
  return a == TrotterAlgorithm::Standard ? "standard" : "qdrift";
}

std::vector<PauliTerm> sweep_order(const PauliHamiltonian& h, const std::vector<PauliString>& order) {
  std::vector<PauliTerm> out;
  std::map<PauliString, bool> used;
  for (const auto& s : order) {
    if (s.size() != h.width())
      throw Error(ErrorCode::Usage, "order entry " + s.str() + " has the wrong width");
    double c = h.coeff(s);
    if (c == 0.0) throw Error(ErrorCode::Usage, "order entry " + s.str() + " is not a term of the Hamiltonian");
    if (used[s]) throw Error(ErrorCode::Usage, "order entry " + s.str() + " repeated");
    used[s] = true;
    out.push_back({c, s});
  }
  for (const auto& t : h.terms())
    if (!used[t.string]) out.push_back(t);
  return out;
}

namespace {

// i [sum_q a_q Q_q, c P] as a real Pauli sum.
PauliHamiltonian icommutator(const std::vector<PauliTerm>& a, double c, const PauliString& p) {
  PauliHamiltonian out(p.size());
  for (const auto& t : a) {
    if (!anticommute(t.string, p)) continue;
    auto [k, s] = string_mul(t.string, p);
    out.add(2.0 * t.coeff * c * times_i(1.0, k + 1).real(), s);
  }
  out.prune(1e-15);
  return out;
}

double l1(const PauliHamiltonian& h) { return h.lambda(); }

PauliHamiltonian combine(const PauliHamiltonian& a, const PauliHamiltonian& b, double t) {
  PauliHamiltonian out = a;
  for (const auto& x : b.terms()) out.add(t * x.coeff, x.string);
  out.prune(1e-15);
  return out;
}

}  // namespace

double bound_per_sweep(const std::vector<PauliTerm>& sweep, double r, int m) {
  double total = 0.0;
  for (std::size_t p = 0; p < sweep.size(); ++p) {
    std::vector<PauliTerm> later(sweep.begin() + static_cast<std::ptrdiff_t>(p) + 1, sweep.end());
    total += pauli_norm(icommutator(later, sweep[p].coeff, sweep[p].string));
  }
  return r * r / (2.0 * m) * total;
}

double bound_expanded(const std::vector<PauliTerm>& sweep, double r, int m) {
  if (sweep.empty()) return 0.0;
  std::size_t width = sweep.front().string.size();
  bool exact = width <= 6 && static_cast<std::size_t>(m) * sweep.size() <= 4096;
  double total = 0.0;
  for (std::size_t p = 0; p < sweep.size(); ++p) {
    std::vector<PauliTerm> later(sweep.begin() + static_cast<std::ptrdiff_t>(p) + 1, sweep.end());
    auto c1 = icommutator(later, sweep[p].coeff, sweep[p].string);
    auto c2 = icommutator(sweep, sweep[p].coeff, sweep[p].string);
    if (exact) {
      // element p of sweep s sees (m-1-s) further full sweeps
      for (int t = 0; t < m; ++t) total += pauli_norm(combine(c1, c2, t));
    } else {
      double n1 = width <= 10 ? pauli_norm(c1) : l1(c1);
      double n2 = width <= 10 ? pauli_norm(c2) : l1(c2);
      total += m * n1 + n2 * m * (m - 1) / 2.0;
    }
  }
  return r * r / 2.0 * total / (static_cast<double>(m) * m);
}

double bound_standard(const std::vector<PauliTerm>& sweep, double r, int m) {
  return std::min(bound_expanded(sweep, r, m), bound_per_sweep(sweep, r, m));
}

double bound_standard(const PauliHamiltonian& h, double r, int m) {
  return bound_standard(sweep_order(h), r, m);
}

TrotterPlan plan_standard(const PauliHamiltonian& h, double r, int m, const std::vector<PauliString>& order) {
  if (m < 1) throw Error(ErrorCode::Usage, "Trotter repetitions must be positive");
  TrotterPlan plan;
  plan.algorithm = TrotterAlgorithm::Standard;
  plan.width = h.width();
  plan.m = m;
  auto sweep = sweep_order(h, order);
  for (int k = 0; k < m; ++k)
    for (const auto& t : sweep) plan.steps.push_back({r * t.coeff / m, t.string});
  plan.bound = bound_standard(sweep, r, m);
  return plan;
}

double bound_qdrift(const PauliHamiltonian& h, double r, int N) {
  if (N < 1) throw Error(ErrorCode::Usage, "QDrift sample count must be positive");
  double lam = h.lambda();
  return 2.0 * lam * lam * r * r / N;
}

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t k) {
  return static_cast<double>(splitmix64(seed, k) >> 11) * 0x1.0p-53;
}

TrotterPlan plan_qdrift(const PauliHamiltonian& h, double r, int N, std::uint64_t seed) {
  if (h.empty()) throw Error(ErrorCode::Usage, "QDrift needs a non-empty Hamiltonian");
  TrotterPlan plan;
  plan.algorithm = TrotterAlgorithm::QDrift;
  plan.width = h.width();
  plan.N = N;
  plan.seed = seed;
  plan.bound = bound_qdrift(h, r, N);
  auto terms = h.terms();
  double lam = h.lambda();
  std::vector<double> cumulative;
  double acc = 0.0;
  for (const auto& t : terms) cumulative.push_back(acc += std::abs(t.coeff) / lam);
  double angle = r * lam / N;
  for (int k = 0; k < N; ++k) {
    double u = uniform01(seed, static_cast<std::uint64_t>(k));
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t j = it == cumulative.end() ? terms.size() - 1 : static_cast<std::size_t>(it - cumulative.begin());
    plan.steps.push_back({terms[j].coeff < 0 ? -angle : angle, terms[j].string});
  }
  return plan;
}

int choose_m(const PauliHamiltonian& h, double r, double epsilon, double drop_penalty,
             const std::vector<PauliString>& order) {
  if (!(epsilon > 0)) throw Error(ErrorCode::Usage, "epsilon must be positive");
  if (drop_penalty > epsilon)
    throw Error(ErrorCode::Unreachable, "drop penalty " + std::to_string(drop_penalty) +
                                            " alone exceeds epsilon " + std::to_string(epsilon));
  auto sweep = sweep_order(h, order);
  auto ok = [&](int m) { return bound_standard(sweep, r, m) + drop_penalty <= epsilon; };
  constexpr int kMax = 1 << 20;

  std::vector<double> seen;
  int hi = 1;
  while (true) {
    double b = bound_standard(sweep, r, hi);
    seen.push_back(b);
    if (b + drop_penalty <= epsilon) break;
    if (hi >= kMax) throw Error(ErrorCode::Unreachable, "no repetition count up to 2^20 meets epsilon");
    hi *= 2;
  }
  bool monotone = std::is_sorted(seen.rbegin(), seen.rend());
  if (!monotone) {
    for (int m = 1; m <= hi; ++m)
      if (ok(m)) return m;
    return hi;
  }
  int lo = hi / 2;  // fails, or 0 when hi == 1
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

QDriftCheck qdrift_channel_check(const PauliHamiltonian& h, double r, int N, int seeds,
                                 std::uint64_t first_seed, const PauliHamiltonian* reference, double extra) {
  if (h.width() > 10) throw Error(ErrorCode::TooLarge, "QDrift check needs at most 10 qubits");
  if (seeds < 1) throw Error(ErrorCode::Usage, "QDrift check needs at least one seed");
  auto dim = Eigen::Index{1} << h.width();
  DenseOperator exact = simulate(to_dense(reference ? *reference : h), r);

  std::vector<Eigen::Index> inputs;
  if (dim <= 16) {
    for (Eigen::Index b = 0; b < dim; ++b) inputs.push_back(b);
  } else {
    for (int j = 0; j < 16; ++j) inputs.push_back(static_cast<Eigen::Index>(j * (dim - 1) / 15));
  }

  std::vector<TrotterPlan> plans;
  plans.reserve(static_cast<std::size_t>(seeds));
  for (int s = 0; s < seeds; ++s) plans.push_back(plan_qdrift(h, r, N, first_seed + static_cast<std::uint64_t>(s)));

  QDriftCheck out{0.0, 0.0, bound_qdrift(h, r, N) + extra, seeds, false};
  for (auto b : inputs) {
    DenseOperator avg = DenseOperator::Zero(dim, dim);
    for (const auto& plan : plans) {
      DenseVector v = DenseVector::Zero(dim);
      v(b) = 1.0;
      for (const auto& st : plan.steps) apply_exp(st.string, st.theta, v);
      avg += v * v.adjoint();
    }
    avg /= static_cast<double>(seeds);
    DenseVector e = exact.col(b);
    DenseOperator diff = avg - e * e.adjoint();
    Eigen::SelfAdjointEigenSolver<DenseOperator> es(0.5 * (diff + diff.adjoint()), Eigen::EigenvaluesOnly);
    double trace_distance = 0.5 * es.eigenvalues().cwiseAbs().sum();
    // each sample is a pure state: E||rho_s||_F^2 = 1
    double purity = avg.squaredNorm();
    double sigma_f = std::sqrt(std::max(0.0, 1.0 - purity) / seeds);
    double sigma = 0.5 * std::sqrt(static_cast<double>(dim)) * sigma_f;
    out.distance = std::max(out.distance, trace_distance);
    out.sigma = std::max(out.sigma, sigma);
  }
  out.pass = out.distance <= out.bound + 3.0 * out.sigma;
  return out;
}

}  // namespace sqc
