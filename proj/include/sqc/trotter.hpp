#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqc/ir.hpp"

namespace sqc {

struct TrotterStep {
  double theta;  // step is exp(-i theta string)
  PauliString string;
};

enum class TrotterAlgorithm { Standard, QDrift };
const char* to_string(TrotterAlgorithm a);

struct TrotterPlan {
  TrotterAlgorithm algorithm = TrotterAlgorithm::Standard;
  std::size_t width = 0;
  int m = 1;                // Standard repetitions
  int N = 0;                // QDrift samples
  std::uint64_t seed = 0;   // QDrift seed
  std::vector<TrotterStep> steps;
  double bound = 0.0;
  double drop_penalty = 0.0;
};

/// Sweep terms: `order` strings first in the given order, then the rest lexicographically.
/// Throws Usage if an `order` entry is not a term of `h`.
std::vector<PauliTerm> sweep_order(const PauliHamiltonian& h, const std::vector<PauliString>& order = {});

/// (r^2/2) sum_k ||[sum_{j>k} H_k', H_k]|| over the d*m list H_k = c_j P_j / m.
double bound_expanded(const std::vector<PauliTerm>& sweep, double r, int m);

/// r^2/(2m) sum_p ||[sum_{q>p} c_q P_q, c_p P_p]||, one sweep at a time.
double bound_per_sweep(const std::vector<PauliTerm>& sweep, double r, int m);

/// Minimum of the two sound bounds above.
double bound_standard(const std::vector<PauliTerm>& sweep, double r, int m);
double bound_standard(const PauliHamiltonian& h, double r, int m);

TrotterPlan plan_standard(const PauliHamiltonian& h, double r, int m,
                          const std::vector<PauliString>& order = {});

/// 2 lambda^2 r^2 / N with lambda = sum |c_j|.
double bound_qdrift(const PauliHamiltonian& h, double r, int N);

/// k-th output of SplitMix64 started at `seed`, so draws are addressable by counter.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t k);

/// Top 53 bits of splitmix64(seed, k) as a double in [0, 1).
double uniform01(std::uint64_t seed, std::uint64_t k);

TrotterPlan plan_qdrift(const PauliHamiltonian& h, double r, int N, std::uint64_t seed);

/// Smallest m with bound_standard + drop_penalty <= epsilon; throws Unreachable when the
/// drop penalty alone exceeds epsilon or no m up to 2^20 suffices.
int choose_m(const PauliHamiltonian& h, double r, double epsilon, double drop_penalty = 0.0,
             const std::vector<PauliString>& order = {});

struct QDriftCheck {
  double distance;  // max over inputs of the trace distance of averaged vs exact output
  double sigma;     // standard-error bound on that trace distance
  double bound;
  int seeds;
  bool pass;        // distance <= bound + 3 sigma
};

/// Averages sampled product channels over `seeds` consecutive seeds starting at `first_seed`.
/// The exact channel evolves under `reference` when given (e.g. before dropping terms), and
/// `extra` is added to the bound.
QDriftCheck qdrift_channel_check(const PauliHamiltonian& h, double r, int N, int seeds,
                                 std::uint64_t first_seed = 0, const PauliHamiltonian* reference = nullptr,
                                 double extra = 0.0);

}  // namespace sqc
