#include <gtest/gtest.h>

#include <fstream>

#include <json.hpp>

#include "oracle.hpp"
#include "sqc/pauli.hpp"
#include "sqc/trotter.hpp"

using namespace sqc;

namespace {

PauliHamiltonian make(std::size_t width, std::vector<std::pair<double, const char*>> terms) {
  PauliHamiltonian h(width);
  for (auto [c, s] : terms) h.add(c, PauliString::parse(s));
  return h;
}

PauliHamiltonian hubbard_kept() { return make(2, {{-0.5, "XX"}, {-0.5, "YY"}, {0.5, "ZZ"}}); }

oracle::Mat dense(const PauliHamiltonian& h) {
  std::vector<std::pair<double, std::string>> terms;
  for (const auto& t : h.terms()) terms.emplace_back(t.coeff, t.string.str());
  return oracle::pauli_sum(terms);
}

// Product of exp(-i theta P) in step order, built from closed-form exponentials.
oracle::Mat product(const TrotterPlan& p) {
  auto d = Eigen::Index{1} << p.width;
  oracle::Mat u = oracle::Mat::Identity(d, d);
  for (const auto& s : p.steps) {
    oracle::Mat P = oracle::string_matrix(s.string.str());
    u = (std::cos(s.theta) * oracle::Mat::Identity(d, d) - cplx(0, std::sin(s.theta)) * P) * u;
  }
  return u;
}

PauliHamiltonian random_hamiltonian(oracle::Gen& g) {
  auto n = static_cast<std::size_t>(g.uniform(1, 3));
  int d = g.uniform(1, 4);
  PauliHamiltonian h(n);
  const char letters[] = "IXYZ";
  while (static_cast<int>(h.size()) < d) {
    std::string s;
    for (std::size_t q = 0; q < n; ++q) s += letters[g.uniform(0, 3)];
    if (s == std::string(n, 'I')) continue;
    double c = g.real(-1.5, 1.5);
    if (std::abs(c) < 0.05) continue;
    if (h.coeff(PauliString::parse(s)) == 0.0) h.add(c, PauliString::parse(s));
    if (n == 1 && h.size() == 3) break;
  }
  return h;
}

}  // namespace

TEST(Sweep, OrderFirstThenLexicographic) {
  auto h = hubbard_kept();
  auto s = sweep_order(h, {PauliString::parse("ZZ"), PauliString::parse("YY")});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].string.str(), "ZZ");
  EXPECT_EQ(s[1].string.str(), "YY");
  EXPECT_EQ(s[2].string.str(), "XX");
  EXPECT_EQ(sweep_order(h)[0].string.str(), "XX");
  EXPECT_THROW(sweep_order(h, {PauliString::parse("XZ")}), Error);
  EXPECT_THROW(sweep_order(h, {PauliString::parse("XX"), PauliString::parse("XX")}), Error);
}

TEST(Standard, HubbardAngles) {
  auto plan = plan_standard(hubbard_kept(), M_PI / 4, 1,
                            {PauliString::parse("ZZ"), PauliString::parse("YY"), PauliString::parse("XX")});
  ASSERT_EQ(plan.steps.size(), 3u);
  EXPECT_EQ(plan.steps[0].string.str(), "ZZ");
  EXPECT_NEAR(2 * plan.steps[0].theta, M_PI / 4, 1e-15);
  EXPECT_NEAR(2 * plan.steps[1].theta, -M_PI / 4, 1e-15);
  EXPECT_NEAR(2 * plan.steps[2].theta, -M_PI / 4, 1e-15);
}

TEST(Standard, RepetitionsDivideAngles) {
  auto h = make(2, {{0.8, "XI"}, {-0.3, "ZZ"}});
  auto plan = plan_standard(h, 0.9, 4);
  ASSERT_EQ(plan.steps.size(), 8u);
  auto terms = h.terms();
  for (std::size_t k = 0; k < 8; ++k) {
    const auto& t = terms[k % 2];
    EXPECT_EQ(plan.steps[k].string, t.string);
    EXPECT_NEAR(plan.steps[k].theta, 0.9 * t.coeff / 4, 1e-15);
  }
}

TEST(Bound, TwoAnticommutingTerms) {
  auto h = make(1, {{1.0, "X"}, {1.0, "Z"}});
  EXPECT_NEAR(bound_standard(h, 1.0, 1), 1.0, 1e-12);
  EXPECT_NEAR(bound_standard(h, 1.0, 10), 0.1, 1e-12);
  EXPECT_EQ(choose_m(h, 1.0, 0.1), 10);
  EXPECT_EQ(choose_m(h, 1.0, 0.0999), 11);
  EXPECT_EQ(choose_m(h, 1.0, 2.0), 1);
}

TEST(Bound, Unreachable) {
  auto h = make(1, {{1.0, "X"}, {1.0, "Z"}});
  try {
    choose_m(h, 1.0, 0.1, 0.2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unreachable);
  }
  try {
    choose_m(h, 1.0, 1e-9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unreachable);
  }
}

TEST(Bound, HubbardFullProgram) {
  auto full = make(2, {{-0.5, "XX"}, {-0.5, "YY"}, {0.5, "ZZ"}, {-0.5, "ZI"}, {-0.5, "IZ"}, {0.5, "II"}});
  auto sweep = sweep_order(full);
  EXPECT_LE(bound_standard(sweep, M_PI / 4, 1), M_PI * M_PI / 16 + 1e-12);
}

TEST(Bound, SoundOnRandomHamiltonians) {
  oracle::Gen g(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto h = random_hamiltonian(g);
    double r = g.real(0.05, 1.0);
    oracle::Mat exact = oracle::evolve(dense(h), r);
    for (int m : {1, 2, 4}) {
      auto plan = plan_standard(h, r, m);
      double dist = oracle::opnorm(product(plan) - exact);
      ASSERT_LE(dist, plan.bound + 1e-9) << "trial " << trial << " m " << m;
      EXPECT_LE(plan.bound, bound_per_sweep(sweep_order(h), r, m) + 1e-15);
    }
  }
}

TEST(Bound, CommutingFamiliesAreExact) {
  std::vector<PauliHamiltonian> families = {
      make(3, {{0.7, "ZZI"}, {-0.4, "IZZ"}, {1.1, "ZIZ"}, {0.3, "IIZ"}}),
      make(3, {{0.9, "XXI"}, {0.6, "YYI"}, {-0.2, "ZZI"}}),
      make(2, {{1.3, "XI"}, {-0.8, "IY"}}),
  };
  for (const auto& h : families) {
    auto plan = plan_standard(h, 1.0, 1);
    EXPECT_NEAR(plan.bound, 0.0, 1e-15);
    EXPECT_LE(oracle::opnorm(product(plan) - oracle::evolve(dense(h), 1.0)), 1e-9);
  }
}

TEST(QDrift, BoundFormulaAndGolden) {
  std::ifstream in(std::string(SQC_GOLDEN_DIR) + "/qdrift_hubbard.json");
  ASSERT_TRUE(in);
  auto golden = nlohmann::json::parse(in);
  auto h = hubbard_kept();
  EXPECT_DOUBLE_EQ(h.lambda(), golden["lambda"].get<double>());
  double b = bound_qdrift(h, M_PI / 4, 3);
  EXPECT_NEAR(b, 3 * M_PI * M_PI / 32, 1e-15);
  EXPECT_NEAR(b, golden["bound"].get<double>(), 1e-15);
  EXPECT_NEAR(2 * b, golden["published_bound"].get<double>(), 1e-15);
}

TEST(QDrift, SplitMixReferenceStream) {
  EXPECT_EQ(splitmix64(0, 0), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(splitmix64(0, 1), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(splitmix64(0, 2), 0x06C45D188009454Full);
  double u = uniform01(0, 0);
  EXPECT_EQ(u, static_cast<double>(0xE220A8397B1DCDAFull >> 11) * 0x1.0p-53);
}

TEST(QDrift, PlanIsDeterministic) {
  auto h = hubbard_kept();
  auto a = plan_qdrift(h, M_PI / 4, 20, 42), b = plan_qdrift(h, M_PI / 4, 20, 42);
  ASSERT_EQ(a.steps.size(), 20u);
  for (std::size_t k = 0; k < a.steps.size(); ++k) {
    EXPECT_EQ(a.steps[k].theta, b.steps[k].theta);
    EXPECT_EQ(a.steps[k].string, b.steps[k].string);
    EXPECT_NEAR(std::abs(a.steps[k].theta), M_PI / 4 * 1.5 / 20, 1e-15);
    EXPECT_EQ(a.steps[k].theta < 0, h.coeff(a.steps[k].string) < 0);
  }
}

TEST(QDrift, SamplingFrequencies) {
  auto h = make(1, {{0.1, "X"}, {-0.6, "Y"}, {0.3, "Z"}});
  std::map<std::string, int> counts;
  auto plan = plan_qdrift(h, 1.0, 20000, 5);
  for (const auto& s : plan.steps) ++counts[s.string.str()];
  EXPECT_NEAR(counts["X"] / 20000.0, 0.1, 0.01);
  EXPECT_NEAR(counts["Y"] / 20000.0, 0.6, 0.01);
  EXPECT_NEAR(counts["Z"] / 20000.0, 0.3, 0.01);
}

TEST(QDrift, ChannelAverageWithinBound) {
  auto check = qdrift_channel_check(hubbard_kept(), M_PI / 4, 3, 1000);
  EXPECT_EQ(check.seeds, 1000);
  EXPECT_NEAR(check.bound, 3 * M_PI * M_PI / 32, 1e-15);
  EXPECT_TRUE(check.pass) << check.distance << " vs " << check.bound << " + 3*" << check.sigma;
}
