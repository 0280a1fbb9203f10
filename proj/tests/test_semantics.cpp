#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sqc/parser.hpp"
#include "sqc/semantics.hpp"

using namespace sqc;

TEST(Ladder, SingleKetRules) {
  auto r = ladder_apply(Ladder::Raise, 2, 0);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->k, 1);
  EXPECT_EQ(r->amp, cplx(1.0));
  EXPECT_FALSE(ladder_apply(Ladder::Raise, 2, 1));
  auto l = ladder_apply(Ladder::Lower, 4, 3);
  ASSERT_TRUE(l);
  EXPECT_EQ(l->k, 2);
  EXPECT_DOUBLE_EQ(l->amp.real(), std::sqrt(3.0));
  EXPECT_FALSE(ladder_apply(Ladder::Lower, 4, 0));
}

TEST(Ladder, MatchesBruteForceMatrix) {
  for (int m = 2; m <= 5; ++m) {
    auto a = to_matrix(annihilate(0), {SiteType::boson(m)});
    EXPECT_LE((a - oracle::lowering(m)).norm(), 1e-15) << m;
    auto ad = to_matrix(dagger(annihilate(0)), {SiteType::boson(m)});
    EXPECT_LE((ad - oracle::lowering(m).adjoint()).norm(), 1e-15) << m;
  }
}

TEST(FermionSign, PriorExcitations) {
  Shape s{SiteType::boson(3), SiteType::fermion(), SiteType::fermion(), SiteType::fermion()};
  EXPECT_EQ(fermion_sign(s, {1, 1, 1, 0}, 2), -1);
  EXPECT_EQ(fermion_sign(s, {0, 0, 0, 0}, 3), 1);
  EXPECT_EQ(fermion_sign(s, {2, 0, 0, 0}, 1), 1);
  Shape ff{SiteType::fermion(), SiteType::fermion()};
  EXPECT_EQ(fermion_sign(ff, {1, 1}, 1), -1);
}

TEST(Apply, SignExample) {
  Shape s{SiteType::boson(3), SiteType::fermion(), SiteType::fermion(), SiteType::fermion()};
  auto e = desugar_indexed(SiteOp::A, 2, s);
  auto out = apply(e, s, StateVector::basis(s, {1, 1, 1, 0}));
  ASSERT_EQ(out.amps.size(), 1u);
  EXPECT_EQ(out.amps.begin()->first, (Occupation{1, 1, 0, 0}));
  EXPECT_EQ(out.amps.begin()->second, cplx(-1.0));
}

TEST(Apply, CreatorSignOnSecondSite) {
  Shape s{SiteType::fermion(), SiteType::fermion()};
  auto e = desugar_indexed(SiteOp::Adag, 1, s);
  for (int m = 0; m < 2; ++m) {
    auto out = apply(e, s, StateVector::basis(s, {m, 0}));
    ASSERT_EQ(out.amps.size(), 1u);
    EXPECT_EQ(out.amps.begin()->first, (Occupation{m, 1}));
    EXPECT_EQ(out.amps.begin()->second, cplx(m ? -1.0 : 1.0));
  }
}

TEST(Apply, ProjectorsOnBosons) {
  Shape s{SiteType::boson(2), SiteType::boson(2)};
  auto e = tensor(site_operator(SiteOp::N1, 0), site_operator(SiteOp::N0, 1));
  auto keep = apply(e, s, StateVector::basis(s, {1, 0}));
  ASSERT_EQ(keep.amps.size(), 1u);
  EXPECT_EQ(keep.amps.at({1, 0}), cplx(1.0));
  EXPECT_TRUE(apply(e, s, StateVector::basis(s, {0, 0})).is_zero());

  auto half = 1.0 / std::sqrt(2.0);
  StateVector psi = half * StateVector::basis(s, {0, 1}) + half * StateVector::basis(s, {1, 0});
  auto out = apply(desugar_indexed(SiteOp::N1, 1, s), s, psi);
  ASSERT_EQ(out.amps.size(), 1u);
  EXPECT_NEAR(std::abs(out.amps.at({0, 1}) - half), 0.0, 1e-15);
}

TEST(Apply, Linearity) {
  oracle::Gen g(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = g.shape(3, false);
    auto e = g.expr(0, 3, 3);
    auto d = system_dimension(s);
    auto w1 = StateVector::basis(s, basis_occupation(s, static_cast<std::size_t>(g.uniform(0, int(d) - 1))));
    auto w2 = StateVector::basis(s, basis_occupation(s, static_cast<std::size_t>(g.uniform(0, int(d) - 1))));
    cplx z1 = g.amplitude(), z2 = g.amplitude();
    auto lhs = to_dense(apply(e, s, z1 * w1 + z2 * w2));
    auto rhs = to_dense(z1 * apply(e, s, w1) + z2 * apply(e, s, w2));
    EXPECT_LE((lhs - rhs).norm(), 1e-12);
  }
}

TEST(ToMatrix, Examples) {
  Shape b2{SiteType::boson(2)};
  oracle::Mat a(2, 2);
  a << 0, 1, 0, 0;
  EXPECT_LE((to_matrix(annihilate(0), b2) - a).norm(), 0.0);
  Shape s{SiteType::boson(3), SiteType::fermion()};
  EXPECT_LE((to_matrix(tensor(identity(0), identity(1)), s) - oracle::Mat::Identity(6, 6)).norm(), 0.0);
  auto z = add(site_operator(SiteOp::N0, 0), scale(site_operator(SiteOp::N1, 0), -1.0, b2));
  EXPECT_LE((to_matrix(z, b2) - oracle::pauli('Z')).norm(), 1e-15);
}

TEST(ToMatrix, TooLarge) {
  Shape s(11, SiteType::fermion());
  try {
    to_matrix(identity_chain(s), s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(Anticommutation, AllFermionRegisters) {
  for (std::size_t n = 1; n <= 4; ++n) {
    Shape s(n, SiteType::fermion());
    std::vector<DenseOperator> a, ad;
    for (std::size_t j = 0; j < n; ++j) {
      a.push_back(to_matrix(desugar_indexed(SiteOp::A, j, s), s));
      ad.push_back(to_matrix(desugar_indexed(SiteOp::Adag, j, s), s));
    }
    auto d = static_cast<Eigen::Index>(system_dimension(s));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        EXPECT_LE((a[j] * a[k] + a[k] * a[j]).cwiseAbs().maxCoeff(), 1e-12);
        DenseOperator want = j == k ? DenseOperator(DenseOperator::Identity(d, d)) : DenseOperator(DenseOperator::Zero(d, d));
        EXPECT_LE((a[j] * ad[k] + ad[k] * a[j] - want).cwiseAbs().maxCoeff(), 1e-12);
      }
  }
}

TEST(Simulate, ClosedForms) {
  auto u = simulate(oracle::pauli('Z'), M_PI);
  EXPECT_LE((u + oracle::Mat::Identity(2, 2)).norm(), 1e-12);
  EXPECT_LE((simulate(oracle::pauli('X'), 0.0) - oracle::Mat::Identity(2, 2)).norm(), 1e-15);
  double t = 0.37;
  oracle::Mat rx(2, 2);
  rx << std::cos(t), cplx(0, -std::sin(t)), cplx(0, -std::sin(t)), std::cos(t);
  EXPECT_LE((simulate(oracle::pauli('X'), t) - rx).norm(), 1e-12);
}

TEST(Simulate, GroupLaw) {
  oracle::Mat h = 0.3 * oracle::string_matrix("XZ") - 1.1 * oracle::string_matrix("YY") +
                  0.7 * oracle::string_matrix("ZI");
  oracle::Mat u = simulate(h, 0.4) * simulate(h, 0.9);
  EXPECT_LE((simulate(h, 1.3) - u).norm(), 1e-9);
  EXPECT_LE((simulate(h, 1.3) - oracle::evolve(h, 1.3)).norm(), 1e-9);
}

TEST(Simulate, RejectsNonHermitian) {
  oracle::Mat a = oracle::lowering(2);
  try {
    simulate(a, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
  }
}
