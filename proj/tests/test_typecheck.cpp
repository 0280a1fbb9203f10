#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sqc/parser.hpp"
#include "sqc/semantics.hpp"
#include "sqc/typecheck.hpp"

using namespace sqc;

TEST(Infer, Examples) {
  Shape ff{SiteType::fermion(), SiteType::fermion()};
  auto hop = parse("sites [fermion, fermion]; H = adag(0).a(1) + adag(1).a(0)");
  EXPECT_EQ(infer(hop.hamiltonian, hop.shape).kind, Kind::Hermitian);
  EXPECT_EQ(infer(annihilate(0, 2.0), {SiteType::boson(4)}).kind, Kind::Plain);
  Shape mixed{SiteType::boson(3), SiteType::fermion()};
  EXPECT_EQ(infer(tensor(identity(0), identity(1)), mixed).kind, Kind::Hermitian);
  EXPECT_EQ(infer(identity(0), {SiteType::boson(5)}).kind, Kind::Hermitian);
}

TEST(Infer, ShapeMismatch) {
  Shape ff{SiteType::fermion(), SiteType::fermion()};
  try {
    infer(annihilate(0), ff);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
  }
}

TEST(CheckHermitian, Examples) {
  Shape b2{SiteType::boson(2)};
  EXPECT_TRUE(check_hermitian(site_operator(SiteOp::X, 0), b2));
  EXPECT_FALSE(check_hermitian(annihilate(0), b2));
  auto y = add(annihilate(0, cplx(0, 1)), dagger(annihilate(0, cplx(0, 1))));
  EXPECT_TRUE(check_hermitian(y, b2));
  auto dense = to_matrix(y, b2);
  EXPECT_LE((dense - dense.adjoint()).norm(), 1e-15);
  EXPECT_TRUE(check_hermitian(site_operator(SiteOp::Y, 0), b2));
}

TEST(AdmitSimulation, Examples) {
  auto hub = parse("sites [fermion, fermion]; H = -1*(adag(0).a(1) + adag(1).a(0)) + 2*(n1(0).n1(1))");
  EXPECT_EQ(admit_simulation(hub.hamiltonian, hub.shape).kind, Kind::Unitary);

  auto ising = parse("sites [boson(2) x 3]; H = 0.5 * sum j in 0..2 { X(j) } + sum j in 0..1 { Z(j).Z(j+1) }");
  EXPECT_EQ(admit_simulation(ising.hamiltonian, ising.shape).kind, Kind::Unitary);
  auto m = to_matrix(ising.hamiltonian, ising.shape);
  EXPECT_LE((m - m.adjoint()).norm(), 1e-12);

  Shape ff{SiteType::fermion(), SiteType::fermion()};
  try {
    admit_simulation(desugar_indexed(SiteOp::Adag, 0, ff), ff);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
  }
  EXPECT_TRUE(hermitian_witness(desugar_indexed(SiteOp::Adag, 0, ff), ff));
  auto hop = parse("sites [fermion, fermion]; H = adag(0).a(1) + adag(1).a(0)");
  EXPECT_FALSE(hermitian_witness(hop.hamiltonian, hop.shape));
}

TEST(Soundness, RandomHermitianExpressions) {
  oracle::Gen g(2024);
  int checked = 0, attempts = 0;
  while (checked < 100 && attempts < 5000) {
    ++attempts;
    auto s = g.shape(static_cast<std::size_t>(g.uniform(1, 3)), false, 4);
    auto e0 = g.expr(0, s.size(), 3);
    auto e = g.uniform(0, 3) == 0 ? e0 : add(e0, dagger(e0));
    if (infer(e, s).kind != Kind::Hermitian) continue;
    ++checked;
    auto m = to_matrix(e, s);
    ASSERT_LE(oracle::opnorm(m - m.adjoint()), 1e-9) << print(e);
    EXPECT_EQ(admit_simulation(e, s).kind, Kind::Unitary);
    auto u = simulate(m, 1.0);
    auto d = m.rows();
    ASSERT_LE(oracle::opnorm(u.adjoint() * u - oracle::Mat::Identity(d, d)), 1e-9);
  }
  EXPECT_EQ(checked, 100);
}

TEST(Soundness, PromotionKeepsMatrix) {
  Shape b2{SiteType::boson(2)};
  auto x = site_operator(SiteOp::X, 0);
  auto m = to_matrix(x, b2);
  EXPECT_EQ(infer(x, b2).kind, Kind::Hermitian);
  EXPECT_LE((m - oracle::pauli('X')).norm(), 0.0);
}
