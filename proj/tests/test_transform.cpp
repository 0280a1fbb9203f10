#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sqc/parser.hpp"
#include "sqc/semantics.hpp"
#include "sqc/transform.hpp"
#include "sqc/typecheck.hpp"

using namespace sqc;

namespace {

const cplx kI(0.0, 1.0);

// 1/2 (p + coeff q) on one qubit, written the way the binary-encoding table prints it.
QubitExpr half(Pauli p, cplx coeff, Pauli q, std::size_t qubit) {
  return qsum(qprod(qscalar(0.5), qpauli(p, qubit)), qprod(qscalar(0.5 * coeff), qpauli(q, qubit)));
}

QubitExpr raise_bit(std::size_t q) { return half(Pauli::X, -kI, Pauli::Y, q); }
QubitExpr lower_bit(std::size_t q) { return half(Pauli::X, kI, Pauli::Y, q); }
QubitExpr vacant(std::size_t q) { return half(Pauli::I, 1.0, Pauli::Z, q); }
QubitExpr occupied(std::size_t q) { return half(Pauli::I, -1.0, Pauli::Z, q); }

struct Row {
  int from, to;
  QubitExpr q0, q1;
};

oracle::Mat transformed_matrix(const Expr& e, const Shape& s) {
  auto t = transform_expr(dag_canonicalize(e, s), s);
  return oracle::qubit_matrix(t.expr, t.layout.width);
}

Eigen::VectorXcd qubit_vector(const StateVector& psi, const Shape& s) {
  return to_dense(transform_state(psi, s));
}

StateVector random_state(oracle::Gen& g, const Shape& s) {
  StateVector psi{s, {}};
  auto d = static_cast<int>(system_dimension(s));
  int count = g.uniform(1, 3);
  for (int k = 0; k < count; ++k)
    psi.add(basis_occupation(s, static_cast<std::size_t>(g.uniform(0, d - 1))), cplx(g.real(-1, 1), g.real(-1, 1)));
  return psi;
}

}  // namespace

TEST(Layout, Widths) {
  auto l = SiteLayout::of({SiteType::fermion(), SiteType::boson(4), SiteType::boson(5), SiteType::boson(2)});
  EXPECT_EQ(l.count, (std::vector<std::size_t>{1, 2, 3, 1}));
  EXPECT_EQ(l.offset, (std::vector<std::size_t>{0, 1, 3, 6}));
  EXPECT_EQ(l.width, 7u);
}

TEST(BosonTable, CreatorAndAnnihilatorRows) {
  std::vector<Row> creator = {
      {0, 1, raise_bit(0), vacant(1)},
      {1, 2, lower_bit(0), raise_bit(1)},
      {2, 3, raise_bit(0), occupied(1)},
  };
  std::vector<Row> annihilator = {
      {3, 2, lower_bit(0), occupied(1)},
      {2, 1, raise_bit(0), lower_bit(1)},
      {1, 0, lower_bit(0), vacant(1)},
  };
  for (const auto* rows : {&creator, &annihilator})
    for (const auto& r : *rows) {
      EXPECT_EQ(print(boson_bit_operator(r.from, r.to, 0, 0)), print(r.q0)) << r.from << "->" << r.to;
      EXPECT_EQ(print(boson_bit_operator(r.from, r.to, 1, 1)), print(r.q1)) << r.from << "->" << r.to;
    }
}

TEST(BosonTable, DenseLadderMatrices) {
  Shape s{SiteType::boson(4)};
  auto a = boson_ladder(4, 0, false);
  auto ad = boson_ladder(4, 0, true);
  EXPECT_LE((oracle::qubit_matrix(a, 2) - oracle::lowering(4)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((oracle::qubit_matrix(ad, 2) - oracle::lowering(4).adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((oracle::qubit_matrix(a, 2) - to_matrix(annihilate(0), s)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((oracle::qubit_matrix(ad, 2) - to_matrix(dagger(annihilate(0)), s)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((transformed_matrix(annihilate(0), s) - oracle::lowering(4)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(BosonTable, BitPatterns) {
  EXPECT_EQ(print(boson_bit_operator(3, 4, 0, 0)), print(lower_bit(0)));
  EXPECT_EQ(print(boson_bit_operator(3, 4, 1, 1)), print(lower_bit(1)));
  EXPECT_EQ(print(boson_bit_operator(3, 4, 2, 2)), print(raise_bit(2)));
  EXPECT_EQ(print(boson_bit_operator(0, 0, 0, 0)), print(vacant(0)));
  EXPECT_EQ(print(boson_bit_operator(1, 1, 0, 0)), print(occupied(0)));
}

TEST(BosonTable, UnreachableCodesAreAnnihilated) {
  Shape s{SiteType::boson(5)};
  auto m = transformed_matrix(dagger(annihilate(0)), s);
  ASSERT_EQ(m.rows(), 8);
  for (Eigen::Index c = 5; c < 8; ++c) EXPECT_LE(m.col(c).norm(), 1e-15);
  EXPECT_LE(m.row(5).norm() + m.row(6).norm() + m.row(7).norm(), 1e-15);
  EXPECT_LE((m.topLeftCorner(5, 5) - oracle::lowering(5).adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(TransformState, Examples) {
  Shape b4{SiteType::boson(4)}, b5{SiteType::boson(5)}, f{SiteType::fermion()};
  auto t4 = transform_state(StateVector::basis(b4, {3}), b4);
  EXPECT_EQ(t4.amps.begin()->first, (Occupation{1, 1}));
  auto t5 = transform_state(StateVector::basis(b5, {3}), b5);
  EXPECT_EQ(t5.amps.begin()->first, (Occupation{1, 1, 0}));
  auto tf = transform_state(2.0 * StateVector::basis(f, {1}), f);
  EXPECT_EQ(tf.amps.begin()->first, (Occupation{1}));
  EXPECT_EQ(tf.amps.begin()->second, cplx(2.0));
}

TEST(JordanWigner, Leaves) {
  Shape s(3, SiteType::fermion());
  oracle::Mat lo = oracle::lowering(2);
  oracle::Mat want = oracle::on_qubit(oracle::pauli('Z'), 0, 3) * oracle::on_qubit(oracle::pauli('Z'), 1, 3) *
                     oracle::on_qubit(lo, 2, 3);
  EXPECT_LE((transformed_matrix(desugar_indexed(SiteOp::A, 2, s), s) - want).cwiseAbs().maxCoeff(), 1e-15);
  cplx z(0.5, -2.0);
  auto e = scale(desugar_indexed(SiteOp::Adag, 2, s), z, s);
  EXPECT_LE((transformed_matrix(e, s) - z * want.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(JordanWigner, SignExample) {
  Shape s{SiteType::boson(3), SiteType::fermion(), SiteType::fermion(), SiteType::fermion()};
  auto psi = StateVector::basis(s, {1, 1, 1, 0});
  Eigen::VectorXcd out = transformed_matrix(desugar_indexed(SiteOp::A, 2, s), s) * qubit_vector(psi, s);
  auto want = qubit_vector(-1.0 * StateVector::basis(s, {1, 1, 0, 0}), s);
  EXPECT_LE((out - want).norm(), 1e-12);
}

TEST(JordanWigner, CommutingDiagramFermions) {
  oracle::Gen g(6);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = g.shape(static_cast<std::size_t>(g.uniform(1, 4)), true);
    auto e = g.expr(0, s.size(), 4);
    auto psi = random_state(g, s);
    auto lhs = qubit_vector(apply(e, s, psi), s);
    Eigen::VectorXcd rhs = transformed_matrix(e, s) * qubit_vector(psi, s);
    ASSERT_LE((lhs - rhs).norm(), 1e-9) << print(e);
  }
}

TEST(JordanWigner, CommutingDiagramMixed) {
  oracle::Gen g(16);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = g.shape(static_cast<std::size_t>(g.uniform(1, 3)), false, 4);
    auto e = g.expr(0, s.size(), 4);
    auto psi = random_state(g, s);
    auto lhs = qubit_vector(apply(e, s, psi), s);
    Eigen::VectorXcd rhs = transformed_matrix(e, s) * qubit_vector(psi, s);
    ASSERT_LE((lhs - rhs).norm(), 1e-9) << print(e);
  }
}

TEST(JordanWigner, HermitianStaysHermitian) {
  auto p = parse("sites [fermion x 3]; H = sum j in 0..1 { adag(j).a(j+1) + adag(j+1).a(j) } + 0.5 * n1(1)");
  ASSERT_EQ(infer(p.hamiltonian, p.shape).kind, Kind::Hermitian);
  auto m = transformed_matrix(p.hamiltonian, p.shape);
  EXPECT_LE((m - m.adjoint()).norm(), 1e-12);
}
