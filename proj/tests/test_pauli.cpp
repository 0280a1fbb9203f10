#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sqc/parser.hpp"
#include "sqc/pauli.hpp"
#include "sqc/rewrite.hpp"
#include "sqc/transform.hpp"

using namespace sqc;

namespace {

PauliHamiltonian hamiltonian_of(const std::string& text) {
  auto p = parse(text);
  auto t = transform_expr(dag_canonicalize(p.hamiltonian, p.shape), p.shape);
  return canonicalize(t.expr, t.layout.width);
}

const char* kHubbard = "sites [fermion, fermion]; H = -1*(adag(0).a(1) + adag(1).a(0)) + 2*(n1(0).n1(1))";

}  // namespace

TEST(PauliProduct, SixteenEntries) {
  const Pauli all[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  const cplx phases[] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  for (Pauli p : all)
    for (Pauli q : all) {
      auto r = pauli_mul(p, q);
      oracle::Mat got = phases[((r.phase % 4) + 4) % 4] * oracle::pauli(to_char(r.op));
      oracle::Mat want = oracle::pauli(to_char(p)) * oracle::pauli(to_char(q));
      EXPECT_EQ((got - want).cwiseAbs().maxCoeff(), 0.0) << to_char(p) << to_char(q);
    }
}

TEST(PauliProduct, Strings) {
  auto a = PauliString::parse("XYZI"), b = PauliString::parse("YYXZ");
  auto [k, s] = string_mul(a, b);
  oracle::Mat got = times_i(1.0, k) * oracle::string_matrix(s.str());
  oracle::Mat want = oracle::string_matrix(a.str()) * oracle::string_matrix(b.str());
  EXPECT_EQ((got - want).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Canonicalize, HubbardSixTerms) {
  auto h = hamiltonian_of(kHubbard);
  ASSERT_EQ(h.size(), 6u);
  const std::pair<const char*, double> want[] = {{"XX", -0.5}, {"YY", -0.5}, {"ZZ", 0.5},
                                                 {"ZI", -0.5}, {"IZ", -0.5}, {"II", 0.5}};
  for (const auto& [s, c] : want) EXPECT_NEAR(h.coeff(PauliString::parse(s)), c, 1e-12) << s;
}

TEST(Canonicalize, HubbardDropped) {
  auto split = drop_trivial(hamiltonian_of(kHubbard));
  ASSERT_EQ(split.kept.size(), 3u);
  EXPECT_NEAR(split.kept.coeff(PauliString::parse("XX")), -0.5, 1e-12);
  EXPECT_NEAR(split.kept.coeff(PauliString::parse("YY")), -0.5, 1e-12);
  EXPECT_NEAR(split.kept.coeff(PauliString::parse("ZZ")), 0.5, 1e-12);
  EXPECT_EQ(split.dropped.size(), 3u);
  EXPECT_NEAR(drop_penalty(split.dropped, M_PI / 4), M_PI / 4, 1e-12);
}

TEST(Canonicalize, NumberOperator) {
  auto h = hamiltonian_of("sites [fermion]; H = n1(0)");
  ASSERT_EQ(h.size(), 2u);
  EXPECT_NEAR(h.coeff(PauliString::parse("I")), 0.5, 1e-15);
  EXPECT_NEAR(h.coeff(PauliString::parse("Z")), -0.5, 1e-15);
}

TEST(Canonicalize, MatchesDenseOracle) {
  const char* programs[] = {
      kHubbard,
      "sites [boson(4), fermion]; H = dag(a[0]).a[0] (x) I[1] + 0.3 * (a[0] (x) dag(a[1]) + dag(a[0]) (x) a[1])",
      "sites [boson(3) x 2]; H = adag(0).a(1) + a(0).adag(1) + 0.5 * n1(0)",
      "sites [boson(2) x 3]; H = 0.5 * sum j in 0..2 { X(j) } + sum j in 0..1 { Z(j).Z(j+1) }",
  };
  for (const char* text : programs) {
    auto p = parse(text);
    auto t = transform_expr(dag_canonicalize(p.hamiltonian, p.shape), p.shape);
    auto h = canonicalize(t.expr, t.layout.width);
    EXPECT_LE((to_dense(h) - oracle::qubit_matrix(t.expr, t.layout.width)).cwiseAbs().maxCoeff(), 1e-12) << text;
  }
}

TEST(Canonicalize, NonRealResidual) {
  auto e = qprod(qscalar(cplx(0, 1)), qpauli(Pauli::X, 0));
  try {
    canonicalize(e, 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NonRealResidual);
  }
  auto ok = qprod(qpauli(Pauli::X, 0), qpauli(Pauli::Y, 0));
  EXPECT_THROW(canonicalize(ok, 1), Error);
  auto herm = qsum(qprod(qpauli(Pauli::X, 0), qpauli(Pauli::Y, 0)), qprod(qpauli(Pauli::Y, 0), qpauli(Pauli::X, 0)));
  EXPECT_TRUE(canonicalize(herm, 1).empty());
}

TEST(PauliNorm, AgainstSvd) {
  PauliHamiltonian h(3);
  h.add(0.4, PauliString::parse("XZI"));
  h.add(-1.2, PauliString::parse("YYX"));
  h.add(0.7, PauliString::parse("IIZ"));
  std::vector<std::pair<double, std::string>> terms;
  for (const auto& t : h.terms()) terms.emplace_back(t.coeff, t.string.str());
  EXPECT_NEAR(pauli_norm(h), oracle::opnorm(oracle::pauli_sum(terms)), 1e-10);
  PauliHamiltonian d(2);
  d.add(1.0, PauliString::parse("ZI"));
  d.add(-2.0, PauliString::parse("ZZ"));
  EXPECT_NEAR(pauli_norm(d), 3.0, 1e-12);
}

TEST(PauliAction, MatchesMatrix) {
  for (const char* s : {"XYZ", "IYI", "ZZX"}) {
    auto p = PauliString::parse(s);
    auto m = oracle::string_matrix(s);
    for (std::size_t c = 0; c < 8; ++c) {
      auto [r, a] = pauli_action(p, c);
      EXPECT_EQ(m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)), a);
    }
  }
}

TEST(ApplyExp, MatchesExponential) {
  auto p = PauliString::parse("XZY");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
  v(0) = 0.6;
  v(5) = cplx(0, 0.8);
  Eigen::VectorXcd want = oracle::evolve(oracle::string_matrix("XZY"), 0.83) * v;
  apply_exp(p, 0.83, v);
  EXPECT_LE((v - want).norm(), 1e-12);
}
