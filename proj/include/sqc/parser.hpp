#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqc/ir.hpp"

namespace sqc {

/// Optional `simulate { ... }` block of a program.
struct SimulationBlock {
  std::optional<double> time;
  std::optional<std::string> algorithm;  // standard | qdrift
  std::optional<int> steps;
  std::optional<int> samples;
  std::optional<double> epsilon;
  std::optional<std::string> target;     // digital | ibm | indiana
  std::optional<std::uint64_t> seed;
  std::optional<std::string> order;      // comma-separated Pauli strings
  std::optional<bool> drop_trivial;
  std::optional<double> gadget_lambda;   // 0 selects the default coupling

  bool operator==(const SimulationBlock&) const = default;
};

struct ProgramFile {
  Shape shape;
  std::vector<std::pair<std::string, cplx>> constants;
  std::string name = "H";
  Expr hamiltonian;
  std::optional<SimulationBlock> simulate;
};

ProgramFile parse(const std::string& text);

/// Single-site operators available as indexed sugar.
enum class SiteOp { A, Adag, N0, N1, I, X, Y, Z };

/// The ladder-only expression of `op` acting on site j alone.
Expr site_operator(SiteOp op, std::size_t j);

/// Identity at every site except j, where `op` acts; right-nested tensor chain.
Expr desugar_indexed(SiteOp op, std::size_t j, const Shape& shape);
Expr embed(const Expr& local, std::size_t j, const Shape& shape);

/// Identity chain over the whole shape.
Expr identity_chain(const Shape& shape);

/// Multiplies `e` by z, pushing the scalar into the first annihilator leaf.
Expr scale(const Expr& e, cplx z, const Shape& shape);

/// Fully parenthesized surface syntax; parse(print(p)) reproduces p exactly.
std::string print(const Expr& e);
std::string print(const ProgramFile& p);
std::string format_scalar(cplx z);
std::string format_real(double x);

bool structurally_equal(const ProgramFile& a, const ProgramFile& b);

}  // namespace sqc
