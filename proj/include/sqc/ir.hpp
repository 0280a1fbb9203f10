#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqc {

using cplx = std::complex<double>;

/// Default cap on dense-oracle dimensions (10 qubits).
inline constexpr std::size_t kDenseLimit = 1024;

enum class ErrorCode {
  Parse,
  UnknownIdentifier,
  IndexOutOfRange,
  MalformedRange,
  KindMismatch,
  ShapeMismatch,
  FermionDimension,
  NotHermitian,
  NonRealResidual,
  TooLarge,
  LambdaTooLarge,
  LocalityExceeded,
  Unreachable,
  Usage,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, int line = 0, int column = 0);
  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorCode code_;
  int line_;
  int column_;
};

// ---------------------------------------------------------------- sites

struct SiteType {
  enum class Tag { Boson, Fermion };
  Tag tag = Tag::Fermion;
  int dim = 2;

  static SiteType boson(int m);
  static SiteType fermion() { return SiteType{Tag::Fermion, 2}; }
  bool is_fermion() const { return tag == Tag::Fermion; }
  int dimension() const { return dim; }
  bool operator==(const SiteType&) const = default;
};

using Shape = std::vector<SiteType>;

/// Product of site dimensions; throws TooLarge above `limit`.
std::size_t system_dimension(const Shape& shape, std::size_t limit = kDenseLimit);

std::string to_string(const SiteType& site);

// ---------------------------------------------------------------- kinds

enum class Kind { Plain, Hermitian, Unitary };

/// Kind join; Hermitian with Unitary is a KindMismatch.
Kind join(Kind a, Kind b);
const char* to_string(Kind k);

// ---------------------------------------------------------------- expressions

enum class Op { Annihilate, Identity, Dagger, Tensor, Sum, Compose };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  cplx amp{1.0, 0.0};
  std::size_t site = 0;
  Expr lhs;
  Expr rhs;
  std::size_t lo = 0;  // spanned sites [lo, hi)
  std::size_t hi = 0;
};

Expr annihilate(std::size_t site, cplx amp = 1.0);
Expr identity(std::size_t site);
Expr dagger(Expr e);
Expr tensor(Expr l, Expr r);
Expr add(Expr l, Expr r);
Expr compose(Expr l, Expr r);

bool structurally_equal(const Expr& a, const Expr& b);

/// Number of nodes.
std::size_t size(const Expr& e);

// ---------------------------------------------------------------- Pauli IR

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

struct PauliString {
  std::vector<Pauli> ops;

  PauliString() = default;
  explicit PauliString(std::size_t n) : ops(n, Pauli::I) {}
  static PauliString parse(const std::string& s);

  std::size_t size() const { return ops.size(); }
  std::size_t locality() const;
  std::vector<std::size_t> support() const;
  bool is_identity() const { return locality() == 0; }
  std::string str() const;

  Pauli& operator[](std::size_t k) { return ops[k]; }
  Pauli operator[](std::size_t k) const { return ops[k]; }
  auto operator<=>(const PauliString&) const = default;
};

/// True when the two strings anticommute.
bool anticommute(const PauliString& a, const PauliString& b);

struct PauliTerm {
  double coeff;
  PauliString string;
};

/// Real-weighted Pauli sum; a function from strings to coefficients.
class PauliHamiltonian {
 public:
  explicit PauliHamiltonian(std::size_t width = 0) : width_(width) {}

  std::size_t width() const { return width_; }
  void add(double coeff, const PauliString& s);
  void prune(double tol = 0.0);

  /// Terms sorted lexicographically by string.
  std::vector<PauliTerm> terms() const;
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  double coeff(const PauliString& s) const;
  double lambda() const;

 private:
  std::size_t width_;
  std::map<PauliString, double> map_;
};

// ---------------------------------------------------------------- states

using Occupation = std::vector<int>;

struct StateVector {
  Shape shape;
  std::map<Occupation, cplx> amps;  // empty map is the zero vector

  bool is_zero() const { return amps.empty(); }
  void add(const Occupation& k, cplx z);
  static StateVector basis(const Shape& shape, const Occupation& k);
};

StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator*(cplx z, const StateVector& a);

/// Mixed-radix index with site 0 least significant.
std::size_t basis_index(const Shape& shape, const Occupation& k);
Occupation basis_occupation(const Shape& shape, std::size_t index);

// ---------------------------------------------------------------- circuits

enum class GateKind { H, Rx, Ry, Rz, CX };

struct Gate {
  GateKind kind;
  std::size_t q;           // target, or control for CX
  std::size_t q2 = 0;      // CX target
  double theta = 0.0;

  static Gate h(std::size_t q) { return {GateKind::H, q, 0, 0.0}; }
  static Gate rx(double t, std::size_t q) { return {GateKind::Rx, q, 0, t}; }
  static Gate ry(double t, std::size_t q) { return {GateKind::Ry, q, 0, t}; }
  static Gate rz(double t, std::size_t q) { return {GateKind::Rz, q, 0, t}; }
  static Gate cx(std::size_t c, std::size_t t) { return {GateKind::CX, c, t, 0.0}; }
};

struct Circuit {
  std::size_t width = 0;
  std::vector<Gate> gates;   // leftmost applied first
  double global_phase = 0.0; // circuit realizes exp(i * global_phase) * product
};

enum class Machine { IBM, Indiana };
const char* to_string(Machine m);

struct Pulse {
  double duration;
  PauliString string;
};

struct AnalogSchedule {
  Machine machine = Machine::IBM;
  std::size_t width = 0;
  std::vector<Pulse> pulses;  // each pulse is exp(-i * duration * string)
};

/// Native pulse sets: IBM {X, Z, ZZ}; Indiana {Z, all-X strings}.
bool is_native(Machine m, const PauliString& s);

}  // namespace sqc
