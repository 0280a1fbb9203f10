// sqc: compile second-quantized Hamiltonian programs to circuits or pulse schedules.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sqc/emit.hpp"
#include "sqc/parser.hpp"
#include "sqc/pipeline.hpp"
#include "sqc/verify.hpp"

namespace {

enum Exit { kOk = 0, kUser = 1, kVerify = 2, kInternal = 3 };

int exit_code(sqc::ErrorCode code) {
  return code == sqc::ErrorCode::NonRealResidual ? kInternal : kUser;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sqc::Error(sqc::ErrorCode::Usage, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

sqc::ProgramFile load(const std::string& path) {
  try {
    return sqc::parse(read_file(path));
  } catch (const sqc::Error& e) {
    std::string where = e.line() > 0 ? path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column())
                                     : path;
    throw sqc::Error(e.code(), "parse: " + where + ": " + e.what(), e.line(), e.column());
  }
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sqc::Error(sqc::ErrorCode::Usage, "cannot write " + path);
  out << text;
}

struct CompileArgs {
  std::string file;
  std::string target;
  std::string algo;
  int m = 0;
  int N = 0;
  double epsilon = 0.0;
  double time = 0.0;
  std::uint64_t seed = 0;
  std::string gadget;
  bool drop_trivial = false;
  std::string order;
  std::string emit;
  bool verify = false;
  std::string output;
  std::string report_json;
};

int run_compile(const CompileArgs& a, const CLI::App& cmd) {
  auto program = load(a.file);
  sqc::CompileOptions opt;
  if (cmd.count("--target")) opt.target = sqc::target_from_string(a.target);
  if (cmd.count("--algo")) {
    if (a.algo == "standard") opt.algorithm = sqc::TrotterAlgorithm::Standard;
    else if (a.algo == "qdrift") opt.algorithm = sqc::TrotterAlgorithm::QDrift;
    else throw sqc::Error(sqc::ErrorCode::Usage, "unknown --algo '" + a.algo + "'");
  }
  if (cmd.count("--m")) opt.m = a.m;
  if (cmd.count("--N")) opt.N = a.N;
  if (cmd.count("--epsilon")) opt.epsilon = a.epsilon;
  if (cmd.count("--time")) opt.time = a.time;
  if (cmd.count("--seed")) opt.seed = a.seed;
  if (cmd.count("--gadget")) {
    opt.gadget = true;
    if (!a.gadget.empty()) {
      try {
        opt.gadget_lambda = std::stod(a.gadget);
      } catch (const std::exception&) {
        throw sqc::Error(sqc::ErrorCode::Usage, "--gadget expects a number, got '" + a.gadget + "'");
      }
    }
  }
  if (cmd.count("--drop-trivial")) opt.drop_trivial = a.drop_trivial;
  if (cmd.count("--order")) opt.order = a.order;

  using sqc::Stage;
  Stage stop = Stage::Artifact;
  if (a.emit == "canonical") stop = Stage::Canonical;
  else if (a.emit == "qubit-ham") stop = Stage::Qubit;
  else if (a.emit == "pauli") stop = Stage::Pauli;
  else if (a.emit == "plan") stop = Stage::Plan;
  else if (a.emit == "matrix") stop = Stage::Check;
  if (a.verify) stop = Stage::Artifact;

  auto c = sqc::compile(program, opt, stop);

  std::string text;
  if (a.emit == "canonical") {
    text = sqc::print(c.canonical);
  } else if (a.emit == "qubit-ham") {
    text = sqc::print(c.qubit->expr) + "\n";
  } else if (a.emit == "pauli") {
    text = (c.gadget ? sqc::to_json(*c.gadget) : sqc::to_json(c.kept)).dump(2) + "\n";
  } else if (a.emit == "plan") {
    text = sqc::to_json(*c.plan).dump(2) + "\n";
  } else if (a.emit == "matrix") {
    text = sqc::to_json(sqc::to_matrix(program.hamiltonian, program.shape)).dump() + "\n";
  } else {
    text = sqc::render(*c.artifact);
  }
  write_out(a.output, text);

  if (!a.verify) return kOk;
  auto rep = sqc::verify(c);
  std::cerr << sqc::report_table(rep);
  if (!a.report_json.empty()) write_out(a.report_json, sqc::to_json(rep).dump(2) + "\n");
  return rep.pass ? kOk : kVerify;
}

int run_check(const std::string& file) {
  auto program = load(file);
  sqc::compile(program, {}, sqc::Stage::Check);
  std::cout << file << ": Hermitian over " << program.shape.size() << " sites\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sqc: second-quantized Hamiltonian simulation compiler"};
  app.require_subcommand(1);

  std::string check_file;
  auto* check = app.add_subcommand("check", "parse and type-check a program");
  check->add_option("file", check_file, "program (.sq)")->required();

  CompileArgs a;
  auto* comp = app.add_subcommand("compile", "compile a program to a circuit or pulse schedule");
  comp->add_option("file", a.file, "program (.sq)")->required();
  comp->add_option("--target", a.target, "digital | ibm | indiana")
      ->check(CLI::IsMember({"digital", "ibm", "indiana"}));
  comp->add_option("--algo", a.algo, "standard | qdrift")->check(CLI::IsMember({"standard", "qdrift"}));
  comp->add_option("--m", a.m, "Trotter repetitions");
  comp->add_option("--N", a.N, "QDrift samples");
  comp->add_option("--epsilon", a.epsilon, "error budget; picks the smallest m meeting it");
  comp->add_option("--time", a.time, "evolution time r");
  comp->add_option("--seed", a.seed, "QDrift seed");
  comp->add_option("--gadget", a.gadget, "reduce to 2-local terms, optional coupling lambda")->expected(0, 1);
  comp->add_flag("--drop-trivial", a.drop_trivial, "drop the constant and single-Z terms");
  comp->add_option("--order", a.order, "sweep order, e.g. ZZ,YY,XX");
  comp->add_option("--emit", a.emit, "canonical | qubit-ham | pauli | plan | matrix")
      ->check(CLI::IsMember({"canonical", "qubit-ham", "pauli", "plan", "matrix"}));
  comp->add_flag("--verify", a.verify, "check the artifact against the dense oracle");
  comp->add_option("-o,--output", a.output, "output file (default stdout)");
  comp->add_option("--report-json", a.report_json, "write the verification report as JSON");
  comp->set_config("--config", "", "TOML/INI file with the same keys as the flags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUser;
  }

  try {
    if (*check) return run_check(check_file);
    return run_compile(a, *comp);
  } catch (const sqc::Error& e) {
    std::cerr << "sqc: " << sqc::to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "sqc: internal error: " << e.what() << "\n";
    return kInternal;
  }
}
