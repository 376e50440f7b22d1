// Command-line front end. Talks to the solver only through the C interface.
//
//   rde6 iterate --spec P [--n N] [--out F]
//   rde6 solve   --spec P --range A..B [--engine general|auto] [--out F]
//   rde6 compare --spec P [--n N] [--out F]
//   rde6 verify-symmetry [--samples K] [--seed S]
//
// Exit codes: 0 ok, 2 singularity, 3 mismatch or nonzero residual,
// 64 malformed spec, 65 usage.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rde6/rde6.h"

namespace {

constexpr int kExitUsage = 65;

struct ProblemDeleter {
  void operator()(rde6_problem* p) const { rde6_problem_free(p); }
};
using ProblemPtr = std::unique_ptr<rde6_problem, ProblemDeleter>;

struct StringDeleter {
  void operator()(char* s) const { rde6_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code(rde6_status status) {
  switch (status) {
    case RDE6_OK:
    case RDE6_SINGULAR:
    case RDE6_MISMATCH:
    case RDE6_ERR_PARSE:
    case RDE6_ERR_USAGE:
      return static_cast<int>(status);
    default:
      return kExitUsage;
  }
}

void report_error(rde6_status status) {
  if (status != RDE6_OK && *rde6_last_error() != '\0') {
    std::cerr << "rde6: " << rde6_last_error() << "\n";
  }
}

bool write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "rde6: cannot write " << path << "\n";
    return false;
  }
  out << text;
  return static_cast<bool>(out);
}

struct Options {
  std::string spec;
  std::optional<long> n;
  std::string range;
  std::string engine = "general";
  std::string out;
  long samples = 100;
  std::uint64_t seed = 1;
  bool emit_spec = false;
  bool corrupt = false;
  bool counterfeit = false;
};

// Loads the spec; on --emit-spec prints its canonical form and sets `done`.
int load_problem(const Options& opt, ProblemPtr& problem, bool& done) {
  rde6_problem* raw = nullptr;
  const rde6_status status = rde6_problem_from_file(opt.spec.c_str(), &raw);
  if (status != RDE6_OK) {
    report_error(status);
    return exit_code(status);
  }
  problem.reset(raw);
  done = false;
  if (opt.emit_spec) {
    char* text = nullptr;
    const rde6_status s = rde6_problem_to_json(problem.get(), &text);
    OwnedString owned(text);
    report_error(s);
    if (s != RDE6_OK) return exit_code(s);
    done = true;
    return write_output(opt.out, owned.get()) ? 0 : kExitUsage;
  }
  return 0;
}

bool parse_range(const std::string& text, long& lo, long& hi) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return false;
  try {
    std::size_t used = 0;
    const std::string left = text.substr(0, dots);
    const std::string right = text.substr(dots + 2);
    lo = std::stol(left, &used);
    if (used != left.size()) return false;
    hi = std::stol(right, &used);
    if (used != right.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return lo <= hi;
}

// Writes the produced text (if any) and maps the status to an exit code.
int finish(rde6_status status, char* text, const Options& opt) {
  OwnedString owned(text);
  report_error(status);
  if (owned && !write_output(opt.out, owned.get())) return kExitUsage;
  return exit_code(status);
}

int run_iterate(const Options& opt) {
  ProblemPtr problem;
  bool done = false;
  if (int rc = load_problem(opt, problem, done); rc != 0 || done) return rc;
  const long n = opt.n.value_or(rde6_problem_horizon(problem.get()));
  char* csv = nullptr;
  const rde6_status status = rde6_iterate_csv(problem.get(), n, &csv);
  return finish(status, csv, opt);
}

int run_solve(const Options& opt) {
  ProblemPtr problem;
  bool done = false;
  if (int rc = load_problem(opt, problem, done); rc != 0 || done) return rc;
  long lo = 0;
  long hi = 0;
  if (!parse_range(opt.range, lo, hi)) {
    std::cerr << "rde6: --range expects A..B with A <= B\n";
    return kExitUsage;
  }
  const rde6_engine engine = opt.engine == "auto" ? RDE6_ENGINE_AUTO : RDE6_ENGINE_GENERAL;
  char* csv = nullptr;
  const rde6_status status = rde6_solve_csv(problem.get(), lo, hi, engine, &csv);
  return finish(status, csv, opt);
}

int run_compare(const Options& opt) {
  ProblemPtr problem;
  bool done = false;
  if (int rc = load_problem(opt, problem, done); rc != 0 || done) return rc;
  const long n = opt.n.value_or(rde6_problem_horizon(problem.get()));
  char* report = nullptr;
  const rde6_status status = rde6_compare_json(problem.get(), n, opt.corrupt ? 1 : 0, &report);
  return finish(status, report, opt);
}

int run_verify_symmetry(const Options& opt) {
  char* report = nullptr;
  const rde6_status status =
      rde6_verify_symmetry(opt.samples, opt.seed, opt.counterfeit ? 1 : 0, &report);
  return finish(status, report, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for x_{n+1} = x_{n-5}x_{n-3} / (x_{n-1}(a_n + b_n x_{n-5}x_{n-3}))",
               "rde6"};
  app.require_subcommand(1);
  Options opt;

  auto add_spec = [&opt](CLI::App* cmd) {
    cmd->add_option("--spec", opt.spec, "Problem spec (JSON)")->required();
    cmd->add_option("--out", opt.out, "Output file (default: stdout)");
    cmd->add_flag("--emit-spec", opt.emit_spec, "Print the canonical spec and exit");
  };

  auto* iterate = app.add_subcommand("iterate", "Iterate the recurrence exactly");
  add_spec(iterate);
  iterate->add_option("--n", opt.n, "Last index N (default: spec horizon)")->check(CLI::NonNegativeNumber);

  auto* solve = app.add_subcommand("solve", "Evaluate the closed-form solution");
  add_spec(solve);
  solve->add_option("--range", opt.range, "Index range A..B")->required();
  solve->add_option("--engine", opt.engine, "general | auto")
      ->check(CLI::IsMember({"general", "auto"}));

  auto* compare = app.add_subcommand("compare", "Compare iteration with the closed forms");
  add_spec(compare);
  compare->add_option("--n", opt.n, "Last index N (default: spec horizon)")->check(CLI::NonNegativeNumber);
  compare->add_flag("--corrupt-closed-form", opt.corrupt, "Test hook: perturb one closed-form value");

  auto* verify = app.add_subcommand("verify-symmetry", "Run the symmetry verification suite");
  verify->add_option("--samples", opt.samples, "Random samples per characteristic")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", opt.seed, "Sampler seed");
  verify->add_option("--out", opt.out, "Output file (default: stdout)");
  verify->add_flag("--counterfeit", opt.counterfeit, "Test hook: use Q(n,u) = u");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (iterate->parsed()) return run_iterate(opt);
  if (solve->parsed()) return run_solve(opt);
  if (compare->parsed()) return run_compare(opt);
  return run_verify_symmetry(opt);
}
