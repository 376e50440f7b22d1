// Drives the installed command-line tool as a subprocess.
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rde6/problem.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("rde6_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = std::string(RDE6_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                          (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

std::string spec_arg(const fs::path& p) { return "--spec " + p.string(); }

const char* kOnes = R"({"initial": ["1","1","1","1","1","1"],
  "coeffs": {"kind": "constant", "a": ["1"], "b": ["0"]}, "horizon": 10})";

}  // namespace

TEST_CASE("cli iterate") {
  const auto ones = write_file("ones.json", kOnes);
  const Run r = run("iterate " + spec_arg(ones) + " --n 10");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "m,exact,float");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find(",1/1,1") != std::string::npos);
  }
  CHECK(rows == 16);
  CHECK(r.out.find('\r') == std::string::npos);

  const auto sing = write_file("sing.json", R"({"initial": ["1","1","1","1","1","1"],
    "coeffs": {"kind": "constant", "a": ["1"], "b": ["-1"]}, "horizon": 10})");
  const Run s = run("iterate " + spec_arg(sing));
  CHECK(s.code == 2);
  CHECK(s.out == "m,exact,float\n-5,1/1,1\n-4,1/1,1\n-3,1/1,1\n-2,1/1,1\n-1,1/1,1\n0,1/1,1\n");

  const auto step = write_file("step.json", R"({"initial": ["1","1","1","1","2","1"],
    "coeffs": {"kind": "constant", "a": ["1"], "b": ["0"]}, "horizon": 1})");
  const Run t = run("iterate " + spec_arg(step) + " --out " + (scratch() / "step.csv").string());
  CHECK(t.code == 0);
  const std::string csv = slurp(scratch() / "step.csv");
  CHECK(csv.substr(csv.rfind("\n1,")) == "\n1,1/2,0.5\n");
}

TEST_CASE("cli solve") {
  const auto ones = write_file("ones.json", kOnes);
  const Run seeds = run("solve " + spec_arg(ones) + " --range -5..-2");
  CHECK(seeds.code == 0);
  CHECK(seeds.out == "m,exact,float\n-5,1/1,1\n-4,1/1,1\n-3,1/1,1\n-2,1/1,1\n");

  rde6::SampleGenerator rng(4242);
  const auto inst = rde6::testing::random_regular_instance(rng, {1, 3}, 40);
  const auto spec = write_file("random.json", rde6::emit_problem_spec(inst.spec));
  const Run general = run("solve " + spec_arg(spec) + " --range -5..40 --engine general");
  const Run iterated = run("iterate " + spec_arg(spec) + " --n 40");
  CHECK(general.code == 0);
  CHECK(iterated.code == 0);
  CHECK(general.out == iterated.out);

  const Run automatic = run("solve " + spec_arg(ones) + " --range -5..30 --engine auto");
  const Run plain = run("solve " + spec_arg(ones) + " --range -5..30");
  CHECK(automatic.code == 0);
  CHECK(automatic.out == plain.out);

  const auto three = write_file("three.json", R"({"initial": ["1","1","1","1","1","1"],
    "coeffs": {"kind": "periodic", "period": 3, "a": ["1","2","3"], "b": ["0","0","0"]}, "horizon": 4})");
  CHECK(run("solve " + spec_arg(three) + " --range -5..4 --engine auto").code == 65);

  const auto sing = write_file("sing.json", R"({"initial": ["1","1","1","1","1","1"],
    "coeffs": {"kind": "constant", "a": ["1"], "b": ["-1"]}, "horizon": 10})");
  CHECK(run("solve " + spec_arg(sing) + " --range -5..10").code == 2);
  CHECK(slurp(scratch() / "stderr.txt").find("j=0 s=0") != std::string::npos);
}

TEST_CASE("cli compare") {
  rde6::SampleGenerator rng(99);
  const auto inst = rde6::testing::random_regular_instance(rng, {4}, 30);
  const auto spec = write_file("cmp.json", rde6::emit_problem_spec(inst.spec));
  const Run ok = run("compare " + spec_arg(spec));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"all_match\": true") != std::string::npos);
  CHECK(run("compare " + spec_arg(spec) + " --corrupt-closed-form").code == 3);

  const auto crafted = rde6::testing::crafted_instance(rng, 20, true);
  const auto near = write_file("near.json", rde6::emit_problem_spec(crafted.spec));
  const Run n = run("compare " + spec_arg(near));
  CHECK(n.code == 0);
  CHECK(n.out.find("\"step\": " + std::to_string(crafted.target_step)) != std::string::npos);
  CHECK(n.out.find("\"violations\": []") == std::string::npos);
}

TEST_CASE("cli verify-symmetry") {
  const Run a = run("verify-symmetry --samples 100 --seed 5");
  const Run b = run("verify-symmetry --samples 100 --seed 5");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("verify-symmetry").code == 0);
  CHECK(run("verify-symmetry --counterfeit").code == 3);
}

TEST_CASE("cli emit-spec is byte-stable") {
  const auto raw = write_file("raw.json", R"({"horizon": 7, "initial": ["2/4","-3","1","1","1","+5/1"],
    "coeffs": {"b": ["0", "1/3"], "a": ["6/3", "7"], "kind": "periodic", "period": 2}})");
  const Run first = run("iterate " + spec_arg(raw) + " --emit-spec");
  CHECK(first.code == 0);
  CHECK(first.out.find("\"1/2\"") != std::string::npos);
  const auto canon = write_file("canon.json", first.out);
  const Run second = run("compare " + spec_arg(canon) + " --emit-spec");
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
}

TEST_CASE("cli exit codes for bad input") {
  const auto broken = write_file("broken.json", "{\"initial\": ");
  CHECK(run("iterate " + spec_arg(broken)).code == 64);
  const auto zero = write_file("zero.json", R"({"initial": ["1","0","1","1","1","1"],
    "coeffs": {"kind": "constant", "a": ["1"], "b": ["0"]}, "horizon": 1})");
  CHECK(run("iterate " + spec_arg(zero)).code == 64);

  const auto ones = write_file("ones.json", kOnes);
  CHECK(run("iterate").code == 65);
  CHECK(run("bogus").code == 65);
  CHECK(run("solve " + spec_arg(ones) + " --range 5..1").code == 65);
  CHECK(run("solve " + spec_arg(ones) + " --range x").code == 65);
  CHECK(run("solve " + spec_arg(ones) + " --range 1..2 --engine fast").code == 65);
  CHECK(run("iterate --spec /nonexistent.json").code == 65);

  const auto list = write_file("list.json", R"({"initial": ["1","1","1","1","1","1"],
    "coeffs": {"kind": "list", "a": ["1"], "b": ["0"]}, "horizon": 1})");
  CHECK(run("iterate " + spec_arg(list) + " --n 5").code == 65);
}
