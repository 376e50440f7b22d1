// Exercises the shared library strictly through its C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "rde6/rde6.h"

namespace {

const char* kSpec = R"({"initial": ["1","1","1","1","2","1"],
  "coeffs": {"kind": "constant", "a": ["1"], "b": ["0"]}, "horizon": 10})";

struct Handle {
  rde6_problem* p = nullptr;
  ~Handle() { rde6_problem_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  rde6_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("handles and round trip") {
  Handle h;
  REQUIRE(rde6_problem_from_json(kSpec, &h.p) == RDE6_OK);
  CHECK(rde6_problem_horizon(h.p) == 10);

  char* json = nullptr;
  REQUIRE(rde6_problem_to_json(h.p, &json) == RDE6_OK);
  const std::string first = take(json);

  Handle again;
  REQUIRE(rde6_problem_from_json(first.c_str(), &again.p) == RDE6_OK);
  REQUIRE(rde6_problem_to_json(again.p, &json) == RDE6_OK);
  CHECK(take(json) == first);
}

TEST_CASE("error codes") {
  rde6_problem* p = nullptr;
  CHECK(rde6_problem_from_json("{", &p) == RDE6_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::string(rde6_last_error()).find("Parse") != std::string::npos);
  CHECK(rde6_problem_from_json(nullptr, &p) == RDE6_ERR_USAGE);
  CHECK(rde6_problem_from_file("/nonexistent/spec.json", &p) == RDE6_ERR_USAGE);
  CHECK(rde6_problem_horizon(nullptr) == -1);
  rde6_problem_free(nullptr);

  char* out = nullptr;
  CHECK(rde6_verify_symmetry(0, 1, 0, &out) == RDE6_ERR_USAGE);
}

TEST_CASE("term through every engine") {
  Handle h;
  REQUIRE(rde6_problem_from_json(kSpec, &h.p) == RDE6_OK);
  for (rde6_engine e : {RDE6_ENGINE_GENERAL, RDE6_ENGINE_AUTO, RDE6_ENGINE_ORACLE}) {
    char* out = nullptr;
    REQUIRE(rde6_term(h.p, 1, e, &out) == RDE6_OK);
    CHECK(take(out) == "1/2");
    REQUIRE(rde6_term(h.p, 7, e, &out) == RDE6_OK);
    CHECK(take(out) == "8/1");
  }
  char* out = nullptr;
  CHECK(rde6_term(h.p, -6, RDE6_ENGINE_GENERAL, &out) == RDE6_ERR_USAGE);
}

TEST_CASE("iterate, solve and compare statuses") {
  Handle h;
  REQUIRE(rde6_problem_from_json(kSpec, &h.p) == RDE6_OK);
  char* out = nullptr;
  REQUIRE(rde6_iterate_csv(h.p, 1, &out) == RDE6_OK);
  const std::string csv = take(out);
  CHECK(csv.rfind("m,exact,float\n", 0) == 0);
  CHECK(csv.find("\n1,1/2,0.5\n") != std::string::npos);

  CHECK(rde6_compare_json(h.p, 12, 0, &out) == RDE6_OK);
  take(out);
  CHECK(rde6_compare_json(h.p, 12, 1, &out) == RDE6_MISMATCH);
  CHECK(take(out).find("\"all_match\": false") != std::string::npos);

  Handle singular;
  REQUIRE(rde6_problem_from_json(R"({"initial": ["1","1","1","1","1","1"],
    "coeffs": {"kind": "constant", "a": ["1"], "b": ["-1"]}, "horizon": 4})", &singular.p) == RDE6_OK);
  CHECK(rde6_iterate_csv(singular.p, 4, &out) == RDE6_SINGULAR);
  CHECK(take(out) == "m,exact,float\n-5,1/1,1\n-4,1/1,1\n-3,1/1,1\n-2,1/1,1\n-1,1/1,1\n0,1/1,1\n");
  CHECK(rde6_solve_csv(singular.p, -5, 4, RDE6_ENGINE_GENERAL, &out) == RDE6_SINGULAR);
  take(out);
  CHECK(std::string(rde6_last_error()).find("j=0 s=0") != std::string::npos);

  Handle three;
  REQUIRE(rde6_problem_from_json(R"({"initial": ["1","1","1","1","1","1"],
    "coeffs": {"kind": "periodic", "period": 3, "a": ["1","2","3"], "b": ["0","0","0"]}, "horizon": 4})",
                                 &three.p) == RDE6_OK);
  CHECK(rde6_solve_csv(three.p, -5, 4, RDE6_ENGINE_AUTO, &out) == RDE6_ERR_USAGE);
  CHECK(out == nullptr);
}

TEST_CASE("symmetry suite through the C API") {
  char* out = nullptr;
  CHECK(rde6_verify_symmetry(20, 7, 0, &out) == RDE6_OK);
  const std::string a = take(out);
  CHECK(rde6_verify_symmetry(20, 7, 0, &out) == RDE6_OK);
  CHECK(take(out) == a);
  CHECK(rde6_verify_symmetry(20, 7, 1, &out) == RDE6_MISMATCH);
  take(out);
}
