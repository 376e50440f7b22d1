#include "rde6/rde6.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "rde6/problem.hpp"
#include "rde6/symmetry.hpp"

struct rde6_problem {
  rde6::ProblemSpec spec;
};

namespace {

thread_local std::string g_last_error;

rde6_status fail(rde6_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

rde6_status status_for(const rde6::Error& e) {
  switch (e.kind()) {
    case rde6::ErrorKind::Parse:
    case rde6::ErrorKind::ZeroInitialValue:
      return RDE6_ERR_PARSE;
    case rde6::ErrorKind::SingularClosedForm:
    case rde6::ErrorKind::DivisionByZero:
      return RDE6_SINGULAR;
    default:
      return RDE6_ERR_USAGE;
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into status codes and the last-error text.
template <typename Body>
rde6_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const rde6::Error& e) {
    return fail(status_for(e), std::string(rde6::to_string(e.kind())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(RDE6_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RDE6_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* rde6_version(void) { return "1.0.0"; }

const char* rde6_last_error(void) { return g_last_error.c_str(); }

void rde6_string_free(char* s) { std::free(s); }

rde6_status rde6_problem_from_json(const char* json, rde6_problem** out) {
  if (json == nullptr || out == nullptr) return fail(RDE6_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new rde6_problem{rde6::parse_problem_spec(json)};
    return RDE6_OK;
  });
}

rde6_status rde6_problem_from_file(const char* path, rde6_problem** out) {
  if (path == nullptr || out == nullptr) return fail(RDE6_ERR_USAGE, "null argument");
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(RDE6_ERR_USAGE, std::string("cannot open spec file ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return rde6_problem_from_json(buf.str().c_str(), out);
}

void rde6_problem_free(rde6_problem* problem) { delete problem; }

long rde6_problem_horizon(const rde6_problem* problem) {
  return problem == nullptr ? -1 : problem->spec.horizon;
}

rde6_status rde6_problem_to_json(const rde6_problem* problem, char** out) {
  if (problem == nullptr || out == nullptr) return fail(RDE6_ERR_USAGE, "null argument");
  return guarded([&] {
    *out = duplicate(rde6::emit_problem_spec(problem->spec));
    return RDE6_OK;
  });
}

rde6_status rde6_term(const rde6_problem* problem, long m, rde6_engine engine, char** out) {
  if (problem == nullptr || out == nullptr) return fail(RDE6_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto ic = problem->spec.initial_conditions();
    const auto coeffs = problem->spec.coefficients();
    rde6::Rational value;
    switch (engine) {
      case RDE6_ENGINE_GENERAL:
        value = rde6::term(m, ic, coeffs);
        break;
      case RDE6_ENGINE_AUTO:
        value = rde6::special_term(m, ic, coeffs);
        break;
      case RDE6_ENGINE_ORACLE: {
        if (m < -5) throw rde6::Error(rde6::ErrorKind::IndexBelowSeed, "index below x_-5", m);
        const auto orbit = rde6::iterate(ic, coeffs, static_cast<std::size_t>(m < 0 ? 0 : m));
        if (orbit.last_index() < m) {
          return fail(RDE6_SINGULAR, "orbit stops at step " + std::to_string(orbit.halt->step));
        }
        value = orbit.x(m);
        break;
      }
      default:
        return fail(RDE6_ERR_USAGE, "unknown engine");
    }
    *out = duplicate(value.str());
    return RDE6_OK;
  });
}

rde6_status rde6_iterate_csv(const rde6_problem* problem, long n, char** out) {
  if (problem == nullptr || out == nullptr) return fail(RDE6_ERR_USAGE, "null argument");
  if (n < 0) return fail(RDE6_ERR_USAGE, "n must be >= 0");
  *out = nullptr;
  return guarded([&] {
    const auto orbit = rde6::iterate(problem->spec.initial_conditions(),
                                     problem->spec.coefficients(), static_cast<std::size_t>(n));
    std::vector<rde6::CsvRow> rows;
    for (long m = -5; m <= orbit.last_index(); ++m) rows.push_back({m, orbit.x(m)});
    *out = duplicate(rde6::render_csv(rows));
    if (orbit.halt) {
      return fail(RDE6_SINGULAR, "singularity at step " + std::to_string(orbit.halt->step) +
                                     " (" + rde6::to_string(orbit.halt->cause) + ")");
    }
    return RDE6_OK;
  });
}

rde6_status rde6_solve_csv(const rde6_problem* problem, long lo, long hi, rde6_engine engine,
                           char** out) {
  if (problem == nullptr || out == nullptr) return fail(RDE6_ERR_USAGE, "null argument");
  if (engine != RDE6_ENGINE_GENERAL && engine != RDE6_ENGINE_AUTO) {
    return fail(RDE6_ERR_USAGE, "solve supports the general and auto engines");
  }
  *out = nullptr;
  return guarded([&] {
    const auto result = rde6::solve(
        problem->spec, lo, hi,
        engine == RDE6_ENGINE_AUTO ? rde6::Engine::Auto : rde6::Engine::General);
    *out = duplicate(rde6::render_csv(result.rows));
    if (result.singular) {
      return fail(RDE6_SINGULAR, "singular closed form at m=" +
                                     std::to_string(result.singular->step) +
                                     ": j=" + std::to_string(result.singular->j) +
                                     " s=" + std::to_string(result.singular->s));
    }
    return RDE6_OK;
  });
}

rde6_status rde6_compare_json(const rde6_problem* problem, long n, int corrupt, char** out) {
  if (problem == nullptr || out == nullptr) return fail(RDE6_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto report = rde6::compare(problem->spec, n, corrupt != 0);
    *out = duplicate(report.to_json());
    if (!report.all_match()) {
      return fail(RDE6_MISMATCH, "first mismatch at m=" + std::to_string(*report.first_mismatch));
    }
    return RDE6_OK;
  });
}

rde6_status rde6_verify_symmetry(long samples, uint64_t seed, int counterfeit, char** out) {
  if (out == nullptr) return fail(RDE6_ERR_USAGE, "null argument");
  if (samples < 1) return fail(RDE6_ERR_USAGE, "samples must be >= 1");
  *out = nullptr;
  return guarded([&] {
    rde6::SymmetrySuiteOptions options;
    options.samples = samples;
    options.seed = seed;
    options.counterfeit = counterfeit != 0;
    const auto report = rde6::run_symmetry_suite(options);
    *out = duplicate(report.text);
    return report.ok() ? RDE6_OK : fail(RDE6_MISMATCH, "symmetry suite failed");
  });
}

}  // extern "C"
