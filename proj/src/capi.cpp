#include "veesys/veesys.h"

#include "veesys/builders.hpp"
#include "veesys/catalog.hpp"
#include "veesys/equivalence.hpp"
#include "veesys/frobenius.hpp"
#include "veesys/restriction.hpp"
#include "veesys/serialization.hpp"
#include "veesys/veecheck.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

struct veesys_system {
  veesys::CovectorSystem system;
};

namespace {

thread_local std::string last_error;

veesys_status to_status(veesys::ErrorCode code) {
  using veesys::ErrorCode;
  switch (code) {
    case ErrorCode::ZeroCovector: return VEESYS_E_ZERO_COVECTOR;
    case ErrorCode::DegenerateForm: return VEESYS_E_DEGENERATE_FORM;
    case ErrorCode::SamplingExhausted: return VEESYS_E_SAMPLING_EXHAUSTED;
    case ErrorCode::InvalidSpec: return VEESYS_E_INVALID_SPEC;
    case ErrorCode::SingularPoint: return VEESYS_E_SINGULAR_POINT;
    case ErrorCode::EmptySubspace: return VEESYS_E_EMPTY_SUBSPACE;
    case ErrorCode::EmptyRestriction: return VEESYS_E_EMPTY_RESTRICTION;
    case ErrorCode::IndefiniteForm: return VEESYS_E_INDEFINITE_FORM;
    case ErrorCode::PreconditionViolated: return VEESYS_E_PRECONDITION;
    case ErrorCode::ParseError: return VEESYS_E_PARSE;
    case ErrorCode::IoError: return VEESYS_E_IO;
  }
  return VEESYS_E_INTERNAL;
}

template <class F>
veesys_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return VEESYS_OK;
  } catch (const veesys::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return VEESYS_E_INTERNAL;
  }
}

veesys_status invalid(const char* message) {
  last_error = message;
  return VEESYS_E_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

veesys::TolerancePolicy policy_of(const veesys_tolerance* tol) {
  veesys::TolerancePolicy p;
  if (tol) {
    p.eps_rank = tol->eps_rank;
    p.eps_residual = tol->eps_residual;
    p.eps_regular = tol->eps_regular;
    p.rng_seed = tol->rng_seed;
    p.max_draws = tol->max_draws;
  }
  p.validate();
  return p;
}

veesys_system* wrap(veesys::CovectorSystem s) { return new veesys_system{std::move(s)}; }

}  // namespace

extern "C" {

VEESYS_API veesys_tolerance veesys_tolerance_default(void) {
  const veesys::TolerancePolicy p;
  return {p.eps_rank, p.eps_residual, p.eps_regular, p.rng_seed, p.max_draws};
}

VEESYS_API const char* veesys_status_name(veesys_status status) {
  switch (status) {
    case VEESYS_OK: return "OK";
    case VEESYS_E_ZERO_COVECTOR: return "ZeroCovector";
    case VEESYS_E_DEGENERATE_FORM: return "DegenerateForm";
    case VEESYS_E_SAMPLING_EXHAUSTED: return "SamplingExhausted";
    case VEESYS_E_INVALID_SPEC: return "InvalidSpec";
    case VEESYS_E_SINGULAR_POINT: return "SingularPoint";
    case VEESYS_E_EMPTY_SUBSPACE: return "EmptySubspace";
    case VEESYS_E_EMPTY_RESTRICTION: return "EmptyRestriction";
    case VEESYS_E_INDEFINITE_FORM: return "IndefiniteForm";
    case VEESYS_E_PRECONDITION: return "PreconditionViolated";
    case VEESYS_E_PARSE: return "ParseError";
    case VEESYS_E_IO: return "IoError";
    case VEESYS_E_INVALID_ARGUMENT: return "InvalidArgument";
    case VEESYS_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

VEESYS_API const char* veesys_last_error(void) { return last_error.c_str(); }

VEESYS_API veesys_status veesys_build(const char* spec, veesys_system** out) {
  if (!spec || !out) return invalid("spec and out must not be NULL");
  return guard([&] { *out = wrap(veesys::build(std::string_view(spec))); });
}

VEESYS_API veesys_status veesys_load(const char* path, veesys_system** out) {
  if (!path || !out) return invalid("path and out must not be NULL");
  return guard([&] { *out = wrap(veesys::load_system(path)); });
}

VEESYS_API veesys_status veesys_from_json(const char* json, veesys_system** out) {
  if (!json || !out) return invalid("json and out must not be NULL");
  return guard([&] { *out = wrap(veesys::from_json(json)); });
}

VEESYS_API veesys_status veesys_to_json(const veesys_system* system, char** out) {
  if (!system || !out) return invalid("system and out must not be NULL");
  return guard([&] { *out = copy_string(veesys::to_json(system->system)); });
}

VEESYS_API veesys_status veesys_save(const veesys_system* system, const char* path) {
  if (!system || !path) return invalid("system and path must not be NULL");
  return guard([&] { veesys::save_system(path, system->system); });
}

VEESYS_API void veesys_free(veesys_system* system) { delete system; }

VEESYS_API void veesys_string_free(char* text) { std::free(text); }

VEESYS_API int veesys_dim(const veesys_system* system) { return system ? system->system.dim : 0; }

VEESYS_API size_t veesys_count(const veesys_system* system) {
  return system ? system->system.size() : 0;
}

VEESYS_API const char* veesys_name(const veesys_system* system) {
  return system ? system->system.name.c_str() : nullptr;
}

VEESYS_API veesys_status veesys_covector(const veesys_system* system, size_t index, double* out,
                                         size_t out_len) {
  if (!system || !out) return invalid("system and out must not be NULL");
  if (index >= system->system.size()) return invalid("covector index out of range");
  const auto& c = system->system.covectors[index];
  if (out_len < static_cast<size_t>(c.size())) return invalid("output buffer shorter than dim");
  for (Eigen::Index i = 0; i < c.size(); ++i) out[i] = c[i];
  last_error.clear();
  return VEESYS_OK;
}

VEESYS_API veesys_status veesys_check(const veesys_system* system, const veesys_tolerance* tol,
                                      int* is_vee, char** report_json) {
  if (!system || !is_vee) return invalid("system and is_vee must not be NULL");
  return guard([&] {
    const auto report = veesys::check_vee(system->system, policy_of(tol));
    *is_vee = report.is_vee ? 1 : 0;
    if (report_json) *report_json = copy_string(veesys::vee_report_json(system->system, report));
  });
}

VEESYS_API veesys_status veesys_wdvv_sweep(const veesys_system* system,
                                           const veesys_tolerance* tol, size_t points,
                                           double* max_residual, double* margin) {
  if (!system || !max_residual) return invalid("system and max_residual must not be NULL");
  return guard([&] {
    const auto sweep = veesys::wdvv_sweep(system->system, points, policy_of(tol));
    *max_residual = sweep.max_residual;
    if (margin) *margin = sweep.margin;
  });
}

VEESYS_API veesys_status veesys_restrict(const veesys_system* system, const char* along,
                                         const veesys_tolerance* tol, veesys_system** out,
                                         char** merge_log_json) {
  if (!system || !along || !out) return invalid("system, along and out must not be NULL");
  return guard([&] {
    const auto policy = policy_of(tol);
    const auto u = veesys::parse_along(along, system->system);
    auto result = veesys::restrict_along(system->system, u, policy);
    if (merge_log_json) *merge_log_json = copy_string(veesys::merge_log_json(result));
    *out = wrap(std::move(result.system));
  });
}

VEESYS_API veesys_status veesys_equivalent(const veesys_system* a, const veesys_system* b,
                                           const veesys_tolerance* tol, int* equivalent,
                                           char** certificate_json) {
  if (!a || !b || !equivalent) return invalid("a, b and equivalent must not be NULL");
  return guard([&] {
    const auto cert = veesys::equivalent(a->system, b->system, policy_of(tol));
    *equivalent = cert ? 1 : 0;
    if (certificate_json) {
      *certificate_json = cert ? copy_string(veesys::certificate_json(*cert)) : nullptr;
    }
  });
}

VEESYS_API veesys_status veesys_catalog(const char* group, double lambda, char** jsonl) {
  if (!group || !jsonl) return invalid("group and jsonl must not be NULL");
  return guard([&] {
    const auto g = veesys::parse_group(group);
    const std::optional<double> l = std::isnan(lambda) ? std::nullopt : std::optional(lambda);
    *jsonl = copy_string(veesys::catalog_jsonl(veesys::build_catalog(g, l)));
  });
}

VEESYS_API veesys_status veesys_verify_equivalence_table(int* all_pass, char** report_json) {
  if (!all_pass) return invalid("all_pass must not be NULL");
  return guard([&] {
    const auto report = veesys::verify_equivalence_table();
    *all_pass = report.all_pass() ? 1 : 0;
    if (report_json) *report_json = copy_string(veesys::verification_json(report));
  });
}

VEESYS_API veesys_status veesys_verify_theorem4(int* all_pass, char** report_json) {
  if (!all_pass) return invalid("all_pass must not be NULL");
  return guard([&] {
    const auto report = veesys::verify_theorem4_identifications();
    *all_pass = report.all_pass() ? 1 : 0;
    if (report_json) *report_json = copy_string(veesys::verification_json(report));
  });
}

}  // extern "C"
