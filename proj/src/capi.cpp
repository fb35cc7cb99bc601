#include "fewdist/fewdist.h"

#include "fewdist/report.hpp"
#include "fewdist/sdp_cert.hpp"
#include "fewdist/search_oracle.hpp"

#include <fstream>
#include <new>
#include <sstream>

struct fd_space {
  fewdist::SpaceSpec spec;
};

struct fd_code {
  fewdist::Code code;
};

struct fd_result {
  fewdist::CommandOutput out;
};

namespace {

thread_local std::string last_error;

fd_status fail(fd_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs fn, which yields a CommandOutput, and maps exceptions to status codes.
template <class Fn>
fd_status guarded(fd_result** out, Fn&& fn) {
  if (!out) return fail(FD_ERR_INVALID, "null output pointer");
  *out = nullptr;
  try {
    auto* r = new fd_result{fn()};
    *out = r;
    last_error.clear();
    return static_cast<fd_status>(r->out.status);
  } catch (const fewdist::InvalidArgument& e) {
    return fail(FD_ERR_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FD_ERR_INTERNAL, e.what());
  }
}

template <class T, class Fn>
fd_status make_handle(T** out, Fn&& fn) {
  if (!out) return fail(FD_ERR_INVALID, "null output pointer");
  *out = nullptr;
  try {
    *out = new T{fn()};
    last_error.clear();
    return FD_OK;
  } catch (const fewdist::InvalidArgument& e) {
    return fail(FD_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(FD_ERR_INTERNAL, e.what());
  }
}

std::vector<int> to_vector(const int* d, size_t count) {
  if (count && !d) throw fewdist::InvalidArgument("null distance array");
  return std::vector<int>(d, d + count);
}

const fewdist::SpaceSpec& spec_of(const fd_space* s) {
  if (!s) throw fewdist::InvalidArgument("null space handle");
  return s->spec;
}

const fewdist::Code& code_of(const fd_code* c) {
  if (!c) throw fewdist::InvalidArgument("null code handle");
  return c->code;
}

}  // namespace

extern "C" {

const char* fd_version(void) { return "0.1.0"; }

const char* fd_last_error(void) { return last_error.c_str(); }

fd_status fd_space_hamming(int n, fd_space** out) {
  return make_handle(out, [&] { return fewdist::SpaceSpec::hamming(n); });
}

fd_status fd_space_johnson(int n, int w, fd_space** out) {
  return make_handle(out, [&] { return fewdist::SpaceSpec::johnson(n, w); });
}

void fd_space_free(fd_space* space) { delete space; }

fd_status fd_code_load_file(const char* path, fd_code** out) {
  return make_handle(out, [&] {
    if (!path) throw fewdist::InvalidArgument("null path");
    std::ifstream in(path);
    if (!in) throw fewdist::InvalidArgument(std::string("cannot open ") + path);
    return fewdist::Code::parse(in);
  });
}

fd_status fd_code_parse(const char* text, fd_code** out) {
  return make_handle(out, [&] {
    if (!text) throw fewdist::InvalidArgument("null text");
    std::istringstream in(text);
    return fewdist::Code::parse(in);
  });
}

size_t fd_code_size(const fd_code* code) { return code ? code->code.size() : 0; }

int fd_code_length(const fd_code* code) { return code ? code->code.length() : 0; }

void fd_code_free(fd_code* code) { delete code; }

fd_status fd_bound(const fd_space* space, const int* distances, size_t count, const char* method, uint64_t budget,
                   fd_result** out) {
  return guarded(out, [&] {
    auto m = fewdist::parse_bound_method(method ? method : "auto");
    if (!m) throw fewdist::InvalidArgument(std::string("unknown method ") + method);
    const auto& spec = spec_of(space);
    return fewdist::run_bound(spec, fewdist::DistanceSet(spec, to_vector(distances, count)), *m, budget);
  });
}

fd_status fd_bound_det(int n, int w, const int* distances, size_t count, fd_result** out) {
  return guarded(out, [&] { return fewdist::run_det_bound(n, w, to_vector(distances, count)); });
}

fd_status fd_exact(const fd_space* space, int s, fd_result** out) {
  return guarded(out, [&] { return fewdist::run_exact(spec_of(space), s); });
}

fd_status fd_table1(int n_max, fd_result** out) {
  return guarded(out, [&] { return fewdist::run_table1(n_max); });
}

fd_status fd_appendix_check(int w, int s, int n_max, fd_result** out) {
  return guarded(out, [&] { return fewdist::run_appendix_check(w, s, n_max); });
}

fd_status fd_oracle(const fd_space* space, int s, uint64_t budget, fd_result** out) {
  return guarded(out, [&] { return fewdist::run_oracle(spec_of(space), s, budget); });
}

fd_status fd_sdp_check(const fd_space* space, const fd_code* code, const int* distances, size_t count,
                       const char* distribution, fd_result** out) {
  return guarded(out, [&] {
    const auto& spec = spec_of(space);
    std::optional<fewdist::DistanceSet> d;
    if (distances) d.emplace(spec, to_vector(distances, count));
    std::optional<fewdist::TripleDistribution> x;
    if (distribution) x.emplace(fewdist::distribution_from_json(distribution));
    return fewdist::run_sdp_check(spec, code_of(code), d, x);
  });
}

fd_status fd_sdp_distribution(const fd_space* space, const fd_code* code, fd_result** out) {
  return guarded(out, [&] {
    const auto& spec = spec_of(space);
    const auto& c = code_of(code);
    if (!c.fits(spec)) throw fewdist::InvalidArgument("code does not fit " + spec.describe());
    auto x = fewdist::triple_distribution_from_code(c, spec);
    return fewdist::CommandOutput{fewdist::CommandStatus::Ok, fewdist::distribution_to_json(x), ""};
  });
}

fd_status fd_thm11(int n_min, int n_max, fd_result** out) {
  return guarded(out, [&] { return fewdist::run_thm11(n_min, n_max); });
}

const char* fd_result_json(const fd_result* result) { return result ? result->out.json.c_str() : ""; }

const char* fd_result_table(const fd_result* result) { return result ? result->out.table.c_str() : ""; }

fd_status fd_result_status(const fd_result* result) {
  return result ? static_cast<fd_status>(result->out.status) : FD_ERR_INVALID;
}

void fd_result_free(fd_result* result) { delete result; }

uint64_t fd_default_budget(void) { return fewdist::kDefaultNodeBudget; }

}  // extern "C"
