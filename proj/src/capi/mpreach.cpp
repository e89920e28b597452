#include "mpreach/mpreach.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/commands.hpp"

struct mpr_problem {
  mpr::Problem p;
};

struct mpr_result {
  mpr::ReachResult r;
};

namespace {

thread_local std::string last_error;

mpr_status set_error(mpr_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
mpr_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const mpr::OracleCapExceeded& e) {
    return set_error(MPR_ERR_ORACLE_CAP, e.what());
  } catch (const mpr::InputError& e) {
    return set_error(MPR_ERR_INPUT, e.what());
  } catch (const mpr::DimensionError& e) {
    return set_error(MPR_ERR_INPUT, e.what());
  } catch (const mpr::DomainError& e) {
    return set_error(MPR_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MPR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MPR_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* c = static_cast<char*>(std::malloc(s.size() + 1));
  if (!c) throw std::bad_alloc();
  std::memcpy(c, s.c_str(), s.size() + 1);
  return c;
}

mpr_status null_arg(const char* what) { return set_error(MPR_ERR_USAGE, std::string(what) + " is null"); }

mpr::Rational parse_bound(const char* text, const char* what) {
  try {
    mpr::MpValue v = mpr::parse_value(text);
    if (v.is_eps()) throw mpr::InputError(std::string(what) + " must be finite");
    return v.value();
  } catch (const std::invalid_argument& e) {
    throw mpr::InputError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

extern "C" {

const char* mpr_version(void) { return "1.0.0"; }

const char* mpr_last_error(void) { return last_error.c_str(); }

void mpr_string_free(char* s) { std::free(s); }

mpr_status mpr_problem_load(const char* path, mpr_problem** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new mpr_problem{mpr::load_problem(path)};
    return MPR_OK;
  });
}

mpr_status mpr_problem_parse(const char* json, mpr_problem** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new mpr_problem{mpr::parse_problem(json)};
    return MPR_OK;
  });
}

mpr_status mpr_problem_random(uint64_t seed, int closed_only, mpr_problem** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    mpr::RandomOptions opt;
    opt.closed_only = closed_only != 0;
    *out = new mpr_problem{mpr::random_problem(seed, opt)};
    return MPR_OK;
  });
}

void mpr_problem_free(mpr_problem* p) { delete p; }

mpr_status mpr_problem_to_json(const mpr_problem* p, char** out) {
  if (!p) return null_arg("problem");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = copy_out(mpr::problem_to_json(p->p));
    return MPR_OK;
  });
}

size_t mpr_problem_dim(const mpr_problem* p) { return p ? p->p.n : 0; }

int mpr_problem_has_dynamics(const mpr_problem* p) { return p && p->p.has_dynamics; }

mpr_status mpr_problem_set_steps(mpr_problem* p, unsigned steps, mpr_mode mode) {
  if (!p) return null_arg("problem");
  if (steps == 0) return set_error(MPR_ERR_USAGE, "steps must be at least 1");
  if (mode != MPR_ONE_SHOT && mode != MPR_ITERATED) return set_error(MPR_ERR_USAGE, "unknown mode");
  p->p.steps = steps;
  p->p.mode = mode == MPR_ONE_SHOT ? mpr::StepMode::one_shot : mpr::StepMode::iterated;
  return MPR_OK;
}

mpr_status mpr_approx(const mpr_problem* p, int conic, mpr_result** out) {
  if (!p) return null_arg("problem");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new mpr_result{mpr::run_approx(p->p, conic != 0)};
    return MPR_OK;
  });
}

mpr_status mpr_reach(const mpr_problem* p, mpr_result** out) {
  if (!p) return null_arg("problem");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new mpr_result{mpr::run_reach(p->p)};
    return MPR_OK;
  });
}

void mpr_result_free(mpr_result* r) { delete r; }

mpr_status mpr_result_to_json(const mpr_result* r, char** out) {
  if (!r) return null_arg("result");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = copy_out(mpr::result_to_json(r->r.set, r->r.stats));
    return MPR_OK;
  });
}

mpr_status mpr_result_parse(const char* json, mpr_result** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guarded([&] {
    mpr::ResultFile f = mpr::parse_result(json);
    auto* res = new mpr_result;
    res->r.set = std::move(f.set);
    res->r.stats = std::move(f.stats);
    res->r.exact = res->r.set.exact;
    *out = res;
    return MPR_OK;
  });
}

int mpr_result_is_exact(const mpr_result* r) { return r && r->r.exact; }

size_t mpr_result_dim(const mpr_result* r) { return r ? r->r.set.dim : 0; }

mpr_status mpr_result_member(const mpr_result* r, const char* point, int* inside) {
  if (!r) return null_arg("result");
  if (!point) return null_arg("point");
  if (!inside) return null_arg("inside");
  return guarded([&] {
    *inside = mpr::union_member(r->r.set, mpr::parse_point(point, r->r.set.dim));
    return MPR_OK;
  });
}

mpr_status mpr_extract_control(const mpr_result* r, const char* point, char** control, int* guaranteed) {
  if (!r) return null_arg("result");
  if (!point) return null_arg("point");
  if (!control) return null_arg("control");
  return guarded([&] {
    if (r->r.lifted.empty() && !r->r.set.empty())
      throw mpr::InputError("this result carries no control information (iterated or approx run)");
    auto c = mpr::extract_control(r->r, mpr::parse_point(point, r->r.set.dim));
    *control = c ? copy_out(mpr::format_point(c->u)) : nullptr;
    if (guaranteed) *guaranteed = c && c->guaranteed;
    return MPR_OK;
  });
}

mpr_status mpr_sample(const mpr_problem* p, const mpr_result* r, const mpr_sample_options* opt, char** csv) {
  if (!p) return null_arg("problem");
  if (!r) return null_arg("result");
  if (!opt || !opt->lo || !opt->hi) return null_arg("options");
  if (!csv) return null_arg("csv");
  return guarded([&] {
    mpr::SampleOptions o;
    o.lo = parse_bound(opt->lo, "box lower bound");
    o.hi = parse_bound(opt->hi, "box upper bound");
    o.res = opt->res;
    o.with_eps = opt->with_eps != 0;
    o.with_oracle = opt->with_oracle != 0;
    *csv = copy_out(mpr::sample_csv(p->p, r->r, o));
    return MPR_OK;
  });
}

mpr_status mpr_compare_oracle(const mpr_problem* p, const mpr_result* r, uint64_t samples, uint64_t seed,
                              char** report) {
  if (!p) return null_arg("problem");
  if (!r) return null_arg("result");
  if (!report) return null_arg("report");
  return guarded([&] {
    if (r->r.set.dim != p->p.n) throw mpr::InputError("result and problem dimensions differ");
    mpr::DbmUnion oracle = mpr::oracle_for(p->p);
    *report = copy_out(mpr::compare_oracle(p->p, r->r, oracle, samples, seed).to_json());
    return MPR_OK;
  });
}

}  // extern "C"
