#pragma once

// Front-end operations shared by the C API and the tests.

#include <cstdint>
#include <random>

#include "io.hpp"
#include "oracle.hpp"

namespace mpr {

/// Closure of the target set alone.
ReachResult run_approx(const Problem& p, bool conic);
/// Backward reachable set with the problem's steps and mode.
ReachResult run_reach(const Problem& p);
/// run_reach for problems with dynamics, run_approx otherwise.
ReachResult run_default(const Problem& p);

/// Exact reference for the set computed by run_default: direct evaluation
/// for a bare set, the DBM oracle for reachability. Throws OracleCapExceeded.
DbmUnion oracle_for(const Problem& p, const OracleLimits& lim = {});

struct RandomOptions {
  std::size_t max_n = 3;
  std::size_t max_m = 2;
  std::size_t max_closed = 2;
  std::size_t max_complemented = 1;
  int entry_range = 5;
  unsigned eps_percent = 20;
  bool closed_only = false;
};

/// Random system, a single closed control half-space and a target that is
/// an intersection of random closed and complemented half-spaces.
Problem random_problem(std::uint64_t seed, const RandomOptions& opt = {});

/// Coordinates are epsilon 15% of the time, otherwise integers in [-12, 12]
/// or halves and thirds in the same range.
MpVector random_point(std::mt19937_64& rng, std::size_t n);

struct SampleOptions {
  Rational lo = -5;
  Rational hi = 5;
  unsigned res = 11;
  bool with_eps = false;
  bool with_oracle = false;
};

/// CSV with columns x1..xn, in_set, on_boundary (and in_oracle on request).
/// on_boundary marks points of the computed closure outside the exact set;
/// it reads "na" when the exact set is unavailable.
std::string sample_csv(const Problem& p, const ReachResult& r, const SampleOptions& opt);

struct CompareReport {
  std::uint64_t samples = 0;
  std::uint64_t in_set = 0;
  std::uint64_t in_oracle = 0;
  std::uint64_t in_oracle_closure = 0;
  /// Disagreements with the exact oracle.
  std::uint64_t mismatches = 0;
  /// Those lying in the closure of the oracle set but not in the set itself.
  std::uint64_t boundary_mismatches = 0;
  std::uint64_t off_boundary_mismatches = 0;
  /// Disagreements with the closure of the oracle set.
  std::uint64_t closure_mismatches = 0;
  bool exact = false;

  std::string to_json() const;
};

CompareReport compare_oracle(const Problem& p, const ReachResult& r, const DbmUnion& oracle,
                             std::uint64_t samples, std::uint64_t seed);

}  // namespace mpr
