#pragma once

// Exact backward reachability with unions of DBMs, by partitioning the
// dynamics into affine pieces. Exponential in every dimension; meant for
// small instances and as an independent reference for the tropical method.

#include <stdexcept>

#include "dbm.hpp"
#include "reach.hpp"

namespace mpr {

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  std::size_t max_dim = 6;         // n + m
  std::size_t max_members = 20000; // DBMs alive at any stage
};

/// Points of D^n whose finite coordinates are exactly `coords`, constrained
/// by a DBM over (x_0 = 0, x_coords...).
struct PatternDbm {
  std::vector<std::size_t> coords;
  Dbm dbm;  // canonical (Kleene star) form

  bool contains(const MpVector& x) const;
  /// Membership in the topological closure of the region.
  bool closure_contains(const MpVector& x) const;
};

struct DbmUnion {
  std::size_t dim = 0;
  std::vector<PatternDbm> members;

  bool contains(const MpVector& x) const;
  bool closure_contains(const MpVector& x) const;
  /// Canonicalizes m, and appends it unless its region is empty.
  void add(PatternDbm m);
};

DbmUnion setexpr_to_dbm_union(const SetExpr& s, std::size_t n, const OracleLimits& lim = {});

/// Affine piece of y -> F y: on `region`, (F y)_i = offsets[i] + y_{selection[i]},
/// or epsilon where selection[i] is empty.
struct PwaRegion {
  std::vector<std::optional<std::size_t>> selection;
  std::vector<MpValue> offsets;
  PatternDbm region;
};

std::vector<PwaRegion> pwa_partition(const MpMatrix& f, const OracleLimits& lim = {});

/// {y | F y in X}.
DbmUnion inverse_image(const MpMatrix& f, const DbmUnion& x, const OracleLimits& lim = {});

DbmUnion oracle_backward(const MplSystem& sys, const DbmUnion& target, const OracleLimits& lim = {});
DbmUnion oracle_backward(const MplSystem& sys, const SetExpr& target, const OracleLimits& lim = {});
/// Iterates oracle_backward `steps` times.
DbmUnion oracle_backward(const MplSystem& sys, const SetExpr& target, unsigned steps,
                         const OracleLimits& lim = {});

}  // namespace mpr
