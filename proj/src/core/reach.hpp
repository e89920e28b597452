#pragma once

// Backward reachability for x_k = A x_{k-1} (+) B u_k with u_k in U.

#include <optional>

#include "closure.hpp"

namespace mpr {

struct MplSystem {
  std::size_t n = 0;
  std::size_t m = 0;
  MpMatrix A;
  MpMatrix B;
  SetExpr U = SetExpr::universe();

  void validate() const;
};

/// Constraints over (lambda, x, u) in D^(1+n+m):
/// K1 y <= L1 y row-wise, and K2 y < L2 y row-wise.
struct LiftedConstraints {
  MpMatrix K1, L1, K2, L2;

  std::size_t dim() const;
  /// As a term: closed rows, and strict rows written as complements of
  /// L2_r y <= K2_r y.
  Term term() const;
};

/// Substitutes z = A x (+) B u into the target literals and appends the
/// control literals.
LiftedConstraints build_lift(const MplSystem& sys, const LiteralTerm& target, const LiteralTerm& u);

struct ReachResult {
  UnionOfPolyhedra set;
  bool exact = true;
  Stats stats;
  /// Lifted closures over (lambda, x, u) before projection. Only filled by
  /// the one-step and one-shot paths, where controls can be read back.
  std::vector<ConeVForm> lifted;
  /// Number of control coordinates in the lifted cones (N * m for one-shot).
  std::size_t control_dim = 0;
};

ReachResult one_step_backward(const MplSystem& sys, const SetExpr& target);

/// One step from a union of closed polyhedra, via generator coefficients mu:
/// A_i x (+) B_i u = (W_i | mu), lambda = (W_0 | mu).
ReachResult one_step_backward(const MplSystem& sys, const UnionOfPolyhedra& target);

enum class StepMode { one_shot, iterated };

/// x_N = A^N x_0 (+) [A^(N-1) B | ... | A B | B] (u_1, ..., u_N).
MplSystem stacked_system(const MplSystem& sys, unsigned steps);

ReachResult n_step_backward(const MplSystem& sys, const SetExpr& target, unsigned steps, StepMode mode);

struct Control {
  MpVector u;
  /// False when the target or U had complemented literals: u then only
  /// lands in the closure of the target.
  bool guaranteed = true;
};

/// Reads a control for x off the residuation certificate of (0, x) against
/// the projected lifted generators. Empty when x is not in the set.
std::optional<Control> extract_control(const ReachResult& r, const MpVector& x);

}  // namespace mpr
