#pragma once

// Difference-bound matrices over D^n = (Q u {-inf})^n.
//
// Entry (i, j) = (m, ~) encodes x_i ~ m + x_j with the convention
// +inf + (-inf) = +inf. Bounds form the "regular algebra": oplus keeps the
// tighter bound, otimes chains two bounds along a path.

#include <cstddef>
#include <string>
#include <vector>

#include "maxplus.hpp"

namespace mpr {

class Bound {
 public:
  enum class Kind : unsigned char { NegInf, Finite, PosInf };

  /// (+inf, <=): no constraint.
  Bound() = default;

  static Bound le(const Rational& m) { return Bound(Kind::Finite, m, false); }
  static Bound lt(const Rational& m) { return Bound(Kind::Finite, m, true); }
  static Bound unbounded() { return Bound(); }
  /// (-inf, <=). (-inf, <) is not a valid bound and is never produced.
  static Bound neg_inf() { return Bound(Kind::NegInf, Rational(0), false); }
  static Bound finite(const Rational& m, bool strict) { return Bound(Kind::Finite, m, strict); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool strict() const { return strict_; }
  /// Magnitude of a finite bound.
  const Rational& magnitude() const;

  Bound closed() const { return Bound(kind_, value_, false); }

  friend bool operator==(const Bound& a, const Bound& b);

 private:
  Bound(Kind k, const Rational& v, bool strict) : kind_(k), value_(v), strict_(strict && k == Kind::Finite) {}

  Kind kind_ = Kind::PosInf;
  Rational value_;
  bool strict_ = false;
};

std::string to_string(const Bound& b);

/// a "is at most as tight as" b in the regular-algebra order (a ⪯ b).
bool looser_or_equal(const Bound& a, const Bound& b);
/// Regular-algebra oplus: the tighter of the two.
Bound tighter(const Bound& a, const Bound& b);
/// Regular-algebra otimes: magnitudes add, strictness is sticky.
Bound chain(const Bound& a, const Bound& b);
/// Does lhs ~ m + rhs hold for lhs, rhs in R_max?
bool satisfies(const MpValue& lhs, const Bound& bound, const MpValue& rhs);

class Dbm {
 public:
  Dbm() = default;
  /// Unconstrained DBM: (0,<=) on the diagonal, (+inf,<=) elsewhere.
  explicit Dbm(std::size_t n);

  std::size_t dim() const { return n_; }
  Bound& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Bound& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Tightens entry (i, j) with b.
  void constrain(std::size_t i, std::size_t j, const Bound& b);

  /// A DBM with empty region in every sense: (0,<) on the diagonal.
  static Dbm empty(std::size_t n);

  friend bool operator==(const Dbm&, const Dbm&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Bound> data_;
};

std::string to_string(const Dbm& m);

Dbm dbm_intersect(const Dbm& a, const Dbm& b);

/// M* = oplus_k M^k, computed by Floyd-Warshall relaxation. Entries reachable
/// through a negative cycle take their limit value (-inf, <=), so the result
/// is idempotent and R(M*) = R(M) over D^n.
Dbm kleene_star(const Dbm& m);

/// The diagonal test on M*: true iff R(M) contains no point of Q^n (no point
/// with every coordinate finite). For DBMs without -inf entries this is
/// exactly "some diagonal entry of M* differs from (0,<=)".
bool dbm_is_empty(const Dbm& m);

/// Top-left k x k block of M*: projection onto the first k coordinates of the
/// finite part of R(M). Returns Dbm::empty(k) when R(M) has no finite point.
Dbm dbm_project(const Dbm& m, std::size_t k);

/// Sub-DBM on the listed coordinates of M* (general projection).
Dbm dbm_restrict(const Dbm& m, const std::vector<std::size_t>& coords);

/// Replaces every strict bound with its non-strict counterpart.
Dbm dbm_close(const Dbm& m);

bool dbm_member(const Dbm& m, const MpVector& x);

/// R(M) intersected with the slice x_0 = 0; points live in D^n.
class AffineDbm {
 public:
  AffineDbm() = default;
  explicit AffineDbm(Dbm m);
  /// Unconstrained affine DBM over D^n.
  static AffineDbm universe(std::size_t n) { return AffineDbm(Dbm(n + 1)); }

  std::size_t dim() const { return dbm_.dim() - 1; }
  const Dbm& dbm() const { return dbm_; }
  Dbm& dbm() { return dbm_; }

  bool contains(const MpVector& x) const;

 private:
  Dbm dbm_;
};

}  // namespace mpr
