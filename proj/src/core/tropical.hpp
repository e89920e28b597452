#pragma once

// Tropical cones and polyhedra in outer (M-form) and inner (V-form)
// representation, and the incremental double description method that
// converts one into the other.

#include <cstddef>
#include <optional>
#include <vector>

#include "maxplus.hpp"

namespace mpr {

/// {x | (a|x) <= (b|x)}.
struct HalfSpace {
  MpVector a;
  MpVector b;

  std::size_t dim() const { return a.size(); }
  bool contains(const MpVector& x) const;
  /// a is the epsilon vector: the half-space is all of D^n.
  bool is_everything() const { return a.is_epsilon(); }
};

/// {x | (a|x) (+) c <= (b|x) (+) d}.
struct AffineHalfSpace {
  MpVector a;
  MpVector b;
  MpValue c;
  MpValue d;

  std::size_t dim() const { return a.size(); }
  bool contains(const MpVector& x) const;
  /// Half-space over (lambda, x) in D^(n+1) with c and d on the leading coordinate.
  HalfSpace homogenize() const;
};

/// {x | A (x) x <= B (x) x}.
class ConeMForm {
 public:
  explicit ConeMForm(std::size_t dim = 0) : dim_(dim) {}
  ConeMForm(std::size_t dim, std::vector<HalfSpace> rows);
  ConeMForm(const MpMatrix& a, const MpMatrix& b);

  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return rows_.size(); }
  const HalfSpace& row(std::size_t r) const { return rows_[r]; }
  const std::vector<HalfSpace>& halfspaces() const { return rows_; }
  void add(HalfSpace h);

  bool contains(const MpVector& x) const;

 private:
  std::size_t dim_;
  std::vector<HalfSpace> rows_;
};

/// Scales v so that its first finite coordinate is 0. The epsilon vector is
/// returned unchanged.
MpVector normalize_generator(const MpVector& v);

/// Generating family of a tropical cone. Generators are normalized, free of
/// duplicates and of the epsilon vector, and kept in sorted order.
class ConeVForm {
 public:
  explicit ConeVForm(std::size_t dim = 0) : dim_(dim) {}
  ConeVForm(std::size_t dim, std::vector<MpVector> generators);

  static ConeVForm unit_basis(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const std::vector<MpVector>& generators() const { return gens_; }
  const MpVector& operator[](std::size_t i) const { return gens_[i]; }

  /// (+) of all generators; its support is the support of the cone.
  MpVector sum() const;

  friend bool operator==(const ConeVForm&, const ConeVForm&) = default;

 private:
  std::size_t dim_;
  std::vector<MpVector> gens_;
};

/// Tropical polyhedron from rays v_i and vertices e_j, combined with
/// (+)_j mu_j = 0.
struct PolyVForm {
  std::size_t dim = 0;
  std::vector<MpVector> rays;
  std::vector<MpVector> vertices;
};

ConeVForm homogenize(const PolyVForm& p);
/// Generators with epsilon leading coordinate become rays; the others are
/// scaled to leading coordinate 0 and become vertices.
PolyVForm dehomogenize(const ConeVForm& c);
ConeMForm homogenize(std::size_t dim, const std::vector<AffineHalfSpace>& constraints);

/// Span(V0) n H, via the pairwise combination rule of the double description
/// method, followed by extremal_filter.
ConeVForm intersect_halfspace(const ConeVForm& v0, const HalfSpace& h);

/// Generators of <A, B>, starting from the unit basis and cutting one
/// half-space at a time.
ConeVForm mform_to_vform(const ConeMForm& c);

/// x in Span(V)? Tests whether the greatest sub-solution
/// (+)_v residuation_coeff(x, v) . v reaches x. When `certificate` is given it
/// receives the coefficients (one per generator).
bool span_member(const ConeVForm& v, const MpVector& x,
                 std::vector<MpValue>* certificate = nullptr);
bool span_member(const std::vector<MpVector>& gens, const MpVector& x,
                 std::vector<MpValue>* certificate = nullptr);

/// Is v in the span of those generators that are not proportional to v?
/// For v in Span(gens) this is the negation of extremality.
bool is_redundant(const MpVector& v, const std::vector<MpVector>& gens);

/// Keeps exactly one scaled representative per extreme ray.
ConeVForm extremal_filter(const ConeVForm& v);

/// Constraint (+)_{i in lhs} x_i <= (or <) (+)_{j in rhs} x_j. An empty side reads as epsilon.
struct IndexConstraint {
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;
  bool strict = false;

  bool holds(const MpVector& x) const;
};

/// Local model of a cone at a point v, acting on the coordinates in `support`
/// (the support of v; the other coordinates stay epsilon).
struct TangentCone {
  std::size_t dim = 0;
  std::vector<std::size_t> support;
  std::vector<IndexConstraint> constraints;

  bool contains(const MpVector& x) const;
};

/// argmax(c|v) = {i | c_i + v_i = (c|v)}; empty when (c|v) is epsilon.
std::vector<std::size_t> argmax(const MpVector& c, const MpVector& v);

/// T(v, C) from the rows of C active at v. Throws DomainError if v is not in C.
TangentCone tangent_cone(const MpVector& v, const ConeMForm& c);

struct ComplementTangent {
  IndexConstraint strict;  // T(v, H^c)
  IndexConstraint closed;  // its closure, with rhs J \ I
};

/// Tangent cone of H^c at a point with (a|v) = (b|v). Throws DomainError otherwise.
ComplementTangent tangent_cone_complement(const MpVector& v, const HalfSpace& h);

/// Is 0 an extremal point of the (closed) tangent cone?
bool zero_is_extremal(const TangentCone& t);

enum class Extremality { extremal, not_extremal, unknown };

/// Fast extremality test for v in closure(C n H^c).
///
/// When (b|v) < (a|v) the answer is exact: v is extremal iff it is extremal in
/// C, decided against C's generators. When (a|v) = (b|v) the answer is
/// `extremal` if 0 is extremal in T(v,C) n closure(T(v,H^c)) and `unknown`
/// otherwise. Case 2 needs C's M-form; pass nullptr when it is not available.
Extremality is_extremal_in_closure(const MpVector& v, const ConeMForm* c_mform,
                                   const std::vector<MpVector>& c_generators, const HalfSpace& h);

}  // namespace mpr
