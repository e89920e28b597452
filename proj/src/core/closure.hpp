#pragma once

// Set expressions over D^n and outer approximation of their regions by
// finite unions of closed tropical polyhedra.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tropical.hpp"

namespace mpr {

using Stats = std::map<std::string, std::int64_t>;

/// S = empty | H | S^c | S1 u ... | S1 n ...
class SetExpr {
 public:
  enum class Kind { Empty, Halfspace, Complement, Union, Intersection };

  SetExpr() = default;

  static SetExpr empty() { return {}; }
  static SetExpr halfspace(AffineHalfSpace h);
  static SetExpr complement(SetExpr s);
  static SetExpr set_union(std::vector<SetExpr> args);
  static SetExpr intersection(std::vector<SetExpr> args);
  /// D^n, written as the complement of the empty set.
  static SetExpr universe() { return complement(empty()); }

  Kind kind() const { return kind_; }
  const AffineHalfSpace& literal() const { return h_; }
  const std::vector<SetExpr>& args() const { return args_; }

  /// Direct evaluation of the set semantics.
  bool contains(const MpVector& x) const;
  /// Throws DimensionError unless every half-space has dimension n.
  void check_dim(std::size_t n) const;

 private:
  Kind kind_ = Kind::Empty;
  AffineHalfSpace h_;
  std::vector<SetExpr> args_;
};

struct Literal {
  AffineHalfSpace h;
  bool complemented = false;
};

/// Conjunction of literals; the empty conjunction is D^n.
using LiteralTerm = std::vector<Literal>;

/// Negation normal form distributed into a union of conjunctions. An empty
/// result is the empty set.
std::vector<LiteralTerm> literal_dnf(const SetExpr& s);

/// H_1 n ... n H_k1 n H_{k1+1}^c n ... over homogenized half-spaces.
struct Term {
  std::vector<HalfSpace> closed;
  std::vector<HalfSpace> complemented;
};

struct Dnf {
  std::size_t dim = 0;
  std::vector<Term> terms;
};

/// Affine reading: literals are homogenized, dim = n + 1.
Dnf to_dnf(const SetExpr& s, std::size_t n);
/// Conic reading: the constants c and d must be epsilon, dim = n.
Dnf to_dnf_conic(const SetExpr& s, std::size_t n);

Term homogenize(const LiteralTerm& t);

/// Generators of closure(Span(V0) n H^c), built from the pairwise
/// combinations (b|w).v (+) (a|v).w with v outside H and w inside.
ConeVForm closure_minus_halfspace(const ConeVForm& v0, const HalfSpace& h);

/// Generators of the topological closure of a term. Restarts on the smaller
/// support whenever the complemented literals leave some coordinate epsilon.
ConeVForm approx_term(const Term& t, std::size_t dim, Stats* stats = nullptr);

struct UnionOfPolyhedra {
  enum class Kind { affine, conic };

  /// Ambient dimension n. Affine cones live in D^(n+1).
  std::size_t dim = 0;
  Kind kind = Kind::affine;
  std::vector<ConeVForm> cones;
  bool exact = true;

  bool empty() const { return cones.empty(); }
  std::size_t cone_dim() const { return kind == Kind::affine ? dim + 1 : dim; }
};

/// Adds a cone unless it is empty, lacks the homogenizing coordinate
/// (affine unions) or is already present.
void add_cone(UnionOfPolyhedra& u, ConeVForm c);

UnionOfPolyhedra approx_set(const SetExpr& s, std::size_t n, Stats* stats = nullptr);
UnionOfPolyhedra approx_set_conic(const SetExpr& s, std::size_t n, Stats* stats = nullptr);

bool union_member(const UnionOfPolyhedra& u, const MpVector& x);

}  // namespace mpr
