#include "dbm.hpp"

#include <sstream>

namespace mpr {

const Rational& Bound::magnitude() const {
  if (kind_ != Kind::Finite) throw DomainError("magnitude() of an infinite bound");
  return value_;
}

bool operator==(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != Bound::Kind::Finite) return true;
  return a.strict_ == b.strict_ && cmp(a.value_, b.value_) == 0;
}

std::string to_string(const Bound& b) {
  switch (b.kind()) {
    case Bound::Kind::NegInf: return "(-inf,<=)";
    case Bound::Kind::PosInf: return "(+inf,<=)";
    default: return "(" + b.magnitude().get_str() + (b.strict() ? ",<)" : ",<=)");
  }
}

namespace {

// Numeric comparison of magnitudes: -inf < finite < +inf.
int compare_magnitude(const Bound& a, const Bound& b) {
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  if (!a.is_finite()) return 0;
  return cmp(a.magnitude(), b.magnitude());
}

}  // namespace

bool looser_or_equal(const Bound& a, const Bound& b) {
  int c = compare_magnitude(a, b);
  if (c != 0) return c > 0;
  return !(a.strict() && !b.strict());
}

Bound tighter(const Bound& a, const Bound& b) { return looser_or_equal(a, b) ? b : a; }

Bound chain(const Bound& a, const Bound& b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return Bound::unbounded();
  if (a.is_neg_inf() || b.is_neg_inf()) return Bound::neg_inf();
  return Bound::finite(a.magnitude() + b.magnitude(), a.strict() || b.strict());
}

bool satisfies(const MpValue& lhs, const Bound& bound, const MpValue& rhs) {
  // eps on the left satisfies every bound, so a tighter bound always implies
  // a looser one, strict or not.
  if (bound.is_pos_inf() || lhs.is_eps()) return true;
  if (bound.is_neg_inf() || rhs.is_eps()) return false;
  int c = cmp(lhs.value(), bound.magnitude() + rhs.value());
  return bound.strict() ? c < 0 : c <= 0;
}

Dbm::Dbm(std::size_t n) : n_(n), data_(n * n) {
  for (std::size_t i = 0; i < n; ++i) (*this)(i, i) = Bound::le(0);
}

void Dbm::constrain(std::size_t i, std::size_t j, const Bound& b) {
  auto& e = (*this)(i, j);
  e = tighter(e, b);
}

Dbm Dbm::empty(std::size_t n) {
  Dbm m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Bound::lt(0);
  return m;
}

std::string to_string(const Dbm& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
  return out.str();
}

Dbm dbm_intersect(const Dbm& a, const Dbm& b) {
  if (a.dim() != b.dim()) throw DimensionError("dbm_intersect: dimension mismatch");
  Dbm r = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.constrain(i, j, b(i, j));
  return r;
}

namespace {

bool below_unit(const Bound& d) {
  return d.is_neg_inf() || (d.is_finite() && sgn(d.magnitude()) < 0);
}

// One Floyd-Warshall sweep; returns whether anything changed.
bool relax(Dbm& d) {
  const std::size_t n = d.dim();
  bool changed = false;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d(i, k).is_pos_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d(k, j).is_pos_inf()) continue;
        Bound via = chain(d(i, k), d(k, j));
        if (!looser_or_equal(via, d(i, j))) {
          d(i, j) = via;
          changed = true;
        }
      }
    }
  return changed;
}

// Paths through a negative cycle have limit (-inf, <=).
bool saturate_negative_cycles(Dbm& d) {
  const std::size_t n = d.dim();
  bool changed = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (!below_unit(d(k, k))) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (d(i, k).is_pos_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d(k, j).is_pos_inf() || d(i, j).is_neg_inf()) continue;
        d(i, j) = Bound::neg_inf();
        changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

Dbm kleene_star(const Dbm& m) {
  Dbm d = m;
  for (std::size_t i = 0; i < d.dim(); ++i) d.constrain(i, i, Bound::le(0));
  relax(d);
  while (saturate_negative_cycles(d)) {
    if (!relax(d)) break;
  }
  return d;
}

namespace {

bool star_has_finite_point(const Dbm& star) {
  for (std::size_t i = 0; i < star.dim(); ++i) {
    if (!(star(i, i) == Bound::le(0))) return false;
    for (std::size_t j = 0; j < star.dim(); ++j)
      if (star(i, j).is_neg_inf()) return false;
  }
  return true;
}

}  // namespace

bool dbm_is_empty(const Dbm& m) { return !star_has_finite_point(kleene_star(m)); }

Dbm dbm_restrict(const Dbm& m, const std::vector<std::size_t>& coords) {
  for (auto c : coords)
    if (c >= m.dim()) throw DimensionError("dbm_restrict: coordinate out of range");
  Dbm star = kleene_star(m);
  if (!star_has_finite_point(star)) return Dbm::empty(coords.size());
  Dbm r(coords.size());
  for (std::size_t a = 0; a < coords.size(); ++a)
    for (std::size_t b = 0; b < coords.size(); ++b) r(a, b) = star(coords[a], coords[b]);
  return r;
}

Dbm dbm_project(const Dbm& m, std::size_t k) {
  if (k < 1 || k > m.dim()) throw DimensionError("dbm_project: k out of range");
  std::vector<std::size_t> coords(k);
  for (std::size_t i = 0; i < k; ++i) coords[i] = i;
  return dbm_restrict(m, coords);
}

Dbm dbm_close(const Dbm& m) {
  Dbm r = m;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = m(i, j).closed();
  return r;
}

bool dbm_member(const Dbm& m, const MpVector& x) {
  if (x.size() != m.dim()) throw DimensionError("dbm_member: dimension mismatch");
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!satisfies(x[i], m(i, j), x[j])) return false;
  return true;
}

AffineDbm::AffineDbm(Dbm m) : dbm_(std::move(m)) {
  if (dbm_.dim() == 0) throw DimensionError("AffineDbm needs the homogenizing coordinate");
}

bool AffineDbm::contains(const MpVector& x) const {
  if (x.size() + 1 != dbm_.dim()) throw DimensionError("AffineDbm::contains: dimension mismatch");
  MpVector y(x.size() + 1);
  y[0] = MpValue(0);
  for (std::size_t i = 0; i < x.size(); ++i) y[i + 1] = x[i];
  return dbm_member(dbm_, y);
}

}  // namespace mpr
