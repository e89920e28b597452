#pragma once

// Brute-force references for the tests. Everything here evaluates the
// defining formulas directly, without going through the library's algorithms.

#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "core/commands.hpp"

namespace brute {

using namespace mpr;
using Rng = std::mt19937_64;

inline int rint(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); }

inline MpVector pt(std::string_view text) {
  std::size_t n = 1;
  for (char c : text) n += c == ',';
  return parse_point(text, n);
}

inline MpValue eps() { return MpValue::eps(); }

// max_i a_i + x_i, epsilon when nothing is finite.
inline MpValue dot(const MpVector& a, const MpVector& x) {
  MpValue best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_eps() || x[i].is_eps()) continue;
    Rational s = a[i].value() + x[i].value();
    if (best.is_eps() || s > best.value()) best = MpValue(s);
  }
  return best;
}

inline bool leq(const MpValue& l, const MpValue& r) { return l.is_eps() || (r.is_finite() && l.value() <= r.value()); }
inline bool lt(const MpValue& l, const MpValue& r) { return r.is_finite() && (l.is_eps() || l.value() < r.value()); }

inline MpValue lift(const MpValue& v, const MpValue& c) {
  if (c.is_eps()) return v;
  if (v.is_eps()) return c;
  return v.value() < c.value() ? c : v;
}

inline bool in_halfspace(const AffineHalfSpace& h, const MpVector& x) {
  return leq(lift(dot(h.a, x), h.c), lift(dot(h.b, x), h.d));
}

inline bool in_halfspace(const HalfSpace& h, const MpVector& x) { return leq(dot(h.a, x), dot(h.b, x)); }

inline bool in_mform(const std::vector<HalfSpace>& rows, const MpVector& x) {
  for (const auto& h : rows)
    if (!in_halfspace(h, x)) return false;
  return true;
}

inline MpVector apply(const MpMatrix& a, const MpVector& x) {
  MpVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
  return y;
}

inline MpVector join(const MpVector& x, const MpVector& y) {
  MpVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = lift(x[i], y[i]);
  return z;
}

inline MpVector times(const MpValue& l, const MpVector& x) {
  MpVector y(x.size());
  if (l.is_eps()) return y;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].is_finite()) y[i] = MpValue(Rational(x[i].value() + l.value()));
  return y;
}

// x_i ~ m + x_j, with +inf + (-inf) = +inf.
inline bool bound_holds(const MpValue& xi, const Bound& b, const MpValue& xj) {
  if (b.is_pos_inf() || xi.is_eps()) return true;
  if (b.is_neg_inf() || xj.is_eps()) return false;
  const Rational r = b.magnitude() + xj.value();
  return b.strict() ? xi.value() < r : xi.value() <= r;
}

inline bool dbm_holds(const Dbm& m, const MpVector& x) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!bound_holds(x[i], m(i, j), x[j])) return false;
  return true;
}

inline std::vector<MpValue> axis(int lo, int hi, int den, bool with_eps) {
  std::vector<MpValue> out;
  if (with_eps) out.push_back(eps());
  for (int k = lo * den; k <= hi * den; ++k) out.push_back(MpValue(Rational(k, den)));
  return out;
}

// Calls f on every point of axis^n; stops early when f returns true.
inline bool any_point(std::size_t n, const std::vector<MpValue>& ax, const std::function<bool(const MpVector&)>& f) {
  std::vector<std::size_t> idx(n, 0);
  MpVector x(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) x[i] = ax[idx[i]];
    if (f(x)) return true;
    std::size_t i = n;
    while (i > 0) {
      if (++idx[i - 1] < ax.size()) break;
      idx[i - 1] = 0;
      --i;
    }
    if (i == 0) return false;
  }
}

inline Bound random_bound(Rng& rng, int range, unsigned neg_inf_percent) {
  const auto r = rng() % 100;
  if (r < 25) return Bound::unbounded();
  if (r < 25 + neg_inf_percent) return Bound::neg_inf();
  return Bound::finite(Rational(rint(rng, -range, range)), rng() % 3 == 0);
}

inline Dbm random_dbm(Rng& rng, std::size_t n, int range, unsigned neg_inf_percent) {
  Dbm m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = random_bound(rng, range, neg_inf_percent);
  return m;
}

inline MpVector random_vector(Rng& rng, std::size_t n, int range, unsigned eps_percent) {
  MpVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng() % 100 >= eps_percent) v[i] = MpValue(rint(rng, -range, range));
  return v;
}

inline HalfSpace random_row(Rng& rng, std::size_t n) {
  for (;;) {
    HalfSpace h{MpVector(n), MpVector(n)};
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = rng() % 100;
      if (r < 35) continue;
      if (r < 60 || r >= 85) h.a[i] = MpValue(rint(rng, -4, 4));
      if (r >= 60) h.b[i] = MpValue(rint(rng, -4, 4));
    }
    if (!h.a.is_epsilon() && !h.b.is_epsilon()) return h;
  }
}

// A random combination of generators: a point of their span.
inline MpVector combination(Rng& rng, const std::vector<MpVector>& gens, std::size_t dim) {
  MpVector x(dim);
  for (const auto& g : gens)
    if (rng() % 3) x = join(x, times(MpValue(rint(rng, -5, 5)), g));
  return x;
}

inline bool closed_target(const SetExpr& s) {
  for (const auto& t : literal_dnf(s))
    for (const auto& l : t)
      if (l.complemented) return false;
  return true;
}

// Mutual span membership.
inline bool same_span(const std::vector<MpVector>& a, const std::vector<MpVector>& b) {
  for (const auto& v : a)
    if (!span_member(b, v)) return false;
  for (const auto& v : b)
    if (!span_member(a, v)) return false;
  return true;
}

// No generator lies in the span of the others.
inline bool minimal(const std::vector<MpVector>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<MpVector> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (span_member(rest, gens[i])) return false;
  }
  return true;
}

// Unfiltered double description step: generators inside h, plus the
// pairwise combinations across h.
inline std::vector<MpVector> dd_step(const std::vector<MpVector>& v0, const HalfSpace& h) {
  std::vector<MpVector> in, out, res;
  for (const auto& v : v0) (in_halfspace(h, v) ? in : out).push_back(v);
  res = in;
  for (const auto& v : in)
    for (const auto& w : out) {
      MpVector c = join(times(dot(h.a, w), v), times(dot(h.b, v), w));
      if (!c.is_epsilon()) res.push_back(c);
    }
  return res;
}

// Unfiltered generators of closure(Span(v0) minus h).
inline std::vector<MpVector> complement_step(const std::vector<MpVector>& v0, const HalfSpace& h) {
  std::vector<MpVector> out, in, res;
  for (const auto& v : v0) (lt(dot(h.b, v), dot(h.a, v)) ? out : in).push_back(v);
  res = out;
  for (const auto& v : out)
    for (const auto& w : in) {
      MpVector c = join(times(dot(h.b, w), v), times(dot(h.a, v), w));
      if (!c.is_epsilon()) res.push_back(c);
    }
  return res;
}

inline std::vector<MpVector> unit_basis(std::size_t n) {
  std::vector<MpVector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(MpVector::unit(n, i));
  return out;
}

// Does R(m) have a point whose finite coordinates are exactly `finite`? Plain
// DBMs are translation invariant, so the first finite coordinate is pinned to
// 0. With integer bounds in [-r, r] a solution exists on the grid of step
// 1/(n+1) within (n-1)r + 1 of it, whenever one exists at all.
inline bool has_point_with_support(const Dbm& m, const std::vector<bool>& finite, int r) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < n; ++i)
    if (finite[i]) coords.push_back(i);
  MpVector x(n);
  if (coords.empty()) return dbm_holds(m, x);
  x[coords[0]] = MpValue(0);
  const int span = static_cast<int>(n - 1) * r + 1;
  const auto ax = axis(-span, span, static_cast<int>(n + 1), false);
  return any_point(coords.size() - 1, ax, [&](const MpVector& y) {
    for (std::size_t p = 1; p < coords.size(); ++p) x[coords[p]] = y[p - 1];
    return dbm_holds(m, x);
  });
}

inline bool has_finite_point(const Dbm& m, int r) { return has_point_with_support(m, std::vector<bool>(m.dim(), true), r); }

// Exists a finite extension of x (first k coordinates given) into R(m)?
inline bool extends(const Dbm& m, const MpVector& x, int span) {
  const std::size_t n = m.dim(), k = x.size();
  MpVector full(n);
  for (std::size_t i = 0; i < k; ++i) full[i] = x[i];
  const auto ax = axis(-span, span, static_cast<int>(n + 1), false);
  return any_point(n - k, ax, [&](const MpVector& y) {
    for (std::size_t i = k; i < n; ++i) full[i] = y[i - k];
    return dbm_holds(m, full);
  });
}

}  // namespace brute
