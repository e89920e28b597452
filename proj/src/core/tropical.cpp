#include "tropical.hpp"

#include <algorithm>

namespace mpr {

bool HalfSpace::contains(const MpVector& x) const {
  return scalar_product(a, x) <= scalar_product(b, x);
}

bool AffineHalfSpace::contains(const MpVector& x) const {
  return mp_add(scalar_product(a, x), c) <= mp_add(scalar_product(b, x), d);
}

HalfSpace AffineHalfSpace::homogenize() const {
  HalfSpace h{MpVector(dim() + 1), MpVector(dim() + 1)};
  h.a[0] = c;
  h.b[0] = d;
  for (std::size_t i = 0; i < dim(); ++i) {
    h.a[i + 1] = a[i];
    h.b[i + 1] = b[i];
  }
  return h;
}

ConeMForm::ConeMForm(std::size_t dim, std::vector<HalfSpace> rows) : dim_(dim) {
  for (auto& h : rows) add(std::move(h));
}

ConeMForm::ConeMForm(const MpMatrix& a, const MpMatrix& b) : dim_(a.cols()) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("ConeMForm: A and B must have the same shape");
  for (std::size_t r = 0; r < a.rows(); ++r) rows_.push_back({a.row(r), b.row(r)});
}

void ConeMForm::add(HalfSpace h) {
  if (h.a.size() != dim_ || h.b.size() != dim_) throw DimensionError("ConeMForm: row dimension mismatch");
  rows_.push_back(std::move(h));
}

bool ConeMForm::contains(const MpVector& x) const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const HalfSpace& h) { return h.contains(x); });
}

MpVector normalize_generator(const MpVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_finite()) {
      MpVector r(v.size());
      const Rational shift = v[i].value();
      for (std::size_t j = i; j < v.size(); ++j)
        if (v[j].is_finite()) r[j] = MpValue(Rational(v[j].value() - shift));
      return r;
    }
  }
  return v;
}

ConeVForm::ConeVForm(std::size_t dim, std::vector<MpVector> generators) : dim_(dim) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    if (g.size() != dim) throw DimensionError("ConeVForm: generator dimension mismatch");
    if (g.is_epsilon()) continue;
    gens_.push_back(normalize_generator(g));
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

ConeVForm ConeVForm::unit_basis(std::size_t dim) {
  std::vector<MpVector> g;
  for (std::size_t i = 0; i < dim; ++i) g.push_back(MpVector::unit(dim, i));
  return ConeVForm(dim, std::move(g));
}

MpVector ConeVForm::sum() const {
  MpVector s(dim_);
  for (const auto& g : gens_)
    for (std::size_t i = 0; i < dim_; ++i)
      if (s[i] < g[i]) s[i] = g[i];
  return s;
}

ConeVForm homogenize(const PolyVForm& p) {
  std::vector<MpVector> g;
  auto lift = [&](const MpVector& v, MpValue lead) {
    if (v.size() != p.dim) throw DimensionError("homogenize: generator dimension mismatch");
    MpVector h(p.dim + 1);
    h[0] = std::move(lead);
    for (std::size_t i = 0; i < p.dim; ++i) h[i + 1] = v[i];
    g.push_back(std::move(h));
  };
  for (const auto& r : p.rays) lift(r, MpValue::eps());
  for (const auto& e : p.vertices) lift(e, MpValue(0));
  return ConeVForm(p.dim + 1, std::move(g));
}

PolyVForm dehomogenize(const ConeVForm& c) {
  if (c.dim() == 0) throw DimensionError("dehomogenize: cone has no leading coordinate");
  PolyVForm p;
  p.dim = c.dim() - 1;
  for (const auto& g : c.generators()) {
    if (g[0].is_eps()) {
      p.rays.push_back(slice(g, 1, p.dim));
    } else {
      MpVector v = scale(MpValue(Rational(-g[0].value())), g);
      p.vertices.push_back(slice(v, 1, p.dim));
    }
  }
  return p;
}

ConeMForm homogenize(std::size_t dim, const std::vector<AffineHalfSpace>& constraints) {
  ConeMForm c(dim + 1);
  for (const auto& h : constraints) {
    if (h.dim() != dim) throw DimensionError("homogenize: half-space dimension mismatch");
    c.add(h.homogenize());
  }
  return c;
}

namespace {

// Coefficient residuation_coeff(x, g) and the coordinates where
// coefficient + g_i reaches x_i. Returns false when g cannot contribute.
bool cover(const MpVector& x, const MpVector& g, std::vector<char>& covered, MpValue* coeff) {
  thread_local std::vector<Rational> diff;
  diff.resize(g.size());
  const Rational* best = nullptr;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_eps()) continue;
    if (x[i].is_eps()) return false;
    diff[i] = x[i].value() - g[i].value();
    if (!best || cmp(diff[i], *best) < 0) best = &diff[i];
  }
  if (!best) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i].is_finite() && cmp(diff[i], *best) == 0) covered[i] = 1;
  if (coeff) *coeff = MpValue(*best);
  return true;
}

bool reaches(const std::vector<MpVector>& gens, const MpVector& x, std::size_t skip,
             std::vector<MpValue>* certificate) {
  std::vector<char> covered(x.size(), 0);
  std::size_t missing = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_eps())
      covered[i] = 1;
    else
      ++missing;
  }
  if (certificate) certificate->assign(gens.size(), MpValue::eps());
  if (missing == 0) return true;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k == skip) continue;
    if (gens[k].size() != x.size()) throw DimensionError("span_member: dimension mismatch");
    cover(x, gens[k], covered, certificate ? &(*certificate)[k] : nullptr);
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool proportional(const MpVector& u, const MpVector& v) {
  if (u.size() != v.size()) return false;
  std::optional<Rational> shift;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_eps() != v[i].is_eps()) return false;
    if (u[i].is_eps()) continue;
    Rational d = u[i].value() - v[i].value();
    if (!shift)
      shift = d;
    else if (cmp(d, *shift) != 0)
      return false;
  }
  return shift.has_value();
}

}  // namespace

bool span_member(const std::vector<MpVector>& gens, const MpVector& x,
                 std::vector<MpValue>* certificate) {
  return reaches(gens, x, gens.size(), certificate);
}

bool span_member(const ConeVForm& v, const MpVector& x, std::vector<MpValue>* certificate) {
  if (x.size() != v.dim()) throw DimensionError("span_member: dimension mismatch");
  return span_member(v.generators(), x, certificate);
}

bool is_redundant(const MpVector& v, const std::vector<MpVector>& gens) {
  std::vector<MpVector> others;
  for (const auto& g : gens)
    if (!proportional(g, v)) others.push_back(g);
  return span_member(others, v);
}

ConeVForm extremal_filter(const ConeVForm& v) {
  std::vector<MpVector> kept = v.generators();
  for (std::size_t i = 0; i < kept.size();) {
    if (reaches(kept, kept[i], i, nullptr))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return ConeVForm(v.dim(), std::move(kept));
}

ConeVForm intersect_halfspace(const ConeVForm& v0, const HalfSpace& h) {
  if (h.dim() != v0.dim()) throw DimensionError("intersect_halfspace: dimension mismatch");
  if (h.is_everything()) return v0;

  std::vector<std::size_t> inside, outside;
  std::vector<MpValue> av(v0.size()), bv(v0.size());
  for (std::size_t i = 0; i < v0.size(); ++i) {
    av[i] = scalar_product(h.a, v0[i]);
    bv[i] = scalar_product(h.b, v0[i]);
    (av[i] <= bv[i] ? inside : outside).push_back(i);
  }
  if (outside.empty()) return v0;

  std::vector<MpVector> gens;
  gens.reserve(inside.size() * (outside.size() + 1));
  for (auto i : inside) gens.push_back(v0[i]);
  for (auto i : inside)
    for (auto j : outside) gens.push_back(oplus(scale(av[j], v0[i]), scale(bv[i], v0[j])));
  return extremal_filter(ConeVForm(v0.dim(), std::move(gens)));
}

ConeVForm mform_to_vform(const ConeMForm& c) {
  ConeVForm v = ConeVForm::unit_basis(c.dim());
  for (const auto& h : c.halfspaces()) v = intersect_halfspace(v, h);
  return v;
}

bool IndexConstraint::holds(const MpVector& x) const {
  auto side = [&](const std::vector<std::size_t>& idx) {
    MpValue m;
    for (auto i : idx) m = mp_add(m, x[i]);
    return m;
  };
  MpValue l = side(lhs), r = side(rhs);
  return strict ? l < r : l <= r;
}

bool TangentCone::contains(const MpVector& x) const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const IndexConstraint& c) { return c.holds(x); });
}

std::vector<std::size_t> argmax(const MpVector& c, const MpVector& v) {
  const MpValue top = scalar_product(c, v);
  std::vector<std::size_t> idx;
  if (top.is_eps()) return idx;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (mp_mul(c[i], v[i]) == top) idx.push_back(i);
  return idx;
}

TangentCone tangent_cone(const MpVector& v, const ConeMForm& c) {
  if (v.size() != c.dim()) throw DimensionError("tangent_cone: dimension mismatch");
  if (!c.contains(v)) throw DomainError("tangent_cone: point is not in the cone");
  TangentCone t;
  t.dim = c.dim();
  t.support = support(v);
  for (const auto& h : c.halfspaces()) {
    MpValue lhs = scalar_product(h.a, v);
    if (lhs.is_eps() || lhs != scalar_product(h.b, v)) continue;
    t.constraints.push_back({argmax(h.a, v), argmax(h.b, v), false});
  }
  return t;
}

ComplementTangent tangent_cone_complement(const MpVector& v, const HalfSpace& h) {
  if (v.size() != h.dim()) throw DimensionError("tangent_cone_complement: dimension mismatch");
  if (scalar_product(h.a, v) != scalar_product(h.b, v))
    throw DomainError("tangent_cone_complement: requires (a|v) = (b|v)");
  std::vector<std::size_t> i_set = argmax(h.b, v);
  std::vector<std::size_t> j_set = argmax(h.a, v);
  std::vector<std::size_t> j_minus_i;
  std::set_difference(j_set.begin(), j_set.end(), i_set.begin(), i_set.end(),
                      std::back_inserter(j_minus_i));
  return {IndexConstraint{i_set, j_set, true}, IndexConstraint{i_set, j_minus_i, false}};
}

bool zero_is_extremal(const TangentCone& t) {
  const auto& universe = t.support;
  if (universe.size() <= 1) return true;

  // 0 splits as a (+) b with a, b != 0 iff two proper index sets Z whose
  // 0/eps indicator vectors lie in the cone cover the universe. Feasible sets
  // are closed under union, so for each k take the largest one avoiding k.
  std::vector<char> in_universe(t.dim, 0), covered(t.dim, 0);
  for (auto i : universe) in_universe[i] = 1;
  for (auto k : universe) {
    std::vector<char> z = in_universe;
    z[k] = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& c : t.constraints) {
        bool lhs_hit = std::any_of(c.lhs.begin(), c.lhs.end(), [&](std::size_t i) { return z[i]; });
        bool rhs_hit = std::any_of(c.rhs.begin(), c.rhs.end(), [&](std::size_t i) { return z[i]; });
        if (lhs_hit && !rhs_hit) {
          for (auto i : c.lhs) z[i] = 0;
          changed = true;
        }
      }
    }
    for (auto i : universe)
      if (z[i]) covered[i] = 1;
  }
  return !std::all_of(universe.begin(), universe.end(), [&](std::size_t i) { return covered[i]; });
}

Extremality is_extremal_in_closure(const MpVector& v, const ConeMForm* c_mform,
                                   const std::vector<MpVector>& c_generators, const HalfSpace& h) {
  const MpValue av = scalar_product(h.a, v);
  const MpValue bv = scalar_product(h.b, v);
  if (bv < av) return is_redundant(v, c_generators) ? Extremality::not_extremal : Extremality::extremal;
  if (av != bv || c_mform == nullptr || !c_mform->contains(v)) return Extremality::unknown;

  TangentCone t = tangent_cone(v, *c_mform);
  t.constraints.push_back(tangent_cone_complement(v, h).closed);
  return zero_is_extremal(t) ? Extremality::extremal : Extremality::unknown;
}

}  // namespace mpr
