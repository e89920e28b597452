#include "closure.hpp"

#include <algorithm>

namespace mpr {

SetExpr SetExpr::halfspace(AffineHalfSpace h) {
  if (h.a.size() != h.b.size()) throw DimensionError("half-space sides differ in dimension");
  SetExpr s;
  s.kind_ = Kind::Halfspace;
  s.h_ = std::move(h);
  return s;
}

SetExpr SetExpr::complement(SetExpr arg) {
  SetExpr s;
  s.kind_ = Kind::Complement;
  s.args_.push_back(std::move(arg));
  return s;
}

SetExpr SetExpr::set_union(std::vector<SetExpr> args) {
  SetExpr s;
  s.kind_ = Kind::Union;
  s.args_ = std::move(args);
  return s;
}

SetExpr SetExpr::intersection(std::vector<SetExpr> args) {
  SetExpr s;
  s.kind_ = Kind::Intersection;
  s.args_ = std::move(args);
  return s;
}

bool SetExpr::contains(const MpVector& x) const {
  switch (kind_) {
    case Kind::Empty: return false;
    case Kind::Halfspace: return h_.contains(x);
    case Kind::Complement: return !args_[0].contains(x);
    case Kind::Union:
      return std::any_of(args_.begin(), args_.end(), [&](const SetExpr& s) { return s.contains(x); });
    case Kind::Intersection:
      return std::all_of(args_.begin(), args_.end(), [&](const SetExpr& s) { return s.contains(x); });
  }
  return false;
}

void SetExpr::check_dim(std::size_t n) const {
  if (kind_ == Kind::Halfspace && h_.dim() != n)
    throw DimensionError("half-space of dimension " + std::to_string(h_.dim()) + ", expected " +
                         std::to_string(n));
  for (const auto& a : args_) a.check_dim(n);
}

namespace {

std::vector<LiteralTerm> product(const std::vector<std::vector<LiteralTerm>>& factors) {
  std::vector<LiteralTerm> acc{LiteralTerm{}};
  for (const auto& f : factors) {
    std::vector<LiteralTerm> next;
    next.reserve(acc.size() * f.size());
    for (const auto& t : acc)
      for (const auto& u : f) {
        LiteralTerm joined = t;
        joined.insert(joined.end(), u.begin(), u.end());
        next.push_back(std::move(joined));
      }
    acc = std::move(next);
  }
  return acc;
}

std::vector<LiteralTerm> dnf(const SetExpr& s, bool negated) {
  using K = SetExpr::Kind;
  switch (s.kind()) {
    case K::Empty:
      return negated ? std::vector<LiteralTerm>{LiteralTerm{}} : std::vector<LiteralTerm>{};
    case K::Halfspace: return {LiteralTerm{Literal{s.literal(), negated}}};
    case K::Complement: return dnf(s.args()[0], !negated);
    case K::Union:
    case K::Intersection: {
      std::vector<std::vector<LiteralTerm>> parts;
      for (const auto& a : s.args()) parts.push_back(dnf(a, negated));
      bool conjunctive = (s.kind() == K::Intersection) != negated;
      if (conjunctive) return product(parts);
      std::vector<LiteralTerm> all;
      for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
      return all;
    }
  }
  return {};
}

}  // namespace

std::vector<LiteralTerm> literal_dnf(const SetExpr& s) { return dnf(s, false); }

Term homogenize(const LiteralTerm& t) {
  Term r;
  for (const auto& l : t) (l.complemented ? r.complemented : r.closed).push_back(l.h.homogenize());
  return r;
}

Dnf to_dnf(const SetExpr& s, std::size_t n) {
  s.check_dim(n);
  Dnf d;
  d.dim = n + 1;
  for (const auto& t : literal_dnf(s)) d.terms.push_back(homogenize(t));
  return d;
}

Dnf to_dnf_conic(const SetExpr& s, std::size_t n) {
  s.check_dim(n);
  Dnf d;
  d.dim = n;
  for (const auto& t : literal_dnf(s)) {
    Term term;
    for (const auto& l : t) {
      if (!l.h.c.is_eps() || !l.h.d.is_eps())
        throw DomainError("conic set expressions take no constant terms");
      (l.complemented ? term.complemented : term.closed).push_back({l.h.a, l.h.b});
    }
    d.terms.push_back(std::move(term));
  }
  return d;
}

ConeVForm closure_minus_halfspace(const ConeVForm& v0, const HalfSpace& h) {
  if (h.dim() != v0.dim()) throw DimensionError("closure_minus_halfspace: dimension mismatch");
  if (h.is_everything()) return ConeVForm(v0.dim());

  std::vector<std::size_t> outside, inside;
  std::vector<MpValue> av(v0.size()), bv(v0.size());
  for (std::size_t i = 0; i < v0.size(); ++i) {
    av[i] = scalar_product(h.a, v0[i]);
    bv[i] = scalar_product(h.b, v0[i]);
    (bv[i] < av[i] ? outside : inside).push_back(i);
  }
  if (outside.empty()) return ConeVForm(v0.dim());

  std::vector<MpVector> gens;
  gens.reserve(outside.size() * (inside.size() + 1));
  for (auto v : outside) gens.push_back(v0[v]);
  for (auto v : outside)
    for (auto w : inside) gens.push_back(oplus(scale(bv[w], v0[v]), scale(av[v], v0[w])));
  return extremal_filter(ConeVForm(v0.dim(), std::move(gens)));
}

ConeVForm approx_term(const Term& t, std::size_t dim, Stats* stats) {
  ConeMForm closed(dim);
  for (const auto& h : t.closed) closed.add(h);
  for (const auto& h : t.complemented)
    if (h.dim() != dim) throw DimensionError("approx_term: literal dimension mismatch");

  ConeVForm base = mform_to_vform(closed);
  std::vector<std::size_t> current = support(base.sum());
  std::int64_t restrictions = 0;

  for (;;) {
    ConeVForm v = base;
    for (const auto& h : t.complemented) {
      if (v.empty()) break;
      v = closure_minus_halfspace(v, h);
    }
    std::vector<std::size_t> reached = support(v.sum());
    if (reached == current || v.empty()) {
      if (stats) {
        (*stats)["terms"] += 1;
        (*stats)["restrictions"] += restrictions;
        (*stats)["max_restrictions_per_term"] =
            std::max((*stats)["max_restrictions_per_term"], restrictions);
        (*stats)["term_generators"] += static_cast<std::int64_t>(v.size());
      }
      return v;
    }
    // Every point of the term lies in D^reached; start over on that face.
    std::vector<char> allowed(dim, 0);
    for (auto i : reached) allowed[i] = 1;
    std::vector<MpVector> kept;
    for (const auto& g : base.generators()) {
      bool inside = true;
      for (std::size_t i = 0; i < dim; ++i)
        if (g[i].is_finite() && !allowed[i]) inside = false;
      if (inside) kept.push_back(g);
    }
    base = ConeVForm(dim, std::move(kept));
    current = support(base.sum());
    ++restrictions;
  }
}

void add_cone(UnionOfPolyhedra& u, ConeVForm c) {
  if (c.empty()) return;
  if (c.dim() != u.cone_dim()) throw DimensionError("add_cone: dimension mismatch");
  if (u.kind == UnionOfPolyhedra::Kind::affine && c.sum()[0].is_eps()) return;
  if (std::find(u.cones.begin(), u.cones.end(), c) != u.cones.end()) return;
  u.cones.push_back(std::move(c));
}

namespace {

UnionOfPolyhedra approx_dnf(const Dnf& d, std::size_t n, UnionOfPolyhedra::Kind kind, Stats* stats) {
  UnionOfPolyhedra u;
  u.dim = n;
  u.kind = kind;
  for (const auto& t : d.terms) {
    if (!t.complemented.empty()) u.exact = false;
    add_cone(u, approx_term(t, d.dim, stats));
  }
  if (stats) (*stats)["cones"] = static_cast<std::int64_t>(u.cones.size());
  return u;
}

}  // namespace

UnionOfPolyhedra approx_set(const SetExpr& s, std::size_t n, Stats* stats) {
  return approx_dnf(to_dnf(s, n), n, UnionOfPolyhedra::Kind::affine, stats);
}

UnionOfPolyhedra approx_set_conic(const SetExpr& s, std::size_t n, Stats* stats) {
  return approx_dnf(to_dnf_conic(s, n), n, UnionOfPolyhedra::Kind::conic, stats);
}

bool union_member(const UnionOfPolyhedra& u, const MpVector& x) {
  if (x.size() != u.dim) throw DimensionError("union_member: dimension mismatch");
  MpVector y = x;
  if (u.kind == UnionOfPolyhedra::Kind::affine) {
    y = MpVector(u.dim + 1);
    y[0] = MpValue(0);
    for (std::size_t i = 0; i < u.dim; ++i) y[i + 1] = x[i];
  }
  return std::any_of(u.cones.begin(), u.cones.end(),
                     [&](const ConeVForm& c) { return span_member(c, y); });
}

}  // namespace mpr
