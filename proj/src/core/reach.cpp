#include "reach.hpp"

namespace mpr {

void MplSystem::validate() const {
  if (A.rows() != n || A.cols() != n)
    throw DimensionError("A must be " + std::to_string(n) + "x" + std::to_string(n));
  if (B.rows() != n || B.cols() != m)
    throw DimensionError("B must be " + std::to_string(n) + "x" + std::to_string(m));
  U.check_dim(m);
}

std::size_t LiftedConstraints::dim() const { return K1.cols(); }

Term LiftedConstraints::term() const {
  Term t;
  for (std::size_t r = 0; r < K1.rows(); ++r) t.closed.push_back({K1.row(r), L1.row(r)});
  for (std::size_t r = 0; r < K2.rows(); ++r) t.complemented.push_back({L2.row(r), K2.row(r)});
  return t;
}

namespace {

MpVector concat(std::initializer_list<const MpVector*> parts) {
  MpVector r;
  for (const auto* p : parts)
    for (const auto& v : *p) r.push_back(v);
  return r;
}

// (c0 | z) with z = A x (+) B u, over (lambda, x, u).
MpVector state_row(const MplSystem& sys, const MpValue& c0, const MpVector& cz) {
  MpVector lead{c0};
  MpVector cx = row_apply(cz, sys.A);
  MpVector cu = row_apply(cz, sys.B);
  return concat({&lead, &cx, &cu});
}

MpVector control_row(const MplSystem& sys, const MpValue& c0, const MpVector& cu) {
  MpVector lead{c0};
  MpVector cx(sys.n);
  return concat({&lead, &cx, &cu});
}

MpMatrix rows_or_empty(const std::vector<MpVector>& rows, std::size_t cols) {
  return MpMatrix::from_rows(rows, cols);
}

bool has_complement(const std::vector<LiteralTerm>& terms) {
  for (const auto& t : terms)
    for (const auto& l : t)
      if (l.complemented) return true;
  return false;
}

void merge(Stats& into, const Stats& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

MpVector project(const MpVector& g, std::size_t count) { return slice(g, 0, count); }

ConeVForm project_cone(const ConeVForm& c, std::size_t count) {
  std::vector<MpVector> gens;
  gens.reserve(c.size());
  for (const auto& g : c.generators()) gens.push_back(project(g, count));
  return extremal_filter(ConeVForm(count, std::move(gens)));
}

SetExpr embed(const SetExpr& s, std::size_t offset, std::size_t total) {
  using K = SetExpr::Kind;
  switch (s.kind()) {
    case K::Empty: return SetExpr::empty();
    case K::Halfspace: {
      const auto& h = s.literal();
      AffineHalfSpace e{MpVector(total), MpVector(total), h.c, h.d};
      for (std::size_t i = 0; i < h.dim(); ++i) {
        e.a[offset + i] = h.a[i];
        e.b[offset + i] = h.b[i];
      }
      return SetExpr::halfspace(std::move(e));
    }
    case K::Complement: return SetExpr::complement(embed(s.args()[0], offset, total));
    case K::Union:
    case K::Intersection: {
      std::vector<SetExpr> args;
      for (const auto& a : s.args()) args.push_back(embed(a, offset, total));
      return s.kind() == K::Union ? SetExpr::set_union(std::move(args))
                                  : SetExpr::intersection(std::move(args));
    }
  }
  return SetExpr::empty();
}

}  // namespace

LiftedConstraints build_lift(const MplSystem& sys, const LiteralTerm& target, const LiteralTerm& u) {
  const std::size_t dim = 1 + sys.n + sys.m;
  std::vector<MpVector> k1, l1, k2, l2;
  for (const auto& lit : target) {
    if (lit.h.dim() != sys.n) throw DimensionError("build_lift: target literal dimension mismatch");
    MpVector left = state_row(sys, lit.h.c, lit.h.a);
    MpVector right = state_row(sys, lit.h.d, lit.h.b);
    if (lit.complemented) {
      k2.push_back(std::move(right));
      l2.push_back(std::move(left));
    } else {
      k1.push_back(std::move(left));
      l1.push_back(std::move(right));
    }
  }
  for (const auto& lit : u) {
    if (lit.h.dim() != sys.m) throw DimensionError("build_lift: control literal dimension mismatch");
    MpVector left = control_row(sys, lit.h.c, lit.h.a);
    MpVector right = control_row(sys, lit.h.d, lit.h.b);
    if (lit.complemented) {
      k2.push_back(std::move(right));
      l2.push_back(std::move(left));
    } else {
      k1.push_back(std::move(left));
      l1.push_back(std::move(right));
    }
  }
  return {rows_or_empty(k1, dim), rows_or_empty(l1, dim), rows_or_empty(k2, dim),
          rows_or_empty(l2, dim)};
}

ReachResult one_step_backward(const MplSystem& sys, const SetExpr& target) {
  sys.validate();
  target.check_dim(sys.n);
  const auto targets = literal_dnf(target);
  const auto controls = literal_dnf(sys.U);

  ReachResult r;
  r.set.dim = sys.n;
  r.control_dim = sys.m;
  r.exact = !has_complement(targets) && !has_complement(controls);
  r.set.exact = r.exact;
  for (const auto& t : targets)
    for (const auto& u : controls) {
      LiftedConstraints lift = build_lift(sys, t, u);
      ConeVForm cone = approx_term(lift.term(), lift.dim(), &r.stats);
      if (cone.empty() || cone.sum()[0].is_eps()) continue;
      add_cone(r.set, project_cone(cone, 1 + sys.n));
      r.lifted.push_back(std::move(cone));
    }
  r.stats["cones"] = static_cast<std::int64_t>(r.set.cones.size());
  return r;
}

ReachResult one_step_backward(const MplSystem& sys, const UnionOfPolyhedra& target) {
  sys.validate();
  if (target.dim != sys.n || target.kind != UnionOfPolyhedra::Kind::affine)
    throw DimensionError("one_step_backward: target must be an affine union over D^n");
  const auto controls = literal_dnf(sys.U);
  const std::size_t base = 1 + sys.n + sys.m;

  ReachResult r;
  r.set.dim = sys.n;
  r.exact = target.exact && !has_complement(controls);
  r.set.exact = r.exact;
  for (const auto& w : target.cones) {
    const std::size_t k = w.size();
    const std::size_t dim = base + k;
    Term lifted;
    for (std::size_t i = 0; i <= sys.n; ++i) {
      MpVector lhs(dim), rhs(dim);
      if (i == 0) {
        lhs[0] = MpValue(0);
      } else {
        for (std::size_t j = 0; j < sys.n; ++j) lhs[1 + j] = sys.A(i - 1, j);
        for (std::size_t j = 0; j < sys.m; ++j) lhs[1 + sys.n + j] = sys.B(i - 1, j);
      }
      for (std::size_t g = 0; g < k; ++g) rhs[base + g] = w[g][i];
      lifted.closed.push_back({lhs, rhs});
      lifted.closed.push_back({rhs, lhs});
    }
    for (const auto& u : controls) {
      Term t = lifted;
      for (const auto& lit : u) {
        MpVector a(dim), b(dim);
        a[0] = lit.h.c;
        b[0] = lit.h.d;
        for (std::size_t j = 0; j < sys.m; ++j) {
          a[1 + sys.n + j] = lit.h.a[j];
          b[1 + sys.n + j] = lit.h.b[j];
        }
        if (lit.complemented)
          t.complemented.push_back({a, b});
        else
          t.closed.push_back({a, b});
      }
      ConeVForm cone = approx_term(t, dim, &r.stats);
      if (cone.empty() || cone.sum()[0].is_eps()) continue;
      add_cone(r.set, project_cone(cone, 1 + sys.n));
    }
  }
  r.stats["cones"] = static_cast<std::int64_t>(r.set.cones.size());
  return r;
}

MplSystem stacked_system(const MplSystem& sys, unsigned steps) {
  if (steps == 0) throw DomainError("the number of steps must be at least 1");
  sys.validate();
  MplSystem s;
  s.n = sys.n;
  s.m = sys.m * steps;
  s.A = mat_power(sys.A, steps);
  s.B = MpMatrix(sys.n, 0);
  for (unsigned k = 1; k <= steps; ++k) s.B = hconcat(s.B, mat_mul(mat_power(sys.A, steps - k), sys.B));
  std::vector<SetExpr> blocks;
  for (unsigned k = 0; k < steps; ++k) blocks.push_back(embed(sys.U, k * sys.m, s.m));
  s.U = steps == 1 ? sys.U : SetExpr::intersection(std::move(blocks));
  return s;
}

ReachResult n_step_backward(const MplSystem& sys, const SetExpr& target, unsigned steps, StepMode mode) {
  if (steps == 0) throw DomainError("the number of steps must be at least 1");
  if (mode == StepMode::one_shot || steps == 1) return one_step_backward(stacked_system(sys, steps), target);

  ReachResult r = one_step_backward(sys, target);
  for (unsigned k = 2; k <= steps; ++k) {
    ReachResult next = one_step_backward(sys, r.set);
    merge(next.stats, r.stats);
    r = std::move(next);
  }
  r.stats["cones"] = static_cast<std::int64_t>(r.set.cones.size());
  return r;
}

std::optional<Control> extract_control(const ReachResult& r, const MpVector& x) {
  const std::size_t n = r.set.dim;
  if (x.size() != n) throw DimensionError("extract_control: dimension mismatch");
  MpVector y(n + 1);
  y[0] = MpValue(0);
  for (std::size_t i = 0; i < n; ++i) y[i + 1] = x[i];

  for (const auto& cone : r.lifted) {
    std::vector<MpVector> projected;
    projected.reserve(cone.size());
    for (const auto& g : cone.generators()) projected.push_back(project(g, n + 1));
    std::vector<MpValue> lambda;
    if (!span_member(projected, y, &lambda)) continue;
    MpVector u(r.control_dim);
    for (std::size_t g = 0; g < cone.size(); ++g)
      u = oplus(u, scale(lambda[g], slice(cone[g], n + 1, r.control_dim)));
    return Control{u, r.exact};
  }
  return std::nullopt;
}

}  // namespace mpr
