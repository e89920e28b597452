#include "commands.hpp"

#include <sstream>

#include <json.hpp>

namespace mpr {

ReachResult run_approx(const Problem& p, bool conic) {
  ReachResult r;
  r.set = conic ? approx_set_conic(p.target, p.n, &r.stats) : approx_set(p.target, p.n, &r.stats);
  r.exact = r.set.exact;
  return r;
}

ReachResult run_reach(const Problem& p) {
  if (!p.has_dynamics) throw InputError("$: reachability needs the matrices A and B");
  return n_step_backward(p.sys, p.target, p.steps, p.mode);
}

ReachResult run_default(const Problem& p) { return p.has_dynamics ? run_reach(p) : run_approx(p, false); }

DbmUnion oracle_for(const Problem& p, const OracleLimits& lim) {
  if (!p.has_dynamics) return setexpr_to_dbm_union(p.target, p.n, lim);
  return oracle_backward(p.sys, p.target, p.steps, lim);
}

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool percent(std::mt19937_64& rng, unsigned p) { return rng() % 100 < p; }

MpValue random_entry(std::mt19937_64& rng, const RandomOptions& opt, unsigned eps_percent) {
  if (percent(rng, eps_percent)) return MpValue::eps();
  return MpValue(uniform_int(rng, -opt.entry_range, opt.entry_range));
}

AffineHalfSpace random_halfspace(std::mt19937_64& rng, std::size_t dim, const RandomOptions& opt) {
  // Each coordinate (and the constant) appears on at most one side; a term on
  // both sides would cancel or pin the coordinate to epsilon. Sides that come
  // out all-epsilon are redrawn.
  for (;;) {
    AffineHalfSpace h{MpVector(dim), MpVector(dim), {}, {}};
    auto place = [&](MpValue& left, MpValue& right, unsigned eps_percent) {
      if (percent(rng, eps_percent)) return;
      (rng() % 2 ? left : right) = MpValue(uniform_int(rng, -opt.entry_range, opt.entry_range));
    };
    for (std::size_t i = 0; i < dim; ++i) place(h.a[i], h.b[i], 30);
    place(h.c, h.d, 40);
    if ((!h.a.is_epsilon() || h.c.is_finite()) && (!h.b.is_epsilon() || h.d.is_finite())) return h;
  }
}

}  // namespace

Problem random_problem(std::uint64_t seed, const RandomOptions& opt) {
  std::mt19937_64 rng(seed);
  Problem p;
  p.n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(opt.max_n)));
  p.has_dynamics = true;
  p.sys.n = p.n;
  p.sys.m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(opt.max_m)));
  p.sys.A = MpMatrix(p.n, p.n);
  p.sys.B = MpMatrix(p.n, p.sys.m);
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) p.sys.A(i, j) = random_entry(rng, opt, opt.eps_percent);
    for (std::size_t j = 0; j < p.sys.m; ++j) p.sys.B(i, j) = random_entry(rng, opt, opt.eps_percent);
  }
  p.sys.U = SetExpr::halfspace(random_halfspace(rng, p.sys.m, opt));

  std::size_t k1 = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(opt.max_closed)));
  std::size_t k2 =
      opt.closed_only ? 0 : static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(opt.max_complemented)));
  if (k1 + k2 == 0) k1 = 1;
  std::vector<SetExpr> parts;
  for (std::size_t i = 0; i < k1; ++i) parts.push_back(SetExpr::halfspace(random_halfspace(rng, p.n, opt)));
  for (std::size_t i = 0; i < k2; ++i)
    parts.push_back(SetExpr::complement(SetExpr::halfspace(random_halfspace(rng, p.n, opt))));
  p.target = parts.size() == 1 ? std::move(parts[0]) : SetExpr::intersection(std::move(parts));
  return p;
}

MpVector random_point(std::mt19937_64& rng, std::size_t n) {
  MpVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = rng() % 100;
    if (r < 15) continue;
    if (r < 65)
      x[i] = MpValue(uniform_int(rng, -12, 12));
    else if (r < 85)
      x[i] = MpValue(Rational(uniform_int(rng, -24, 24), 2));
    else
      x[i] = MpValue(Rational(uniform_int(rng, -36, 36), 3));
  }
  return x;
}

std::string sample_csv(const Problem& p, const ReachResult& r, const SampleOptions& opt) {
  if (opt.res == 0) throw InputError("--res must be at least 1");
  if (opt.hi < opt.lo) throw InputError("--box needs lo <= hi");

  std::optional<DbmUnion> oracle;
  if (p.has_dynamics && (opt.with_oracle || !r.exact)) {
    try {
      oracle = oracle_for(p);
    } catch (const OracleCapExceeded&) {
      if (opt.with_oracle) throw;
    }
  }
  auto exact_member = [&](const MpVector& x) -> std::optional<bool> {
    if (!p.has_dynamics) return p.target.contains(x);
    if (oracle) return oracle->contains(x);
    return std::nullopt;
  };

  std::vector<MpValue> axis;
  if (opt.with_eps) axis.push_back(MpValue::eps());
  for (unsigned k = 0; k < opt.res; ++k) {
    Rational t = opt.res == 1 ? Rational(0) : Rational(k, opt.res - 1);
    axis.push_back(MpValue(Rational(opt.lo + (opt.hi - opt.lo) * t)));
  }

  std::ostringstream out;
  for (std::size_t i = 0; i < p.n; ++i) out << 'x' << i + 1 << ',';
  out << "in_set,on_boundary";
  if (opt.with_oracle) out << ",in_oracle";
  out << '\n';

  const std::size_t n = p.n;
  std::vector<std::size_t> idx(n, 0);
  MpVector x(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) x[i] = axis[idx[i]];
    const bool in = union_member(r.set, x);
    const auto exact = exact_member(x);
    out << format_point(x) << ',' << in << ',';
    if (r.exact)
      out << 0;
    else if (exact)
      out << (in && !*exact);
    else
      out << "na";
    if (opt.with_oracle) out << ',' << oracle->contains(x);
    out << '\n';

    std::size_t i = n;
    while (i > 0) {
      if (++idx[i - 1] < axis.size()) break;
      idx[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out.str();
}

std::string CompareReport::to_json() const {
  nlohmann::ordered_json j;
  j["samples"] = samples;
  j["exact"] = exact;
  j["in_set"] = in_set;
  j["in_oracle"] = in_oracle;
  j["in_oracle_closure"] = in_oracle_closure;
  j["mismatches"] = mismatches;
  j["boundary_mismatches"] = boundary_mismatches;
  j["off_boundary_mismatches"] = off_boundary_mismatches;
  j["closure_mismatches"] = closure_mismatches;
  return j.dump(2) + "\n";
}

namespace {

Rational random_step(std::mt19937_64& rng) {
  static const int num[] = {-1, -1, 1, 1}, den[] = {1, 2, 2, 1};
  auto k = rng() % 4;
  return Rational(num[k], den[k]);
}

// Random combination of the generators of one cone, occasionally nudged off
// the set by a small step or by dropping a coordinate to epsilon.
std::optional<MpVector> point_near(const UnionOfPolyhedra& u, std::mt19937_64& rng) {
  if (u.cones.empty()) return std::nullopt;
  const ConeVForm& c = u.cones[rng() % u.cones.size()];
  MpVector y(c.dim());
  for (const auto& g : c.generators())
    if (rng() % 2) y = oplus(y, scale(MpValue(uniform_int(rng, -6, 6)), g));
  MpVector x = y;
  if (u.kind == UnionOfPolyhedra::Kind::affine) {
    if (y[0].is_eps()) return std::nullopt;
    x = slice(scale(MpValue(Rational(-y[0].value())), y), 1, u.dim);
  }
  if (rng() % 2 && u.dim > 0) {
    const std::size_t i = rng() % u.dim;
    if (rng() % 4 == 0)
      x[i] = MpValue::eps();
    else if (x[i].is_finite())
      x[i] = MpValue(Rational(x[i].value() + random_step(rng)));
  }
  return x;
}

// A point of one DBM member, built coordinate by coordinate inside the
// interval left by the canonical bounds; endpoints included on purpose.
std::optional<MpVector> point_in(const DbmUnion& o, std::mt19937_64& rng) {
  if (o.members.empty()) return std::nullopt;
  const PatternDbm& m = o.members[rng() % o.members.size()];
  std::vector<Rational> val{Rational(0)};
  for (std::size_t k = 1; k <= m.coords.size(); ++k) {
    std::optional<Rational> lo, hi;
    for (std::size_t j = 0; j < k; ++j) {
      if (m.dbm(j, k).is_finite()) {
        Rational l = val[j] - m.dbm(j, k).magnitude();
        if (!lo || l > *lo) lo = l;
      }
      if (m.dbm(k, j).is_finite()) {
        Rational h = val[j] + m.dbm(k, j).magnitude();
        if (!hi || h < *hi) hi = h;
      }
    }
    Rational t(static_cast<long>(rng() % 5), 4);
    if (lo && hi)
      val.push_back(*lo + (*hi - *lo) * t);
    else if (lo)
      val.push_back(*lo + 4 * t);
    else if (hi)
      val.push_back(*hi - 4 * t);
    else
      val.push_back(Rational(uniform_int(rng, -8, 8)));
  }
  MpVector x(o.dim);
  for (std::size_t p = 0; p < m.coords.size(); ++p) x[m.coords[p]] = MpValue(val[p + 1]);
  return x;
}

}  // namespace

CompareReport compare_oracle(const Problem& p, const ReachResult& r, const DbmUnion& oracle,
                             std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CompareReport rep;
  rep.samples = samples;
  rep.exact = r.exact;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::optional<MpVector> guided;
    if (s % 3 == 1) guided = point_near(r.set, rng);
    if (s % 3 == 2) guided = point_in(oracle, rng);
    const MpVector x = guided ? *guided : random_point(rng, p.n);
    const bool in = union_member(r.set, x);
    const bool exact = oracle.contains(x);
    const bool closed = exact || oracle.closure_contains(x);
    rep.in_set += in;
    rep.in_oracle += exact;
    rep.in_oracle_closure += closed;
    if (in != closed) ++rep.closure_mismatches;
    if (in != exact) {
      ++rep.mismatches;
      if (closed && !exact)
        ++rep.boundary_mismatches;
      else
        ++rep.off_boundary_mismatches;
    }
  }
  return rep;
}

}  // namespace mpr
