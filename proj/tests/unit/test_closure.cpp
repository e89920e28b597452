#include <doctest.h>

#include "support/brute.hpp"

using namespace mpr;
using brute::pt;

namespace {

AffineHalfSpace ahs(const char* a, const char* b, MpValue c = MpValue::eps(), MpValue d = MpValue::eps()) {
  return {pt(a), pt(b), c, d};
}

SetExpr lit(const char* a, const char* b, MpValue c = MpValue::eps(), MpValue d = MpValue::eps()) {
  return SetExpr::halfspace(ahs(a, b, c, d));
}

// The conic set of the worked example: H = {max(x1 + 1, x2) <= max(x1, x2)}.
SetExpr example_complement() { return SetExpr::complement(lit("1,0", "0,0")); }

AffineHalfSpace random_literal(brute::Rng& rng, std::size_t n) {
  for (;;) {
    AffineHalfSpace h{MpVector(n), MpVector(n), {}, {}};
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 100 >= 30) (rng() % 2 ? h.a[i] : h.b[i]) = MpValue(brute::rint(rng, -4, 4));
    if (rng() % 100 >= 40) (rng() % 2 ? h.c : h.d) = MpValue(brute::rint(rng, -4, 4));
    if ((!h.a.is_epsilon() || h.c.is_finite()) && (!h.b.is_epsilon() || h.d.is_finite())) return h;
  }
}

SetExpr random_expr(brute::Rng& rng, std::size_t n, int depth, bool allow_complement) {
  const auto r = rng() % 10;
  if (depth == 0 || r < 3) {
    SetExpr h = SetExpr::halfspace(random_literal(rng, n));
    return allow_complement && rng() % 3 == 0 ? SetExpr::complement(h) : h;
  }
  if (allow_complement && r == 3) return SetExpr::complement(random_expr(rng, n, depth - 1, true));
  std::vector<SetExpr> args;
  for (int k = 0; k < 2; ++k) args.push_back(random_expr(rng, n, depth - 1, allow_complement));
  return r < 7 ? SetExpr::intersection(std::move(args)) : SetExpr::set_union(std::move(args));
}

MpVector homog(const MpVector& x) {
  MpVector y(x.size() + 1);
  y[0] = MpValue(0);
  for (std::size_t i = 0; i < x.size(); ++i) y[i + 1] = x[i];
  return y;
}

bool dnf_contains(const Dnf& d, const MpVector& x) {
  const MpVector y = homog(x);
  for (const auto& t : d.terms) {
    bool in = true;
    for (const auto& h : t.closed) in = in && brute::in_halfspace(h, y);
    for (const auto& h : t.complemented) in = in && !brute::in_halfspace(h, y);
    if (in) return true;
  }
  return false;
}

bool on_some_literal(const SetExpr& s, const MpVector& x) {
  for (const auto& t : literal_dnf(s))
    for (const auto& l : t)
      if (brute::lift(brute::dot(l.h.a, x), l.h.c) == brute::lift(brute::dot(l.h.b, x), l.h.d)) return true;
  return false;
}

// Points near the computed set: dehomogenized generator combinations, nudged.
MpVector sample_near(brute::Rng& rng, const UnionOfPolyhedra& u) {
  if (u.cones.empty() || rng() % 3 == 0) return brute::random_vector(rng, u.dim, 8, 15);
  const auto& c = u.cones[rng() % u.cones.size()];
  MpVector y = brute::combination(rng, c.generators(), c.dim());
  if (y[0].is_eps()) return brute::random_vector(rng, u.dim, 8, 15);
  MpVector x = slice(brute::times(MpValue(Rational(-y[0].value())), y), 1, u.dim);
  if (rng() % 2) {
    const std::size_t i = rng() % u.dim;
    if (x[i].is_finite()) x[i] = MpValue(Rational(x[i].value() + Rational(brute::rint(rng, -2, 2), 2)));
  }
  return x;
}

}  // namespace

TEST_CASE("set expression semantics") {
  SetExpr h = lit("0,-inf", "-inf,-inf", MpValue::eps(), MpValue(3));  // x1 <= 3
  CHECK(h.contains(pt("3,0")));
  CHECK_FALSE(h.contains(pt("4,0")));
  CHECK(SetExpr::complement(h).contains(pt("4,0")));
  CHECK_FALSE(SetExpr::empty().contains(pt("0,0")));
  CHECK(SetExpr::universe().contains(pt("-inf,7")));
  CHECK_THROWS_AS(h.check_dim(3), DimensionError);
}

TEST_CASE("to_dnf examples") {
  SetExpr h1 = lit("0,-inf", "-inf,0"), h2 = lit("-inf,0", "1,-inf"), h3 = lit("0,0", "-inf,-inf", {}, MpValue(2));
  Dnf one = to_dnf(h1, 2);
  CHECK(one.dim == 3);
  REQUIRE(one.terms.size() == 1);
  CHECK(one.terms[0].closed.size() == 1);
  CHECK(one.terms[0].complemented.empty());

  Dnf morgan = to_dnf(SetExpr::complement(SetExpr::set_union({h1, h2})), 2);
  REQUIRE(morgan.terms.size() == 1);
  CHECK(morgan.terms[0].closed.empty());
  CHECK(morgan.terms[0].complemented.size() == 2);

  SetExpr mixed = SetExpr::intersection({SetExpr::set_union({h1, h2}), SetExpr::complement(h3)});
  Dnf dist = to_dnf(mixed, 2);
  REQUIRE(dist.terms.size() == 2);
  for (const auto& t : dist.terms) {
    CHECK(t.closed.size() == 1);
    CHECK(t.complemented.size() == 1);
  }
  CHECK(to_dnf(SetExpr::complement(SetExpr::complement(h1)), 2).terms.size() == 1);
  CHECK(to_dnf(SetExpr::intersection({h1, SetExpr::empty()}), 2).terms.empty());
  CHECK(to_dnf(SetExpr::set_union({h1, SetExpr::empty()}), 2).terms.size() == 1);

  brute::Rng rng(41);
  for (int t = 0; t < 500; ++t) {
    MpVector x = brute::random_vector(rng, 2, 5, 20);
    CHECK(dnf_contains(dist, x) == mixed.contains(x));
  }
  CHECK_THROWS_AS(to_dnf_conic(h3, 2), DomainError);
}

TEST_CASE("closure minus a half-space") {
  ConeVForm basis = ConeVForm::unit_basis(2);
  CHECK(closure_minus_halfspace(basis, {pt("1,0"), pt("0,0")}) == ConeVForm(2, {pt("0,-inf"), pt("0,1")}));
  CHECK(closure_minus_halfspace(basis, {pt("-inf,-inf"), pt("0,0")}).empty());
  CHECK(closure_minus_halfspace(basis, {pt("0,0"), pt("0,0")}).empty());
}

TEST_CASE("approximating terms") {
  Term closed{{HalfSpace{pt("0,-inf"), pt("-inf,0")}}, {}};
  CHECK(approx_term(closed, 2) == mform_to_vform(ConeMForm(2, closed.closed)));

  Term ex{{}, {HalfSpace{pt("1,0"), pt("0,0")}}};
  CHECK(approx_term(ex, 2) == ConeVForm(2, {pt("0,-inf"), pt("0,1")}));

  Term contradiction{{HalfSpace{pt("0,-inf"), pt("-inf,-inf")}, HalfSpace{pt("-inf,0"), pt("-inf,-inf")}}, {}};
  CHECK(approx_term(contradiction, 2).empty());
}

TEST_CASE("approx_set and union membership") {
  CHECK(approx_set(SetExpr::empty(), 2).empty());
  CHECK_FALSE(union_member(approx_set(SetExpr::empty(), 2), pt("0,0")));

  UnionOfPolyhedra one = approx_set(lit("0,-inf", "-inf,-inf", {}, MpValue(3)), 2);
  CHECK(one.exact);
  CHECK(one.cones.size() == 1);

  Stats stats;
  UnionOfPolyhedra ex = approx_set_conic(example_complement(), 2, &stats);
  CHECK_FALSE(ex.exact);
  REQUIRE(ex.cones.size() == 1);
  CHECK(ex.cones[0] == ConeVForm(2, {pt("0,-inf"), pt("0,1")}));
  CHECK(union_member(ex, pt("0,1")));
  CHECK_FALSE(union_member(ex, pt("0,2")));
  CHECK(union_member(ex, pt("0,-inf")));
  std::vector<MpValue> cert;
  CHECK(span_member(ex.cones[0], pt("0,1"), &cert));
  CHECK(stats["cones"] == 1);

  // Affine reading: x1 + 1 > x2 with x1 finite, closed to x2 <= x1 + 1.
  UnionOfPolyhedra affine = approx_set(example_complement(), 2);
  CHECK(union_member(affine, pt("0,1")));
  CHECK_FALSE(union_member(affine, pt("0,2")));
  for (const auto& c : affine.cones) {
    PolyVForm p = dehomogenize(c);
    for (const auto& v : p.vertices) CHECK(union_member(affine, v));
  }
}

TEST_CASE("soundness, tightness and closed-input exactness on random sets") {
  brute::Rng rng(42);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const bool closed = t % 3 == 0;
    SetExpr s = random_expr(rng, n, 2, !closed);
    Stats stats;
    UnionOfPolyhedra u = approx_set(s, n, &stats);
    CHECK(stats["max_restrictions_per_term"] <= static_cast<std::int64_t>(n + 1));
    if (brute::closed_target(s)) CHECK(u.exact);

    DbmUnion dbms = setexpr_to_dbm_union(s, n);
    for (int k = 0; k < 200; ++k) {
      MpVector x = sample_near(rng, u);
      const bool in_s = s.contains(x), in_u = union_member(u, x);
      if (in_s) CHECK(in_u);
      if (in_u && !in_s) CHECK(on_some_literal(s, x));
      if (u.exact) CHECK(in_u == in_s);
      // Same set as closing every DBM of an exact decomposition.
      CHECK(in_u == dbms.closure_contains(x));
    }
  }
}

TEST_CASE("closed literals give exact sets") {
  brute::Rng rng(43);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 3;
    SetExpr s = random_expr(rng, n, 2, false);
    UnionOfPolyhedra u = approx_set(s, n);
    CHECK(u.exact);
    brute::any_point(n, brute::axis(-3, 3, 2, true), [&](const MpVector& x) {
      CHECK(union_member(u, x) == s.contains(x));
      return false;
    });
  }
}
