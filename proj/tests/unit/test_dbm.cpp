#include <doctest.h>

#include "support/brute.hpp"

using namespace mpr;
using brute::pt;

namespace {

Dbm two(Bound b01, Bound b10) {
  Dbm m(2);
  m(0, 1) = b01;
  m(1, 0) = b10;
  return m;
}

// oplus over walks of length < n, by repeated chaining.
Dbm power_sum(const Dbm& m) {
  const std::size_t n = m.dim();
  Dbm acc(n), walk(n);
  for (std::size_t len = 1; len < n + 1; ++len) {
    Dbm next(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Bound b = Bound::unbounded();
        for (std::size_t k = 0; k < n; ++k) b = tighter(b, chain(walk(i, k), m(k, j)));
        next(i, j) = b;
      }
    walk = next;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc(i, j) = tighter(acc(i, j), walk(i, j));
  }
  return acc;
}

}  // namespace

TEST_CASE("bound order and operations") {
  CHECK(tighter(Bound::le(3), Bound::lt(3)) == Bound::lt(3));
  CHECK(tighter(Bound::lt(5), Bound::le(2)) == Bound::le(2));
  CHECK(tighter(Bound::unbounded(), Bound::le(-4)) == Bound::le(-4));
  CHECK(looser_or_equal(Bound::le(3), Bound::lt(3)));
  CHECK_FALSE(looser_or_equal(Bound::lt(3), Bound::le(3)));
  CHECK(chain(Bound::le(1), Bound::le(2)) == Bound::le(3));
  CHECK(chain(Bound::le(1), Bound::lt(2)) == Bound::lt(3));
  CHECK(chain(Bound::unbounded(), Bound::neg_inf()).is_pos_inf());
  CHECK(chain(Bound::le(0), Bound::le(7)) == Bound::le(7));
}

TEST_CASE("intersection") {
  Dbm m = two(Bound::le(1), Bound::lt(-1));
  CHECK(dbm_intersect(m, Dbm(2)) == m);
  CHECK(dbm_intersect(two(Bound::le(3), Bound::lt(5)), two(Bound::lt(3), Bound::le(2))) ==
        two(Bound::lt(3), Bound::le(2)));
}

TEST_CASE("kleene star examples") {
  CHECK(kleene_star(Dbm(3)) == Dbm(3));

  Dbm tight = two(Bound::le(1), Bound::le(-1));
  CHECK(kleene_star(tight) == tight);
  CHECK_FALSE(dbm_is_empty(tight));
  CHECK(kleene_star(tight) == power_sum(tight));

  Dbm neg = two(Bound::le(1), Bound::le(-2));
  Dbm s = kleene_star(neg);
  CHECK_FALSE(s(0, 0) == Bound::le(0));
  CHECK(dbm_is_empty(neg));
  // (eps, eps) still satisfies both inequalities.
  CHECK(dbm_member(neg, pt("-inf,-inf")));
  CHECK(dbm_member(s, pt("-inf,-inf")));
}

TEST_CASE("projection examples") {
  Dbm m = two(Bound::le(1), Bound::le(0));
  CHECK(dbm_project(m, 2) == kleene_star(m));
  CHECK(dbm_project(m, 1) == Dbm(1));
  Dbm e = two(Bound::le(1), Bound::le(-2));
  CHECK(dbm_is_empty(dbm_project(e, 1)));
}

TEST_CASE("closed form and membership") {
  Dbm strict = two(Bound::lt(0), Bound::unbounded());
  CHECK(dbm_close(dbm_close(strict)) == dbm_close(strict));
  CHECK(dbm_close(strict)(0, 1) == Bound::le(0));
  CHECK_FALSE(dbm_member(strict, pt("0,0")));
  CHECK(dbm_member(dbm_close(strict), pt("0,0")));
  CHECK(dbm_member(Dbm(2), pt("5,-inf")));
  CHECK_FALSE(dbm_member(two(Bound::le(1), Bound::unbounded()), pt("2,0")));

  AffineDbm a = AffineDbm::universe(2);
  a.dbm()(1, 0) = Bound::le(3);  // x1 <= 3
  CHECK(a.contains(pt("3,-inf")));
  CHECK_FALSE(a.contains(pt("7/2,0")));
  CHECK(a.contains(pt("-inf,100")));
}

TEST_CASE("star is idempotent, preserves the region and matches walk sums") {
  brute::Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 5;
    Dbm m = brute::random_dbm(rng, n, 4, 5);
    Dbm s = kleene_star(m);
    CHECK(kleene_star(s) == s);
    for (int k = 0; k < 20; ++k) {
      MpVector x = brute::random_vector(rng, n, 6, 20);
      CHECK(brute::dbm_holds(m, x) == brute::dbm_holds(s, x));
      CHECK(dbm_member(m, x) == brute::dbm_holds(m, x));
    }
    if (!dbm_is_empty(m)) {
      bool finite_entries = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) finite_entries = finite_entries && !m(i, j).is_neg_inf();
      if (finite_entries) CHECK(s == power_sum(m));
    }
  }
}

TEST_CASE("emptiness against grid search") {
  brute::Rng rng(22);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 3;
    Dbm m = brute::random_dbm(rng, n, 3, 8);
    CHECK(dbm_is_empty(m) == !brute::has_finite_point(m, 3));
    // The all-epsilon point lies in every region.
    CHECK(dbm_member(m, MpVector(n)));
  }
}

TEST_CASE("projection against elimination by grid search") {
  brute::Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 2;
    const std::size_t k = 1 + rng() % (n - 1);
    Dbm m = brute::random_dbm(rng, n, 3, 0);
    Dbm p = dbm_project(m, k);
    const auto ax = brute::axis(-3, 3, 1, false);
    brute::any_point(k - 1, ax, [&](const MpVector& y) {
      MpVector x(k);
      x[0] = MpValue(0);
      for (std::size_t i = 1; i < k; ++i) x[i] = y[i - 1];
      CHECK(brute::dbm_holds(p, x) == brute::extends(m, x, 14));
      return false;
    });
  }
}

TEST_CASE("closing a nonempty region gives its topological closure") {
  brute::Rng rng(24);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 3;
    Dbm m = kleene_star(brute::random_dbm(rng, n, 3, 0));
    if (dbm_is_empty(m)) continue;
    Dbm c = dbm_close(m);
    // A point of R(m) to pull towards.
    MpVector inner(n);
    const auto ax = brute::axis(-7, 7, static_cast<int>(n + 1), false);
    REQUIRE(brute::any_point(n, ax, [&](const MpVector& y) {
      if (!brute::dbm_holds(m, y)) return false;
      inner = y;
      return true;
    }));
    brute::any_point(n, brute::axis(-4, 4, 2, false), [&](const MpVector& x) {
      if (brute::dbm_holds(m, x)) CHECK(brute::dbm_holds(c, x));
      if (brute::dbm_holds(c, x)) {
        MpVector y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = MpValue(Rational(x[i].value() + (inner[i].value() - x[i].value()) / 1000));
        CHECK(brute::dbm_holds(m, y));
      }
      return false;
    });
  }
}

TEST_CASE("closure of an intersection with an open region") {
  // closure(X n Y) = closure(closure(X) n Y) for Y open.
  brute::Rng rng(25);
  auto closure = [](const Dbm& z) { return dbm_is_empty(z) ? Dbm::empty(z.dim()) : dbm_close(kleene_star(z)); };
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 3;
    Dbm x = brute::random_dbm(rng, n, 3, 0);
    if (dbm_is_empty(x)) continue;
    Dbm y(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && rng() % 2) y(i, j) = Bound::lt(brute::rint(rng, -3, 3));
    Dbm lhs = closure(dbm_intersect(x, y)), rhs = closure(dbm_intersect(dbm_close(x), y));
    brute::any_point(n, brute::axis(-4, 4, 2, false), [&](const MpVector& p) {
      CHECK(brute::dbm_holds(lhs, p) == brute::dbm_holds(rhs, p));
      return false;
    });
  }
}
