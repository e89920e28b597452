#include <doctest.h>

#include "support/brute.hpp"

using namespace mpr;
using brute::pt;

TEST_CASE("oplus and otimes on scalars") {
  CHECK(mp_add(3, 5) == MpValue(5));
  CHECK(mp_add(MpValue::eps(), 7) == MpValue(7));
  CHECK(mp_add(4, 4) == MpValue(4));
  CHECK(mp_mul(2, 3) == MpValue(5));
  CHECK(mp_mul(MpValue::eps(), 7).is_eps());
  CHECK(mp_mul(0, Rational(3, 2)) == MpValue(Rational(3, 2)));
  CHECK(MpValue::eps() < MpValue(-1000));
}

TEST_CASE("parse and print values") {
  CHECK(parse_value("-inf").is_eps());
  CHECK(parse_value("eps").is_eps());
  CHECK(parse_value("-3/6") == MpValue(Rational(-1, 2)));
  CHECK(parse_value("1.25") == MpValue(Rational(5, 4)));
  // Leading zeros are decimal, not octal.
  CHECK(parse_value("010") == MpValue(10));
  CHECK(parse_value("0.25") == MpValue(Rational(1, 4)));
  CHECK(parse_value("09/03") == MpValue(3));
  CHECK(to_string(MpValue(Rational(4, 6))) == "2/3");
  CHECK(to_string(MpValue::eps()) == "-inf");
  CHECK_THROWS(parse_value("abc"));
  CHECK_THROWS(parse_value(""));
}

TEST_CASE("matrix application") {
  CHECK(mat_apply(MpMatrix::identity(3), pt("1,-inf,2/3")) == pt("1,-inf,2/3"));
  MpMatrix a{{1, 0}, {MpValue::eps(), 2}};
  CHECK(mat_apply(a, pt("0,0")) == pt("1,2"));
  CHECK(mat_apply(a, pt("-inf,-inf")).is_epsilon());
  CHECK_THROWS_AS(mat_apply(a, pt("0,0,0")), DimensionError);
}

TEST_CASE("matrix powers") {
  MpMatrix a{{0, MpValue::eps()}, {1, 0}};
  CHECK(mat_power(a, 1) == a);
  CHECK(mat_power(a, 2) == MpMatrix({{0, MpValue::eps()}, {1, 0}}));
  CHECK(mat_power(a, 2) == mat_mul(a, a));
  CHECK(mat_power(MpMatrix::identity(3), 5) == MpMatrix::identity(3));
  CHECK(mat_power(a, 0) == MpMatrix::identity(2));
}

TEST_CASE("scalar product and support") {
  CHECK(scalar_product(pt("1,0"), pt("0,-inf")) == MpValue(1));
  CHECK(scalar_product(pt("0,0"), pt("0,-inf")) == MpValue(0));
  CHECK(scalar_product(pt("-inf,-inf"), pt("3,4")).is_eps());
  CHECK(support(pt("0,-inf,3")) == std::vector<std::size_t>{0, 2});
  CHECK(support(pt("-inf,-inf")).empty());
  CHECK(support(oplus(pt("0,-inf,-inf"), pt("-inf,-inf,1"))) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("slices and blocks") {
  CHECK(slice(pt("1,2,3"), 0, 2) == pt("1,2"));
  CHECK(slice(pt("1,2,3"), 1, 2) == pt("2,3"));
  MpMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(block(a, 0, 2, 0, 2) == MpMatrix({{1, 2}, {4, 5}}));
  CHECK_THROWS(slice(pt("1,2"), 1, 2));
}

TEST_CASE("residuation") {
  CHECK(residuation_coeff(pt("3,5"), pt("1,1")) == MpValue(2));
  CHECK(residuation_coeff(pt("0,1"), pt("0,-inf")) == MpValue(0));
  CHECK(residuation_coeff(pt("-inf,0"), pt("0,0")).is_eps());
  CHECK_THROWS_AS(residuation_coeff(pt("1,1"), pt("-inf,-inf")), DomainError);
}

TEST_CASE("semiring laws on random values") {
  brute::Rng rng(11);
  auto val = [&] { return rng() % 5 == 0 ? MpValue::eps() : MpValue(Rational(brute::rint(rng, -20, 20), 2)); };
  for (int t = 0; t < 2000; ++t) {
    MpValue a = val(), b = val(), c = val();
    CHECK(mp_mul(mp_add(a, b), c) == mp_add(mp_mul(a, c), mp_mul(b, c)));
    CHECK(mp_add(a, mp_add(b, c)) == mp_add(mp_add(a, b), c));
    CHECK(mp_mul(a, mp_mul(b, c)) == mp_mul(mp_mul(a, b), c));
  }
}

TEST_CASE("linearity, monotonicity and residuation on random data") {
  brute::Rng rng(12);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
    MpMatrix a(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) a(i, j) = rng() % 4 ? MpValue(brute::rint(rng, -5, 5)) : MpValue::eps();
    MpVector x = brute::random_vector(rng, m, 6, 20), y = brute::random_vector(rng, m, 6, 20);
    MpValue l(brute::rint(rng, -3, 3)), mu(brute::rint(rng, -3, 3));

    CHECK(mat_apply(a, x) == brute::apply(a, x));
    CHECK(mat_apply(a, oplus(scale(l, x), scale(mu, y))) == oplus(scale(l, mat_apply(a, x)), scale(mu, mat_apply(a, y))));
    MpVector z = oplus(x, y);
    CHECK(preceq(mat_apply(a, x), mat_apply(a, z)));

    if (!y.is_epsilon()) {
      MpValue r = residuation_coeff(x, y);
      CHECK(preceq(scale(r, y), x));
      if (r.is_finite()) CHECK_FALSE(preceq(scale(MpValue(Rational(r.value() + Rational(1, 64))), y), x));
    }

    MpMatrix sq(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sq(i, j) = rng() % 4 ? MpValue(brute::rint(rng, -5, 5)) : MpValue::eps();
    unsigned p = rng() % 4, q = rng() % 4;
    CHECK(mat_power(sq, p + q) == mat_mul(mat_power(sq, p), mat_power(sq, q)));
  }
}
