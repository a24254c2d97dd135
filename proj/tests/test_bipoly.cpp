#include "doctest.h"

#include <random>

#include "autcount/bipoly.hpp"
#include "test_support.hpp"

using namespace autcount;
using testing_support::poly;

TEST_CASE("ring operations on small examples") {
  const auto f2 = FieldSpec::make(2), f3 = FieldSpec::make(3);
  const auto x = BiPoly::x(f2), y = BiPoly::y(f2);
  CHECK((x + BiPoly(f2)) == x);
  CHECK((x + y) * (x + y) == poly(f2, {{2, 0, 1}, {0, 2, 1}}));
  CHECK(poly(f3, {{1, 0, 1}, {0, 1, 2}}).scale(2) == poly(f3, {{1, 0, 2}, {0, 1, 1}}));
  CHECK((x - x).is_zero());
  CHECK(x.pow(0) == BiPoly::constant(f2, 1));
  CHECK_THROWS_AS(x + BiPoly::x(f3), FieldMismatch);
  CHECK_THROWS_AS(BiPoly::monomial(f2, 1, 1, 2), InvalidArgument);
}

TEST_CASE("terms stay in canonical order") {
  const auto f5 = FieldSpec::make(5);
  const auto p = poly(f5, {{0, 0, 1}, {0, 2, 3}, {1, 1, 2}, {2, 0, 4}, {0, 1, 1}, {1, 0, 1}});
  std::vector<Monomial> order;
  for (const auto& t : p.terms()) order.push_back(t.m);
  CHECK(order == std::vector<Monomial>{{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}});
  // Like terms merge and cancel.
  CHECK(poly(f5, {{1, 0, 2}, {1, 0, 3}}).is_zero());
}

TEST_CASE("degree and leading form") {
  const auto f2 = FieldSpec::make(2), f3 = FieldSpec::make(3);
  CHECK(BiPoly::x(f2).total_degree() == 1);
  CHECK(poly(f2, {{2, 1, 1}, {0, 2, 1}}).total_degree() == 3);
  CHECK(poly(f2, {{0, 3, 1}, {0, 2, 1}}).total_degree() == 3);
  CHECK_THROWS_AS(BiPoly(f2).total_degree(), InvalidArgument);

  CHECK(poly(f2, {{1, 0, 1}, {0, 2, 1}}).leading_form() == poly(f2, {{0, 2, 1}}));
  CHECK(poly(f2, {{2, 0, 1}, {1, 1, 1}, {0, 1, 1}, {0, 0, 1}}).leading_form() == poly(f2, {{2, 0, 1}, {1, 1, 1}}));
  const auto xy = BiPoly::x(f3) + BiPoly::y(f3);
  CHECK((xy.pow(3) + BiPoly::x(f3)).leading_form() == xy.pow(3));
  // Over GF(3), (x + y)^3 = x^3 + y^3.
  CHECK(xy.pow(3) == poly(f3, {{3, 0, 1}, {0, 3, 1}}));
}

TEST_CASE("substitution") {
  const auto f2 = FieldSpec::make(2);
  const auto x = BiPoly::x(f2), y = BiPoly::y(f2);
  const auto p = poly(f2, {{3, 1, 1}, {1, 2, 1}, {0, 0, 1}});
  CHECK(substitute(p, x, y) == p);
  CHECK(substitute(x + y * y, y, x) == y + x * x);
  CHECK(substitute(x * y, x + y, y) == x * y + y * y);
  CHECK(substitute(BiPoly(f2), x, y).is_zero());
}

TEST_CASE("admissible h") {
  const auto f2 = FieldSpec::make(2);
  CHECK(poly(f2, {{0, 2, 1}}).is_h_admissible());
  CHECK_FALSE(poly(f2, {{0, 2, 1}, {0, 1, 1}}).is_h_admissible());
  CHECK_FALSE(poly(f2, {{1, 2, 1}}).is_h_admissible());
  CHECK_FALSE(BiPoly(f2).is_h_admissible());
  CHECK(poly(f2, {{0, 3, 1}, {0, 1, 1}}).y_coeffs() == std::vector<BiPoly::Code>{0, 1, 0, 1});
}

TEST_CASE("ring laws and degree multiplicativity on random polynomials") {
  std::mt19937_64 rng(11);
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const auto field = FieldSpec::make(p, k);
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = testing_support::random_poly(field, rng, 5, 6);
      const auto b = testing_support::random_poly(field, rng, 5, 6);
      const auto c = testing_support::random_poly(field, rng, 4, 4);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - b) + b == a);
      if (!a.is_zero() && !b.is_zero()) {
        // No zero divisors: degrees add and leading forms multiply.
        CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
        CHECK((a * b).leading_form() == a.leading_form() * b.leading_form());
      }
      // Substitution is a ring homomorphism.
      const auto fx = testing_support::random_poly(field, rng, 3, 3);
      const auto fy = testing_support::random_poly(field, rng, 3, 3);
      CHECK(substitute(a * b, fx, fy) == substitute(a, fx, fy) * substitute(b, fx, fy));
      CHECK(substitute(a + b, fx, fy) == substitute(a, fx, fy) + substitute(b, fx, fy));
    }
  }
}
