#include "doctest.h"

#include <random>

#include "autcount/dirichlet.hpp"
#include "autcount/errors.hpp"

using namespace autcount;

namespace {

DirichletSeries random_series(std::mt19937_64& rng, std::uint64_t horizon, bool zero_constant = false) {
  auto s = DirichletSeries::zero(horizon);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  for (std::uint64_t n = zero_constant ? 2 : 1; n <= horizon; ++n) s.set(n, BigRational(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST_CASE("linear operations and identity") {
  std::mt19937_64 rng(3);
  const auto a = random_series(rng, 30);
  CHECK(DirichletSeries::delta_1(30) * a == a);
  CHECK(a * DirichletSeries::delta_1(30) == a);
  CHECK(DirichletSeries::zero(30) + a == a);
  CHECK(rho(2, 10).scale(2)[2] == 8);
  CHECK_THROWS_AS(a + DirichletSeries::zero(31), HorizonMismatch);
  CHECK_THROWS_AS(a * DirichletSeries::zero(29), HorizonMismatch);
  CHECK_THROWS_AS(a[31], InvalidArgument);
  CHECK_THROWS_AS(DirichletSeries::zero(0), InvalidArgument);
}

TEST_CASE("divisor convolution") {
  const auto r = rho(2, 40);
  CHECK(r[1] == 0);
  CHECK(r[5] == 32);
  const auto r2 = r * r;
  CHECK(r2[4] == 16);
  CHECK(r2[6] == 64);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 37}) CHECK(r2[p] == 0);
  CHECK(r.pow(0) == DirichletSeries::delta_1(40));
  CHECK(r.pow(1) == r);
  CHECK(r.pow(2) == r2);
  // (rho^3)_8 = 2^(2+2+2)
  CHECK(r.pow(3)[8] == 64);
}

TEST_CASE("multiplication laws on random series") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 60), b = random_series(rng, 60), c = random_series(rng, 60);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("geometric inversion") {
  CHECK(inv_one_minus(DirichletSeries::zero(20)) == DirichletSeries::delta_1(20));
  const auto u = rho(2, 64).scale(BigRational(1, 2));
  const auto inv = inv_one_minus(u);
  CHECK(inv[1] == 1);
  CHECK(inv[4] == 12);
  CHECK(inv * (DirichletSeries::delta_1(64) - u) == DirichletSeries::delta_1(64));

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = random_series(rng, 100, true);
    CHECK(inv_one_minus(v) * (DirichletSeries::delta_1(100) - v) == DirichletSeries::delta_1(100));
  }
  auto bad = DirichletSeries::zero(10);
  bad.set(1, 1);
  CHECK_THROWS_AS(inv_one_minus(bad), InvalidArgument);
}

TEST_CASE("closed forms match the counts") {
  const auto p2 = p_series(2, 10);
  CHECK(p2[1] == 24);
  CHECK(p2[2] == 72);
  CHECK(p2[4] == 432);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto ps = p_series(q, 60), ls = l_series(q, 60);
    CHECK(ps.is_integral());
    CHECK(ls.is_integral());
    for (std::uint64_t n = 1; n <= 60; ++n) {
      CHECK(ps[n] == BigRational(p_n(q, n)));
      CHECK(ls[n] == BigRational(l_n(q, n)));
    }
  }
}

TEST_CASE("coordinate series at n = 1") {
  // The bare product form p(s) / (q(q-1)(q+1)) undercounts affine
  // coordinates by (q-1) q; everywhere else it is l(s).
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    const BigInt base = BigInt(q) * (q - 1) * (q + 1);
    const auto bare = p_series(q, 30).scale(BigRational(1, base));
    const auto ls = l_series(q, 30);
    CHECK(ls[1] - bare[1] == BigRational((q - 1) * q));
    for (std::uint64_t n = 2; n <= 30; ++n) CHECK(ls[n] == bare[n]);
  }
}

TEST_CASE("Nielsen-Schreier series") {
  const auto poly = DimensionSequence::preset("polynomial", 50);
  CHECK(ns_p_series(2, poly, true, 50) == p_series(2, 50));

  const auto lie = DimensionSequence::preset("lie", 20);
  const auto s = sigma(3, lie, 20);
  for (std::uint64_t n = 1; n <= 20; ++n) CHECK(s[n] == 0);
  const auto ns_lie = ns_p_series(3, lie, false, 20);
  CHECK(ns_lie[1] == BigRational(gl2_order(3)));
  for (std::uint64_t n = 2; n <= 20; ++n) CHECK(ns_lie[n] == 0);

  const auto cat = DimensionSequence::preset("nonassociative", 12);
  for (bool unitary : {true, false}) {
    const auto ns = ns_p_series(2, cat, unitary, 12);
    CHECK(ns.is_integral());
    for (std::uint64_t n = 1; n <= 12; ++n) CHECK(ns[n] == BigRational(ns_p_n(2, n, cat, unitary)));
  }
  CHECK_THROWS_AS(sigma(2, cat, 13), InvalidArgument);
}

TEST_CASE("integrality detection") {
  auto s = DirichletSeries::zero(3);
  CHECK(s.is_integral());
  s.set(2, BigRational(1, 3));
  CHECK_FALSE(s.is_integral());
}
