#pragma once

// Exact counts of automorphisms and coordinates of F_q[x, y] by degree,
// the growth bounds, and the generalization to free algebras in
// Nielsen-Schreier varieties.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "autcount/bigint.hpp"

namespace autcount {

// Ordered factorization n = n_1 ... n_k with every part >= 2.
using Factorization = std::vector<std::uint64_t>;

// Visits every ordered factorization of n (n >= 2) exactly once: first part
// ascending, remaining parts recursively in the same order.
void for_each_ordered_factorization(std::uint64_t n, const std::function<void(std::span<const std::uint64_t>)>& visit);
std::vector<Factorization> ordered_factorizations(std::uint64_t n);

// H(n) for 1 <= n <= max_n, where H(1) = 1 and H(n) = sum_{d | n, d >= 2} H(n / d);
// index 0 is unused.
std::vector<std::uint64_t> ordered_factorization_counts(std::uint64_t max_n);

// Number of ordered factorizations of n with at least two parts.
BigInt count_f(std::uint64_t n);

bool is_prime_power(std::uint64_t q);

BigInt affine_group_order(std::uint64_t q);  // q^3 (q-1)^2 (q+1)
BigInt gl2_order(std::uint64_t q);           // q (q-1)^2 (q+1)

// Automorphisms of degree n.
BigInt p_n(std::uint64_t q, std::uint64_t n);
// Coordinates of degree n.
BigInt l_n(std::uint64_t q, std::uint64_t n);
// Automorphisms (f, g) with deg f = n > deg g; n >= 2.
BigInt z_n(std::uint64_t q, std::uint64_t n);

// Certified integer upper estimate of (log2 n)^(log2 n): the ceiling of an
// upward-rounded evaluation, exact when n is a power of two.
BigInt log_power_ceiling(std::uint64_t n);

struct BoundsCheck {
  BigInt lower;  // (q-1)^3 (q+1)^2 q^(n+1)
  BigInt value;  // p_n
  BigInt upper;  // lower + ceil((log2 n)^(log2 n)) * ceil(q^(n/2)) * q^8
  bool holds = false;
};

BoundsCheck bounds_check(std::uint64_t q, std::uint64_t n);

// True iff every ordered factorization of n with k >= 2 parts has
// n_1 + ... + n_k <= n/2 + 2 (vacuously true if there is none).
bool sum_inequality_check(std::uint64_t n);

// (1/n) binom(2n - 2, n - 1), n >= 1.
BigInt catalan(std::uint64_t n);

// c_n = dimension of the one-variable homogeneous component of degree n in
// the free algebra F(x, y), tabulated for 1 <= n <= horizon.
class DimensionSequence {
 public:
  // "polynomial", "lie", "anticommutative" or "nonassociative".
  static DimensionSequence preset(const std::string& name, std::uint64_t horizon);
  // values[0] is c_1.
  static DimensionSequence custom(std::vector<std::uint64_t> values);

  const std::string& name() const { return name_; }
  std::uint64_t horizon() const { return c_.size(); }
  // Throws InvalidArgument beyond the horizon.
  std::uint64_t c(std::uint64_t n) const;

 private:
  DimensionSequence(std::string name, std::vector<std::uint64_t> c) : name_(std::move(name)), c_(std::move(c)) {}
  std::string name_;
  std::vector<std::uint64_t> c_;
};

// Automorphisms of degree n of the two-generated free algebra with
// dimensions `dims`; `unitary` selects the affine (true) or GL_2 (false)
// group as the degree-1 part.
BigInt ns_p_n(std::uint64_t q, std::uint64_t n, const DimensionSequence& dims, bool unitary);

// q^e with a guard against results too large to hold in memory.
BigInt checked_pow(std::uint64_t q, std::uint64_t e);

}  // namespace autcount
