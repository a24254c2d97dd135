#pragma once

// Formal Dirichlet series sum a_n / n^s truncated at an explicit horizon N,
// with exact rational coefficients. Products are divisor convolutions:
// (a b)_n = sum_{d | n} a_d b_{n/d}.

#include <cstdint>
#include <vector>

#include "autcount/bigint.hpp"
#include "autcount/counting.hpp"

namespace autcount {

class DirichletSeries {
 public:
  static DirichletSeries zero(std::uint64_t horizon);
  static DirichletSeries delta_1(std::uint64_t horizon);  // multiplicative identity

  std::uint64_t horizon() const { return coeffs_.size(); }
  const BigRational& operator[](std::uint64_t n) const;  // 1 <= n <= horizon
  void set(std::uint64_t n, BigRational value);

  DirichletSeries operator+(const DirichletSeries& o) const;
  DirichletSeries operator-(const DirichletSeries& o) const;
  DirichletSeries operator*(const DirichletSeries& o) const;
  DirichletSeries scale(const BigRational& c) const;
  DirichletSeries pow(unsigned k) const;

  // True iff every coefficient has denominator 1.
  bool is_integral() const;
  bool operator==(const DirichletSeries&) const = default;

 private:
  explicit DirichletSeries(std::uint64_t horizon);
  void require_same_horizon(const DirichletSeries& o) const;
  std::vector<BigRational> coeffs_;  // coeffs_[n - 1]
};

// sum_{k >= 0} u^k, for u with zero constant term (finite: u^k vanishes
// below 2^k).
DirichletSeries inv_one_minus(const DirichletSeries& u);

// rho(s) = sum_{n >= 2} q^n / n^s.
DirichletSeries rho(std::uint64_t q, std::uint64_t horizon);
// sigma(s) = sum_{n >= 2} (q^{c_n} - 1) q^{c_2 + ... + c_{n-1}} / n^s.
DirichletSeries sigma(std::uint64_t q, const DimensionSequence& dims, std::uint64_t horizon);
// (q(q-1)(q+1))^2 (1 / (1 - (q-1)/q rho) - 1/(q+1)).
DirichletSeries p_series(std::uint64_t q, std::uint64_t horizon);
// sum l_n / n^s: q(q-1)(q+1) (1 / (1 - (q-1)/q rho) - 1/(q+1)) for n >= 2,
// with l_1 = (q-1) q (q+1).
DirichletSeries l_series(std::uint64_t q, std::uint64_t horizon);
// (p_1 / q) ((q+1) / (1 - q sigma) - 1).
DirichletSeries ns_p_series(std::uint64_t q, const DimensionSequence& dims, bool unitary, std::uint64_t horizon);

}  // namespace autcount
