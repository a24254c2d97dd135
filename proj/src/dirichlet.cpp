#include "autcount/dirichlet.hpp"

#include "autcount/errors.hpp"

namespace autcount {

namespace {

void require_horizon(std::uint64_t horizon) {
  if (horizon < 1) throw InvalidArgument("series horizon must be >= 1");
}

// 1 / (1 - ((q-1)/q) rho) - 1/(q+1), shared by p(s) and l(s).
DirichletSeries coordinate_kernel(std::uint64_t q, std::uint64_t horizon) {
  if (!is_prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  const auto ratio = BigRational(q - 1, q);
  const auto inv = inv_one_minus(rho(q, horizon).scale(ratio));
  return inv - DirichletSeries::delta_1(horizon).scale(BigRational(1, q + 1));
}

}  // namespace

DirichletSeries::DirichletSeries(std::uint64_t horizon) : coeffs_(horizon) { require_horizon(horizon); }

DirichletSeries DirichletSeries::zero(std::uint64_t horizon) { return DirichletSeries(horizon); }

DirichletSeries DirichletSeries::delta_1(std::uint64_t horizon) {
  DirichletSeries s(horizon);
  s.coeffs_[0] = 1;
  return s;
}

const BigRational& DirichletSeries::operator[](std::uint64_t n) const {
  if (n < 1 || n > horizon()) throw InvalidArgument("series index " + std::to_string(n) + " out of range");
  return coeffs_[n - 1];
}

void DirichletSeries::set(std::uint64_t n, BigRational value) {
  if (n < 1 || n > horizon()) throw InvalidArgument("series index " + std::to_string(n) + " out of range");
  coeffs_[n - 1] = std::move(value);
}

void DirichletSeries::require_same_horizon(const DirichletSeries& o) const {
  if (horizon() != o.horizon()) throw HorizonMismatch();
}

DirichletSeries DirichletSeries::operator+(const DirichletSeries& o) const {
  require_same_horizon(o);
  DirichletSeries out(horizon());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return out;
}

DirichletSeries DirichletSeries::operator-(const DirichletSeries& o) const {
  require_same_horizon(o);
  DirichletSeries out(horizon());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return out;
}

DirichletSeries DirichletSeries::operator*(const DirichletSeries& o) const {
  require_same_horizon(o);
  const std::uint64_t n_max = horizon();
  DirichletSeries out(n_max);
  for (std::uint64_t d = 1; d <= n_max; ++d) {
    const auto& a = coeffs_[d - 1];
    if (a == 0) continue;
    for (std::uint64_t e = 1; d * e <= n_max; ++e) {
      const auto& b = o.coeffs_[e - 1];
      if (b != 0) out.coeffs_[d * e - 1] += a * b;
    }
  }
  return out;
}

DirichletSeries DirichletSeries::scale(const BigRational& c) const {
  DirichletSeries out(horizon());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * c;
  return out;
}

DirichletSeries DirichletSeries::pow(unsigned k) const {
  DirichletSeries result = delta_1(horizon());
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

bool DirichletSeries::is_integral() const {
  for (const auto& c : coeffs_)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

DirichletSeries inv_one_minus(const DirichletSeries& u) {
  if (u[1] != 0) throw InvalidArgument("inv_one_minus needs a series with zero constant term");
  DirichletSeries sum = DirichletSeries::delta_1(u.horizon());
  DirichletSeries power = sum;
  // u^k starts at index 2^k.
  for (std::uint64_t lowest = 2; lowest <= u.horizon(); lowest *= 2) {
    power = power * u;
    sum = sum + power;
  }
  return sum;
}

DirichletSeries rho(std::uint64_t q, std::uint64_t horizon) {
  auto s = DirichletSeries::zero(horizon);
  BigInt qn = q;
  for (std::uint64_t n = 2; n <= horizon; ++n) {
    qn *= q;
    s.set(n, BigRational(qn));
  }
  return s;
}

DirichletSeries sigma(std::uint64_t q, const DimensionSequence& dims, std::uint64_t horizon) {
  if (dims.horizon() < horizon) throw InvalidArgument("dimension sequence horizon is below the series horizon");
  auto s = DirichletSeries::zero(horizon);
  std::uint64_t lower_sum = 0;  // c_2 + ... + c_{n-1}
  for (std::uint64_t n = 2; n <= horizon; ++n) {
    if (n >= 3) lower_sum += dims.c(n - 1);
    const BigInt top = checked_pow(q, dims.c(n)) - 1;
    if (top != 0) s.set(n, BigRational(top * checked_pow(q, lower_sum)));
  }
  return s;
}

DirichletSeries p_series(std::uint64_t q, std::uint64_t horizon) {
  const BigInt base = BigInt(q) * (q - 1) * (q + 1);
  return coordinate_kernel(q, horizon).scale(BigRational(base * base));
}

DirichletSeries l_series(std::uint64_t q, std::uint64_t horizon) {
  const BigInt base = BigInt(q) * (q - 1) * (q + 1);
  auto s = coordinate_kernel(q, horizon).scale(BigRational(base));
  // The product form yields p_1 / (q(q-1)(q+1)) = (q-1) q^2 at n = 1; the
  // number of affine coordinates is (q-1) q (q+1).
  s.set(1, BigRational(base));
  return s;
}

DirichletSeries ns_p_series(std::uint64_t q, const DimensionSequence& dims, bool unitary, std::uint64_t horizon) {
  const BigInt p1 = unitary ? affine_group_order(q) : gl2_order(q);
  const auto inv = inv_one_minus(sigma(q, dims, horizon).scale(BigRational(q)));
  const auto inner = inv.scale(BigRational(q + 1)) - DirichletSeries::delta_1(horizon);
  return inner.scale(BigRational(p1, q));
}

}  // namespace autcount
