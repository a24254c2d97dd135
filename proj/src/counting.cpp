#include "autcount/counting.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "autcount/errors.hpp"
#include "autcount/field.hpp"

namespace autcount {

namespace {

constexpr std::uint64_t kMaxPowBits = std::uint64_t{1} << 26;

std::vector<std::uint64_t> divisors_ge2(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    if (d >= 2) small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

void visit_rec(std::uint64_t n, Factorization& prefix,
               const std::function<void(std::span<const std::uint64_t>)>& visit) {
  for (auto d : divisors_ge2(n)) {
    prefix.push_back(d);
    if (d == n) {
      visit(prefix);
    } else {
      visit_rec(n / d, prefix, visit);
    }
    prefix.pop_back();
  }
}

void require_q(std::uint64_t q) {
  if (!is_prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
}

void require_n(std::uint64_t n, std::uint64_t min, const char* what) {
  if (n < min) throw InvalidArgument(std::string(what) + " needs n >= " + std::to_string(min));
}

BigInt ipow(std::uint64_t base, std::uint64_t e) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e)); }

// sum over ordered factorizations of (q-1)^k q^(n_1 + ... + n_k - k).
BigInt factorization_sum(std::uint64_t q, std::uint64_t n) {
  std::vector<BigInt> q_pow{1};
  std::vector<BigInt> qm1_pow{1};
  BigInt total = 0;
  for_each_ordered_factorization(n, [&](std::span<const std::uint64_t> parts) {
    std::uint64_t s = 0;
    for (auto p : parts) s += p;
    const std::uint64_t k = parts.size();
    while (q_pow.size() <= s - k) q_pow.push_back(q_pow.back() * q);
    while (qm1_pow.size() <= k) qm1_pow.push_back(qm1_pow.back() * (q - 1));
    total += qm1_pow[k] * q_pow[s - k];
  });
  return total;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(num, den, quotient, remainder);
  if (remainder != 0) throw ConsistencyError(std::string("inexact division computing ") + what);
  return quotient;
}

BigInt ceil_sqrt(const BigInt& v) {
  BigInt s = boost::multiprecision::sqrt(v);
  if (s * s < v) ++s;
  return s;
}

}  // namespace

void for_each_ordered_factorization(std::uint64_t n, const std::function<void(std::span<const std::uint64_t>)>& visit) {
  require_n(n, 2, "ordered_factorizations");
  Factorization prefix;
  visit_rec(n, prefix, visit);
}

std::vector<Factorization> ordered_factorizations(std::uint64_t n) {
  std::vector<Factorization> out;
  for_each_ordered_factorization(n, [&](std::span<const std::uint64_t> parts) { out.emplace_back(parts.begin(), parts.end()); });
  return out;
}

std::vector<std::uint64_t> ordered_factorization_counts(std::uint64_t max_n) {
  std::vector<std::uint64_t> h(max_n + 1, 0);
  if (max_n >= 1) h[1] = 1;
  for (std::uint64_t j = 1; j <= max_n; ++j)
    for (std::uint64_t d = 2; d * j <= max_n; ++d) h[d * j] += h[j];
  return h;
}

BigInt count_f(std::uint64_t n) {
  require_n(n, 2, "count_f");
  std::map<std::uint64_t, BigInt> memo{{1, 1}};
  std::function<const BigInt&(std::uint64_t)> h = [&](std::uint64_t m) -> const BigInt& {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    BigInt total = 0;
    for (auto d : divisors_ge2(m)) total += h(m / d);
    return memo.emplace(m, std::move(total)).first->second;
  };
  return h(n) - 1;
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p) {
    if (p * p > q) return true;  // q itself is prime
    ++p;
  }
  while (q % p == 0) q /= p;
  return q == 1;
}

BigInt affine_group_order(std::uint64_t q) {
  require_q(q);
  return ipow(q, 3) * ipow(q - 1, 2) * (q + 1);
}

BigInt gl2_order(std::uint64_t q) {
  require_q(q);
  return BigInt(q) * ipow(q - 1, 2) * (q + 1);
}

BigInt p_n(std::uint64_t q, std::uint64_t n) {
  require_q(q);
  require_n(n, 1, "p_n");
  if (n == 1) return affine_group_order(q);
  const BigInt base = BigInt(q) * (q - 1) * (q + 1);
  return base * base * factorization_sum(q, n);
}

BigInt l_n(std::uint64_t q, std::uint64_t n) {
  require_q(q);
  require_n(n, 1, "l_n");
  const BigInt base = BigInt(q - 1) * q * (q + 1);
  if (n == 1) return base;
  return exact_div(p_n(q, n), base, "l_n");
}

BigInt z_n(std::uint64_t q, std::uint64_t n) {
  require_q(q);
  require_n(n, 2, "z_n");
  return exact_div(p_n(q, n), BigInt(q + 1), "z_n");
}

BigInt log_power_ceiling(std::uint64_t n) {
  require_n(n, 2, "log_power_ceiling");
  // 512 bits hold t^t exactly for every t = log2 n <= 64.
  mpfr_t l, v;
  mpfr_inits2(512, l, v, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(l, 0, MPFR_RNDN);
  mpfr_set_ui(v, static_cast<unsigned long>(n), MPFR_RNDN);  // exact
  mpfr_log2(l, v, MPFR_RNDU);
  // x^x is increasing for x >= 1, so rounding both steps up keeps an upper bound.
  mpfr_pow(v, l, l, MPFR_RNDU);
  mpfr_ceil(v, v);
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, v, MPFR_RNDU);
  std::string digits(mpz_sizeinbase(z, 10) + 2, '\0');
  mpz_get_str(digits.data(), 10, z);
  digits.resize(std::char_traits<char>::length(digits.c_str()));
  BigInt out(digits);
  mpz_clear(z);
  mpfr_clears(l, v, static_cast<mpfr_ptr>(nullptr));
  return out;
}

BoundsCheck bounds_check(std::uint64_t q, std::uint64_t n) {
  require_q(q);
  require_n(n, 2, "bounds_check");
  BoundsCheck r;
  r.lower = ipow(q - 1, 3) * ipow(q + 1, 2) * ipow(q, n + 1);
  r.value = p_n(q, n);
  const BigInt half_pow = (n % 2 == 0) ? ipow(q, n / 2) : ceil_sqrt(ipow(q, n));
  r.upper = r.lower + log_power_ceiling(n) * half_pow * ipow(q, 8);
  r.holds = r.lower <= r.value && r.value <= r.upper;
  return r;
}

bool sum_inequality_check(std::uint64_t n) {
  require_n(n, 2, "sum_inequality_check");
  bool ok = true;
  for_each_ordered_factorization(n, [&](std::span<const std::uint64_t> parts) {
    if (parts.size() < 2) return;
    std::uint64_t s = 0;
    for (auto p : parts) s += p;
    // s <= n/2 + 2  <=>  2s <= n + 4
    if (2 * s > n + 4) ok = false;
  });
  return ok;
}

BigInt catalan(std::uint64_t n) {
  require_n(n, 1, "catalan");
  // binom(2n-2, n-1) built incrementally; every prefix product is an integer.
  BigInt b = 1;
  const std::uint64_t m = n - 1;
  for (std::uint64_t i = 1; i <= m; ++i) b = b * (m + i) / i;
  return exact_div(b, BigInt(n), "catalan");
}

DimensionSequence DimensionSequence::preset(const std::string& name, std::uint64_t horizon) {
  std::vector<std::uint64_t> c(horizon, 0);
  if (name == "polynomial") {
    std::fill(c.begin(), c.end(), 1);
  } else if (name == "lie" || name == "anticommutative") {
    if (horizon) c[0] = 1;
  } else if (name == "nonassociative") {
    for (std::uint64_t n = 1; n <= horizon; ++n) {
      const BigInt v = catalan(n);
      if (v > std::numeric_limits<std::uint64_t>::max())
        throw InvalidArgument("nonassociative dimensions overflow 64 bits beyond n = " + std::to_string(n - 1));
      c[n - 1] = static_cast<std::uint64_t>(v);
    }
  } else {
    throw InvalidArgument("unknown variety preset '" + name + "'");
  }
  return {name, std::move(c)};
}

DimensionSequence DimensionSequence::custom(std::vector<std::uint64_t> values) { return {"custom", std::move(values)}; }

std::uint64_t DimensionSequence::c(std::uint64_t n) const {
  if (n < 1 || n > c_.size())
    throw InvalidArgument("dimension c_" + std::to_string(n) + " beyond horizon " + std::to_string(c_.size()));
  return c_[n - 1];
}

BigInt checked_pow(std::uint64_t q, std::uint64_t e) {
  const double bits = static_cast<double>(e) * std::log2(static_cast<double>(q));
  if (bits > static_cast<double>(kMaxPowBits))
    throw InvalidArgument("q^" + std::to_string(e) + " is too large to evaluate");
  return ipow(q, e);
}

BigInt ns_p_n(std::uint64_t q, std::uint64_t n, const DimensionSequence& dims, bool unitary) {
  require_q(q);
  require_n(n, 1, "ns_p_n");
  if (dims.horizon() < n) throw InvalidArgument("dimension sequence horizon is below n");
  const BigInt p1 = unitary ? affine_group_order(q) : gl2_order(q);
  if (n == 1) return p1;

  // Number of admissible h of degree m: (q^{c_m} - 1) q^{c_2 + ... + c_{m-1}}.
  std::vector<BigInt> block(n + 1);
  std::vector<std::uint64_t> prefix(n + 1, 0);  // prefix[m] = c_2 + ... + c_{m-1}
  for (std::uint64_t m = 3; m <= n; ++m) {
    if (prefix[m - 1] > std::numeric_limits<std::uint64_t>::max() - dims.c(m - 1))
      throw InvalidArgument("dimension sum overflows");
    prefix[m] = prefix[m - 1] + dims.c(m - 1);
  }
  auto block_count = [&](std::uint64_t m) -> const BigInt& {
    if (block[m] == 0 && m >= 2) block[m] = (checked_pow(q, dims.c(m)) - 1) * checked_pow(q, prefix[m]);
    return block[m];
  };

  BigInt total = 0;
  for_each_ordered_factorization(n, [&](std::span<const std::uint64_t> parts) {
    BigInt term = checked_pow(q, parts.size() - 1);
    for (auto m : parts) {
      const BigInt& b = block_count(m);
      if (b == 0) {
        term = 0;
        break;
      }
      term *= b;
    }
    total += term;
  });
  return p1 * (q + 1) * total;
}

}  // namespace autcount
