#include "autcount/field.hpp"

#include <algorithm>
#include <limits>

namespace autcount {

namespace {

constexpr std::uint64_t kTableLimit = 256;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

using Digits = std::vector<std::uint32_t>;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m over Z/p.
Digits poly_rem(Digits a, const Digits& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t t = (lead * m[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

// Increments a digit vector in lexicographic order with index 0 most
// significant; returns false on wrap-around.
bool next_lex(Digits& v, std::uint32_t p) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < p) return true;
    v[i] = 0;
  }
  return false;
}

bool is_irreducible(const Digits& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    Digits lower(d, 0);
    do {
      Digits divisor = lower;
      divisor.push_back(1);
      if (poly_rem(modulus, divisor, p).empty()) return false;
    } while (next_lex(lower, p));
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;
  Digits modulus;
  // Populated when q <= kTableLimit.
  std::vector<FieldSpec::Code> add_table, mul_table, inv_table;

  Digits digits(FieldSpec::Code c) const {
    Digits out(k);
    for (unsigned i = 0; i < k; ++i) {
      out[i] = c % p;
      c /= p;
    }
    return out;
  }

  FieldSpec::Code encode(const Digits& d) const {
    std::uint64_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
    return static_cast<FieldSpec::Code>(c);
  }

  FieldSpec::Code add_direct(FieldSpec::Code a, FieldSpec::Code b) const {
    if (k == 1) return static_cast<FieldSpec::Code>((std::uint64_t{a} + b) % p);
    Digits da = digits(a), db = digits(b);
    for (unsigned i = 0; i < k; ++i) da[i] = static_cast<std::uint32_t>((std::uint64_t{da[i]} + db[i]) % p);
    return encode(da);
  }

  FieldSpec::Code neg_direct(FieldSpec::Code a) const {
    Digits da = digits(a);
    for (auto& x : da) x = (p - x) % p;
    return encode(da);
  }

  FieldSpec::Code mul_direct(FieldSpec::Code a, FieldSpec::Code b) const {
    if (k == 1) return static_cast<FieldSpec::Code>((std::uint64_t{a} * b) % p);
    const Digits da = digits(a), db = digits(b);
    Digits prod(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    Digits r = poly_rem(std::move(prod), modulus, p);
    r.resize(k, 0);
    return encode(r);
  }

  FieldSpec::Code pow_direct(FieldSpec::Code a, std::uint64_t e) const {
    FieldSpec::Code result = 1;
    while (e) {
      if (e & 1) result = mul_direct(result, a);
      a = mul_direct(a, a);
      e >>= 1;
    }
    return result;
  }

  void build_tables() {
    const auto n = static_cast<std::size_t>(q);
    add_table.resize(n * n);
    mul_table.resize(n * n);
    inv_table.assign(n, 0);
    for (FieldSpec::Code a = 0; a < n; ++a)
      for (FieldSpec::Code b = 0; b < n; ++b) {
        add_table[a * n + b] = add_direct(a, b);
        mul_table[a * n + b] = mul_direct(a, b);
      }
    for (FieldSpec::Code a = 1; a < n; ++a) inv_table[a] = pow_direct(a, q - 2);
  }

  bool tabulated() const { return !mul_table.empty(); }
};

}  // namespace detail

FieldSpec FieldSpec::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 2) throw InvalidArgument("modulus must have degree >= 1");
  if (modulus.back() != 1) throw InvalidArgument("modulus must be monic");
  for (auto c : modulus)
    if (c >= p) throw InvalidArgument("modulus coefficient out of range [0, p)");
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidArgument("field order exceeds 2^31");
  }
  if (!is_irreducible(modulus, p)) throw InvalidArgument("modulus is reducible");

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->k = k;
  data->q = q;
  data->modulus = std::move(modulus);
  if (q <= kTableLimit) data->build_tables();
  return FieldSpec(std::move(data));
}

FieldSpec FieldSpec::make(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("extension degree must be >= 1");
  Digits lower(k, 0);
  do {
    Digits m = lower;
    m.push_back(1);
    if (is_irreducible(m, p)) return with_modulus(p, std::move(m));
  } while (next_lex(lower, p));
  throw InvalidArgument("no irreducible polynomial found");  // unreachable for valid p, k
}

std::uint32_t FieldSpec::characteristic() const { return data_->p; }
unsigned FieldSpec::degree() const { return data_->k; }
std::uint64_t FieldSpec::order() const { return data_->q; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const { return data_->modulus; }

FieldSpec::Code FieldSpec::add(Code a, Code b) const {
  const auto& d = *data_;
  return d.tabulated() ? d.add_table[a * d.q + b] : d.add_direct(a, b);
}

FieldSpec::Code FieldSpec::neg(Code a) const { return data_->neg_direct(a); }

FieldSpec::Code FieldSpec::sub(Code a, Code b) const { return add(a, neg(b)); }

FieldSpec::Code FieldSpec::mul(Code a, Code b) const {
  const auto& d = *data_;
  return d.tabulated() ? d.mul_table[a * d.q + b] : d.mul_direct(a, b);
}

FieldSpec::Code FieldSpec::inv(Code a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  const auto& d = *data_;
  return d.tabulated() ? d.inv_table[a] : d.pow_direct(a, d.q - 2);
}

FieldSpec::Code FieldSpec::pow(Code a, std::uint64_t e) const {
  Code result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldSpec::Code FieldSpec::from_integer(std::int64_t n) const {
  const std::int64_t p = data_->p;
  return static_cast<Code>(((n % p) + p) % p);
}

std::vector<std::uint32_t> FieldSpec::coeffs(Code c) const { return data_->digits(c); }

FieldSpec::Code FieldSpec::encode(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != data_->k)
    throw InvalidArgument("element needs exactly " + std::to_string(data_->k) + " coefficients");
  for (auto c : coeffs)
    if (c >= data_->p) throw InvalidArgument("element coefficient out of range [0, p)");
  return data_->encode(Digits(coeffs.begin(), coeffs.end()));
}

std::string FieldSpec::format(Code c) const {
  if (c == 0) return "0";
  const Digits d = data_->digits(c);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

bool FieldSpec::operator==(const FieldSpec& other) const {
  if (data_ == other.data_) return true;
  return data_->p == other.data_->p && data_->modulus == other.data_->modulus;
}

void FieldSpec::require_same(const FieldSpec& other) const {
  if (!(*this == other)) throw FieldMismatch();
}

FieldElement::FieldElement(FieldSpec field, FieldSpec::Code code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_.order()) throw InvalidArgument("element code out of range");
}

FieldElement FieldElement::from_coeffs(const FieldSpec& field, std::span<const std::uint32_t> coeffs) {
  return {field, field.encode(coeffs)};
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  field_.require_same(o.field_);
  return {field_, field_.add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  field_.require_same(o.field_);
  return {field_, field_.sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  field_.require_same(o.field_);
  return {field_, field_.mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  field_.require_same(o.field_);
  return {field_, field_.mul(code_, field_.inv(o.code_))};
}

FieldElement FieldElement::operator-() const { return {field_, field_.neg(code_)}; }
FieldElement FieldElement::inv() const { return {field_, field_.inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const { return code_ == o.code_ && field_ == o.field_; }

std::vector<FieldElement> enumerate_elements(const FieldSpec& field) {
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(field.order()));
  for (std::uint64_t c = 0; c < field.order(); ++c) out.emplace_back(field, static_cast<FieldSpec::Code>(c));
  return out;
}

}  // namespace autcount
