#pragma once

// Exact arithmetic in GF(p^k).
//
// An element is stored as a "code": the integer whose base-p digits are the
// coefficients of its representative polynomial, lowest degree first. Codes
// run over [0, q) and code order is the enumeration order of the field.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "autcount/errors.hpp"

namespace autcount {

namespace detail {
struct FieldData;
}

class FieldSpec {
 public:
  using Code = std::uint32_t;

  // Field with the canonical modulus: the lexicographically first monic
  // irreducible of degree k (coefficient vectors compared low-to-high).
  static FieldSpec make(std::uint32_t p, unsigned k = 1);

  // Field with an explicit monic modulus (low-to-high, length k + 1).
  // Throws InvalidArgument if p is not prime or the modulus is reducible.
  static FieldSpec with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  const std::vector<std::uint32_t>& modulus() const;

  Code zero() const { return 0; }
  Code one() const { return 1; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;  // throws InvalidArgument on zero
  Code pow(Code a, std::uint64_t e) const;

  // Element represented by the residue n mod p.
  Code from_integer(std::int64_t n) const;

  std::vector<std::uint32_t> coeffs(Code c) const;
  Code encode(std::span<const std::uint32_t> coeffs) const;  // validates digits

  // Human-readable form, e.g. "t+1" or "2".
  std::string format(Code c) const;

  // Structural equality: same p, k and modulus.
  bool operator==(const FieldSpec& other) const;

  // Throws FieldMismatch unless *this == other.
  void require_same(const FieldSpec& other) const;

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

class FieldElement {
 public:
  FieldElement(FieldSpec field, FieldSpec::Code code);
  static FieldElement zero(const FieldSpec& field) { return {field, 0}; }
  static FieldElement one(const FieldSpec& field) { return {field, 1}; }
  static FieldElement from_coeffs(const FieldSpec& field, std::span<const std::uint32_t> coeffs);

  const FieldSpec& field() const { return field_; }
  FieldSpec::Code code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const;

  std::string to_string() const { return field_.format(code_); }

 private:
  FieldSpec field_;
  FieldSpec::Code code_;
};

// All q elements in code order (zero first, then base-p digit order).
std::vector<FieldElement> enumerate_elements(const FieldSpec& field);

bool is_prime(std::uint64_t n);

}  // namespace autcount
