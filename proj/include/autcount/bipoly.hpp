#pragma once

// Sparse polynomials in two commuting variables x, y over a FieldSpec.
//
// Terms are kept sorted in the canonical order (graded lexicographic with
// x > y, leading term first) with no zero coefficients, so structural
// equality is polynomial equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "autcount/field.hpp"

namespace autcount {

struct Monomial {
  std::uint32_t x = 0;  // exponent of x
  std::uint32_t y = 0;  // exponent of y

  std::uint32_t total() const { return x + y; }
  bool operator==(const Monomial&) const = default;
};

// Strict "comes before" in canonical order: higher total degree first, then
// higher x exponent first.
inline bool canonical_before(const Monomial& a, const Monomial& b) {
  if (a.total() != b.total()) return a.total() > b.total();
  return a.x > b.x;
}

class BiPoly {
 public:
  using Code = FieldSpec::Code;
  struct Term {
    Monomial m;
    Code c;
    bool operator==(const Term&) const = default;
  };

  explicit BiPoly(FieldSpec field) : field_(std::move(field)) {}

  static BiPoly constant(const FieldSpec& field, Code c);
  static BiPoly monomial(const FieldSpec& field, std::uint32_t i, std::uint32_t j, Code c = 1);
  static BiPoly x(const FieldSpec& field) { return monomial(field, 1, 0); }
  static BiPoly y(const FieldSpec& field) { return monomial(field, 0, 1); }
  // Sums like terms and drops zeros; input order is irrelevant.
  static BiPoly from_terms(const FieldSpec& field, std::vector<Term> terms);
  // h(y) = sum coeffs[j] y^j.
  static BiPoly univariate_y(const FieldSpec& field, std::span<const Code> coeffs);

  const FieldSpec& field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Code coeff(std::uint32_t i, std::uint32_t j) const;

  // Throws InvalidArgument on the zero polynomial.
  std::uint32_t total_degree() const;
  // Homogeneous component of top total degree. Throws on zero.
  BiPoly leading_form() const;
  // Component of a given total degree (possibly zero).
  BiPoly homogeneous_part(std::uint32_t d) const;

  std::uint32_t max_x() const;
  std::uint32_t max_y() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly scale(Code c) const;
  BiPoly pow(std::uint32_t e) const;

  bool is_univariate_in_y() const;
  // Nonzero, only y, every exponent >= 2: the shape of h in (x + h(y), y).
  bool is_h_admissible() const;
  // Coefficient vector of a y-only polynomial (index = exponent).
  std::vector<Code> y_coeffs() const;

  bool operator==(const BiPoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }
  std::size_t hash() const;

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::vector<Term> terms_;
};

// Image of p under the ring homomorphism x -> fx, y -> fy.
BiPoly substitute(const BiPoly& p, const BiPoly& fx, const BiPoly& fy);

}  // namespace autcount

template <>
struct std::hash<autcount::BiPoly> {
  std::size_t operator()(const autcount::BiPoly& p) const { return p.hash(); }
};
