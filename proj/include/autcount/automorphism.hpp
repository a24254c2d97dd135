#pragma once

// Endomorphisms (f, g) of F[x, y] and the unique normal form
//
//   phi = alpha_1 o beta_1 o alpha_2 o beta_2 o ... o alpha_k o beta_k o lambda
//
// with alpha_i in A0 = { iota, (y, x + a y) }, beta_i = (x + h_i(y), y) where
// h_i has no terms below y^2, alpha_2..alpha_k != iota and lambda affine.
//
// Composition convention: compose(u, v) evaluates the polynomials of v at the
// pair of u, i.e. (f2(f1, g1), g2(f1, g1)) for u = (f1, g1), v = (f2, g2).
// This is ordinary composition u o v of the algebra maps x -> f, y -> g.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autcount/bipoly.hpp"
#include "autcount/field.hpp"

namespace autcount {

struct EndoPair {
  BiPoly f;
  BiPoly g;

  const FieldSpec& field() const { return f.field(); }
  bool operator==(const EndoPair& o) const { return f == o.f && g == o.g; }
  std::size_t hash() const { return f.hash() * 1000003u ^ g.hash(); }
  std::string to_string() const { return "(" + f.to_string() + ", " + g.to_string() + ")"; }
};

// (a1 x + b1 y + c1, a2 x + b2 y + c2) with a1 b2 != a2 b1.
struct AffineParams {
  FieldElement a1, b1, c1, a2, b2, c2;

  // Throws InvalidArgument if the linear part is singular or fields differ.
  static AffineParams make(FieldElement a1, FieldElement b1, FieldElement c1, FieldElement a2, FieldElement b2,
                           FieldElement c2);
  static AffineParams identity(const FieldSpec& field);

  const FieldSpec& field() const { return a1.field(); }
  FieldElement determinant() const { return a1 * b2 - a2 * b1; }
  AffineParams inverse() const;
  bool operator==(const AffineParams&) const = default;
};

// An element of A0: identity when `a` is empty, otherwise (y, x + a y).
struct A0Element {
  std::optional<FieldElement> a;

  static A0Element iota() { return {}; }
  static A0Element alpha(FieldElement a) { return {std::move(a)}; }
  bool is_identity() const { return !a.has_value(); }
  bool operator==(const A0Element&) const = default;
};

// (a x + h1 y + h0, b y + b1) with a, b != 0: the intersection of the affine
// and triangular groups.
struct CElement {
  FieldElement a, h1, h0, b, b1;

  static CElement identity(const FieldSpec& field);
  bool operator==(const CElement&) const = default;
};

struct NormalFormWord {
  std::vector<A0Element> alphas;
  std::vector<BiPoly> betas;  // h_i, each admissible
  AffineParams lambda;

  std::size_t length() const { return betas.size(); }
  // Product of deg h_i (1 for the empty word).
  std::uint64_t degree() const;
  // Throws InvalidArgument if an invariant of the normal form is violated.
  void validate() const;
  bool operator==(const NormalFormWord&) const = default;
};

// Unique split of a triangular map into B0 representative and C part; the
// representative is absent when the map already lies in C.
struct TriangularSplit {
  std::optional<BiPoly> rep;  // h in (x + h(y), y)
  CElement c;
};

struct AffineSplit {
  A0Element rep;
  CElement c;
};

EndoPair compose(const EndoPair& u, const EndoPair& v);

EndoPair identity(const FieldSpec& field);
EndoPair from_affine(const AffineParams& p);
// (a x + h(y), b y + b1); h must be a polynomial in y alone, a, b != 0.
EndoPair from_triangular(const FieldElement& a, const BiPoly& h, const FieldElement& b, const FieldElement& b1);
EndoPair from_A0(const FieldSpec& field, const A0Element& e);
EndoPair from_B0(const BiPoly& h);  // requires h admissible
EndoPair from_C(const CElement& c);

// max(deg f, deg g); a nonzero constant contributes 0. Throws if both are zero.
std::uint32_t degree(const EndoPair& e);

bool in_C(const EndoPair& e);
// Parameters of e if it is an invertible affine map.
std::optional<AffineParams> affine_params_of(const EndoPair& e);

AffineSplit affine_coset_decompose(const AffineParams& p);
TriangularSplit triangular_coset_decompose(const FieldElement& a, const BiPoly& h, const FieldElement& b,
                                           const FieldElement& b1);

EndoPair realize(const NormalFormWord& w);

struct DecomposeResult {
  std::optional<NormalFormWord> word;
  int failed_step = -1;
  std::string reason;

  bool ok() const { return word.has_value(); }
};

DecomposeResult try_decompose(const EndoPair& e);
// Throws NotAutomorphism when e is not an automorphism.
NormalFormWord decompose(const EndoPair& e);
bool is_automorphism(const EndoPair& e);
EndoPair inverse(const EndoPair& e);

}  // namespace autcount

template <>
struct std::hash<autcount::EndoPair> {
  std::size_t operator()(const autcount::EndoPair& e) const { return e.hash(); }
};
