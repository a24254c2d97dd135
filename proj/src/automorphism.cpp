#include "autcount/automorphism.hpp"

#include <algorithm>

namespace autcount {

namespace {

using Code = FieldSpec::Code;

FieldElement element(const FieldSpec& field, Code c) { return {field, c}; }

bool has_only_degree_le1(const BiPoly& p) { return p.is_zero() || p.total_degree() <= 1; }

struct TriangularParams {
  FieldElement a;
  BiPoly h;  // full y-part of the first component, including degree <= 1
  FieldElement b, b1;
};

// (a x + h(y), b y + b1) with a, b != 0.
std::optional<TriangularParams> triangular_params_of(const EndoPair& e) {
  const auto& field = e.field();
  std::vector<BiPoly::Term> h_terms;
  Code a = 0;
  for (const auto& t : e.f.terms()) {
    if (t.m.x == 1 && t.m.y == 0) {
      a = t.c;
    } else if (t.m.x == 0) {
      h_terms.push_back(t);
    } else {
      return std::nullopt;
    }
  }
  if (a == 0) return std::nullopt;
  if (!has_only_degree_le1(e.g) || e.g.coeff(1, 0) != 0 || e.g.coeff(0, 1) == 0) return std::nullopt;
  return TriangularParams{element(field, a), BiPoly::from_terms(field, std::move(h_terms)),
                          element(field, e.g.coeff(0, 1)), element(field, e.g.coeff(0, 0))};
}

AffineParams c_as_affine(const CElement& c) {
  const auto zero = FieldElement::zero(c.a.field());
  return {c.a, c.h1, c.h0, zero, c.b, c.b1};
}

// One factor of the product being normalized: a coset representative of A
// (alpha) or of B (beta), kept as its pair for composition.
enum class Side { A, B };

struct Rep {
  Side side;
  EndoPair map;
};

}  // namespace

AffineParams AffineParams::make(FieldElement a1, FieldElement b1, FieldElement c1, FieldElement a2, FieldElement b2,
                                FieldElement c2) {
  for (const auto* e : {&b1, &c1, &a2, &b2, &c2}) a1.field().require_same(e->field());
  AffineParams p{std::move(a1), std::move(b1), std::move(c1), std::move(a2), std::move(b2), std::move(c2)};
  if (p.determinant().is_zero()) throw InvalidArgument("affine map has a singular linear part");
  return p;
}

AffineParams AffineParams::identity(const FieldSpec& field) {
  const auto zero = FieldElement::zero(field), one = FieldElement::one(field);
  return {one, zero, zero, zero, one, zero};
}

AffineParams AffineParams::inverse() const {
  const auto inv_det = determinant().inv();
  // Rows of the inverse linear part.
  const auto A1 = b2 * inv_det, B1 = -b1 * inv_det;
  const auto A2 = -a2 * inv_det, B2 = a1 * inv_det;
  return {A1, B1, -(A1 * c1 + B1 * c2), A2, B2, -(A2 * c1 + B2 * c2)};
}

CElement CElement::identity(const FieldSpec& field) {
  const auto zero = FieldElement::zero(field), one = FieldElement::one(field);
  return {one, zero, zero, one, zero};
}

std::uint64_t NormalFormWord::degree() const {
  std::uint64_t d = 1;
  for (const auto& h : betas) d *= h.total_degree();
  return d;
}

void NormalFormWord::validate() const {
  if (alphas.size() != betas.size()) throw InvalidArgument("word needs as many alphas as betas");
  const auto& field = lambda.field();
  if (lambda.determinant().is_zero()) throw InvalidArgument("lambda has a singular linear part");
  for (std::size_t i = 0; i < betas.size(); ++i) {
    field.require_same(betas[i].field());
    if (!betas[i].is_h_admissible()) throw InvalidArgument("beta " + std::to_string(i + 1) + " is not in y^2 F[y]");
    if (i > 0 && alphas[i].is_identity())
      throw InvalidArgument("alpha " + std::to_string(i + 1) + " must not be the identity");
    if (alphas[i].a) field.require_same(alphas[i].a->field());
  }
}

EndoPair compose(const EndoPair& u, const EndoPair& v) {
  u.field().require_same(v.field());
  return {substitute(v.f, u.f, u.g), substitute(v.g, u.f, u.g)};
}

EndoPair identity(const FieldSpec& field) { return {BiPoly::x(field), BiPoly::y(field)}; }

EndoPair from_affine(const AffineParams& p) {
  const auto& field = p.field();
  auto row = [&](const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    return BiPoly::from_terms(field, {{{1, 0}, a.code()}, {{0, 1}, b.code()}, {{0, 0}, c.code()}});
  };
  return {row(p.a1, p.b1, p.c1), row(p.a2, p.b2, p.c2)};
}

EndoPair from_triangular(const FieldElement& a, const BiPoly& h, const FieldElement& b, const FieldElement& b1) {
  const auto& field = h.field();
  for (const auto* e : {&a, &b, &b1}) field.require_same(e->field());
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("triangular map needs a != 0 and b != 0");
  if (!h.is_univariate_in_y()) throw InvalidArgument("triangular map needs h in F[y]");
  return {BiPoly::monomial(field, 1, 0, a.code()) + h,
          BiPoly::from_terms(field, {{{0, 1}, b.code()}, {{0, 0}, b1.code()}})};
}

EndoPair from_A0(const FieldSpec& field, const A0Element& e) {
  if (e.is_identity()) return identity(field);
  field.require_same(e.a->field());
  return {BiPoly::y(field), BiPoly::x(field) + BiPoly::monomial(field, 0, 1, e.a->code())};
}

EndoPair from_B0(const BiPoly& h) {
  if (!h.is_h_admissible()) throw InvalidArgument("B0 element needs nonzero h in y^2 F[y]");
  return {BiPoly::x(h.field()) + h, BiPoly::y(h.field())};
}

EndoPair from_C(const CElement& c) { return from_affine(c_as_affine(c)); }

std::uint32_t degree(const EndoPair& e) {
  if (e.f.is_zero() && e.g.is_zero()) throw InvalidArgument("degree of the zero endomorphism is undefined");
  std::uint32_t d = 0;
  if (!e.f.is_zero()) d = e.f.total_degree();
  if (!e.g.is_zero()) d = std::max(d, e.g.total_degree());
  return d;
}

bool in_C(const EndoPair& e) {
  if (!has_only_degree_le1(e.f) || !has_only_degree_le1(e.g)) return false;
  return e.f.coeff(1, 0) != 0 && e.g.coeff(1, 0) == 0 && e.g.coeff(0, 1) != 0;
}

std::optional<AffineParams> affine_params_of(const EndoPair& e) {
  if (!has_only_degree_le1(e.f) || !has_only_degree_le1(e.g)) return std::nullopt;
  const auto& field = e.field();
  AffineParams p{element(field, e.f.coeff(1, 0)), element(field, e.f.coeff(0, 1)), element(field, e.f.coeff(0, 0)),
                 element(field, e.g.coeff(1, 0)), element(field, e.g.coeff(0, 1)), element(field, e.g.coeff(0, 0))};
  if (p.determinant().is_zero()) return std::nullopt;
  return p;
}

AffineSplit affine_coset_decompose(const AffineParams& p) {
  if (p.a2.is_zero()) return {A0Element::iota(), CElement{p.a1, p.b1, p.c1, p.b2, p.c2}};
  // lambda = (y, x + (b2/a2) y) o ((b1 - a1 b2/a2) x + a1 y + c1, a2 y + c2)
  const auto ratio = p.b2 / p.a2;
  return {A0Element::alpha(ratio), CElement{p.b1 - p.a1 * ratio, p.a1, p.c1, p.a2, p.c2}};
}

TriangularSplit triangular_coset_decompose(const FieldElement& a, const BiPoly& h, const FieldElement& b,
                                           const FieldElement& b1) {
  const auto& field = h.field();
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("triangular map needs a != 0 and b != 0");
  if (!h.is_univariate_in_y()) throw InvalidArgument("triangular map needs h in F[y]");
  // (a x + h(y), b y + b1) = (x + k(y), y) o (a x + h1 y + h0, b y + b1),
  // k = (h_n y^n + ... + h_2 y^2) / a.
  std::vector<BiPoly::Term> high;
  for (const auto& t : h.terms())
    if (t.m.y >= 2) high.push_back(t);
  const CElement c{a, element(field, h.coeff(0, 1)), element(field, h.coeff(0, 0)), b, b1};
  if (high.empty()) return {std::nullopt, c};
  return {BiPoly::from_terms(field, std::move(high)).scale(a.inv().code()), c};
}

EndoPair realize(const NormalFormWord& w) {
  w.validate();
  const auto& field = w.lambda.field();
  EndoPair acc = identity(field);
  for (std::size_t i = 0; i < w.betas.size(); ++i) {
    if (!w.alphas[i].is_identity()) acc = compose(acc, from_A0(field, w.alphas[i]));
    acc = compose(acc, from_B0(w.betas[i]));
  }
  return compose(acc, from_affine(w.lambda));
}

DecomposeResult try_decompose(const EndoPair& e) {
  const auto& field = e.field();
  e.f.field().require_same(e.g.field());
  DecomposeResult result;
  auto fail = [&](int step, std::string why) {
    result.failed_step = step;
    result.reason = std::move(why);
    return result;
  };

  // Degree reduction: e = cur o tau_s o ... o tau_1, each tau elementary.
  const EndoPair swap{BiPoly::y(field), BiPoly::x(field)};
  std::vector<EndoPair> moves;  // tau_1, tau_2, ...
  EndoPair cur = e;
  int step = 0;
  std::optional<AffineParams> base;
  for (;; ++step) {
    if (cur.f.is_zero() || cur.g.is_zero()) return fail(step, "a component is zero");
    auto df = cur.f.total_degree(), dg = cur.g.total_degree();
    if (df <= 1 && dg <= 1) {
      base = affine_params_of(cur);
      if (!base) return fail(step, "linear part is singular");
      break;
    }
    if (dg > df) {
      cur = {cur.g, cur.f};
      moves.push_back(swap);
      std::swap(df, dg);
    }
    if (dg == 0) return fail(step, "component of degree " + std::to_string(df) + " paired with a constant");
    if (df % dg != 0)
      return fail(step, "degrees " + std::to_string(df) + " and " + std::to_string(dg) + " do not divide");
    const auto m = df / dg;
    const BiPoly lead = cur.f.leading_form();
    const BiPoly target = cur.g.leading_form().pow(m);
    const Code c = field.mul(lead.terms().front().c, field.inv(target.terms().front().c));
    if (!(lead == target.scale(c)))
      return fail(step, "leading form of degree " + std::to_string(df) + " is not a scalar times the other leading form to the power " +
                            std::to_string(m));
    cur.f = cur.f - cur.g.pow(m).scale(c);
    moves.push_back({BiPoly::x(field) + BiPoly::monomial(field, 0, m, c), BiPoly::y(field)});
  }

  // Normalize base o tau_s o ... o tau_1 into coset representatives, pushing
  // C parts to the right.
  std::vector<Rep> reps;
  EndoPair c_part = identity(field);
  auto absorb = [&](const EndoPair& x) {
    if (in_C(x)) {
      c_part = compose(c_part, x);
      return;
    }
    const Side side = affine_params_of(x) ? Side::A : Side::B;
    EndoPair y = compose(c_part, x);
    if (!reps.empty() && reps.back().side == side) {
      y = compose(reps.back().map, y);
      reps.pop_back();
    }
    if (side == Side::A) {
      const auto split = affine_coset_decompose(*affine_params_of(y));
      if (!split.rep.is_identity()) reps.push_back({Side::A, from_A0(field, split.rep)});
      c_part = from_C(split.c);
    } else {
      const auto tp = triangular_params_of(y);
      const auto split = triangular_coset_decompose(tp->a, tp->h, tp->b, tp->b1);
      if (split.rep) reps.push_back({Side::B, from_B0(*split.rep)});
      c_part = from_C(split.c);
    }
  };
  absorb(from_affine(*base));
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) absorb(*it);

  NormalFormWord word{{}, {}, *affine_params_of(c_part)};
  std::size_t i = 0;
  while (i < reps.size()) {
    if (reps[i].side == Side::B) {
      word.alphas.push_back(A0Element::iota());
      word.betas.push_back(reps[i].map.f - BiPoly::x(field));
      ++i;
    } else if (i + 1 < reps.size()) {
      word.alphas.push_back(A0Element::alpha(FieldElement(field, reps[i].map.g.coeff(0, 1))));
      word.betas.push_back(reps[i + 1].map.f - BiPoly::x(field));
      i += 2;
    } else {
      word.lambda = *affine_params_of(compose(reps[i].map, c_part));
      ++i;
    }
  }
  result.word = std::move(word);
  return result;
}

NormalFormWord decompose(const EndoPair& e) {
  auto r = try_decompose(e);
  if (!r.ok()) throw NotAutomorphism(r.failed_step, r.reason);
  return std::move(*r.word);
}

bool is_automorphism(const EndoPair& e) { return try_decompose(e).ok(); }

EndoPair inverse(const EndoPair& e) {
  const auto w = decompose(e);
  const auto& field = e.field();
  EndoPair acc = from_affine(w.lambda.inverse());
  for (std::size_t i = w.betas.size(); i-- > 0;) {
    acc = compose(acc, from_B0(-w.betas[i]));
    if (!w.alphas[i].is_identity()) {
      // (y, x + a y)^{-1} = (y - a x, x)
      const auto& a = *w.alphas[i].a;
      acc = compose(acc, EndoPair{BiPoly::y(field) - BiPoly::monomial(field, 1, 0, a.code()), BiPoly::x(field)});
    }
  }
  return acc;
}

}  // namespace autcount
