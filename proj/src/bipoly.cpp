#include "autcount/bipoly.hpp"

#include <algorithm>

namespace autcount {

namespace {

// Dense coefficient grid for accumulating products; cell (i, j) holds the
// coefficient of x^i y^j.
class DenseAccumulator {
 public:
  DenseAccumulator(const FieldSpec& field, std::uint32_t max_x, std::uint32_t max_y)
      : field_(field), nx_(max_x + 1), ny_(max_y + 1), cells_(std::size_t{nx_} * ny_, 0) {}

  void add(std::uint32_t i, std::uint32_t j, BiPoly::Code c) {
    auto& cell = cells_[std::size_t{i} * ny_ + j];
    cell = field_.add(cell, c);
  }

  // Accumulates c * a * b.
  void add_product(const BiPoly& a, const BiPoly& b, BiPoly::Code c) {
    for (const auto& ta : a.terms()) {
      const auto ca = field_.mul(c, ta.c);
      for (const auto& tb : b.terms()) add(ta.m.x + tb.m.x, ta.m.y + tb.m.y, field_.mul(ca, tb.c));
    }
  }

  std::vector<BiPoly::Term> collect() const {
    std::vector<BiPoly::Term> out;
    const std::uint32_t top = (nx_ - 1) + (ny_ - 1);
    for (std::uint32_t t = top + 1; t-- > 0;) {
      const std::uint32_t hi = std::min(t, nx_ - 1);
      const std::uint32_t lo = t > ny_ - 1 ? t - (ny_ - 1) : 0;
      for (std::uint32_t i = hi + 1; i-- > lo;) {
        const auto c = cells_[std::size_t{i} * ny_ + (t - i)];
        if (c != 0) out.push_back({{i, t - i}, c});
      }
    }
    return out;
  }

 private:
  const FieldSpec& field_;
  std::uint32_t nx_, ny_;
  std::vector<BiPoly::Code> cells_;
};

}  // namespace

BiPoly BiPoly::constant(const FieldSpec& field, Code c) { return monomial(field, 0, 0, c); }

BiPoly BiPoly::monomial(const FieldSpec& field, std::uint32_t i, std::uint32_t j, Code c) {
  BiPoly p(field);
  if (c >= field.order()) throw InvalidArgument("coefficient code out of range");
  if (c != 0) p.terms_.push_back({{i, j}, c});
  return p;
}

BiPoly BiPoly::from_terms(const FieldSpec& field, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.c >= field.order()) throw InvalidArgument("coefficient code out of range");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return canonical_before(a.m, b.m); });
  BiPoly p(field);
  for (const auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = field.add(p.terms_.back().c, t.c);
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (t.c != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

BiPoly BiPoly::univariate_y(const FieldSpec& field, std::span<const Code> coeffs) {
  BiPoly p(field);
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    if (coeffs[j] >= field.order()) throw InvalidArgument("coefficient code out of range");
    if (coeffs[j] != 0) p.terms_.push_back({{0, static_cast<std::uint32_t>(j)}, coeffs[j]});
  }
  return p;
}

BiPoly::Code BiPoly::coeff(std::uint32_t i, std::uint32_t j) const {
  const Monomial m{i, j};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return canonical_before(t.m, key); });
  return (it != terms_.end() && it->m == m) ? it->c : 0;
}

std::uint32_t BiPoly::total_degree() const {
  if (is_zero()) throw InvalidArgument("degree of the zero polynomial is undefined");
  return terms_.front().m.total();
}

BiPoly BiPoly::leading_form() const { return homogeneous_part(total_degree()); }

BiPoly BiPoly::homogeneous_part(std::uint32_t d) const {
  BiPoly out(field_);
  for (const auto& t : terms_)
    if (t.m.total() == d) out.terms_.push_back(t);
  return out;
}

std::uint32_t BiPoly::max_x() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.m.x);
  return m;
}

std::uint32_t BiPoly::max_y() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.m.y);
  return m;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  field_.require_same(o.field_);
  BiPoly out(field_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && canonical_before(a->m, b->m))) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || canonical_before(b->m, a->m)) {
      out.terms_.push_back(*b++);
    } else {
      const auto c = field_.add(a->c, b->c);
      if (c != 0) out.terms_.push_back({a->m, c});
      ++a;
      ++b;
    }
  }
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& t : out.terms_) t.c = field_.neg(t.c);
  return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  field_.require_same(o.field_);
  if (is_zero() || o.is_zero()) return BiPoly(field_);
  DenseAccumulator acc(field_, max_x() + o.max_x(), max_y() + o.max_y());
  acc.add_product(*this, o, 1);
  BiPoly out(field_);
  out.terms_ = acc.collect();
  return out;
}

BiPoly BiPoly::scale(Code c) const {
  if (c >= field_.order()) throw InvalidArgument("coefficient code out of range");
  BiPoly out(field_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.m, field_.mul(c, t.c)});
  return out;
}

BiPoly BiPoly::pow(std::uint32_t e) const {
  BiPoly result = constant(field_, 1);
  BiPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool BiPoly::is_univariate_in_y() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.m.x == 0; });
}

bool BiPoly::is_h_admissible() const {
  return !is_zero() &&
         std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.m.x == 0 && t.m.y >= 2; });
}

std::vector<BiPoly::Code> BiPoly::y_coeffs() const {
  if (!is_univariate_in_y()) throw InvalidArgument("polynomial involves x");
  std::vector<Code> out(is_zero() ? 0 : max_y() + 1, 0);
  for (const auto& t : terms_) out[t.m.y] = t.c;
  return out;
}

std::size_t BiPoly::hash() const {
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(0x9e3779b97f4a7c15ULL + terms_.size());
  for (const auto& t : terms_) h = mix(h ^ ((std::uint64_t{t.m.x} << 44) | (std::uint64_t{t.m.y} << 32) | t.c));
  return static_cast<std::size_t>(h);
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string var;
    if (t.m.x) var += t.m.x == 1 ? "x" : "x^" + std::to_string(t.m.x);
    if (t.m.y) {
      if (!var.empty()) var += "*";
      var += t.m.y == 1 ? "y" : "y^" + std::to_string(t.m.y);
    }
    std::string coeff = field_.format(t.c);
    if (field_.degree() > 1 && coeff.find('+') != std::string::npos) coeff = "(" + coeff + ")";
    if (var.empty()) {
      out += coeff;
    } else if (t.c == 1) {
      out += var;
    } else {
      out += coeff + "*" + var;
    }
  }
  return out;
}

BiPoly substitute(const BiPoly& p, const BiPoly& fx, const BiPoly& fy) {
  p.field().require_same(fx.field());
  p.field().require_same(fy.field());
  const auto& field = p.field();
  if (p.is_zero()) return BiPoly(field);

  std::vector<BiPoly> px{BiPoly::constant(field, 1)}, py{BiPoly::constant(field, 1)};
  const auto need_x = p.max_x(), need_y = p.max_y();
  while (px.size() <= need_x) px.push_back(px.back() * fx);
  while (py.size() <= need_y) py.push_back(py.back() * fy);

  std::uint32_t bx = 0, by = 0;
  for (const auto& t : p.terms()) {
    bx = std::max(bx, px[t.m.x].max_x() + py[t.m.y].max_x());
    by = std::max(by, px[t.m.x].max_y() + py[t.m.y].max_y());
  }
  DenseAccumulator acc(field, bx, by);
  for (const auto& t : p.terms()) acc.add_product(px[t.m.x], py[t.m.y], t.c);
  return BiPoly::from_terms(field, acc.collect());
}

}  // namespace autcount
