#include "autcount/oracle.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <thread>
#include <unordered_set>

#include "autcount/serialization.hpp"

namespace autcount {

namespace {

using Code = FieldSpec::Code;

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fingerprint(const BiPoly& p, std::uint64_t seed) {
  std::uint64_t h = mix64(seed ^ p.size());
  for (const auto& t : p.terms()) h = mix64(h ^ ((std::uint64_t{t.m.x} << 44) | (std::uint64_t{t.m.y} << 32) | t.c));
  return h;
}

std::uint64_t fingerprint(const EndoPair& e) { return fingerprint(e.g, fingerprint(e.f, 0x51)); }

unsigned worker_count(const OracleOptions& options, std::uint64_t work) {
  unsigned t = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(work, 1)));
}

// Runs body(state, index) over [0, total) split into contiguous ranges, one
// state per worker. Rethrows the first worker exception.
template <typename State, typename Body>
std::vector<State> run_partitioned(std::uint64_t total, unsigned workers, Body body) {
  std::vector<State> states(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    try {
      for (std::uint64_t i = lo; i < hi; ++i) body(states[w], i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return states;
}

BigInt ipow(std::uint64_t base, std::uint64_t e) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

void require_within(const BigInt& count, std::uint64_t ceiling, const std::string& what) {
  if (count > ceiling)
    throw CeilingExceeded(what + " needs " + count.str() + " candidates, above the ceiling " + std::to_string(ceiling));
}

}  // namespace

std::vector<AffineParams> enumerate_affine(const FieldSpec& field) {
  std::vector<AffineParams> out;
  const auto q = static_cast<Code>(field.order());
  auto el = [&](Code c) { return FieldElement(field, c); };
  for (Code a1 = 0; a1 < q; ++a1)
    for (Code b1 = 0; b1 < q; ++b1)
      for (Code a2 = 0; a2 < q; ++a2)
        for (Code b2 = 0; b2 < q; ++b2) {
          if (field.mul(a1, b2) == field.mul(a2, b1)) continue;
          for (Code c1 = 0; c1 < q; ++c1)
            for (Code c2 = 0; c2 < q; ++c2) out.push_back({el(a1), el(b1), el(c1), el(a2), el(b2), el(c2)});
        }
  return out;
}

WordEnumerator::WordEnumerator(FieldSpec field, std::uint64_t n, std::uint64_t ceiling)
    : field_(std::move(field)) {
  if (n < 1) throw InvalidArgument("word enumeration needs n >= 1");
  const std::uint64_t q = field_.order();
  const BigInt affine_count = affine_group_order(q);
  require_within(affine_count, ceiling, "affine enumeration");

  std::vector<std::pair<Factorization, BigInt>> sized;
  if (n == 1) {
    sized.emplace_back(Factorization{}, affine_count);
  } else {
    for (auto& parts : ordered_factorizations(n)) {
      BigInt size = BigInt(q + 1) * ipow(q, parts.size() - 1) * affine_count;
      for (auto m : parts) size *= BigInt(q - 1) * ipow(q, m - 2);
      sized.emplace_back(std::move(parts), std::move(size));
    }
  }
  BigInt total = 0;
  for (const auto& s : sized) total += s.second;
  require_within(total, ceiling, "word enumeration of degree " + std::to_string(n));

  for (auto& [parts, size] : sized) {
    blocks_.push_back({std::move(parts), total_, static_cast<std::uint64_t>(size)});
    total_ += static_cast<std::uint64_t>(size);
  }
  affine_ = enumerate_affine(field_);
}

NormalFormWord WordEnumerator::at(std::uint64_t index) const {
  if (index >= total_) throw InvalidArgument("word index out of range");
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::uint64_t i, const Block& b) { return i < b.offset; });
  const Block& block = *std::prev(it);
  std::uint64_t local = index - block.offset;
  const std::uint64_t q = field_.order();

  NormalFormWord w{{}, {}, affine_[local % affine_.size()]};
  local /= affine_.size();
  const std::size_t k = block.parts.size();
  w.alphas.resize(k);
  w.betas.assign(k, BiPoly(field_));
  for (std::size_t i = k; i-- > 0;) {
    const std::uint64_t m = block.parts[i];
    std::vector<Code> coeffs(m + 1, 0);
    coeffs[m] = static_cast<Code>(1 + local % (q - 1));
    local /= q - 1;
    for (std::uint64_t e = 2; e < m; ++e) {
      coeffs[e] = static_cast<Code>(local % q);
      local /= q;
    }
    w.betas[i] = BiPoly::univariate_y(field_, coeffs);
    if (i == 0) {
      const auto a = local % (q + 1);
      local /= q + 1;
      w.alphas[i] = a == 0 ? A0Element::iota() : A0Element::alpha(FieldElement(field_, static_cast<Code>(a - 1)));
    } else {
      w.alphas[i] = A0Element::alpha(FieldElement(field_, static_cast<Code>(local % q)));
      local /= q;
    }
  }
  return w;
}

std::vector<NormalFormWord> enumerate_words(const FieldSpec& field, std::uint64_t n, std::uint64_t ceiling) {
  const WordEnumerator words(field, n, ceiling);
  std::vector<NormalFormWord> out;
  out.reserve(words.size());
  for (std::uint64_t i = 0; i < words.size(); ++i) out.push_back(words.at(i));
  return out;
}

BigInt count_by_enumeration(const FieldSpec& field, std::uint64_t n, const OracleOptions& options) {
  const WordEnumerator words(field, n, options.ceiling);
  const bool distinct = words.size() <= options.distinct_limit;
  using Seen = std::vector<std::pair<std::uint64_t, std::uint64_t>>;  // (fingerprint, word index)

  auto states = run_partitioned<Seen>(words.size(), worker_count(options, words.size()),
                                      [&](Seen& seen, std::uint64_t i) {
                                        const auto w = words.at(i);
                                        const auto e = realize(w);
                                        if (degree(e) != n)
                                          throw ConsistencyError("word " + std::to_string(i) + " realizes degree " +
                                                                 std::to_string(degree(e)) + ", expected " +
                                                                 std::to_string(n));
                                        if (options.check_roundtrip && !(decompose(e) == w))
                                          throw ConsistencyError("decompose does not return word " + std::to_string(i));
                                        if (distinct) seen.emplace_back(fingerprint(e), i);
                                      });

  if (distinct) {
    Seen all;
    all.reserve(words.size());
    for (auto& s : states) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    // Equal fingerprints are compared exactly.
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a + 1; b < all.size() && all[b].first == all[a].first; ++b)
        if (realize(words.at(all[a].second)) == realize(words.at(all[b].second)))
          throw ConsistencyError("words " + std::to_string(all[a].second) + " and " + std::to_string(all[b].second) +
                                 " realize the same automorphism");
  }
  return BigInt(words.size());
}

BigInt distinct_components(const FieldSpec& field, std::uint64_t n, const OracleOptions& options) {
  const WordEnumerator words(field, n, options.ceiling);
  using Set = std::unordered_set<BiPoly>;
  auto states = run_partitioned<Set>(words.size(), worker_count(options, words.size()),
                                     [&](Set& seen, std::uint64_t i) {
                                       const auto e = realize(words.at(i));
                                       for (const auto* p : {&e.f, &e.g})
                                         if (!p->is_zero() && p->total_degree() == n) seen.insert(*p);
                                     });
  Set all;
  for (auto& s : states) all.merge(s);
  return BigInt(all.size());
}

ScanResult exhaustive_scan(const FieldSpec& field, std::uint32_t dmax, const OracleOptions& options) {
  std::vector<Monomial> monomials;
  for (std::uint32_t t = 0; t <= dmax; ++t)
    for (std::uint32_t i = 0; i <= t; ++i) monomials.push_back({i, t - i});
  const std::uint64_t q = field.order();
  const BigInt candidates = ipow(q, 2 * monomials.size());
  require_within(candidates, options.ceiling, "exhaustive scan up to degree " + std::to_string(dmax));
  const auto total = static_cast<std::uint64_t>(candidates);

  auto states = run_partitioned<ScanResult>(total, worker_count(options, total), [&](ScanResult& r, std::uint64_t i) {
    std::vector<BiPoly::Term> f_terms, g_terms;
    for (const auto& m : monomials) {
      if (const auto c = static_cast<Code>(i % q)) f_terms.push_back({m, c});
      i /= q;
    }
    for (const auto& m : monomials) {
      if (const auto c = static_cast<Code>(i % q)) g_terms.push_back({m, c});
      i /= q;
    }
    const EndoPair e{BiPoly::from_terms(field, std::move(f_terms)), BiPoly::from_terms(field, std::move(g_terms))};
    ++r.candidates;
    if (is_automorphism(e)) {
      ++r.automorphisms;
      ++r.by_degree[degree(e)];
    }
  });

  ScanResult merged;
  for (const auto& s : states) {
    merged.candidates += s.candidates;
    merged.automorphisms += s.automorphisms;
    for (const auto& [d, c] : s.by_degree) merged.by_degree[d] += c;
  }
  return merged;
}

void dump_automorphisms(const FieldSpec& field, std::uint64_t n, std::ostream& out, std::uint64_t ceiling) {
  const WordEnumerator words(field, n, ceiling);
  for (std::uint64_t i = 0; i < words.size(); ++i) out << to_json(realize(words.at(i))).dump() << '\n';
}

}  // namespace autcount
