#pragma once

// Brute-force ground truth over small fields.
//
// Two independent routes:
//  * word enumeration: every normal-form word of degree n, realized as a pair;
//  * raw scan: every pair (f, g) of bounded total degree, classified by the
//    decision procedure.
//
// Work is split into contiguous index ranges across worker threads; tallies
// are merged by addition and sets by union, so results do not depend on the
// number of workers.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <vector>

#include "autcount/automorphism.hpp"
#include "autcount/bigint.hpp"
#include "autcount/counting.hpp"

namespace autcount {

inline constexpr std::uint64_t kDefaultCeiling = 10'000'000;

struct OracleOptions {
  std::uint64_t ceiling = kDefaultCeiling;  // max candidates an oracle may visit
  unsigned threads = 0;                      // 0: hardware concurrency
  // Keep realized pairs to assert pairwise distinctness (up to this many).
  std::uint64_t distinct_limit = 2'000'000;
  // Also decompose every realized word and compare with the original.
  bool check_roundtrip = false;
};

// Normal-form words of degree n in a fixed mixed-radix order: ordered
// factorizations in their canonical order; within one, alpha_1 is the most
// significant digit and lambda the least.
class WordEnumerator {
 public:
  WordEnumerator(FieldSpec field, std::uint64_t n, std::uint64_t ceiling = kDefaultCeiling);

  std::uint64_t size() const { return total_; }
  NormalFormWord at(std::uint64_t index) const;
  const FieldSpec& field() const { return field_; }

 private:
  struct Block {
    Factorization parts;
    std::uint64_t offset;
    std::uint64_t size;
  };
  FieldSpec field_;
  std::vector<AffineParams> affine_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
};

// Every invertible affine map over the field, in a fixed order.
std::vector<AffineParams> enumerate_affine(const FieldSpec& field);

std::vector<NormalFormWord> enumerate_words(const FieldSpec& field, std::uint64_t n,
                                            std::uint64_t ceiling = kDefaultCeiling);

// Number of words of degree n. Realizes each one and throws ConsistencyError
// if a realized degree differs from n, two words realize the same pair, or
// (with check_roundtrip) decompose does not return the word.
BigInt count_by_enumeration(const FieldSpec& field, std::uint64_t n, const OracleOptions& options = {});

// Distinct polynomials of degree n occurring as a component of an
// automorphism of degree n (the coordinates of degree n).
BigInt distinct_components(const FieldSpec& field, std::uint64_t n, const OracleOptions& options = {});

struct ScanResult {
  std::uint64_t candidates = 0;
  std::uint64_t automorphisms = 0;
  std::map<std::uint32_t, std::uint64_t> by_degree;
};

// Classifies every pair (f, g) with total degrees <= dmax.
ScanResult exhaustive_scan(const FieldSpec& field, std::uint32_t dmax, const OracleOptions& options = {});

// One EndoPair JSON object per line for every automorphism of degree n.
void dump_automorphisms(const FieldSpec& field, std::uint64_t n, std::ostream& out,
                        std::uint64_t ceiling = kDefaultCeiling);

}  // namespace autcount
