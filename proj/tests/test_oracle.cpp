#include "doctest.h"

#include <set>
#include <sstream>

#include "autcount/oracle.hpp"
#include "autcount/serialization.hpp"

using namespace autcount;

TEST_CASE("affine enumeration") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto f = FieldSpec::make(p, k);
    const auto all = enumerate_affine(f);
    CHECK(all.size() == affine_group_order(f.order()));
    std::set<std::string> distinct;
    for (const auto& a : all) distinct.insert(from_affine(a).to_string());
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("word counts") {
  const auto f2 = FieldSpec::make(2);
  CHECK(WordEnumerator(f2, 1).size() == 24);
  CHECK(WordEnumerator(f2, 2).size() == 72);
  CHECK(WordEnumerator(f2, 4).size() == 432);
  CHECK_THROWS_AS(WordEnumerator(f2, 0), InvalidArgument);
  CHECK_THROWS_AS(WordEnumerator(f2, 2).at(72), InvalidArgument);

  // Every enumerated word is valid and has the requested degree.
  for (const auto& w : enumerate_words(f2, 6)) {
    CHECK_NOTHROW(w.validate());
    CHECK(w.degree() == 6);
  }
}

TEST_CASE("enumeration agrees with the formula") {
  OracleOptions checked;
  checked.check_roundtrip = true;
  for (std::uint64_t n = 1; n <= 6; ++n) CHECK(count_by_enumeration(FieldSpec::make(2), n, checked) == p_n(2, n));
  CHECK(count_by_enumeration(FieldSpec::make(3), 2, checked) == 3456);
  CHECK(count_by_enumeration(FieldSpec::make(2, 2), 2, checked) == 43200);
  CHECK(count_by_enumeration(FieldSpec::make(3), 3) == p_n(3, 3));
}

TEST_CASE("coordinates") {
  const auto f2 = FieldSpec::make(2);
  CHECK(distinct_components(f2, 1) == 6);
  CHECK(distinct_components(f2, 2) == 12);
  CHECK(distinct_components(f2, 3) == 24);
  CHECK(distinct_components(FieldSpec::make(3), 2) == l_n(3, 2));
}

TEST_CASE("exhaustive scan") {
  const auto f2 = FieldSpec::make(2);
  const auto one = exhaustive_scan(f2, 1);
  CHECK(one.candidates == 64);
  CHECK(one.automorphisms == 24);
  CHECK(one.by_degree == std::map<std::uint32_t, std::uint64_t>{{1, 24}});

  const auto two = exhaustive_scan(f2, 2);
  CHECK(two.candidates == 4096);
  CHECK(two.automorphisms == 96);
  CHECK(two.by_degree == std::map<std::uint32_t, std::uint64_t>{{1, 24}, {2, 72}});

  const auto three = exhaustive_scan(FieldSpec::make(3), 1);
  CHECK(three.automorphisms == 432);

  // 2^20 pairs up to degree 3 over GF(2): degrees 1..3 each counted fully.
  const auto deg3 = exhaustive_scan(f2, 3);
  CHECK(deg3.by_degree == std::map<std::uint32_t, std::uint64_t>{{1, 24}, {2, 72}, {3, 144}});
}

TEST_CASE("results do not depend on the number of workers") {
  const auto f2 = FieldSpec::make(2), f3 = FieldSpec::make(3);
  for (unsigned threads : {1u, 3u, 8u}) {
    OracleOptions o;
    o.threads = threads;
    CHECK(count_by_enumeration(f2, 4, o) == 432);
    CHECK(distinct_components(f3, 2, o) == l_n(3, 2));
    const auto scan = exhaustive_scan(f2, 2, o);
    CHECK(scan.automorphisms == 96);
    CHECK(scan.by_degree == std::map<std::uint32_t, std::uint64_t>{{1, 24}, {2, 72}});
  }
}

TEST_CASE("ceilings") {
  OracleOptions tight;
  tight.ceiling = 100;
  CHECK_THROWS_AS(count_by_enumeration(FieldSpec::make(2), 4, tight), CeilingExceeded);
  CHECK_THROWS_AS(exhaustive_scan(FieldSpec::make(2), 2, tight), CeilingExceeded);
  CHECK_NOTHROW(exhaustive_scan(FieldSpec::make(2), 1, tight));
  CHECK_THROWS_AS(exhaustive_scan(FieldSpec::make(3), 3), CeilingExceeded);
}

TEST_CASE("JSON-lines dump") {
  const auto f2 = FieldSpec::make(2);
  std::ostringstream out;
  dump_automorphisms(f2, 2, out);
  std::istringstream in(out.str());
  std::string line;
  std::set<std::string> lines;
  while (std::getline(in, line)) {
    const auto e = endo_from_json(Json::parse(line));
    CHECK(degree(e) == 2);
    CHECK(is_automorphism(e));
    lines.insert(line);
  }
  CHECK(lines.size() == 72);
  std::ostringstream again;
  dump_automorphisms(f2, 2, again);
  CHECK(again.str() == out.str());
}
