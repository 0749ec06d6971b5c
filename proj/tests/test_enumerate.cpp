#include <set>

#include "doctest.h"

#include "scottq/canonical.hpp"
#include "scottq/enumerate.hpp"
#include "support.hpp"

using namespace scottq;

TEST_CASE("class counts for small n match the known sequence") {
  // 1, 2, 5, 16, 63 unlabeled posets on 1..5 elements.
  CHECK(enumerate_posets(1).size() == 1);
  CHECK(enumerate_posets(2).size() == 2);
  CHECK(enumerate_posets(3).size() == 5);
  CHECK(enumerate_posets(4).size() == 16);
  CHECK(enumerate_posets(5).size() == 63);
}

TEST_CASE("cumulative enumeration concatenates the levels") {
  CHECK(enumerate_posets(4, /*exactly_n=*/false).size() == 1 + 2 + 5 + 16);
}

TEST_CASE("independent labeled generator agrees up to n=4") {
  CHECK(testsupport::naive_class_count(1) == 1);
  CHECK(testsupport::naive_class_count(2) == 2);
  CHECK(testsupport::naive_class_count(3) == 5);
  CHECK(testsupport::naive_class_count(4) == 16);
}

TEST_CASE("every enumerated poset is a valid poset with distinct codes") {
  for (int n = 1; n <= 5; ++n) {
    std::set<CanonicalCode> codes;
    for (const FinitePoset& p : enumerate_posets(n)) {
      CHECK(p.size() == n);
      // from_leq_rows validation is the poset-axiom check.
      std::vector<Bits> rows;
      for (int i = 0; i < n; ++i) rows.push_back(p.up(i));
      CHECK_NOTHROW(FinitePoset::from_leq_rows(p.labels(), rows));
      codes.insert(canonical_code(p));
    }
    CHECK(static_cast<int>(codes.size()) == static_cast<int>(enumerate_posets(n).size()));
  }
}

TEST_CASE("output order is deterministic and code-ascending") {
  std::vector<FinitePoset> a = enumerate_posets(4);
  std::vector<FinitePoset> b = enumerate_posets(4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(canonical_code(a[i]) == canonical_code(b[i]));
  for (std::size_t i = 1; i < a.size(); ++i)
    CHECK(canonical_code(a[i - 1]) < canonical_code(a[i]));
}

TEST_CASE("bounds are enforced") {
  CHECK_THROWS_AS(enumerate_posets(0), PreconditionError);
  CHECK_THROWS_AS(enumerate_posets(8), ResourceError);
}
