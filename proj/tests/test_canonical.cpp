#include <set>

#include "doctest.h"

#include "scottq/canonical.hpp"
#include "scottq/enumerate.hpp"
#include "support.hpp"

using namespace scottq;
using testsupport::naive_canonical_code;
using testsupport::parse;

TEST_CASE("canonical code is invariant under relabeling") {
  FinitePoset p = parse("elements: a b c d\norder: a<b a<c b<d c<d\n");
  CanonicalCode base = canonical_code(p);
  // A few hand-picked permutations plus the canonical labeling itself.
  for (const std::vector<int>& perm :
       {std::vector<int>{3, 2, 1, 0}, {1, 3, 0, 2}, {2, 0, 3, 1}}) {
    CHECK(canonical_code(p.relabel(perm)) == base);
  }
  std::vector<int> canon = canonical_labeling(p);
  CHECK(code_under_labeling(p, canon) == base);
}

TEST_CASE("canonical code separates non-isomorphic posets") {
  FinitePoset chain = parse("elements: a b c\norder: a<b b<c\n");
  FinitePoset vee = parse("elements: a b c\norder: a<b a<c\n");
  FinitePoset anti = parse("elements: a b c\n");
  CHECK(canonical_code(chain) != canonical_code(vee));
  CHECK(canonical_code(chain) != canonical_code(anti));
  CHECK(canonical_code(vee) != canonical_code(anti));
  // vee and wedge are dual, not isomorphic
  CHECK(canonical_code(vee) != canonical_code(vee.dual()));
}

TEST_CASE("refined search induces the same classes as the all-permutations oracle") {
  // The two encodings differ byte-for-byte (the refined search minimizes over
  // refinement-compatible orderings only), but they must classify posets
  // identically: equal refined codes exactly when equal naive codes. Checked
  // over every pair of classes up to n=5, plus scrambled self-pairs.
  std::vector<FinitePoset> all = enumerate_posets(5, /*exactly_n=*/false);
  std::vector<CanonicalCode> fast, naive;
  for (const FinitePoset& p : all) {
    fast.push_back(canonical_code(p));
    naive.push_back(naive_canonical_code(p));
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK((fast[i] == fast[j]) == (naive[i] == naive[j]));
  for (const FinitePoset& p : all) {
    std::vector<int> perm(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i)
      perm[static_cast<std::size_t>(i)] = p.size() - 1 - i;
    FinitePoset r = p.relabel(perm);
    CHECK(canonical_code(r) == canonical_code(p));
    CHECK(naive_canonical_code(r) == naive_canonical_code(p));
  }
}

TEST_CASE("all 16 four-element classes give pairwise distinct codes") {
  std::set<CanonicalCode> codes;
  for (const FinitePoset& p : enumerate_posets(4)) codes.insert(canonical_code(p));
  CHECK(codes.size() == 16);
}

TEST_CASE("are_isomorphic finds a real order isomorphism") {
  FinitePoset p = parse("elements: a b c d\norder: a<b a<c b<d c<d\n");
  FinitePoset m = p.relabel({2, 0, 3, 1});
  auto iso = are_isomorphic(p, m);
  REQUIRE(iso.has_value());
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      CHECK(p.leq(i, j) ==
            m.leq((*iso)[static_cast<std::size_t>(i)], (*iso)[static_cast<std::size_t>(j)]));
}

TEST_CASE("are_isomorphic rejects different classes") {
  FinitePoset chain = parse("elements: a b c\norder: a<b b<c\n");
  FinitePoset vee = parse("elements: a b c\norder: a<b a<c\n");
  CHECK_FALSE(are_isomorphic(chain, vee).has_value());
  FinitePoset two = parse("elements: a b\n");
  CHECK_FALSE(are_isomorphic(chain, two).has_value());
}

TEST_CASE("code equality coincides with isomorphism on all 5-element pairs") {
  std::vector<FinitePoset> all = enumerate_posets(5, /*exactly_n=*/false);
  // Codes of distinct classes never collide...
  std::set<CanonicalCode> codes;
  for (const FinitePoset& p : all) codes.insert(canonical_code(p));
  CHECK(codes.size() == all.size());
  // ...and a scrambled copy always maps back to its own class.
  for (const FinitePoset& p : all) {
    if (p.size() < 3) continue;
    std::vector<int> perm(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i)
      perm[static_cast<std::size_t>(i)] = (i + 1) % p.size();
    CHECK(canonical_code(p.relabel(perm)) == canonical_code(p));
  }
}

TEST_CASE("hex rendering is stable") {
  FinitePoset p = parse("elements: a\n");
  CanonicalCode c = canonical_code(p);
  CHECK(c.hex() == canonical_code(p).hex());
  CHECK_FALSE(c.hex().empty());
}
