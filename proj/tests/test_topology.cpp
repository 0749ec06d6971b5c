#include <algorithm>
#include <set>

#include "doctest.h"

#include "scottq/enumerate.hpp"
#include "scottq/qfamily.hpp"
#include "scottq/topology.hpp"
#include "support.hpp"

using namespace scottq;
using testsupport::mask_of;
using testsupport::parse;

namespace {

// Independent route: upper sets collected by scanning all subsets with the
// order relation only, no topology code involved.
std::set<Bits> all_upper_sets(const FinitePoset& p) {
  std::set<Bits> out;
  const int n = p.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Bits s(n);
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) s.set(i);
    if (p.is_upper_set(s)) out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("scott opens of small posets are exactly the upper sets") {
  for (int n = 1; n <= 5; ++n) {
    for (const FinitePoset& p : enumerate_posets(n)) {
      FiniteTopology t = scott_opens(p);
      std::set<Bits> opens(t.sets.begin(), t.sets.end());
      CHECK(opens == all_upper_sets(p));
      CHECK(t.is_valid());
    }
  }
}

TEST_CASE("the subset-scan path and the upper-set generator agree") {
  for (const FinitePoset& p : enumerate_posets(5)) {
    ScottOptions definitional;  // n=5 < 8 uses the subset scan
    ScottOptions generated;
    generated.definitional_max = 1;  // force the generator path
    FiniteTopology a = scott_opens(p, definitional);
    FiniteTopology b = scott_opens(p, generated);
    CHECK(a.sets == b.sets);
  }
}

TEST_CASE("definitional Scott-open test on a directed-sup example") {
  FinitePoset p = parse("elements: a b c top\norder: a<top b<top c<top\n");
  // {top} is an upper set and sup{a,b} never lands in it undetected:
  CHECK(is_scott_open_definitional(p, mask_of(p, {"top"})));
  // A non-upper set fails immediately.
  CHECK_FALSE(is_scott_open_definitional(p, mask_of(p, {"a"})));
  ScottOptions tight;
  tight.definitional_max = 2;
  CHECK_THROWS_AS(is_scott_open_definitional(p, mask_of(p, {"top"}), tight),
                  ResourceError);
}

TEST_CASE("saturation in the Scott space") {
  FinitePoset p = parse("elements: bot l r\norder: bot<l bot<r\n");
  FiniteTopology t = scott_opens(p);
  CHECK(is_saturated(t, mask_of(p, {"l", "r"})));
  CHECK(is_saturated(t, mask_of(p, {"l"})));
  CHECK_FALSE(is_saturated(t, mask_of(p, {"bot"})));  // closure picks up l, r
  CHECK(is_saturated(t, p.full_set()));
  CHECK(is_saturated(t, p.empty_set()));
}

TEST_CASE("compactness: trivial on finite spaces, cover path agrees") {
  for (const FinitePoset& p : enumerate_posets(3)) {
    FiniteTopology t = scott_opens(p);
    for (const Bits& s : all_upper_sets(p)) {
      CHECK(is_compact(t, s));
      CHECK(is_compact_by_covers(t, s));
    }
  }
}

TEST_CASE("closure in the Scott space is down-closure") {
  FinitePoset p = parse("elements: a b c\norder: a<b b<c\n");
  FiniteTopology t = scott_opens(p);
  CHECK(closure_of(t, mask_of(p, {"b"})) == mask_of(p, {"a", "b"}));
  CHECK(closure_of(t, mask_of(p, {"c"})) == p.full_set());
}

TEST_CASE("irreducible closed sets of Scott spaces are the point closures") {
  FinitePoset p = parse("elements: bot l r\norder: bot<l bot<r\n");
  FiniteTopology t = scott_opens(p);
  CHECK(is_irreducible_closed(t, mask_of(p, {"bot", "l"})));  // cl{l}
  CHECK_FALSE(is_irreducible_closed(t, p.full_set()));  // cl{l} union cl{r}
  CHECK_FALSE(is_irreducible_closed(t, p.empty_set()));
  CHECK_THROWS_AS(is_irreducible_closed(t, mask_of(p, {"l", "r"})),
                  PreconditionError);
}

TEST_CASE("discrete two-point space: whole set is reducible") {
  FinitePoset p = parse("elements: a b\n");
  FiniteTopology t = scott_opens(p);
  CHECK_FALSE(is_irreducible_closed(t, p.full_set()));
  CHECK(is_irreducible_closed(t, mask_of(p, {"a"})));
}

TEST_CASE("Scott spaces of finite posets are sober and TD") {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      FiniteTopology t = scott_opens(p);
      CHECK(is_sober(t));
      CHECK(is_td(t));
    }
}

TEST_CASE("specialization order of a Scott space recovers the poset") {
  for (const FinitePoset& p : enumerate_posets(4)) {
    FinitePoset s = specialization_order(scott_opens(p));
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y)
        CHECK(s.leq(x, y) == p.leq(x, y));
  }
}

TEST_CASE("specialization order refuses non-T0 data") {
  // Indiscrete two-point space.
  FiniteTopology t;
  t.ground = 2;
  t.labels = {"a", "b"};
  t.sets = {Bits(2), Bits::full(2)};
  CHECK_THROWS_AS(specialization_order(t), PreconditionError);
}

TEST_CASE("closed-form orientation complements lazily and validates") {
  FinitePoset p = parse("elements: a b\norder: a<b\n");
  QFamily q = compute_q_family(p);
  FiniteTopology co = co_compact_closed_sets(p, q);
  CHECK(co.form == SetForm::Closeds);
  // Chain a<b: closed sets are {}, {b}, {a,b}.
  std::set<Bits> closed(co.sets.begin(), co.sets.end());
  std::set<Bits> expect{p.empty_set(), mask_of(p, {"b"}), p.full_set()};
  CHECK(closed == expect);
  // opens() complements: {}, {a}, {a,b}.
  std::set<Bits> opens_set;
  for (const Bits& u : co.opens()) opens_set.insert(u);
  std::set<Bits> expect_opens{p.empty_set(), mask_of(p, {"a"}), p.full_set()};
  CHECK(opens_set == expect_opens);
  CHECK(co.is_valid());
}

TEST_CASE("co-compact specialization order is the dual order") {
  for (const FinitePoset& p : enumerate_posets(4)) {
    QFamily q = compute_q_family(p);
    FinitePoset s = specialization_order(co_compact_closed_sets(p, q));
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y)
        CHECK(s.leq(x, y) == p.leq(y, x));
  }
}

TEST_CASE("dump format: one sorted brace set per line") {
  FinitePoset p = parse("elements: b a\norder: b<a\n");
  FiniteTopology t = scott_opens(p);
  std::string dump = dump_topology(t);
  CHECK(dump == "{a,b}\n{a}\n{}\n");
}
