#include <algorithm>

#include "doctest.h"

#include "scottq/domain.hpp"
#include "scottq/enumerate.hpp"
#include "support.hpp"

using namespace scottq;
using testsupport::mask_of;
using testsupport::parse;

TEST_CASE("way-below basics on a V") {
  FinitePoset p = parse("elements: bot l r\norder: bot<l bot<r\n");
  Bits bot = mask_of(p, {"bot"});
  Bits l = mask_of(p, {"l"});
  CHECK(way_below_fast(p, bot, l));       // up(l) inside up(bot)
  CHECK_FALSE(way_below_fast(p, l, bot));  // up(bot) reaches r as well
  CHECK(way_below_fast(p, l, l));
  CHECK(way_below_fast(p, mask_of(p, {"l", "r"}), l));
}

TEST_CASE("fast and definitional way-below agree on all pairs, n<=4") {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      const std::uint64_t lim = std::uint64_t{1} << n;
      for (std::uint64_t gm = 0; gm < lim; ++gm)
        for (std::uint64_t hm = 1; hm < lim; ++hm) {
          Bits g(n), h(n);
          for (int i = 0; i < n; ++i) {
            if (gm >> i & 1) g.set(i);
            if (hm >> i & 1) h.set(i);
          }
          WayBelowResult def = way_below_definitional(p, g, h);
          CHECK(way_below_fast(p, g, h) == def.holds);
          if (!def.holds) {
            REQUIRE(def.failing_directed.has_value());
            // The witness is re-checkable: directed, sup in up(h), misses up(g).
            const Bits& d = *def.failing_directed;
            CHECK(p.is_directed(d));
            auto s = p.sup(d);
            REQUIRE(s.has_value());
            CHECK(p.up_closure(h).test(*s));
            CHECK_FALSE(d.intersects(p.up_closure(g)));
          }
        }
    }
}

TEST_CASE("empty g is way below nothing (nonempty h)") {
  FinitePoset p = parse("elements: a b\n");
  CHECK_FALSE(way_below_fast(p, p.empty_set(), mask_of(p, {"a"})));
  CHECK_FALSE(way_below_definitional(p, p.empty_set(), mask_of(p, {"a"})).holds);
}

TEST_CASE("singleton way-below mirrors the order on finite posets") {
  for (const FinitePoset& p : enumerate_posets(4))
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y)
        CHECK(way_below_fast(p, Bits::singleton(4, y), Bits::singleton(4, x)) ==
              p.leq(y, x));
}

TEST_CASE("fin(x) contains {x} and is upper-closed under shrinking up-sets") {
  FinitePoset p = parse("elements: bot l r top\norder: bot<l bot<r l<top r<top\n");
  int top = p.index_of("top");
  std::vector<Bits> fam = fin(p, top);
  Bits xonly = Bits::singleton(p.size(), top);
  CHECK(std::find(fam.begin(), fam.end(), xonly) != fam.end());
  // Every F in fin(top) must reach top from below: up(F) contains top.
  for (const Bits& f : fam) CHECK(p.up_closure(f).test(top));
  // The empty set is never a member.
  for (const Bits& f : fam) CHECK_FALSE(f.empty());
}

TEST_CASE("fin agrees between modes on small posets") {
  for (const FinitePoset& p : enumerate_posets(4))
    for (int x = 0; x < p.size(); ++x)
      CHECK(fin(p, x, WayBelowMode::Fast) == fin(p, x, WayBelowMode::Definitional));
}

TEST_CASE("every finite poset is quasicontinuous and a domain, definitional") {
  for (int n = 1; n <= 5; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      CHECK(is_quasicontinuous(p, WayBelowMode::Definitional));
      CHECK(is_domain(p, WayBelowMode::Definitional));
      CHECK(is_quasicontinuous(p));
      CHECK(is_domain(p));
    }
}

TEST_CASE("resource bounds on the definitional paths") {
  // 17-element antichain exceeds the subset-enumeration bound.
  std::vector<std::string> labels;
  for (int i = 0; i < 17; ++i) labels.push_back("x" + std::to_string(i));
  FinitePoset big = FinitePoset::from_relations(labels, {});
  CHECK_THROWS_AS(way_below_definitional(big, Bits::singleton(17, 0),
                                         Bits::singleton(17, 1)),
                  ResourceError);
  CHECK_THROWS_AS(fin(big, 0), ResourceError);
  CHECK_THROWS_AS(is_quasicontinuous(big), ResourceError);
}
