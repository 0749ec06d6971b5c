#include "doctest.h"

#include "scottq/poset.hpp"
#include "support.hpp"

using namespace scottq;
using testsupport::mask_of;
using testsupport::parse;

namespace {

const char* kDiamond =
    "elements: bot l r top\n"
    "order: bot<l bot<r l<top r<top\n";

const char* kVee =
    "elements: bot l r\n"
    "order: bot<l bot<r\n";

}  // namespace

TEST_CASE("parse builds the reflexive transitive closure") {
  FinitePoset p = parse("elements: a b c\norder: a<b b<c\n");
  REQUIRE(p.size() == 3);
  int a = p.index_of("a"), b = p.index_of("b"), c = p.index_of("c");
  CHECK(p.leq(a, a));
  CHECK(p.leq(a, b));
  CHECK(p.leq(a, c));  // via closure
  CHECK(p.leq(b, c));
  CHECK_FALSE(p.leq(c, a));
  CHECK(p.less(a, b));
  CHECK_FALSE(p.less(a, a));
}

TEST_CASE("parse accepts comments, blank lines, repeated order lines") {
  FinitePoset p = parse(
      "# a fence\n"
      "elements: x y z\n"
      "\n"
      "order: x<y\n"
      "order: z<y   # z is also below y\n");
  CHECK(p.size() == 3);
  CHECK(p.leq(p.index_of("x"), p.index_of("y")));
  CHECK(p.leq(p.index_of("z"), p.index_of("y")));
  CHECK_FALSE(p.leq(p.index_of("x"), p.index_of("z")));
}

TEST_CASE("parse error cases") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("elements:\n"), ParseError);  // empty poset
  CHECK_THROWS_AS(parse("order: a<b\n"), ParseError);
  CHECK_THROWS_AS(parse("elements: a a\n"), ParseError);
  CHECK_THROWS_AS(parse("elements: a b\nelements: c\n"), ParseError);
  CHECK_THROWS_AS(parse("elements: a b\norder: a<c\n"), ParseError);
  CHECK_THROWS_AS(parse("elements: a b\norder: ab\n"), ParseError);
  CHECK_THROWS_AS(parse("elements: a,b\n"), ParseError);  // bad name
  CHECK_THROWS_AS(parse("stuff: a\n"), ParseError);
  CHECK_THROWS_AS(parse("elements: a b\norder: a<b b<a\n"), CycleError);
  CHECK_THROWS_AS(parse("elements: a b c\norder: a<b b<c c<a\n"), CycleError);
  CHECK_THROWS_AS(parse("elements: a\norder: a<a\n"), CycleError);
}

TEST_CASE("closures and upper/lower set tests") {
  FinitePoset p = parse(kDiamond);
  Bits l = mask_of(p, {"l"});
  CHECK(p.up_closure(l) == mask_of(p, {"l", "top"}));
  CHECK(p.down_closure(l) == mask_of(p, {"bot", "l"}));
  CHECK(p.is_upper_set(mask_of(p, {"l", "r", "top"})));
  CHECK_FALSE(p.is_upper_set(mask_of(p, {"l", "r"})));
  CHECK(p.is_lower_set(mask_of(p, {"bot", "l"})));
  CHECK(p.is_upper_set(p.empty_set()));
  CHECK(p.is_upper_set(p.full_set()));
}

TEST_CASE("minimal and maximal elements") {
  FinitePoset p = parse(kDiamond);
  CHECK(p.minimal_elements(p.full_set()) == mask_of(p, {"bot"}));
  CHECK(p.maximal_elements(p.full_set()) == mask_of(p, {"top"}));
  Bits lr = mask_of(p, {"l", "r"});
  CHECK(p.minimal_elements(lr) == lr);
  CHECK(p.maximal_elements(lr) == lr);
  CHECK(p.minimal_elements(p.empty_set()).empty());
}

TEST_CASE("directedness") {
  FinitePoset p = parse(kVee);
  CHECK_FALSE(p.is_directed(p.empty_set()));
  CHECK(p.is_directed(mask_of(p, {"bot"})));
  CHECK(p.is_directed(mask_of(p, {"bot", "l"})));
  CHECK_FALSE(p.is_directed(mask_of(p, {"l", "r"})));  // no upper bound
  FinitePoset d = parse(kDiamond);
  CHECK(d.is_directed(mask_of(d, {"l", "r", "top"})));
  CHECK(d.is_filtered(mask_of(d, {"l", "r", "bot"})));
  CHECK_FALSE(d.is_filtered(mask_of(d, {"l", "r", "top"})));
}

TEST_CASE("sup and inf") {
  FinitePoset p = parse(kDiamond);
  CHECK(p.sup(mask_of(p, {"l", "r"})) == p.index_of("top"));
  CHECK(p.inf(mask_of(p, {"l", "r"})) == p.index_of("bot"));
  CHECK(p.sup(mask_of(p, {"l"})) == p.index_of("l"));

  FinitePoset v = parse(kVee);
  CHECK_FALSE(v.sup(mask_of(v, {"l", "r"})).has_value());
  CHECK(v.inf(mask_of(v, {"l", "r"})) == v.index_of("bot"));

  // sup of the empty set is the least element when there is one.
  CHECK(v.sup(v.empty_set()) == v.index_of("bot"));
  FinitePoset two = parse("elements: a b\n");
  CHECK_FALSE(two.sup(two.empty_set()).has_value());
}

TEST_CASE("chains") {
  FinitePoset p = parse(kDiamond);
  CHECK(p.is_chain(mask_of(p, {"bot", "l", "top"})));
  CHECK_FALSE(p.is_chain(mask_of(p, {"l", "r"})));
  CHECK(p.is_chain(p.empty_set()));
  CHECK(p.is_chain(mask_of(p, {"l"})));
}

TEST_CASE("cover edges skip transitive pairs") {
  FinitePoset p = parse("elements: a b c\norder: a<b b<c\n");
  auto covers = p.cover_edges();
  REQUIRE(covers.size() == 2);
  for (auto [x, y] : covers) CHECK(p.less(x, y));
  // a<c is implied, not a cover
  for (auto [x, y] : covers)
    CHECK_FALSE((p.label(x) == "a" && p.label(y) == "c"));
}

TEST_CASE("dual flips the order") {
  FinitePoset p = parse(kVee);
  FinitePoset d = p.dual();
  CHECK(d.leq(d.index_of("l"), d.index_of("bot")));
  CHECK_FALSE(d.leq(d.index_of("bot"), d.index_of("l")));
  CHECK(d.maximal_elements(d.full_set()) == mask_of(d, {"bot"}));
}

TEST_CASE("induced subposet keeps labels and order") {
  FinitePoset p = parse(kDiamond);
  FinitePoset q = p.induced(mask_of(p, {"bot", "l", "top"}));
  REQUIRE(q.size() == 3);
  CHECK(q.leq(q.index_of("bot"), q.index_of("top")));
  CHECK(q.is_chain(q.full_set()));
}

TEST_CASE("relabel permutes indices consistently") {
  FinitePoset p = parse("elements: a b\norder: a<b\n");
  FinitePoset r = p.relabel({1, 0});
  CHECK(r.label(1) == "a");
  CHECK(r.label(0) == "b");
  CHECK(r.leq(1, 0));
  CHECK_FALSE(r.leq(0, 1));
}

TEST_CASE("from_leq_rows validates the axioms when untrusted") {
  std::vector<std::string> labels{"a", "b"};
  {
    std::vector<Bits> rows(2, Bits(2));
    rows[0].set(0);
    rows[1].set(1);
    CHECK_NOTHROW(FinitePoset::from_leq_rows(labels, rows));
  }
  {
    std::vector<Bits> rows(2, Bits(2));
    rows[0].set(0);  // missing diagonal on b
    CHECK_THROWS_AS(FinitePoset::from_leq_rows(labels, rows), PreconditionError);
  }
  {
    std::vector<Bits> rows(2, Bits(2));
    rows[0].set(0);
    rows[0].set(1);
    rows[1].set(1);
    rows[1].set(0);
    CHECK_THROWS_AS(FinitePoset::from_leq_rows(labels, rows), CycleError);
  }
  {
    std::vector<std::string> l3{"a", "b", "c"};
    std::vector<Bits> rows(3, Bits(3));
    for (int i = 0; i < 3; ++i) rows[static_cast<std::size_t>(i)].set(i);
    rows[0].set(1);
    rows[1].set(2);  // a<b, b<c but not a<c
    CHECK_THROWS_AS(FinitePoset::from_leq_rows(l3, rows), PreconditionError);
  }
}

TEST_CASE("set_names formats sorted label sets") {
  FinitePoset p = parse(kDiamond);
  CHECK(set_names(p, mask_of(p, {"r", "l"})) == "{l,r}");
  CHECK(set_names(p, p.empty_set()) == "{}");
}

TEST_CASE("poset text round-trips through the parser") {
  // Cover edges plus transitive re-closure reproduce the exact relation,
  // labels included, for every class up to 4 elements.
  for (const FinitePoset& p : enumerate_posets(4, /*exactly_n=*/false)) {
    FinitePoset back = parse(poset_text(p));
    REQUIRE(back.size() == p.size());
    for (int i = 0; i < p.size(); ++i) {
      CHECK(back.label(i) == p.label(i));
      for (int j = 0; j < p.size(); ++j) CHECK(back.leq(i, j) == p.leq(i, j));
    }
  }
  // A single point has no order line at all.
  FinitePoset one = parse("elements: x\n");
  CHECK(poset_text(one) == "elements: x\n");
}
