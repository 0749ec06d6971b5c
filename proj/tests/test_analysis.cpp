#include <algorithm>
#include <set>

#include "doctest.h"

#include "scottq/analysis.hpp"
#include "scottq/enumerate.hpp"
#include "support.hpp"

using namespace scottq;
using testsupport::mask_of;
using testsupport::parse;

namespace {

// Oracle: direct scan over every pair of proper member subsets.
bool oracle_k_irreducible(const QFamily& q, int k) {
  const Bits& target = q.members[static_cast<std::size_t>(k)];
  for (const Bits& a : q.members) {
    if (!a.is_subset_of(target) || a == target) continue;
    for (const Bits& b : q.members) {
      if (!b.is_subset_of(target) || b == target) continue;
      if ((a | b) == target) return false;
    }
  }
  return true;
}

const char* kVee = "elements: bot l r\norder: bot<l bot<r\n";

}  // namespace

TEST_CASE("k-irreducibility matches the pair-scan oracle on all small posets") {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      QFamily q = compute_q_family(p);
      for (int k = 0; k < static_cast<int>(q.members.size()); ++k) {
        KIrreducibility got = is_k_irreducible(q, k);
        CHECK(got.irreducible == oracle_k_irreducible(q, k));
        if (!got.irreducible) {
          REQUIRE(got.split.has_value());
          auto [a, b] = *got.split;
          const Bits& target = q.members[static_cast<std::size_t>(k)];
          const Bits& ma = q.members[static_cast<std::size_t>(a)];
          const Bits& mb = q.members[static_cast<std::size_t>(b)];
          CHECK((ma | mb) == target);
          CHECK(ma != target);
          CHECK(mb != target);
          CHECK(ma.is_subset_of(target));
          CHECK(mb.is_subset_of(target));
        }
      }
    }
}

TEST_CASE("k-irreducible members are exactly the single-minimum members") {
  for (const FinitePoset& p : enumerate_posets(5)) {
    QFamily q = compute_q_family(p);
    std::vector<int> got = kirr_members(q);
    std::vector<int> expect;
    for (int k = 0; k < static_cast<int>(q.members.size()); ++k)
      if (p.minimal_elements(q.members[static_cast<std::size_t>(k)]).count() == 1)
        expect.push_back(k);
    CHECK(got == expect);
  }
}

TEST_CASE("finite posets are co-sober: k-irreducibles are principal filters") {
  for (int n = 1; n <= 5; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      QFamily q = compute_q_family(p);
      CHECK(is_co_sober(q));
      for (int k : kirr_members(q)) {
        Bits mins = p.minimal_elements(q.members[static_cast<std::size_t>(k)]);
        REQUIRE(mins.count() == 1);
        CHECK(q.members[static_cast<std::size_t>(k)] == p.up(mins.first()));
      }
    }
}

TEST_CASE("residual compactness holds on finite posets") {
  for (const FinitePoset& p : enumerate_posets(4)) CHECK(is_kd(p));
}

TEST_CASE("chain family property on the V-poset fails at the bottom filter") {
  FinitePoset p = parse(kVee);
  QFamily q = compute_q_family(p);
  PropertyReport r = chain_family_report(q);
  CHECK(r.verdict == Verdict::False);
  CHECK(r.witness["member"] == "{bot,l,r}");
}

TEST_CASE("chain family property holds on chains and antichains") {
  QFamily chain = compute_q_family(parse("elements: a b c\norder: a<b b<c\n"));
  CHECK(has_chain_family_property(chain));
  QFamily anti = compute_q_family(parse("elements: a b c\n"));
  CHECK(has_chain_family_property(anti));
}

TEST_CASE("decomposition kinds on the V-poset") {
  FinitePoset p = parse(kVee);
  CHECK_FALSE(decomposition_condition(p, DecompositionKind::Chain));
  CHECK(decomposition_condition(p, DecompositionKind::Quasicontinuous));
  CHECK(decomposition_condition(p, DecompositionKind::CompactResidual));
}

TEST_CASE("chain decomposition detects chains") {
  FinitePoset c = parse("elements: a b c\norder: a<b b<c\n");
  CHECK(decomposition_condition(c, DecompositionKind::Chain));
}

TEST_CASE("equivalence: chain family iff co-sober and chain decomposition") {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      PropertyReport r = chain_family_equivalence_report(p);
      CHECK(r.verdict == Verdict::True);
    }
}

TEST_CASE("strongly prime elements of the V-poset exclude the bottom") {
  FinitePoset p = parse(kVee);
  QFamily q = compute_q_family(p);
  CHECK(strongly_prime_elements(p, q) == mask_of(p, {"l", "r"}));
  CHECK_FALSE(strongly_prime(p, q, p.index_of("bot")));
}

TEST_CASE("all small posets are Q-determined") {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) CHECK(is_q_determined(p));
}

TEST_CASE("strongly prime members of the second level are the principal filters") {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      PropertyReport r = strongly_prime_members_report(p);
      CHECK(r.verdict == Verdict::True);
      CHECK(r.witness["all_principal"] == true);
      CHECK(r.witness["q_determined"] == true);
      CHECK(r.witness["exactly_principal_filters"] == true);
    }
}

TEST_CASE("weak and full well-filteredness, definitional, on all small posets") {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      CHECK(is_weakly_well_filtered(p, FilterCheckMode::Definitional));
      CHECK(is_well_filtered(p, FilterCheckMode::Definitional));
    }
}

TEST_CASE("definitional filter check refuses large member families") {
  FinitePoset p = parse("elements: a b c d e\n");  // 31 members
  CHECK_THROWS_AS(is_well_filtered(p, FilterCheckMode::Definitional),
                  ResourceError);
  // Auto falls back to the least-member argument.
  CHECK(is_well_filtered(p, FilterCheckMode::Auto));
}

TEST_CASE("evaluate_property dispatch and report shape") {
  FinitePoset p = parse(kVee);
  for (const char* name :
       {"co-sober", "kd", "quasicts", "domain", "kl", "qdet", "wwf", "wf", "sp"}) {
    PropertyReport r = evaluate_property(p, name);
    CHECK(r.property == name);
    CHECK(r.verdict != Verdict::NotComputed);
    nlohmann::json j = r.to_json();
    CHECK(j.contains("property"));
    CHECK(j.contains("verdict"));
    CHECK(j.contains("notes"));
    CHECK(j.contains("bounds"));
    CHECK(j["bounds"].contains("q_member_cap"));
  }
  CHECK(evaluate_property(p, "kl").verdict == Verdict::False);
  CHECK(evaluate_property(p, "co-sober").verdict == Verdict::True);
  CHECK(evaluate_property(p, "sp").witness["elements"] ==
        nlohmann::json::array({"l", "r"}));
  CHECK_THROWS_AS(evaluate_property(p, "bogus"), PreconditionError);
}

TEST_CASE("resource caps surface as not-computed reports") {
  std::vector<std::string> labels;
  for (int i = 0; i < 14; ++i) labels.push_back("x" + std::to_string(i));
  FinitePoset big = FinitePoset::from_relations(labels, {});
  PropertyReport r = evaluate_property(big, "quasicts");
  CHECK(r.verdict == Verdict::NotComputed);
  CHECK(r.notes.find("resource cap") != std::string::npos);
}
