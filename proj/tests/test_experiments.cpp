#include <set>
#include <vector>

#include "doctest.h"

#include "scottq/canonical.hpp"
#include "scottq/enumerate.hpp"
#include "scottq/errors.hpp"
#include "scottq/experiments.hpp"
#include "scottq/qfamily.hpp"
#include "scottq/zoo.hpp"
#include "support.hpp"

using namespace scottq;
using testsupport::parse;

namespace {

// "Skip the saturation filter": on a finite poset every nonempty subset is
// compact, so dropping saturation yields the poset of all nonempty subsets
// under reverse inclusion — which depends on the host's size only and must
// therefore collide hard.
FinitePoset unsaturated_family(const FinitePoset& p) {
  const int n = p.size();
  std::vector<Bits> subsets;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    Bits s(n);
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) s.set(i);
    subsets.push_back(s);
  }
  const int k = static_cast<int>(subsets.size());
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("m" + std::to_string(i));
  std::vector<Bits> rows(static_cast<std::size_t>(k), Bits(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (subsets[static_cast<std::size_t>(j)].is_subset_of(
              subsets[static_cast<std::size_t>(i)]))
        rows[static_cast<std::size_t>(i)].set(j);
  return FinitePoset::from_leq_rows(std::move(labels), std::move(rows),
                                    /*trusted=*/true);
}

Verdict bundle_verdict(const std::vector<PropertyReport>& reports,
                       const std::string& name) {
  for (const PropertyReport& r : reports)
    if (r.property == name) return r.verdict;
  FAIL("no bundle named ", name);
  return Verdict::NotComputed;
}

}  // namespace

TEST_CASE("the family scan finds no collisions on small sizes") {
  ScanResult r3 = q_uniqueness_scan(3);
  CHECK(r3.classes_by_n == std::vector<std::int64_t>{1, 2, 5});
  CHECK(r3.total_classes == 8);
  CHECK(r3.collisions.empty());

  ScanResult r5 = q_uniqueness_scan(5);
  CHECK(r5.classes_by_n == std::vector<std::int64_t>{1, 2, 5, 16, 63});
  CHECK(r5.total_classes == 87);
  CHECK(r5.collisions.empty());
}

TEST_CASE("scan results are deterministic across runs") {
  ScanResult a = q_uniqueness_scan(4);
  ScanResult b = q_uniqueness_scan(4);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("scan grouping agrees with pairwise family isomorphism up to 4 elements") {
  std::vector<FinitePoset> posets = enumerate_posets(4, /*exactly_n=*/false);
  REQUIRE(posets.size() == 24);
  std::vector<FinitePoset> families;
  std::vector<CanonicalCode> codes;
  for (const FinitePoset& p : posets) {
    families.push_back(compute_q_family(p).order);
    codes.push_back(canonical_code(families.back()));
  }
  for (std::size_t i = 0; i < posets.size(); ++i)
    for (std::size_t j = i + 1; j < posets.size(); ++j) {
      bool same_code = codes[i] == codes[j];
      bool iso = are_isomorphic(families[i], families[j]).has_value();
      CHECK(same_code == iso);
      // And with the real family computation, all groups are singletons.
      CHECK_FALSE(same_code);
    }
}

TEST_CASE("a family computation without the saturation filter is caught") {
  ScanResult r = q_uniqueness_scan(4, unsaturated_family);
  CHECK(r.collisions.size() > 0);
  // Every reported collision re-verifies from its serialized texts.
  for (const Collision& c : r.collisions) {
    FinitePoset left = parse(c.left_text);
    FinitePoset right = parse(c.right_text);
    CHECK_FALSE(are_isomorphic(left, right).has_value());
    CHECK(are_isomorphic(unsaturated_family(left), unsaturated_family(right))
              .has_value());
    CHECK(canonical_code(left) == c.left);
    CHECK(canonical_code(right) == c.right);
  }
  // The broken provider identifies all same-size posets, so among the 16
  // four-element classes alone there are at least C(16,2) collisions.
  CHECK(r.collisions.size() >= 120);
}

TEST_CASE("scan bounds") {
  CHECK_THROWS_AS(q_uniqueness_scan(0), PreconditionError);
  CHECK_THROWS_AS(q_uniqueness_scan(7), ResourceError);
}

TEST_CASE("hypothesis bundles on a three-chain all hold") {
  FinitePoset chain = parse("elements: a b c\norder: a<b b<c\n");
  std::vector<PropertyReport> reports = hypothesis_report(chain);
  REQUIRE(reports.size() == 8);
  for (const PropertyReport& r : reports) {
    CAPTURE(r.property);
    CHECK(r.verdict == Verdict::True);
    CHECK(r.witness.contains("parts"));
  }
}

TEST_CASE("hypothesis bundles split as expected on a bottom under two tops") {
  FinitePoset v = parse("elements: b l r\norder: b<l b<r\n");
  std::vector<PropertyReport> reports = hypothesis_report(v);
  CHECK(bundle_verdict(reports, "quasicontinuous-domain") == Verdict::True);
  CHECK(bundle_verdict(reports, "co-sober+residual-compactness") == Verdict::True);
  CHECK(bundle_verdict(reports, "chain-family-property") == Verdict::False);
  CHECK(bundle_verdict(reports, "co-sober+chain-decomposition") == Verdict::False);
  // The failing bundles say which part fell over.
  for (const PropertyReport& r : reports)
    if (r.verdict == Verdict::False)
      CHECK(r.notes.rfind("fails at ", 0) == 0);
}

TEST_CASE("hypothesis bundles on the width-5 flat truncation") {
  FinitePoset flat5 = zoo_entry("flat").poset->truncate(5).poset;
  std::vector<PropertyReport> reports = hypothesis_report(flat5);
  CHECK(bundle_verdict(reports, "quasicontinuous-domain") == Verdict::True);
  CHECK(bundle_verdict(reports, "co-sober+chain-decomposition") == Verdict::False);
  CHECK(bundle_verdict(reports, "co-sober+compact-residual-decomposition") ==
        Verdict::True);
}

TEST_CASE("the implication matrix is all-zero at its default caps") {
  ImplicationMatrix m = implication_matrix(5);
  REQUIRE(m.rows.size() == 4);
  for (const ImplicationRow& row : m.rows) {
    CAPTURE(row.name);
    CHECK(row.n_cap == (row.name == "members-are-up-closures-of-their-minimal-points" ? 5 : 4));
    REQUIRE(static_cast<int>(row.violations_by_n.size()) == row.n_cap);
    for (std::int64_t v : row.violations_by_n) CHECK(v == 0);
    CHECK(row.witness_texts.empty());
  }
}

TEST_CASE("matrix serializations carry the caps and the zeros") {
  ImplicationMatrix m = implication_matrix(4);
  nlohmann::json j = m.to_json();
  CHECK(j.at("n_max") == 4);
  CHECK(j.at("rows").size() == 4);
  for (const auto& row : j.at("rows")) {
    CHECK(row.contains("name"));
    CHECK(row.contains("n_cap"));
    CHECK(row.contains("violations_by_n"));
  }
  std::string csv = implication_matrix(5).to_csv();
  CHECK(csv.rfind("implication,cap,n1,n2,n3,n4,n5\n", 0) == 0);
  // Rows capped at 4 leave the n5 cell empty rather than faking a count.
  CHECK(csv.find("quasicontinuous-implies-family-domain,4,0,0,0,0,\n") !=
        std::string::npos);
  CHECK(csv.find("members-are-up-closures-of-their-minimal-points,5,0,0,0,0,0\n") !=
        std::string::npos);
  CHECK_THROWS_AS(implication_matrix(6), ResourceError);
  CHECK_THROWS_AS(implication_matrix(0), PreconditionError);
}
