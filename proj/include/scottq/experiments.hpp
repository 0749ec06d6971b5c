#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scottq/analysis.hpp"
#include "scottq/canonical.hpp"
#include "scottq/poset.hpp"

namespace scottq {

// The scan's view of the compact-saturated machinery: a function taking a
// poset to its family-as-poset. The default wraps compute_q_family; tests
// inject deliberately broken providers to prove the scan notices.
using QProvider = std::function<FinitePoset(const FinitePoset&)>;

QProvider default_q_provider();

// Two non-isomorphic posets whose families coincide. `left`/`right` are the
// posets' canonical codes; the texts re-parse for independent re-checks.
struct Collision {
  CanonicalCode left;
  CanonicalCode right;
  std::string left_text;
  std::string right_text;
};

struct ScanResult {
  int n_max = 0;
  std::vector<std::int64_t> classes_by_n;  // index k: posets with k+1 elements
  std::int64_t total_classes = 0;
  std::vector<Collision> collisions;
  // Wall-clock duration of the scan. Deliberately excluded from to_json()
  // so serialized results stay byte-stable across runs.
  std::int64_t elapsed_ms = 0;

  nlohmann::json to_json() const;
};

// Groups every isomorphism class of posets with at most n_max elements by
// the canonical code of its family-as-poset and reports code groups holding
// more than one poset class. Each reported collision is re-verified from
// scratch: the two family orders must be isomorphic as posets and the two
// hosts must not be. A group member failing that re-check means the
// canonical code and the isomorphism search disagree — an internal defect,
// raised as an exception rather than reported as a result.
//
// With the real family computation the expected outcome at every supported
// size is zero collisions.
ScanResult q_uniqueness_scan(int n_max);
ScanResult q_uniqueness_scan(int n_max, const QProvider& provider);

// One report per sufficient-condition bundle: quasicontinuity, the three
// co-sober + decomposition routes, the chain-family property on the
// compact-saturated order, and the three co-sober + predicate routes. A
// bundle's verdict is the conjunction of its parts; per-part verdicts ride
// in the witness.
std::vector<PropertyReport> hypothesis_report(const FinitePoset& p);

struct ImplicationRow {
  std::string name;
  int n_cap = 0;  // the size this row was actually scanned to
  std::vector<std::int64_t> violations_by_n;  // index k: posets with k+1 elements
  std::vector<std::string> witness_texts;     // counterexample posets, if any
};

struct ImplicationMatrix {
  int n_max = 0;
  std::vector<ImplicationRow> rows;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// Instance-level implications replayed over every poset class up to n_max:
// quasicontinuity forces the family order to be a domain, the chain-family
// property coincides with co-sobriety plus the chain decomposition, every
// family member is the up-closure of its minimal points, and strongly prime
// members are principal filters. Rows whose checks walk second-level
// families cap themselves at 4 elements; the rest at 5. Expected all-zero.
ImplicationMatrix implication_matrix(int n_max);

}  // namespace scottq
