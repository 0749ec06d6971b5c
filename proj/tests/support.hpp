#pragma once

// Shared helpers for the test binaries: brute-force oracles that recompute
// library results from first principles, independent of the optimized paths.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "scottq/canonical.hpp"
#include "scottq/enumerate.hpp"
#include "scottq/poset.hpp"

namespace testsupport {

using scottq::Bits;
using scottq::CanonicalCode;
using scottq::FinitePoset;

inline FinitePoset parse(const std::string& body) {
  return scottq::parse_poset(body);
}

inline Bits mask_of(const FinitePoset& p, std::initializer_list<const char*> names) {
  Bits s(p.size());
  for (const char* n : names) s.set(p.index_of(n));
  return s;
}

// Minimum of code_under_labeling over every permutation. Exponential; keep
// to n <= 5.
inline CanonicalCode naive_canonical_code(const FinitePoset& p) {
  const int n = p.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalCode best = scottq::code_under_labeling(p, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    CanonicalCode c = scottq::code_under_labeling(p, perm);
    if (c < best) best = c;
  }
  return best;
}

// Every labeled poset on n elements, generated by filtering all reflexive
// relations over the strict-pair choices. Only feasible to n = 5.
inline std::vector<FinitePoset> naive_labeled_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  const int np = static_cast<int>(pairs.size());

  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));

  std::vector<FinitePoset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << np); ++m) {
    std::vector<std::vector<bool>> leq(
        static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (int k = 0; k < np; ++k)
      if (m >> k & 1)
        leq[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].first)]
           [static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].second)] = true;

    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
            leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
          ok = false;  // antisymmetry
        if (!leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
        for (int k = 0; k < n && ok; ++k)
          if (leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
              !leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
            ok = false;  // transitivity
      }
    if (!ok) continue;

    std::vector<Bits> rows(static_cast<std::size_t>(n), Bits(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          rows[static_cast<std::size_t>(i)].set(j);
    out.push_back(FinitePoset::from_leq_rows(labels, std::move(rows), /*trusted=*/true));
  }
  return out;
}

// Class count by pairwise isomorphism tests only; no canonical codes involved.
inline int naive_class_count(int n) {
  std::vector<FinitePoset> all = naive_labeled_posets(n);
  std::vector<FinitePoset> reps;
  for (const FinitePoset& p : all) {
    bool fresh = true;
    for (const FinitePoset& r : reps)
      if (scottq::are_isomorphic(p, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(p);
  }
  return static_cast<int>(reps.size());
}

}  // namespace testsupport
