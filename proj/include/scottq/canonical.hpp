#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scottq/poset.hpp"

namespace scottq {

// Total encoding of a poset up to isomorphism: word 0 is n, the rest is the
// row-major leq matrix of the canonically relabeled poset packed 64 bits per
// word. Equal codes mean isomorphic posets and vice versa, since the code
// contains the entire relation.
struct CanonicalCode {
  std::vector<std::uint64_t> words;

  bool operator==(const CanonicalCode&) const = default;
  auto operator<=>(const CanonicalCode&) const = default;

  std::string hex() const;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : c.words) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }
};

// Invariant under relabeling; computed by iterated partition refinement with
// backtracking over the remaining label choices.
CanonicalCode canonical_code(const FinitePoset& p);

// A permutation realizing the canonical code: perm[i] = canonical position
// of element i, so p.relabel(perm) has exactly canonical_code(p)'s matrix.
std::vector<int> canonical_labeling(const FinitePoset& p);

// Order isomorphism p -> m as an index map, if one exists.
std::optional<std::vector<int>> are_isomorphic(const FinitePoset& p,
                                               const FinitePoset& m);

// Code built under a given relabeling; the canonical code is the minimum of
// this over all permutations. Exposed so tests can run the brute-force
// all-permutations oracle against the refined search.
CanonicalCode code_under_labeling(const FinitePoset& p,
                                  const std::vector<int>& perm);

}  // namespace scottq
