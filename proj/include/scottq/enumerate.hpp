#pragma once

#include <vector>

#include "scottq/poset.hpp"

namespace scottq {

// All posets with exactly n elements (or up to n when !exactly_n), one per
// isomorphism class, in ascending canonical-code order within each size.
// Grown by one-point extensions from the single 1-element poset, deduplicated
// by canonical code per level, so the output is deterministic.
//
// Throws ResourceError above limits::kEnumerateMaxN. Expected class counts
// climb fast (63 at n=5, 2045 at n=7); beyond that this representation stops
// being useful anyway.
std::vector<FinitePoset> enumerate_posets(int n, bool exactly_n = true);

}  // namespace scottq
