#pragma once

#include <cstddef>
#include <cstdint>

// Every default bound used anywhere in the library, in one place. CLI flags
// override the entries marked configurable; reports echo whatever was used.
namespace scottq::limits {

// Largest n accepted by the unlabeled-poset enumerator.
inline constexpr int kEnumerateMaxN = 7;

// Up to this many elements, scott_opens scans all 2^n subsets with the
// definitional directed-set test; above it, upper sets are generated
// directly (the two agree; the law tests pin that down).
inline constexpr int kScottDefinitionalMax = 8;

// Member-count cap for compute_q_family (configurable via --q-cap).
inline constexpr std::size_t kQMemberCap = std::size_t{1} << 20;

// Cap on the closed-set family built by co_compact_closed_sets.
inline constexpr std::size_t kCoCompactFamilyCap = std::size_t{1} << 16;

// way_below_definitional / fin enumerate subsets of the carrier, so they
// refuse posets larger than this.
inline constexpr int kWayBelowDefinitionalMax = 16;

// Quasicontinuity / domain checks enumerate fin(x) families.
inline constexpr int kQuasicontinuityMax = 12;

// Definitional well-filteredness enumerates subfamilies of Q; refuse beyond
// this many members (reached already by 5-element antichains).
inline constexpr int kFilteredFamilyMaxQ = 15;

// Symbolic-zoo witness bounds (configurable via --bound).
inline constexpr int kElementBound = 50;
inline constexpr int kSubfamilyBound = 4;

// Default truncation scale for zoo entries (configurable via --bound).
inline constexpr int kZooScale = 4;

// Default size ceiling for experiment scans (configurable via --n-max).
inline constexpr int kScanMaxN = 6;

}  // namespace scottq::limits
