#pragma once

#include <optional>
#include <vector>

#include "scottq/limits.hpp"
#include "scottq/poset.hpp"

namespace scottq {

// Both routes to the way-below relation G << H between finite subsets:
//
//   fast:         up(H) inside up(G); on a finite poset this is equivalent
//                 to the definition because every directed set contains its
//                 supremum.
//   definitional: walk every directed subset D whose supremum exists and
//                 lies in up(H) and demand D meets up(G).
//
// The law tests require the two to agree on every subset pair of every small
// poset; neither is allowed to assume the other.
enum class WayBelowMode { Fast, Definitional };

bool way_below_fast(const FinitePoset& p, const Bits& g, const Bits& h);

struct WayBelowResult {
  bool holds = false;
  // A directed set violating the definition: sup in up(h), misses up(g).
  std::optional<Bits> failing_directed;
};
WayBelowResult way_below_definitional(const FinitePoset& p, const Bits& g,
                                      const Bits& h);

bool way_below(const FinitePoset& p, const Bits& g, const Bits& h,
               WayBelowMode mode = WayBelowMode::Fast);

// The nonempty finite sets way below x. Never contains the empty set: the
// convention here is that fin(x) collects genuine witnesses only, and the
// directedness/upper-closure laws are stated against that choice.
std::vector<Bits> fin(const FinitePoset& p, int x,
                      WayBelowMode mode = WayBelowMode::Fast);

// fin(x) is directed under the Smyth preorder and pins x down:
// the intersection of up(F) over F in fin(x) is exactly up(x).
bool is_quasicontinuous(const FinitePoset& p,
                        WayBelowMode mode = WayBelowMode::Fast);

// {y : {y} << {x}} is directed with supremum x, for every x.
bool is_domain(const FinitePoset& p, WayBelowMode mode = WayBelowMode::Fast);

}  // namespace scottq
