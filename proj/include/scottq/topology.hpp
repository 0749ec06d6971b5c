#pragma once

#include <cstddef>
#include <vector>

#include "scottq/bits.hpp"
#include "scottq/limits.hpp"
#include "scottq/poset.hpp"

namespace scottq {

enum class SetForm { Opens, Closeds };

// A topology on the ground set {0..n-1}, stored as either the open or the
// closed family (whichever the producer computed), complemented lazily.
// Labels are carried along from the originating poset for rendering.
struct FiniteTopology {
  int ground = 0;
  std::vector<std::string> labels;
  std::vector<Bits> sets;
  SetForm form = SetForm::Opens;

  std::vector<Bits> opens() const;
  std::vector<Bits> closeds() const;

  // Empty set, full set, pairwise unions and intersections all present.
  bool is_valid() const;
};

struct ScottOptions {
  // Below this size every subset is tested with the definitional
  // directed-set criterion; above it, upper sets are generated directly.
  int definitional_max = limits::kScottDefinitionalMax;
  std::size_t open_cap = limits::kQMemberCap;
};

// U is Scott-open: an upper set missed by no directed set whose supremum
// lies in U. Checks the definition verbatim by enumerating subsets, so it
// refuses carriers larger than ScottOptions::definitional_max.
bool is_scott_open_definitional(const FinitePoset& p, const Bits& u,
                                const ScottOptions& opt = {});

// The Scott topology. Deterministic order: descending cardinality, then
// ascending set encoding.
FiniteTopology scott_opens(const FinitePoset& p, const ScottOptions& opt = {});

// Intersection of all opens containing s equals s.
bool is_saturated(const FiniteTopology& t, const Bits& s);

// Every open cover of s has a finite subcover; immediate on finite ground
// sets, hence constant true here. Kept as the shared contract with the
// symbolic layer, where covers are real. The cover-enumerating variant
// below actually walks covers and is exercised by tests.
bool is_compact(const FiniteTopology& t, const Bits& s);
bool is_compact_by_covers(const FiniteTopology& t, const Bits& s);

// Closure of s: least closed superset.
Bits closure_of(const FiniteTopology& t, const Bits& s);

// A nonempty closed set that is not the union of two strictly smaller
// closed subsets. Throws PreconditionError when a is not closed.
bool is_irreducible_closed(const FiniteTopology& t, const Bits& a);

// Every nonempty irreducible closed set is a point closure.
bool is_sober(const FiniteTopology& t);

// cl{x} minus {x} is closed for every point.
bool is_td(const FiniteTopology& t);

// x <= y iff x lies in cl{y}. Throws PreconditionError when not T0.
FinitePoset specialization_order(const FiniteTopology& t);

// One set per line, "{a,b}" with lexicographically sorted names, in the
// topology's stored order.
std::string dump_topology(const FiniteTopology& t);

}  // namespace scottq
