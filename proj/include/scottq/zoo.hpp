#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scottq/analysis.hpp"
#include "scottq/poset.hpp"

namespace scottq {

// ---- symbolic elements ----

// Tagged value covering every element shape the catalog entries use. The
// coordinates a/b are interpreted per entry (e.g. Nat(3) labels "-3" in the
// descending-chain entry and "3" in the antichain entries); unused
// coordinates stay zero so default comparison is structural.
enum class ZooTag : int {
  SideA,      // first bottom point
  SideB,      // second bottom point
  Bottom,     // unique bottom point
  Top,        // unique top point
  Hub,        // the point between the chain and the grid
  Nat,        // natural-number element, coordinate a >= 1
  Pair,       // grid point (a, b), both >= 1
  MaxPair,    // limit point of grid column a (the maximal row)
};

struct ZooElement {
  ZooTag tag = ZooTag::Bottom;
  int a = 0;
  int b = 0;

  friend auto operator<=>(const ZooElement&, const ZooElement&) = default;

  static ZooElement side_a() { return {ZooTag::SideA, 0, 0}; }
  static ZooElement side_b() { return {ZooTag::SideB, 0, 0}; }
  static ZooElement bottom() { return {ZooTag::Bottom, 0, 0}; }
  static ZooElement top() { return {ZooTag::Top, 0, 0}; }
  static ZooElement hub() { return {ZooTag::Hub, 0, 0}; }
  static ZooElement nat(int n) { return {ZooTag::Nat, n, 0}; }
  static ZooElement pair(int m, int n) { return {ZooTag::Pair, m, n}; }
  static ZooElement max_pair(int m) { return {ZooTag::MaxPair, m, 0}; }
};

// ---- truncations ----

// A finite fragment of a symbolic poset: the retained elements (index-
// aligned with the poset) plus the caveats that say which of the entry's
// claims a finite fragment cannot witness.
struct Truncation {
  FinitePoset poset;
  std::vector<ZooElement> elements;
  std::vector<std::string> caveats;
  int scale = 0;

  int index_of(const ZooElement& e) const;  // -1 when absent
  Bits restrict_set(const std::function<bool(const ZooElement&)>& pred) const;
};

// ---- symbolic posets ----

// A decidable presentation of an infinite poset: a membership predicate, an
// order predicate total over contained elements, and a scale-indexed
// fragment rule. Fragments are monotone in the scale and enumerate their
// elements in a fixed documented order, so that bounded checks are
// reproducible and the element stream (first_elements) is well defined.
class SymbolicPoset {
 public:
  SymbolicPoset(std::string name, std::string title)
      : name_(std::move(name)), title_(std::move(title)) {}
  virtual ~SymbolicPoset() = default;

  const std::string& name() const { return name_; }
  const std::string& title() const { return title_; }

  virtual bool contains(const ZooElement& x) const = 0;
  // Order predicate; callers pass contained elements only.
  virtual bool leq(const ZooElement& x, const ZooElement& y) const = 0;
  virtual std::string label(const ZooElement& x) const = 0;
  // Elements retained at the given scale, in the entry's documented order.
  virtual std::vector<ZooElement> fragment(int scale) const = 0;
  virtual std::vector<std::string> truncation_caveats() const = 0;

  // First `count` elements of the stream: fragments of growing scale,
  // each fragment's new elements in fragment order.
  std::vector<ZooElement> first_elements(int count) const;

  // Finite sub-poset on fragment(scale); order axioms are re-validated on
  // construction. Throws PreconditionError for scale < 1.
  Truncation truncate(int scale) const;

 private:
  std::string name_;
  std::string title_;
};

// ---- witness data ----

// A bounded certificate that a described set is not compact: an open cover
// reaching every target element, together with an escape function that
// defeats each finite subfamily. Verification is membership model-checking,
// not proof; the bounds say how much was checked.
struct NonCompactnessWitness {
  std::string target_description;
  std::function<bool(const ZooElement&)> in_target;
  // Cover member `i` (0-based) as a membership predicate.
  std::function<bool(int, const ZooElement&)> in_cover_member;
  std::function<std::string(int)> cover_member_name;
  // Element of the target outside the union of the named cover members.
  std::function<ZooElement(const std::vector<int>&)> escape;
};

// A filtered family of compact saturated sets indexed by finite subsets F
// of a removable universe, whose intersection lands inside the target open
// while no single member does.
struct FilteredFamilyWitness {
  std::string family_description;
  std::string target_description;
  // Which fragment elements index the family (the removable points).
  std::function<bool(const ZooElement&)> in_index_universe;
  // Membership in the member indexed by removed subset F.
  std::function<bool(const std::vector<ZooElement>&, const ZooElement&)> in_member;
  std::function<bool(const ZooElement&)> in_target_open;
  bool target_open_is_empty = false;
  // Element of the indexed member outside the target open; nothing when no
  // such element exists (then the data is not a witness).
  std::function<std::optional<ZooElement>(const std::vector<ZooElement>&)> escape;
};

// One case of a residual analysis: for elements the case applies to, the
// expected membership predicate of up(x) minus {x}. A `recorded` predicate,
// when present, is a simpler recorded form whose fragment-level deviation
// from the truth is reported rather than failing the check.
struct ResidualCase {
  std::string case_name;
  std::function<bool(const ZooElement&)> applies;
  std::function<bool(const ZooElement&, const ZooElement&)> expected;
  bool residual_claimed_compact = true;
  std::function<bool(const ZooElement&, const ZooElement&)> recorded;  // optional
};

// ---- claims and entries ----

enum class ClaimStatus { Executable, RecordedOnly };

struct ZooClaim {
  std::string statement;
  ClaimStatus status = ClaimStatus::RecordedOnly;
  // Executable: the action that decides it. Property expectations use the
  // form "prop:<name>:<true|false>" over the default-scale truncation.
  std::string action;
  std::vector<int> bounds;  // per-claim bound overrides, action-specific
  std::string truncation_note;
  std::string reason;  // recorded-only: why no bounded check decides it
};

struct ClaimedQFamily {
  std::string description;
  bool exact_on_truncations = false;
  std::function<std::vector<Bits>(const Truncation&)> members;
  // Optional exact closure of the claimed shapes. Set where the recorded
  // one-line description omits unions mixing its shapes: the computed family
  // must then coincide with this hull on fragments, and every extra beyond
  // the claimed members must be such a union.
  std::function<std::vector<Bits>(const Truncation&)> union_hull;
};

struct NonPrincipalTarget {
  std::string description;
  std::function<bool(const ZooElement&)> in_target;
};

struct ZooEntry {
  std::shared_ptr<const SymbolicPoset> poset;
  int default_scale = 4;
  std::optional<ClaimedQFamily> claimed_q;
  // Expected k-irreducible members on a truncation, when the entry claims a
  // shape for them.
  std::function<std::vector<Bits>(const Truncation&)> claimed_kirr;
  // Expected co-compact closed sets on a truncation (besides the empty set).
  std::function<std::vector<Bits>(const Truncation&)> claimed_co_compact;
  std::vector<NonCompactnessWitness> noncompact_witnesses;
  std::vector<FilteredFamilyWitness> filtered_witnesses;
  std::vector<ResidualCase> residual_cases;
  std::vector<NonPrincipalTarget> nonprincipal_targets;
  std::vector<ZooClaim> claims;
};

const std::vector<ZooEntry>& zoo_catalog();
const std::vector<std::string>& zoo_entry_names();
// Throws PreconditionError for unknown names.
const ZooEntry& zoo_entry(const std::string& name);

// ---- bounded verification ----

// Reflexivity, antisymmetry and transitivity over all triples of the first
// `bound` stream elements. Failures carry the violating elements.
PropertyReport verify_order_axioms(const SymbolicPoset& s, int bound);

// Every claimed member restricted to the truncation is a nonempty upper set
// and appears in the computed family. Exactness (computed == claimed) is
// asserted only when the entry claims it; otherwise extras are reported.
PropertyReport verify_claimed_q_soundness(const ZooEntry& e, int scale);

// (i) the cover reaches every target element in the fragment, (ii) each
// used cover member is an upper set there, (iii) the escape element defeats
// every subfamily of the first `subfamily_bound` cover members. A broken
// escape (covered, or outside the target) throws WitnessError.
PropertyReport verify_noncompactness(const SymbolicPoset& s,
                                     const NonCompactnessWitness& w,
                                     int element_bound, int subfamily_bound);

// (i) the family is filtered on the fragment, (ii) the intersection of the
// generated members lies inside the target open, (iii) each member keeps an
// escape element outside the target. Index sets are the subsets of the
// in-fragment removable universe of size at most `subfamily_bound`. An
// impossible escape yields verdict False ("not a witness"); a broken one
// throws WitnessError.
PropertyReport verify_wwf_failure(const SymbolicPoset& s,
                                  const FilteredFamilyWitness& w,
                                  int element_bound, int subfamily_bound);

// For every x among the first `bound` stream elements: either x is outside
// the target, or some target element escapes up(x) (searched over a window
// twice the bound), certifying the target is not the saturate of any
// inspected point.
PropertyReport verify_nonprincipal(const SymbolicPoset& s,
                                   const NonPrincipalTarget& target, int bound);

// Replays a residual case analysis over the first `bound` stream elements:
// each element must match exactly one case, and the actual residual
// membership must equal the case's expectation on the fragment. Deviations
// of `recorded` forms are tallied in the notes without failing the check.
PropertyReport verify_residual_cases(const SymbolicPoset& s,
                                     const std::vector<ResidualCase>& cases,
                                     int bound);

// fragment(lo) .. fragment(hi) grow monotonically and each truncation is
// the induced sub-poset of the next on the shared elements.
PropertyReport verify_truncation_coherence(const SymbolicPoset& s, int lo,
                                           int hi);

// Runs every executable claim of the entry at its per-claim bounds (or the
// defaults) and returns one report per claim; recorded-only claims appear
// as NotComputed with their reason.
std::vector<PropertyReport> run_zoo_claims(const ZooEntry& e);

// Runs one named bounded verification against an entry.  The vocabulary is
// the same as ZooClaim::action (order-axioms, q-soundness, noncompact,
// wwf-failure, nonprincipal, kd-cases, co-compact, co-compact-td,
// kirr-shape, chain-decomp-bottom, compact-residual-decomp, prop:<name>:
// <true|false>) plus "coherence", which checks truncation coherence from
// scale 1 up to bounds[0] (default 5).  `bounds` entries are positional and
// action-specific; missing entries fall back to the action's defaults.
// Throws PreconditionError for an action the entry does not support.
PropertyReport run_zoo_action(const ZooEntry& e, const std::string& action,
                              const std::vector<int>& bounds = {});

// Claim table with statements, status, actions and truncation notes.
nlohmann::json zoo_claims_to_json(const ZooEntry& e);

}  // namespace scottq
