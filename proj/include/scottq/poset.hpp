#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scottq/bits.hpp"
#include "scottq/errors.hpp"

namespace scottq {

// Finite partial order over elements 0..n-1. The full reflexive-transitive
// relation is stored as bit rows, not just the covering relation: most
// operations here are closure/bound computations that want O(1) leq tests
// and whole-row set algebra.
//
// Immutable after construction; all derived posets are fresh values.
class FinitePoset {
 public:
  // Zero-element poset; a placeholder value, not parseable from text.
  FinitePoset() = default;

  // Builds from declared strict relations x<y, taking the reflexive-
  // transitive closure. Throws CycleError if antisymmetry fails afterwards.
  static FinitePoset from_relations(std::vector<std::string> labels,
                                    const std::vector<std::pair<int, int>>& less);

  // Builds from complete leq rows (up[i] = every j with i <= j). Validates
  // reflexivity, antisymmetry and transitivity unless `trusted` (used for
  // derived posets whose construction guarantees the axioms).
  static FinitePoset from_leq_rows(std::vector<std::string> labels,
                                   std::vector<Bits> up, bool trusted = false);

  int size() const { return static_cast<int>(up_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& name) const;  // -1 when absent

  bool leq(int x, int y) const { return up_[static_cast<std::size_t>(x)].test(y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  const Bits& up(int x) const { return up_[static_cast<std::size_t>(x)]; }
  const Bits& down(int x) const { return down_[static_cast<std::size_t>(x)]; }

  Bits empty_set() const { return Bits(size()); }
  Bits full_set() const { return Bits::full(size()); }

  Bits up_closure(const Bits& s) const;
  Bits down_closure(const Bits& s) const;
  bool is_upper_set(const Bits& s) const;
  bool is_lower_set(const Bits& s) const;

  Bits minimal_elements(const Bits& s) const;
  Bits maximal_elements(const Bits& s) const;

  // Nonempty and every pair has an upper bound inside s.
  bool is_directed(const Bits& s) const;
  bool is_filtered(const Bits& s) const;  // order dual of is_directed

  // Least upper / greatest lower bound in the whole poset, when it exists.
  std::optional<int> sup(const Bits& s) const;
  std::optional<int> inf(const Bits& s) const;

  bool is_chain(const Bits& s) const;

  // Pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<int, int>> cover_edges() const;

  FinitePoset dual() const;

  // Subposet on s; element order and labels are inherited.
  FinitePoset induced(const Bits& s) const;

  // perm[i] = position of old element i in the new poset.
  FinitePoset relabel(const std::vector<int>& perm) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

// Parses the poset text format:
//
//   # comment
//   elements: a b c
//   order: a<b b<c
//
// `elements:` appears exactly once; names match [A-Za-z0-9_()-]+ and must be
// unique. `order:` lines list whitespace-separated x<y pairs over declared
// names. The declared relation is closed reflexively and transitively.
// Empty element lists are rejected. Antisymmetry violations raise CycleError.
FinitePoset parse_poset(const std::string& text);

// "{a,b,c}" with names sorted lexicographically.
std::string set_names(const FinitePoset& p, const Bits& s);

// Inverse of parse_poset: an `elements:` line plus one `order:` line of the
// cover edges (the parser re-closes transitively). Round-trips any poset
// whose labels fit the name charset.
std::string poset_text(const FinitePoset& p);

}  // namespace scottq
