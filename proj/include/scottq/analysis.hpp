#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "scottq/domain.hpp"
#include "scottq/qfamily.hpp"

namespace scottq {

enum class Verdict { True, False, NotComputed };

std::string verdict_name(Verdict v);

// Uniform result record for property evaluations. `witness` carries a
// re-checkable certificate or counterexample; `bounds` echoes every cap the
// evaluation ran under so a reader can tell how much was actually checked.
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::NotComputed;
  nlohmann::json witness;  // null when there is nothing to show
  std::string notes;
  nlohmann::json bounds = nlohmann::json::object();

  nlohmann::json to_json() const;
};

// ---- irreducibility in Q ----

struct KIrreducibility {
  bool irreducible = false;
  // Member indices (a, b): two proper compact saturated subsets of k whose
  // union is k. Present exactly when !irreducible.
  std::optional<std::pair<int, int>> split;
};

// A member is k-irreducible when it is not the union of two proper compact
// saturated subsets. Finds a split, if any, through the complement: for a
// proper subset A of K the least possible partner is the up-closure of
// K minus A. The brute-force pair scan stays in the tests as the oracle.
KIrreducibility is_k_irreducible(const QFamily& q, int k);

// Indices of the k-irreducible members, ascending.
std::vector<int> kirr_members(const QFamily& q);

// Every k-irreducible member is a principal filter.
bool is_co_sober(const QFamily& q);

// up(x) minus {x} is compact saturated (or empty) for every x, in the
// poset's own Scott space.
bool is_kd(const FinitePoset& p);

// ---- the chain-family property on kIRR ----

// Every k-irreducible K is the supremum (in the materialized reverse-
// inclusion order) of a directed subfamily of kIRR whose members each have
// a chain of k-irreducibles above them. Subfamily search is exhaustive over
// the eligible candidates below K, lexicographic in member index order.
PropertyReport chain_family_report(const QFamily& q);
bool has_chain_family_property(const QFamily& q);

enum class DecompositionKind { Chain, Quasicontinuous, CompactResidual };

// For every x there is a directed D inside down(x) with sup D = x whose
// points all satisfy the kind predicate on their up-sets. On a finite poset
// any such D owns its supremum, so x itself must pass; the search is still
// performed when it fails, for the record.
bool decomposition_condition(const FinitePoset& p, DecompositionKind kind,
                             WayBelowMode mode = WayBelowMode::Fast);

// The chain-family property against (co-sober && chain decomposition):
// verdict True when the two sides agree on this poset.
PropertyReport chain_family_equivalence_report(const FinitePoset& p);

// ---- strongly prime elements and Q-determined posets ----

// a is strongly prime: whenever a member K has an infimum below a, a lies
// in K.
bool strongly_prime(const FinitePoset& m, const QFamily& q, int a);
Bits strongly_prime_elements(const FinitePoset& m, const QFamily& q);

// In the second-level family Q(Q(M)): every member with an existing infimum
// denotes it as the union of its members.
bool is_q_determined(const FinitePoset& m, const QOptions& opt = {});

// Strongly prime members of the first-level order are principal filters,
// and exactly the principal filters when the poset is Q-determined.
PropertyReport strongly_prime_members_report(const FinitePoset& m,
                                             const QOptions& opt = {});

// ---- well-filteredness ----

enum class FilterCheckMode { Auto, Definitional, Fast };

// Weak form: filtered member families whose intersection sits inside a
// nonempty open must put some member inside it. Full form drops the
// nonemptiness restriction. The definitional route enumerates subfamilies
// and refuses large Q; the fast route uses the least member of a finite
// filtered family. Auto picks definitional when feasible.
bool is_weakly_well_filtered(const FinitePoset& p,
                             FilterCheckMode mode = FilterCheckMode::Auto);
bool is_well_filtered(const FinitePoset& p,
                      FilterCheckMode mode = FilterCheckMode::Auto);

// ---- uniform evaluation for the CLI and reports ----

struct EvaluateOptions {
  QOptions q;
  WayBelowMode wb = WayBelowMode::Fast;
  FilterCheckMode filter = FilterCheckMode::Auto;
};

// Property names: co-sober, kd, quasicts, domain, kl, qdet, wwf, wf, sp.
// Throws PreconditionError for unknown names. Resource caps surface as
// verdict NotComputed with the cap recorded in notes/bounds.
PropertyReport evaluate_property(const FinitePoset& p, const std::string& name,
                                 const EvaluateOptions& opt = {});

}  // namespace scottq
