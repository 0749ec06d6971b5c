#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "scottq/topology.hpp"

namespace scottq {

struct QOptions {
  std::size_t member_cap = limits::kQMemberCap;
  ScottOptions scott;
};

// The nonempty compact saturated subsets of a poset's Scott space, ordered by
// reverse inclusion (K below K' iff K contains K'). The order is materialized
// as a FinitePoset over member indices so canonicalization, enumeration
// reuse, and the second-level construction Q(Q(P)) all apply directly.
struct QFamily {
  FinitePoset host;
  std::vector<Bits> members;  // descending cardinality, then ascending encoding
  FinitePoset order;          // element i is members[i]; labels render the sets

  int index_of(const Bits& member) const;  // -1 when absent

 private:
  friend QFamily compute_q_family(const FinitePoset&, const QOptions&);
  std::unordered_map<Bits, int, BitsHash> lookup_;
};

// Computes the family by filtering candidate subsets through is_saturated
// and is_compact against the actual Scott topology. Throws ResourceError
// past QOptions::member_cap.
QFamily compute_q_family(const FinitePoset& p, const QOptions& opt = {});

// Smyth preorder on arbitrary subsets: g below h iff h lies in g's up-closure.
bool smyth_leq(const FinitePoset& p, const Bits& g, const Bits& h);

// Closed sets: all intersections of finite unions of Q-members, plus the
// empty set and the whole space. Returned in closed form.
FiniteTopology co_compact_closed_sets(const FinitePoset& p, const QFamily& q);

// {"members": [[names...]...], "order_edges": [[i,j]...]}; an edge [i, j]
// says member i is below member j in the reverse-inclusion order, i.e.
// members[i] is a proper superset of members[j].
nlohmann::json q_family_to_json(const QFamily& q);

}  // namespace scottq
