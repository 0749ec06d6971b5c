#include "scottq/qfamily.hpp"

#include <algorithm>
#include <unordered_set>

namespace scottq {

int QFamily::index_of(const Bits& member) const {
  auto it = lookup_.find(member);
  return it == lookup_.end() ? -1 : it->second;
}

QFamily compute_q_family(const FinitePoset& p, const QOptions& opt) {
  const int n = p.size();
  FiniteTopology t = scott_opens(p, opt.scott);

  std::vector<Bits> members;
  if (n <= opt.scott.definitional_max) {
    // Filter every subset through the definitions.
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      Bits s(n);
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) s.set(i);
      if (is_saturated(t, s) && is_compact(t, s)) members.push_back(s);
      if (members.size() > opt.member_cap)
        throw ResourceError("Q-family exceeded the member cap");
    }
  } else {
    // In a finite space the saturated sets are exactly the opens (the open
    // family is closed under finite intersections), so filtering the opens
    // is still the full candidate space. The subset-scan path above stays
    // the oracle for this on small carriers.
    for (const Bits& u : t.opens()) {
      if (u.empty()) continue;
      if (is_saturated(t, u) && is_compact(t, u)) members.push_back(u);
      if (members.size() > opt.member_cap)
        throw ResourceError("Q-family exceeded the member cap");
    }
  }

  std::sort(members.begin(), members.end(), [](const Bits& a, const Bits& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca > cb;
    return a < b;
  });

  QFamily q;
  q.host = p;
  q.members = std::move(members);
  for (int i = 0; i < static_cast<int>(q.members.size()); ++i)
    q.lookup_.emplace(q.members[static_cast<std::size_t>(i)], i);

  const int m = static_cast<int>(q.members.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (const Bits& s : q.members) labels.push_back(set_names(p, s));
  std::vector<Bits> rows(static_cast<std::size_t>(m), Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (q.members[static_cast<std::size_t>(j)].is_subset_of(
              q.members[static_cast<std::size_t>(i)]))
        rows[static_cast<std::size_t>(i)].set(j);
  q.order = FinitePoset::from_leq_rows(std::move(labels), std::move(rows),
                                       /*trusted=*/true);
  return q;
}

bool smyth_leq(const FinitePoset& p, const Bits& g, const Bits& h) {
  return h.is_subset_of(p.up_closure(g));
}

FiniteTopology co_compact_closed_sets(const FinitePoset& p, const QFamily& q) {
  std::unordered_set<Bits, BitsHash> family;
  family.insert(Bits(p.size()));
  family.insert(Bits::full(p.size()));
  for (const Bits& k : q.members) family.insert(k);

  // Close under pairwise union and intersection until stable.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bits> snapshot(family.begin(), family.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        for (const Bits& candidate :
             {snapshot[i] | snapshot[j], snapshot[i] & snapshot[j]}) {
          if (family.insert(candidate).second) grew = true;
        }
        if (family.size() > limits::kCoCompactFamilyCap)
          throw ResourceError("co-compact closed family exceeded its cap");
      }
    }
  }

  FiniteTopology t;
  t.ground = p.size();
  t.labels = p.labels();
  t.form = SetForm::Closeds;
  t.sets.assign(family.begin(), family.end());
  std::sort(t.sets.begin(), t.sets.end(), [](const Bits& a, const Bits& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca > cb;
    return a < b;
  });
  return t;
}

nlohmann::json q_family_to_json(const QFamily& q) {
  nlohmann::json members = nlohmann::json::array();
  for (const Bits& s : q.members) {
    std::vector<std::string> names;
    s.for_each([&](int i) { names.push_back(q.host.label(i)); });
    std::sort(names.begin(), names.end());
    members.push_back(names);
  }
  nlohmann::json edges = nlohmann::json::array();
  const int m = static_cast<int>(q.members.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && q.order.leq(i, j)) edges.push_back({i, j});
  return nlohmann::json{{"members", members}, {"order_edges", edges}};
}

}  // namespace scottq
