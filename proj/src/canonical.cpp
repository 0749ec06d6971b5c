#include "scottq/canonical.hpp"

#include <algorithm>
#include <map>

namespace scottq {

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (auto w : words)
    for (int shift = 60; shift >= 0; shift -= 4)
      out.push_back(digits[(w >> shift) & 0xf]);
  // Trim leading zeros but keep at least one digit.
  std::size_t nz = out.find_first_not_of('0');
  return nz == std::string::npos ? "0" : out.substr(nz);
}

CanonicalCode code_under_labeling(const FinitePoset& p,
                                  const std::vector<int>& perm) {
  const int n = p.size();
  // inv[new position] = old element
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;

  CanonicalCode code;
  code.words.assign(1 + static_cast<std::size_t>((n * n + 63) / 64), 0);
  code.words[0] = static_cast<std::uint64_t>(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j, ++bit)
      if (p.leq(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]))
        code.words[1 + static_cast<std::size_t>(bit >> 6)] |=
            std::uint64_t{1} << (bit & 63);
  return code;
}

namespace {

// Ordered partition of the element set. Cells are refined by counting, for
// each element, how its up/down rows meet every cell; the counts are label-
// independent, so the refinement commutes with isomorphisms. Sub-cells are
// ordered by their signature, which keeps the cell order itself canonical.
using Cells = std::vector<std::vector<int>>;

void refine(const FinitePoset& p, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Bits> cell_masks;
    cell_masks.reserve(cells.size());
    for (const auto& c : cells) {
      Bits m(p.size());
      for (int v : c) m.set(v);
      cell_masks.push_back(std::move(m));
    }
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      if (cells[ci].size() <= 1) continue;
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cells[ci]) {
        std::vector<int> sig;
        sig.reserve(cells.size() * 2);
        for (const auto& m : cell_masks) {
          sig.push_back((p.up(v) & m).count());
          sig.push_back((p.down(v) & m).count());
        }
        groups[sig].push_back(v);
      }
      if (groups.size() > 1) {
        Cells next;
        next.reserve(cells.size() + groups.size());
        for (std::size_t cj = 0; cj < cells.size(); ++cj) {
          if (cj == ci) {
            for (auto& [sig, members] : groups) next.push_back(members);
          } else {
            next.push_back(cells[cj]);
          }
        }
        cells = std::move(next);
        changed = true;
        break;
      }
    }
  }
}

struct Search {
  const FinitePoset& p;
  std::optional<CanonicalCode> best;
  std::vector<int> best_perm;

  void visit_leaf(const Cells& cells) {
    std::vector<int> perm(static_cast<std::size_t>(p.size()));
    for (int pos = 0; pos < static_cast<int>(cells.size()); ++pos)
      perm[static_cast<std::size_t>(cells[static_cast<std::size_t>(pos)][0])] = pos;
    CanonicalCode code = code_under_labeling(p, perm);
    if (!best || code < *best) {
      best = std::move(code);
      best_perm = std::move(perm);
    }
  }

  void run(Cells cells) {
    refine(p, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      visit_leaf(cells);
      return;
    }
    // Branch on every choice of representative for the first non-singleton
    // cell. Exploring all choices keeps the minimum label-independent.
    std::vector<int> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());
    for (int v : candidates) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int w : cells[i])
            if (w != v) rest.push_back(w);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[i]);
        }
      }
      run(std::move(child));
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const FinitePoset& p) {
  Search s{p, std::nullopt, {}};
  Cells initial{std::vector<int>(static_cast<std::size_t>(p.size()))};
  for (int i = 0; i < p.size(); ++i) initial[0][static_cast<std::size_t>(i)] = i;
  s.run(std::move(initial));
  return s.best_perm;
}

CanonicalCode canonical_code(const FinitePoset& p) {
  return code_under_labeling(p, canonical_labeling(p));
}

namespace {

bool extend_isomorphism(const FinitePoset& p, const FinitePoset& m,
                        std::vector<int>& map, std::vector<bool>& used, int next) {
  const int n = p.size();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[static_cast<std::size_t>(cand)]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      int pm = map[static_cast<std::size_t>(prev)];
      if (p.leq(prev, next) != m.leq(pm, cand)) ok = false;
      if (p.leq(next, prev) != m.leq(cand, pm)) ok = false;
    }
    if (!ok) continue;
    if ((p.up(next).count() != m.up(cand).count()) ||
        (p.down(next).count() != m.down(cand).count()))
      continue;
    map[static_cast<std::size_t>(next)] = cand;
    used[static_cast<std::size_t>(cand)] = true;
    if (extend_isomorphism(p, m, map, used, next + 1)) return true;
    used[static_cast<std::size_t>(cand)] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const FinitePoset& p,
                                               const FinitePoset& m) {
  const int n = p.size();
  if (n != m.size()) return std::nullopt;

  // Cheap invariant: the multiset of (|down|, |up|) pairs must agree.
  std::vector<std::pair<int, int>> dp, dm;
  for (int i = 0; i < n; ++i) {
    dp.emplace_back(p.down(i).count(), p.up(i).count());
    dm.emplace_back(m.down(i).count(), m.up(i).count());
  }
  std::sort(dp.begin(), dp.end());
  std::sort(dm.begin(), dm.end());
  if (dp != dm) return std::nullopt;

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  if (extend_isomorphism(p, m, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace scottq
