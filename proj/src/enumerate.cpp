#include "scottq/enumerate.hpp"

#include <map>
#include <string>
#include <utility>

#include "scottq/canonical.hpp"
#include "scottq/limits.hpp"

namespace scottq {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return labels;
}

// Extends p by one new top-of-nothing element placed above the lower set d
// and below the upper set u. Caller guarantees d is a lower set, u an upper
// set, d and u disjoint, and every element of d strictly below every element
// of u — exactly the conditions under which the extension is again a poset.
FinitePoset extend(const FinitePoset& p, const Bits& d, const Bits& u) {
  const int n = p.size();
  std::vector<Bits> rows(static_cast<std::size_t>(n) + 1, Bits(n + 1));
  for (int x = 0; x < n; ++x) {
    p.up(x).for_each([&](int y) { rows[static_cast<std::size_t>(x)].set(y); });
    if (d.test(x)) rows[static_cast<std::size_t>(x)].set(n);
  }
  rows[static_cast<std::size_t>(n)].set(n);
  u.for_each([&](int y) { rows[static_cast<std::size_t>(n)].set(y); });
  return FinitePoset::from_leq_rows(default_labels(n + 1), std::move(rows),
                                    /*trusted=*/true);
}

std::vector<FinitePoset> grow_level(const std::vector<FinitePoset>& level) {
  // Canonical code -> first representative found. std::map iteration gives
  // the ascending-code output order.
  std::map<CanonicalCode, FinitePoset> next;
  for (const FinitePoset& p : level) {
    const int n = p.size();
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t dm = 0; dm < limit; ++dm) {
      Bits d(n);
      for (int i = 0; i < n; ++i)
        if (dm >> i & 1) d.set(i);
      if (!p.is_lower_set(d)) continue;

      // Everything strictly above all of d; candidates for the upper set.
      Bits avail = p.full_set();
      d.for_each([&](int x) {
        Bits strictly_up = p.up(x);
        strictly_up.reset(x);
        avail &= strictly_up;
      });

      for (std::uint64_t um = 0; um < limit; ++um) {
        Bits u(n);
        for (int i = 0; i < n; ++i)
          if (um >> i & 1) u.set(i);
        if (!u.is_subset_of(avail)) continue;
        if (!p.is_upper_set(u)) continue;
        FinitePoset q = extend(p, d, u);
        CanonicalCode code = canonical_code(q);
        next.emplace(std::move(code), std::move(q));
      }
    }
  }
  std::vector<FinitePoset> out;
  out.reserve(next.size());
  for (auto& [code, p] : next) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<FinitePoset> enumerate_posets(int n, bool exactly_n) {
  if (n < 1) throw PreconditionError("poset enumeration needs n >= 1");
  if (n > limits::kEnumerateMaxN)
    throw ResourceError("poset enumeration is bounded at n = " +
                        std::to_string(limits::kEnumerateMaxN));

  std::vector<FinitePoset> level{
      FinitePoset::from_relations(default_labels(1), {})};
  std::vector<FinitePoset> all = level;
  for (int k = 2; k <= n; ++k) {
    level = grow_level(level);
    if (!exactly_n) all.insert(all.end(), level.begin(), level.end());
  }
  return exactly_n ? level : all;
}

}  // namespace scottq
