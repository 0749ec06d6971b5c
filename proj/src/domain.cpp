#include "scottq/domain.hpp"

#include <string>

namespace scottq {

bool way_below_fast(const FinitePoset& p, const Bits& g, const Bits& h) {
  return p.up_closure(h).is_subset_of(p.up_closure(g));
}

WayBelowResult way_below_definitional(const FinitePoset& p, const Bits& g,
                                      const Bits& h) {
  const int n = p.size();
  if (n > limits::kWayBelowDefinitionalMax)
    throw ResourceError("definitional way-below is bounded at " +
                        std::to_string(limits::kWayBelowDefinitionalMax) +
                        " elements");
  const Bits up_g = p.up_closure(g);
  const Bits up_h = p.up_closure(h);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    Bits d(n);
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) d.set(i);
    if (!p.is_directed(d)) continue;
    auto s = p.sup(d);
    if (!s || !up_h.test(*s)) continue;
    if (!d.intersects(up_g)) return {false, d};
  }
  return {true, std::nullopt};
}

bool way_below(const FinitePoset& p, const Bits& g, const Bits& h,
               WayBelowMode mode) {
  return mode == WayBelowMode::Fast ? way_below_fast(p, g, h)
                                    : way_below_definitional(p, g, h).holds;
}

std::vector<Bits> fin(const FinitePoset& p, int x, WayBelowMode mode) {
  const int n = p.size();
  if (n > limits::kWayBelowDefinitionalMax)
    throw ResourceError("fin enumeration is bounded at " +
                        std::to_string(limits::kWayBelowDefinitionalMax) +
                        " elements");
  Bits hx = Bits::singleton(n, x);
  std::vector<Bits> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    Bits f(n);
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) f.set(i);
    if (way_below(p, f, hx, mode)) out.push_back(f);
  }
  return out;
}

namespace {

// Directed in the Smyth preorder (G below H iff up(H) inside up(G)): each
// pair needs an upper bound in the family, i.e. a member whose up-closure
// sits inside both up-closures. On a finite poset {x} itself would serve for
// all of fin(x), but the search does not assume that: it scans candidates.
bool smyth_directed(const FinitePoset& p, const std::vector<Bits>& family) {
  if (family.empty()) return false;
  std::vector<Bits> ups;
  ups.reserve(family.size());
  for (const Bits& f : family) ups.push_back(p.up_closure(f));
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i; j < family.size(); ++j) {
      bool bounded = false;
      for (std::size_t k = 0; k < family.size() && !bounded; ++k)
        if (ups[k].is_subset_of(ups[i]) && ups[k].is_subset_of(ups[j]))
          bounded = true;
      if (!bounded) return false;
    }
  return true;
}

}  // namespace

bool is_quasicontinuous(const FinitePoset& p, WayBelowMode mode) {
  const int n = p.size();
  if (n > limits::kQuasicontinuityMax)
    throw ResourceError("quasicontinuity check is bounded at " +
                        std::to_string(limits::kQuasicontinuityMax) +
                        " elements");
  for (int x = 0; x < n; ++x) {
    std::vector<Bits> fam = fin(p, x, mode);
    if (!smyth_directed(p, fam)) return false;
    Bits inter = Bits::full(n);
    for (const Bits& f : fam) inter &= p.up_closure(f);
    if (!(inter == p.up(x))) return false;
  }
  return true;
}

bool is_domain(const FinitePoset& p, WayBelowMode mode) {
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    Bits hx = Bits::singleton(n, x);
    Bits w(n);
    for (int y = 0; y < n; ++y)
      if (way_below(p, Bits::singleton(n, y), hx, mode)) w.set(y);
    if (!p.is_directed(w)) return false;
    auto s = p.sup(w);
    if (!s || *s != x) return false;
  }
  return true;
}

}  // namespace scottq
