#include "scottq/zoo.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "scottq/limits.hpp"

namespace scottq {

// ---- truncations ----

int Truncation::index_of(const ZooElement& e) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == e) return static_cast<int>(i);
  return -1;
}

Bits Truncation::restrict_set(
    const std::function<bool(const ZooElement&)>& pred) const {
  Bits out(poset.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (pred(elements[i])) out.set(static_cast<int>(i));
  return out;
}

// ---- symbolic posets ----

std::vector<ZooElement> SymbolicPoset::first_elements(int count) const {
  if (count < 0) throw PreconditionError("element count must be nonnegative");
  std::vector<ZooElement> out;
  std::set<ZooElement> seen;
  for (int scale = 1; static_cast<int>(out.size()) < count; ++scale) {
    if (scale > 4096)
      throw ResourceError("element stream did not reach the requested count");
    for (const ZooElement& e : fragment(scale)) {
      if (static_cast<int>(out.size()) == count) break;
      if (seen.insert(e).second) out.push_back(e);
    }
  }
  return out;
}

Truncation SymbolicPoset::truncate(int scale) const {
  if (scale < 1) throw PreconditionError("truncation scale must be at least 1");
  Truncation t;
  t.scale = scale;
  t.elements = fragment(scale);
  const int n = static_cast<int>(t.elements.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (const ZooElement& e : t.elements) labels.push_back(label(e));
  std::vector<Bits> rows(static_cast<std::size_t>(n), Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(t.elements[static_cast<std::size_t>(i)],
              t.elements[static_cast<std::size_t>(j)]))
        rows[static_cast<std::size_t>(i)].set(j);
  // Validating construction: a bad order predicate surfaces here too, not
  // only in verify_order_axioms.
  t.poset = FinitePoset::from_leq_rows(std::move(labels), std::move(rows));
  t.caveats = truncation_caveats();
  return t;
}

// ---- the catalog posets ----

namespace {

// Two incomparable bottom points under a chain that descends from a single
// maximal point: element n of the stream sits at depth n, so deeper points
// are lower. Stream and fragments: a, b, then the chain by depth.
class ChainOverTwoBottoms final : public SymbolicPoset {
 public:
  ChainOverTwoBottoms()
      : SymbolicPoset("e23", "descending chain over two bottom points") {}

  bool contains(const ZooElement& x) const override {
    return x.tag == ZooTag::SideA || x.tag == ZooTag::SideB ||
           (x.tag == ZooTag::Nat && x.a >= 1 && x.b == 0);
  }

  bool leq(const ZooElement& x, const ZooElement& y) const override {
    if (x == y) return true;
    if ((x.tag == ZooTag::SideA || x.tag == ZooTag::SideB) &&
        y.tag == ZooTag::Nat)
      return true;
    if (x.tag == ZooTag::Nat && y.tag == ZooTag::Nat) return y.a <= x.a;
    return false;
  }

  std::string label(const ZooElement& x) const override {
    if (x.tag == ZooTag::SideA) return "a";
    if (x.tag == ZooTag::SideB) return "b";
    return "-" + std::to_string(x.a);
  }

  std::vector<ZooElement> fragment(int scale) const override {
    std::vector<ZooElement> out{ZooElement::side_a(), ZooElement::side_b()};
    for (int n = 1; n <= scale; ++n) out.push_back(ZooElement::nat(n));
    return out;
  }

  std::vector<std::string> truncation_caveats() const override {
    return {
        "every upper set of a finite fragment is compact, so "
        "compactness-sensitive claims do not transfer",
        "the common upper set of the two bottoms collapses onto the deepest "
        "retained principal filter, destroying the co-compact sobriety "
        "failure",
        "co-sobriety is true of every finite fragment outright",
    };
  }
};

// Two incomparable bottom points under an infinite antichain of maximal
// points. Stream and fragments: a, b, then the antichain in numeric order.
class AntichainOverTwoBottoms final : public SymbolicPoset {
 public:
  AntichainOverTwoBottoms()
      : SymbolicPoset("e33", "infinite antichain over two bottom points") {}

  bool contains(const ZooElement& x) const override {
    return x.tag == ZooTag::SideA || x.tag == ZooTag::SideB ||
           (x.tag == ZooTag::Nat && x.a >= 1 && x.b == 0);
  }

  bool leq(const ZooElement& x, const ZooElement& y) const override {
    if (x == y) return true;
    return (x.tag == ZooTag::SideA || x.tag == ZooTag::SideB) &&
           y.tag == ZooTag::Nat;
  }

  std::string label(const ZooElement& x) const override {
    if (x.tag == ZooTag::SideA) return "a";
    if (x.tag == ZooTag::SideB) return "b";
    return std::to_string(x.a);
  }

  std::vector<ZooElement> fragment(int scale) const override {
    std::vector<ZooElement> out{ZooElement::side_a(), ZooElement::side_b()};
    for (int n = 1; n <= scale; ++n) out.push_back(ZooElement::nat(n));
    return out;
  }

  std::vector<std::string> truncation_caveats() const override {
    return {
        "every upper set of a finite fragment is compact, so the residual "
        "non-compactness at the bottom points is destroyed",
        "the common upper set of the two bottoms splits into closed pieces "
        "on any fragment with at least two maximal points, so its "
        "co-compact irreducibility does not survive truncation",
    };
  }
};

// A single bottom point under an infinite antichain of maximal points.
// Stream and fragments: bot, then the antichain in numeric order.
class FlatDomain final : public SymbolicPoset {
 public:
  FlatDomain() : SymbolicPoset("flat", "flat domain over the naturals") {}

  bool contains(const ZooElement& x) const override {
    return x.tag == ZooTag::Bottom ||
           (x.tag == ZooTag::Nat && x.a >= 1 && x.b == 0);
  }

  bool leq(const ZooElement& x, const ZooElement& y) const override {
    if (x == y) return true;
    return x.tag == ZooTag::Bottom && y.tag == ZooTag::Nat;
  }

  std::string label(const ZooElement& x) const override {
    if (x.tag == ZooTag::Bottom) return "bot";
    return std::to_string(x.a);
  }

  std::vector<ZooElement> fragment(int scale) const override {
    std::vector<ZooElement> out{ZooElement::bottom()};
    for (int n = 1; n <= scale; ++n) out.push_back(ZooElement::nat(n));
    return out;
  }

  std::vector<std::string> truncation_caveats() const override {
    return {
        "every upper set of a finite fragment is compact, so the residual "
        "non-compactness at the bottom is destroyed",
        "the chain-decomposition failure at the bottom survives every "
        "fragment of width at least two",
    };
  }
};

// An ascending chain feeding a hub that sits below an infinite grid of
// column chains, all under a single top. Stream and fragments: the chain in
// numeric order, the hub, the grid row-major by (column, row), the top.
class ChainGridTower final : public SymbolicPoset {
 public:
  ChainGridTower() : SymbolicPoset("e316-2", "chain-fed grid under a top") {}

  bool contains(const ZooElement& x) const override {
    switch (x.tag) {
      case ZooTag::Nat: return x.a >= 1 && x.b == 0;
      case ZooTag::Hub: return true;
      case ZooTag::Pair: return x.a >= 1 && x.b >= 1;
      case ZooTag::Top: return true;
      default: return false;
    }
  }

  bool leq(const ZooElement& x, const ZooElement& y) const override {
    if (x == y) return true;
    switch (x.tag) {
      case ZooTag::Nat:
        if (y.tag == ZooTag::Nat) return x.a <= y.a;
        return y.tag == ZooTag::Hub || y.tag == ZooTag::Pair ||
               y.tag == ZooTag::Top;
      case ZooTag::Hub:
        return y.tag == ZooTag::Pair || y.tag == ZooTag::Top;
      case ZooTag::Pair:
        if (y.tag == ZooTag::Pair) return x.a == y.a && x.b <= y.b;
        return y.tag == ZooTag::Top;
      default:
        return false;
    }
  }

  std::string label(const ZooElement& x) const override {
    switch (x.tag) {
      case ZooTag::Nat: return std::to_string(x.a);
      case ZooTag::Hub: return "inf";
      case ZooTag::Top: return "top";
      default:
        return "(" + std::to_string(x.a) + "-" + std::to_string(x.b) + ")";
    }
  }

  std::vector<ZooElement> fragment(int scale) const override {
    std::vector<ZooElement> out;
    for (int n = 1; n <= scale; ++n) out.push_back(ZooElement::nat(n));
    out.push_back(ZooElement::hub());
    for (int m = 1; m <= scale; ++m)
      for (int n = 1; n <= scale; ++n) out.push_back(ZooElement::pair(m, n));
    out.push_back(ZooElement::top());
    return out;
  }

  std::vector<std::string> truncation_caveats() const override {
    return {
        "the hub keeps an incompressible residual only in the full space; "
        "fragments make it compact",
        "quasicontinuity is true of every finite fragment outright, so its "
        "failure at the hub is destroyed",
    };
  }
};

// An infinite grid of column chains where column j's chain converges to a
// limit point, and the limit point of column m bounds every grid point
// (j, k) with k <= m. Stream and fragments: the grid row-major by
// (column, row), then the limit row by column.
class GridWithLimitRow final : public SymbolicPoset {
 public:
  GridWithLimitRow() : SymbolicPoset("johnstone", "grid with a limit row") {}

  bool contains(const ZooElement& x) const override {
    if (x.tag == ZooTag::Pair) return x.a >= 1 && x.b >= 1;
    return x.tag == ZooTag::MaxPair && x.a >= 1 && x.b == 0;
  }

  bool leq(const ZooElement& x, const ZooElement& y) const override {
    if (x == y) return true;
    if (x.tag != ZooTag::Pair) return false;
    if (y.tag == ZooTag::Pair) return x.a == y.a && x.b <= y.b;
    return x.a == y.a || x.b <= y.a;  // into the limit row
  }

  std::string label(const ZooElement& x) const override {
    if (x.tag == ZooTag::MaxPair) return "(" + std::to_string(x.a) + "-w)";
    return "(" + std::to_string(x.a) + "-" + std::to_string(x.b) + ")";
  }

  std::vector<ZooElement> fragment(int scale) const override {
    std::vector<ZooElement> out;
    for (int m = 1; m <= scale; ++m)
      for (int n = 1; n <= scale; ++n) out.push_back(ZooElement::pair(m, n));
    for (int m = 1; m <= scale; ++m) out.push_back(ZooElement::max_pair(m));
    return out;
  }

  std::vector<std::string> truncation_caveats() const override {
    return {
        "finite fragments are well-filtered and sober outright, so those "
        "failures are invisible on them",
        "quasicontinuity is true of every finite fragment outright",
        "the limit row is retained only up to the scale",
    };
  }
};

// The grid with a limit row, completed by a single top point.
class GridWithLimitRowAndTop final : public SymbolicPoset {
 public:
  GridWithLimitRowAndTop()
      : SymbolicPoset("johnstone-top", "grid with a limit row and a top") {}

  bool contains(const ZooElement& x) const override {
    if (x.tag == ZooTag::Top) return true;
    return grid_.contains(x);
  }

  bool leq(const ZooElement& x, const ZooElement& y) const override {
    if (y.tag == ZooTag::Top) return true;
    if (x.tag == ZooTag::Top) return false;
    return grid_.leq(x, y);
  }

  std::string label(const ZooElement& x) const override {
    if (x.tag == ZooTag::Top) return "top";
    return grid_.label(x);
  }

  std::vector<ZooElement> fragment(int scale) const override {
    std::vector<ZooElement> out = grid_.fragment(scale);
    out.push_back(ZooElement::top());
    return out;
  }

  std::vector<std::string> truncation_caveats() const override {
    return {
        "finite fragments are weakly well-filtered outright, so the failure "
        "is invisible on them",
        "the limit row is retained only up to the scale",
    };
  }

 private:
  GridWithLimitRow grid_;
};

// ---- claimed families ----

std::vector<Bits> principal_filters_with_full(const Truncation& t) {
  std::vector<Bits> out{t.poset.full_set()};
  for (int i = 0; i < t.poset.size(); ++i) out.push_back(t.poset.up(i));
  return out;
}

std::vector<Bits> principal_filters_only(const Truncation& t) {
  std::vector<Bits> out;
  for (int i = 0; i < t.poset.size(); ++i) out.push_back(t.poset.up(i));
  return out;
}

std::vector<Bits> flat_claimed_q(const Truncation& t) {
  std::vector<int> maxs;
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    if (t.elements[i].tag == ZooTag::Nat) maxs.push_back(static_cast<int>(i));
  if (maxs.size() > 20)
    throw ResourceError("claimed-family enumeration is bounded at width 20");
  std::vector<Bits> out{t.poset.full_set()};
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << maxs.size()); ++m) {
    Bits s(t.poset.size());
    for (std::size_t i = 0; i < maxs.size(); ++i)
      if (m >> i & 1) s.set(maxs[i]);
    out.push_back(s);
  }
  return out;
}

// The claimed members of the two grid entries: every set of limit-row
// points (extended by the top when there is one), and the up-closure of
// each finite set of grid points. The latter is generated without subset
// blowup: an up-closure of grid points is determined by one row threshold
// per column.
std::vector<Bits> grid_claimed_q(const Truncation& t, bool with_top) {
  if (t.scale > 6)
    throw ResourceError("claimed-family generation is bounded at scale 6");
  const int n = t.poset.size();
  const int c = t.scale;
  std::vector<int> limit_idx(static_cast<std::size_t>(c), -1);
  std::vector<std::vector<int>> grid_idx(
      static_cast<std::size_t>(c), std::vector<int>(static_cast<std::size_t>(c), -1));
  int top_idx = -1;
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    const ZooElement& e = t.elements[i];
    if (e.tag == ZooTag::MaxPair)
      limit_idx[static_cast<std::size_t>(e.a - 1)] = static_cast<int>(i);
    else if (e.tag == ZooTag::Pair)
      grid_idx[static_cast<std::size_t>(e.a - 1)][static_cast<std::size_t>(e.b - 1)] =
          static_cast<int>(i);
    else if (e.tag == ZooTag::Top)
      top_idx = static_cast<int>(i);
  }

  std::set<Bits> out;
  // Limit-row subsets: nonempty without a top, arbitrary with one (the top
  // alone is the up-closure of the top point).
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << c); ++m) {
    if (m == 0 && !with_top) continue;
    Bits s(n);
    for (int j = 0; j < c; ++j)
      if (m >> j & 1) s.set(limit_idx[static_cast<std::size_t>(j)]);
    if (with_top) s.set(top_idx);
    out.insert(s);
  }
  // Up-closures of finite grid sets, one row threshold per column
  // (threshold c means the column contributes nothing).
  std::vector<int> threshold(static_cast<std::size_t>(c), 0);
  for (;;) {
    bool all_absent = true;
    for (int v : threshold)
      if (v < c) all_absent = false;
    if (!all_absent) {
      Bits s(n);
      for (int j = 0; j < c; ++j)
        if (threshold[static_cast<std::size_t>(j)] < c)
          s |= t.poset.up(
              grid_idx[static_cast<std::size_t>(j)]
                      [static_cast<std::size_t>(threshold[static_cast<std::size_t>(j)])]);
      out.insert(s);
    }
    int at = 0;
    while (at < c && threshold[static_cast<std::size_t>(at)] == c) ++at;
    if (at == c) break;
    ++threshold[static_cast<std::size_t>(at)];
    for (int j = 0; j < at; ++j) threshold[static_cast<std::size_t>(j)] = 0;
  }
  return {out.begin(), out.end()};
}

// Every upper set of a grid fragment is a union of the two claimed shapes:
// the grid part is the up-closure of its minimal points (one row threshold
// per column, which forces part of the limit row upward), and the rest is a
// free set of limit-row points. Enumerating by thresholds and free subsets
// therefore generates the whole compact-saturated family by a route
// independent of the generic upper-set recursion.
std::vector<Bits> grid_union_hull(const Truncation& t, bool with_top) {
  if (t.scale > 6)
    throw ResourceError("hull generation is bounded at scale 6");
  const int n = t.poset.size();
  const int c = t.scale;
  std::vector<int> limit_idx(static_cast<std::size_t>(c), -1);
  std::vector<std::vector<int>> grid_idx(
      static_cast<std::size_t>(c), std::vector<int>(static_cast<std::size_t>(c), -1));
  int top_idx = -1;
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    const ZooElement& e = t.elements[i];
    if (e.tag == ZooTag::MaxPair)
      limit_idx[static_cast<std::size_t>(e.a - 1)] = static_cast<int>(i);
    else if (e.tag == ZooTag::Pair)
      grid_idx[static_cast<std::size_t>(e.a - 1)][static_cast<std::size_t>(e.b - 1)] =
          static_cast<int>(i);
    else if (e.tag == ZooTag::Top)
      top_idx = static_cast<int>(i);
  }

  std::vector<Bits> out;
  std::vector<int> threshold(static_cast<std::size_t>(c), 0);  // c = absent
  for (;;) {
    Bits grid_part(n);
    for (int j = 0; j < c; ++j)
      if (threshold[static_cast<std::size_t>(j)] < c)
        grid_part |= t.poset.up(
            grid_idx[static_cast<std::size_t>(j)]
                    [static_cast<std::size_t>(threshold[static_cast<std::size_t>(j)])]);
    std::vector<int> free;
    for (int j = 0; j < c; ++j)
      if (!grid_part.test(limit_idx[static_cast<std::size_t>(j)]))
        free.push_back(limit_idx[static_cast<std::size_t>(j)]);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
      Bits s = grid_part;
      for (std::size_t i = 0; i < free.size(); ++i)
        if (m >> i & 1) s.set(free[i]);
      if (with_top) s.set(top_idx);
      if (!s.empty()) out.push_back(s);
    }
    int at = 0;
    while (at < c && threshold[static_cast<std::size_t>(at)] == c) ++at;
    if (at == c) break;
    ++threshold[static_cast<std::size_t>(at)];
    for (int j = 0; j < at; ++j) threshold[static_cast<std::size_t>(j)] = 0;
  }
  return out;
}

std::vector<Bits> flat_claimed_kirr(const Truncation& t) {
  std::vector<Bits> out{t.poset.full_set()};
  Bits maxs = t.poset.maximal_elements(t.poset.full_set());
  maxs.for_each(
      [&](int i) { out.push_back(Bits::singleton(t.poset.size(), i)); });
  return out;
}

std::vector<Bits> e23_claimed_co_compact(const Truncation& t) {
  std::vector<Bits> out = principal_filters_with_full(t);
  int a = t.index_of(ZooElement::side_a());
  int b = t.index_of(ZooElement::side_b());
  out.push_back(t.poset.up(a) & t.poset.up(b));
  return out;
}

// ---- witnesses ----

NonCompactnessWitness singleton_cover_witness(std::string target_description) {
  NonCompactnessWitness w;
  w.target_description = std::move(target_description);
  w.in_target = [](const ZooElement& e) { return e.tag == ZooTag::Nat; };
  w.in_cover_member = [](int i, const ZooElement& e) {
    return e.tag == ZooTag::Nat && e.a == i + 1;
  };
  w.cover_member_name = [](int i) {
    return "{" + std::to_string(i + 1) + "}";
  };
  w.escape = [](const std::vector<int>& f) {
    int n = 1;
    for (int i : f) n = std::max(n, i + 2);
    return ZooElement::nat(n);
  };
  return w;
}

NonCompactnessWitness grid_row_cover_witness() {
  NonCompactnessWitness w;
  w.target_description = "the up-closure of the bottom grid row";
  w.in_target = [](const ZooElement& e) {
    return e.tag == ZooTag::Pair || e.tag == ZooTag::Top;
  };
  // Member i is the complement of the down-closures of every bottom-row
  // point except the one in column i+1.
  w.in_cover_member = [](int i, const ZooElement& e) {
    if (e.tag == ZooTag::Top) return true;
    if (e.tag != ZooTag::Pair) return false;
    return e.b >= 2 || e.a == i + 1;
  };
  w.cover_member_name = [](int i) { return "U" + std::to_string(i + 1); };
  w.escape = [](const std::vector<int>& f) {
    int col = 1;
    for (int i : f) col = std::max(col, i + 2);
    return ZooElement::pair(col, 1);
  };
  return w;
}

FilteredFamilyWitness limit_row_filtered_witness(bool with_top) {
  FilteredFamilyWitness w;
  w.family_description =
      "up-closures of the co-finite sets of limit-row points";
  w.target_description =
      with_top ? "the singleton of the top point" : "the empty set";
  w.in_index_universe = [](const ZooElement& e) {
    return e.tag == ZooTag::MaxPair;
  };
  w.in_member = [with_top](const std::vector<ZooElement>& f,
                           const ZooElement& e) {
    if (with_top && e.tag == ZooTag::Top) return true;
    if (e.tag != ZooTag::MaxPair) return false;
    return std::find(f.begin(), f.end(), e) == f.end();
  };
  w.in_target_open = [with_top](const ZooElement& e) {
    return with_top && e.tag == ZooTag::Top;
  };
  w.target_open_is_empty = !with_top;
  w.escape =
      [](const std::vector<ZooElement>& f) -> std::optional<ZooElement> {
    int col = 1;
    for (const ZooElement& e : f) col = std::max(col, e.a + 1);
    return ZooElement::max_pair(col);
  };
  return w;
}

// ---- residual case analyses ----

using SymPtr = std::shared_ptr<const SymbolicPoset>;

std::vector<ResidualCase> tower_residual_cases(const SymPtr& s) {
  std::vector<ResidualCase> cases;
  cases.push_back(
      {"chain point",
       [](const ZooElement& x) { return x.tag == ZooTag::Nat; },
       [s](const ZooElement& x, const ZooElement& y) {
         return s->leq(ZooElement::nat(x.a + 1), y);
       },
       true,
       nullptr});
  cases.push_back(
      {"hub",
       [](const ZooElement& x) { return x.tag == ZooTag::Hub; },
       [](const ZooElement&, const ZooElement& y) {
         return y.tag == ZooTag::Pair || y.tag == ZooTag::Top;
       },
       false,  // this residual is the non-compact cover target
       nullptr});
  cases.push_back(
      {"grid point",
       [](const ZooElement& x) { return x.tag == ZooTag::Pair; },
       [s](const ZooElement& x, const ZooElement& y) {
         return s->leq(ZooElement::pair(x.a, x.b + 1), y);
       },
       true,
       nullptr});
  cases.push_back({"top",
                   [](const ZooElement& x) { return x.tag == ZooTag::Top; },
                   [](const ZooElement&, const ZooElement&) { return false; },
                   true,
                   nullptr});
  return cases;
}

std::vector<ResidualCase> grid_residual_cases(const SymPtr& s, bool with_top) {
  std::vector<ResidualCase> cases;
  // The residual of an interior point is generated by the next point up
  // together with the limit point matching the row; the recorded shorthand
  // keeps only the first generator and misses the limit point whenever the
  // row differs from the column.
  cases.push_back(
      {"interior point",
       [](const ZooElement& x) { return x.tag == ZooTag::Pair; },
       [s](const ZooElement& x, const ZooElement& y) {
         return s->leq(ZooElement::pair(x.a, x.b + 1), y) ||
                s->leq(ZooElement::max_pair(x.b), y);
       },
       true,
       [s](const ZooElement& x, const ZooElement& y) {
         return s->leq(ZooElement::pair(x.a, x.b + 1), y);
       }});
  cases.push_back(
      {with_top ? "limit point (residual is the top alone)"
                : "limit point (empty residual)",
       [](const ZooElement& x) { return x.tag == ZooTag::MaxPair; },
       [with_top](const ZooElement&, const ZooElement& y) {
         return with_top && y.tag == ZooTag::Top;
       },
       true,
       nullptr});
  if (with_top)
    cases.push_back(
        {"top",
         [](const ZooElement& x) { return x.tag == ZooTag::Top; },
         [](const ZooElement&, const ZooElement&) { return false; },
         true,
         nullptr});
  return cases;
}

// ---- entries ----

ZooEntry make_e23() {
  ZooEntry e;
  e.poset = std::make_shared<ChainOverTwoBottoms>();
  e.default_scale = limits::kZooScale;
  e.claimed_q = ClaimedQFamily{
      "the whole space together with every principal filter", true,
      principal_filters_with_full, {}};
  e.claimed_kirr = principal_filters_only;
  e.claimed_co_compact = e23_claimed_co_compact;
  e.nonprincipal_targets.push_back(
      {"the set of common upper bounds of the two bottom points",
       [](const ZooElement& x) { return x.tag == ZooTag::Nat; }});
  e.claims = {
      {"the order clauses form a partial order", ClaimStatus::Executable,
       "order-axioms", {50},
       "checked over the element stream prefix", ""},
      {"the compact saturated sets are exactly the whole space and the "
       "principal filters",
       ClaimStatus::Executable, "q-soundness", {},
       "exact on every fragment", ""},
      {"the k-irreducible members are exactly the principal filters",
       ClaimStatus::Executable, "kirr-shape", {},
       "exact on every fragment", ""},
      {"the Scott space is co-sober", ClaimStatus::Executable,
       "prop:co-sober:true", {},
       "finite fragments are co-sober outright; the run is supporting "
       "evidence, not a proof of the full claim", ""},
      {"the co-compact closed sets are the whole space, the principal "
       "filters, and the set of common upper bounds of the two bottom "
       "points",
       ClaimStatus::Executable, "co-compact", {},
       "on fragments the common-upper-bound set coincides with the deepest "
       "principal filter; the comparison tolerates that collapse", ""},
      {"the set of common upper bounds of the two bottom points is not the "
       "saturate of any point",
       ClaimStatus::Executable, "nonprincipal", {20},
       "checked against the symbolic order directly; fragments collapse the "
       "set to a principal filter", ""},
      {"the co-compact space is not sober", ClaimStatus::RecordedOnly, "", {},
       "destroyed by truncation",
       "the witness set stays irreducible only in the full space; every "
       "fragment collapses it onto a principal filter"},
      {"the space is directed-complete", ClaimStatus::RecordedOnly, "", {},
       "fragments witness only finite directed sets",
       "directed-completeness quantifies over arbitrary directed subsets"},
  };
  return e;
}

ZooEntry make_e33() {
  ZooEntry e;
  e.poset = std::make_shared<AntichainOverTwoBottoms>();
  e.default_scale = limits::kZooScale;
  e.noncompact_witnesses.push_back(singleton_cover_witness(
      "the strict upper set of a bottom point: the whole antichain"));
  e.claims = {
      {"the order clauses form a partial order", ClaimStatus::Executable,
       "order-axioms", {50},
       "checked over the element stream prefix", ""},
      {"the co-compact space is T_D", ClaimStatus::Executable,
       "co-compact-td", {},
       "fragment check; the full-space argument intersects the two "
       "bottom-point filters and is recorded alongside", ""},
      {"the strict upper set of a bottom point is not compact: the "
       "antichain escapes every finite subfamily of its singleton cover",
       ClaimStatus::Executable, "noncompact", {50, 4},
       "the failure exists only in the full space; the witness checks the "
       "cover and escape structure, not fragment compactness", ""},
      {"fragments are residual-compact throughout", ClaimStatus::Executable,
       "prop:kd:true", {},
       "truncation artifact: the full space is not residual-compact at the "
       "bottom points", ""},
      {"the space is not residual-compact (both bottom points fail)",
       ClaimStatus::RecordedOnly, "", {},
       "destroyed by truncation",
       "residual compactness fails only against the infinite antichain; the "
       "executable cover witness carries the content"},
  };
  return e;
}

ZooEntry make_flat() {
  ZooEntry e;
  e.poset = std::make_shared<FlatDomain>();
  e.default_scale = limits::kZooScale;
  e.claimed_q = ClaimedQFamily{
      "the whole space together with every nonempty set of maximal points",
      true, flat_claimed_q, {}};
  e.claimed_kirr = flat_claimed_kirr;
  e.noncompact_witnesses.push_back(singleton_cover_witness(
      "the strict upper set of the bottom: every maximal point"));
  e.claims = {
      {"the order clauses form a partial order", ClaimStatus::Executable,
       "order-axioms", {50},
       "checked over the element stream prefix", ""},
      {"the compact saturated sets are exactly the whole space and the "
       "nonempty sets of maximal points",
       ClaimStatus::Executable, "q-soundness", {},
       "exact on every fragment", ""},
      {"the k-irreducible members are the whole space and the maximal "
       "singletons",
       ClaimStatus::Executable, "kirr-shape", {},
       "exact on every fragment", ""},
      {"the Scott space is co-sober", ClaimStatus::Executable,
       "prop:co-sober:true", {},
       "finite fragments are co-sober outright; supporting evidence", ""},
      {"the space is a quasicontinuous domain", ClaimStatus::Executable,
       "prop:quasicts:true", {},
       "finite posets are quasicontinuous outright; supporting evidence",
       ""},
      {"the space is a domain", ClaimStatus::Executable, "prop:domain:true",
       {},
       "finite posets are domains outright; supporting evidence", ""},
      {"the space is weakly well-filtered", ClaimStatus::Executable,
       "prop:wwf:true", {},
       "finite spaces are well-filtered outright; supporting evidence", ""},
      {"no chain decomposition at the bottom: its up-set is the whole "
       "space, which is not a chain",
       ClaimStatus::Executable, "chain-decomp-bottom", {},
       "survives truncation at every width of at least two", ""},
      {"the strict upper set of the bottom is not compact",
       ClaimStatus::Executable, "noncompact", {50, 4},
       "the failure exists only in the full space; the witness checks the "
       "cover and escape structure", ""},
      {"the space is not residual-compact at the bottom",
       ClaimStatus::RecordedOnly, "", {},
       "destroyed by truncation",
       "carried by the executable cover witness"},
  };
  return e;
}

ZooEntry make_tower() {
  ZooEntry e;
  e.poset = std::make_shared<ChainGridTower>();
  e.default_scale = limits::kZooScale;
  e.noncompact_witnesses.push_back(grid_row_cover_witness());
  e.residual_cases = tower_residual_cases(e.poset);
  e.claims = {
      {"the order clauses form a partial order", ClaimStatus::Executable,
       "order-axioms", {50},
       "checked over the element stream prefix", ""},
      {"residual analysis: chain points step to the next chain point, grid "
       "points step up one row, the top has an empty residual, and the "
       "hub's residual is the whole grid with the top",
       ClaimStatus::Executable, "kd-cases", {30},
       "membership checks on the element stream; the hub case names the "
       "non-compact cover target", ""},
      {"every point except the hub has a compact residual, and the hub is "
       "the supremum of the chain, all of whose members do",
       ClaimStatus::Executable, "compact-residual-decomp", {},
       "fragments decide the decomposition trivially; the case analysis "
       "above carries the content", ""},
      {"a compact set cannot take minimal points from infinitely many grid "
       "columns: a diagonal escape defeats every finite subcover",
       ClaimStatus::Executable, "noncompact", {30, 3},
       "cover members and escape are checked symbolically on the fragment",
       ""},
      {"the Scott space is co-sober", ClaimStatus::RecordedOnly, "", {},
       "finite fragments are co-sober outright",
       "the full-space argument bounds the minimal sets of arbitrary "
       "compact sets; the cover witness is its executable core"},
      {"not quasicontinuous at the hub or below: no nonempty finite set is "
       "way below the top's filter",
       ClaimStatus::RecordedOnly, "", {},
       "destroyed by truncation: finite fragments are quasicontinuous "
       "outright",
       "way-below over the infinite grid cannot be decided from a fragment"},
  };
  return e;
}

ZooEntry make_grid() {
  ZooEntry e;
  e.poset = std::make_shared<GridWithLimitRow>();
  e.default_scale = limits::kZooScale;
  e.claimed_q = ClaimedQFamily{
      "every nonempty set of limit-row points, and the up-closure of every "
      "finite nonempty set of interior points",
      false, [](const Truncation& t) { return grid_claimed_q(t, false); },
      [](const Truncation& t) { return grid_union_hull(t, false); }};
  e.claimed_kirr = principal_filters_only;
  e.filtered_witnesses.push_back(limit_row_filtered_witness(false));
  e.residual_cases = grid_residual_cases(e.poset, false);
  e.claims = {
      {"the order clauses form a partial order", ClaimStatus::Executable,
       "order-axioms", {50},
       "checked over the element stream prefix", ""},
      {"the compact saturated sets are the limit-row subsets together with "
       "the filters of finite sets of interior points",
       ClaimStatus::Executable, "q-soundness", {},
       "the recorded one-line family omits unions mixing a limit-row part "
       "with a grid filter, which are compact too; the run checks the "
       "computed family is exactly the union hull of the claimed shapes",
       ""},
      {"the k-irreducible members are exactly the principal filters",
       ClaimStatus::Executable, "kirr-shape", {},
       "finite fragments satisfy this outright; supporting evidence", ""},
      {"residual analysis: an interior point's residual is generated by the "
       "next point up together with the limit point matching its row; limit "
       "points have empty residuals",
       ClaimStatus::Executable, "kd-cases", {30},
       "the recorded single-generator shorthand misses the matching limit "
       "point off the diagonal; the delta is tallied, not failed", ""},
      {"not well-filtered: the co-finite limit-row filters have empty "
       "intersection, yet no member is empty",
       ClaimStatus::Executable, "wwf-failure", {50, 4},
       "family and escapes are checked symbolically; the weak variant is "
       "inapplicable because the target open is empty", ""},
      {"weakly well-filtered", ClaimStatus::RecordedOnly, "", {},
       "finite fragments are well-filtered outright",
       "the full-space argument needs infinite filtered families"},
      {"the Scott space is not sober", ClaimStatus::RecordedOnly, "", {},
       "destroyed by truncation",
       "finite Scott spaces are sober; the failure lives in the full space"},
      {"not quasicontinuous", ClaimStatus::RecordedOnly, "", {},
       "destroyed by truncation",
       "finite posets are quasicontinuous outright"},
      {"the compact-saturated family determines the space among posets",
       ClaimStatus::RecordedOnly, "", {},
       "the finite analogue is scanned exhaustively in the experiments "
       "component",
       "quantifies over all posets"},
  };
  return e;
}

ZooEntry make_grid_top() {
  ZooEntry e;
  e.poset = std::make_shared<GridWithLimitRowAndTop>();
  e.default_scale = limits::kZooScale;
  e.claimed_q = ClaimedQFamily{
      "every set of limit-row points extended by the top, and the "
      "up-closure of every finite nonempty set of interior points",
      false, [](const Truncation& t) { return grid_claimed_q(t, true); },
      [](const Truncation& t) { return grid_union_hull(t, true); }};
  e.filtered_witnesses.push_back(limit_row_filtered_witness(true));
  e.residual_cases = grid_residual_cases(e.poset, true);
  e.claims = {
      {"the order clauses form a partial order", ClaimStatus::Executable,
       "order-axioms", {50},
       "checked over the element stream prefix", ""},
      {"the compact saturated sets are the limit-row subsets extended by "
       "the top together with the filters of finite sets of interior "
       "points",
       ClaimStatus::Executable, "q-soundness", {},
       "the recorded one-line family omits unions mixing a limit-row part "
       "with a grid filter, which are compact too; the run checks the "
       "computed family is exactly the union hull of the claimed shapes",
       ""},
      {"residual analysis: interior points step to the next point up with "
       "the matching limit point, limit points leave exactly the top, and "
       "the top leaves nothing",
       ClaimStatus::Executable, "kd-cases", {30},
       "the recorded single-generator shorthand misses the matching limit "
       "point off the diagonal; the delta is tallied, not failed", ""},
      {"the space is residual-compact throughout", ClaimStatus::Executable,
       "prop:kd:true", {},
       "fragments decide this outright; the case analysis above carries the "
       "content", ""},
      {"the Scott space is co-sober", ClaimStatus::Executable,
       "prop:co-sober:true", {},
       "finite fragments are co-sober outright; supporting evidence", ""},
      {"not weakly well-filtered: the co-finite limit-row filters shrink to "
       "the top alone, yet none fits inside it",
       ClaimStatus::Executable, "wwf-failure", {50, 4},
       "family, intersection and escapes are checked symbolically on the "
       "fragment", ""},
      {"the compact-saturated family determines the space among posets",
       ClaimStatus::RecordedOnly, "", {},
       "the finite analogue is scanned exhaustively in the experiments "
       "component",
       "quantifies over all posets"},
  };
  return e;
}

std::string join_labels(const SymbolicPoset& s,
                        const std::vector<ZooElement>& elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += s.label(elems[i]);
  }
  return out;
}

std::vector<std::string> set_name_sample(const FinitePoset& p,
                                         const std::set<Bits>& sets,
                                         std::size_t cap) {
  std::vector<std::string> out;
  for (const Bits& s : sets) {
    if (out.size() == cap) break;
    out.push_back(set_names(p, s));
  }
  return out;
}

}  // namespace

const std::vector<ZooEntry>& zoo_catalog() {
  static const std::vector<ZooEntry> entries = [] {
    std::vector<ZooEntry> v;
    v.push_back(make_e23());
    v.push_back(make_e33());
    v.push_back(make_flat());
    v.push_back(make_tower());
    v.push_back(make_grid());
    v.push_back(make_grid_top());
    return v;
  }();
  return entries;
}

const std::vector<std::string>& zoo_entry_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const ZooEntry& e : zoo_catalog()) v.push_back(e.poset->name());
    return v;
  }();
  return names;
}

const ZooEntry& zoo_entry(const std::string& name) {
  for (const ZooEntry& e : zoo_catalog())
    if (e.poset->name() == name) return e;
  std::string known;
  for (const std::string& n : zoo_entry_names()) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw PreconditionError("unknown zoo entry: " + name + " (known: " + known +
                          ")");
}

// ---- bounded verification ----

PropertyReport verify_order_axioms(const SymbolicPoset& s, int bound) {
  if (bound < 1) throw PreconditionError("order-axiom bound must be positive");
  PropertyReport r;
  r.property = "order-axioms";
  r.bounds = {{"element_bound", bound}};
  std::vector<ZooElement> elems = s.first_elements(bound);
  const int n = static_cast<int>(elems.size());

  auto fail = [&](const char* law, std::vector<ZooElement> at) {
    r.verdict = Verdict::False;
    r.witness = {{"violation", law}, {"elements", nlohmann::json::array()}};
    for (const ZooElement& e : at) r.witness["elements"].push_back(s.label(e));
    r.notes = std::string(law) + " fails on the element stream";
    return r;
  };

  for (int i = 0; i < n; ++i)
    if (!s.leq(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(i)]))
      return fail("reflexivity", {elems[static_cast<std::size_t>(i)]});
  // leq matrix once; triples read it.
  std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                    std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          s.leq(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
          le[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        return fail("antisymmetry", {elems[static_cast<std::size_t>(i)],
                                     elems[static_cast<std::size_t>(j)]});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      for (int k = 0; k < n; ++k)
        if (le[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
            !le[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
          return fail("transitivity",
                      {elems[static_cast<std::size_t>(i)],
                       elems[static_cast<std::size_t>(j)],
                       elems[static_cast<std::size_t>(k)]});
    }

  r.verdict = Verdict::True;
  r.notes = "reflexivity, antisymmetry and transitivity hold over the first " +
            std::to_string(n) + " stream elements";
  return r;
}

PropertyReport verify_claimed_q_soundness(const ZooEntry& e, int scale) {
  const SymbolicPoset& s = *e.poset;
  if (!e.claimed_q)
    throw PreconditionError(s.name() +
                            " has no claimed compact-saturated family");
  PropertyReport r;
  r.property = "claimed-q-soundness";
  r.bounds = {{"scale", scale}};
  Truncation t = s.truncate(scale);
  QFamily q = compute_q_family(t.poset);
  std::set<Bits> claimed;
  for (const Bits& m : e.claimed_q->members(t)) claimed.insert(m);

  for (const Bits& m : claimed) {
    if (m.empty()) {
      r.verdict = Verdict::False;
      r.notes = "a claimed member restricts to the empty set";
      return r;
    }
    if (!t.poset.is_upper_set(m)) {
      r.verdict = Verdict::False;
      r.witness = {{"not_an_upper_set", set_names(t.poset, m)}};
      r.notes = "a claimed member is not saturated on the fragment";
      return r;
    }
    if (q.index_of(m) < 0) {
      r.verdict = Verdict::False;
      r.witness = {{"missing_member", set_names(t.poset, m)}};
      r.notes = "a claimed member is absent from the computed family";
      return r;
    }
  }

  std::set<Bits> computed(q.members.begin(), q.members.end());
  std::set<Bits> extras;
  for (const Bits& m : computed)
    if (!claimed.count(m)) extras.insert(m);

  r.notes = "computed family has " + std::to_string(computed.size()) +
            " members; the claimed restriction has " +
            std::to_string(claimed.size());
  if (e.claimed_q->exact_on_truncations) {
    if (!extras.empty()) {
      r.verdict = Verdict::False;
      r.witness = {{"unexpected_members",
                    set_name_sample(t.poset, extras, 5)}};
      r.notes += "; the family was claimed exact but has extras";
      return r;
    }
    r.notes += "; exact match";
  } else if (e.claimed_q->union_hull) {
    std::set<Bits> hull;
    for (const Bits& m : e.claimed_q->union_hull(t)) hull.insert(m);
    if (hull != computed) {
      std::set<Bits> off;
      for (const Bits& m : computed)
        if (!hull.count(m)) off.insert(m);
      for (const Bits& m : hull)
        if (!computed.count(m)) off.insert(m);
      r.verdict = Verdict::False;
      r.witness = {{"hull_mismatch", set_name_sample(t.poset, off, 5)}};
      r.notes += "; the computed family deviates from the union hull of the "
                 "claimed shapes";
      return r;
    }
    r.notes += "; the " + std::to_string(extras.size()) +
               " extras are exactly the unions mixing the claimed shapes, "
               "which the recorded description omits";
    if (!extras.empty())
      r.witness = {{"extras", extras.size()},
                   {"sample", set_name_sample(t.poset, extras, 5)}};
  } else {
    r.notes += "; " + std::to_string(extras.size()) +
               " members beyond the claimed restriction are permitted "
               "(soundness-only check)";
    if (!extras.empty())
      r.witness = {{"extras", extras.size()},
                   {"sample", set_name_sample(t.poset, extras, 5)}};
  }
  r.verdict = Verdict::True;
  return r;
}

PropertyReport verify_noncompactness(const SymbolicPoset& s,
                                     const NonCompactnessWitness& w,
                                     int element_bound, int subfamily_bound) {
  if (element_bound < 1 || subfamily_bound < 1)
    throw PreconditionError("witness bounds must be positive");
  if (subfamily_bound > 16)
    throw ResourceError("subfamily enumeration is bounded at 16 cover members");
  PropertyReport r;
  r.property = "non-compactness";
  r.bounds = {{"element_bound", element_bound},
              {"subfamily_bound", subfamily_bound}};
  std::vector<ZooElement> elems = s.first_elements(element_bound);

  // (i) the cover reaches every fragment target element.
  std::set<int> used;
  for (const ZooElement& e : elems) {
    if (!w.in_target(e)) continue;
    int found = -1;
    for (int i = 0; i < element_bound && found < 0; ++i)
      if (w.in_cover_member(i, e)) found = i;
    if (found < 0) {
      r.verdict = Verdict::False;
      r.witness = {{"uncovered", s.label(e)}};
      r.notes = "the cover misses a target element within the bound";
      return r;
    }
    used.insert(found);
  }
  for (int i = 0; i < subfamily_bound; ++i) used.insert(i);

  // (ii) every used cover member is an upper set on the fragment.
  for (int i : used)
    for (const ZooElement& x : elems) {
      if (!w.in_cover_member(i, x)) continue;
      for (const ZooElement& y : elems)
        if (s.leq(x, y) && !w.in_cover_member(i, y)) {
          r.verdict = Verdict::False;
          r.witness = {{"member", w.cover_member_name(i)},
                       {"contains", s.label(x)},
                       {"misses", s.label(y)}};
          r.notes = "a cover member is not an upper set on the fragment";
          return r;
        }
    }

  // (iii) the escape element defeats every inspected subfamily.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << subfamily_bound);
       ++mask) {
    std::vector<int> f;
    for (int i = 0; i < subfamily_bound; ++i)
      if (mask >> i & 1) f.push_back(i);
    ZooElement esc = w.escape(f);
    if (!s.contains(esc))
      throw WitnessError("escape element is not in the poset");
    if (!w.in_target(esc))
      throw WitnessError("escape element left the target: " + s.label(esc));
    for (int i : f)
      if (w.in_cover_member(i, esc))
        throw WitnessError("escape element is covered by " +
                           w.cover_member_name(i));
  }

  r.verdict = Verdict::True;
  r.notes = "witnessed non-compactness at the bounds: the cover reaches the "
            "fragment target and every inspected subfamily is escaped";
  std::vector<int> all;
  for (int i = 0; i < subfamily_bound; ++i) all.push_back(i);
  r.witness = {{"target", w.target_description},
               {"first_cover_members", nlohmann::json::array()},
               {"escape_of_first_subfamily", s.label(w.escape(all))}};
  for (int i = 0; i < std::min(subfamily_bound, 4); ++i)
    r.witness["first_cover_members"].push_back(w.cover_member_name(i));
  return r;
}

PropertyReport verify_wwf_failure(const SymbolicPoset& s,
                                  const FilteredFamilyWitness& w,
                                  int element_bound, int subfamily_bound) {
  if (element_bound < 1 || subfamily_bound < 1)
    throw PreconditionError("witness bounds must be positive");
  PropertyReport r;
  r.property = "wwf-failure";
  r.bounds = {{"element_bound", element_bound},
              {"subfamily_bound", subfamily_bound}};
  std::vector<ZooElement> elems = s.first_elements(element_bound);
  const int n = static_cast<int>(elems.size());

  // The target open must be an upper set on the fragment.
  for (const ZooElement& x : elems)
    for (const ZooElement& y : elems)
      if (w.in_target_open(x) && s.leq(x, y) && !w.in_target_open(y)) {
        r.verdict = Verdict::False;
        r.witness = {{"target_not_upper_at", s.label(y)}};
        r.notes = "the target open is not an upper set on the fragment";
        return r;
      }

  // Index sets: subsets of the in-fragment removable universe of size at
  // most subfamily_bound. Including every singleton is what lets the
  // generated intersection collapse to the claimed one.
  std::vector<ZooElement> universe;
  for (const ZooElement& e : elems)
    if (w.in_index_universe(e)) universe.push_back(e);
  if (universe.size() > 20)
    throw ResourceError("removable universe enumeration is bounded at 20");
  std::vector<std::vector<ZooElement>> index_sets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size());
       ++mask) {
    std::vector<ZooElement> f;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1) f.push_back(universe[i]);
    if (static_cast<int>(f.size()) <= subfamily_bound)
      index_sets.push_back(std::move(f));
  }

  std::vector<Bits> masks;
  masks.reserve(index_sets.size());
  for (const std::vector<ZooElement>& f : index_sets) {
    Bits m(n);
    for (int i = 0; i < n; ++i)
      if (w.in_member(f, elems[static_cast<std::size_t>(i)])) m.set(i);
    masks.push_back(m);
  }

  // Members are upper sets on the fragment.
  for (std::size_t fi = 0; fi < index_sets.size(); ++fi)
    for (int i = 0; i < n; ++i) {
      if (!masks[fi].test(i)) continue;
      for (int j = 0; j < n; ++j)
        if (s.leq(elems[static_cast<std::size_t>(i)],
                  elems[static_cast<std::size_t>(j)]) &&
            !masks[fi].test(j)) {
          r.verdict = Verdict::False;
          r.witness = {{"member_not_upper",
                        join_labels(s, index_sets[fi])},
                       {"misses", s.label(elems[static_cast<std::size_t>(j)])}};
          r.notes = "a family member is not an upper set on the fragment";
          return r;
        }
    }

  // (i) filtered: the member of a union index set lies inside both.
  for (std::size_t a = 0; a < index_sets.size(); ++a)
    for (std::size_t b = a; b < index_sets.size(); ++b) {
      std::vector<ZooElement> un = index_sets[a];
      for (const ZooElement& e : index_sets[b])
        if (std::find(un.begin(), un.end(), e) == un.end()) un.push_back(e);
      Bits both = masks[a] & masks[b];
      for (int i = 0; i < n; ++i)
        if (w.in_member(un, elems[static_cast<std::size_t>(i)]) &&
            !both.test(i)) {
          r.verdict = Verdict::False;
          r.witness = {{"not_filtered_at",
                        s.label(elems[static_cast<std::size_t>(i)])}};
          r.notes = "the family is not filtered on the fragment";
          return r;
        }
    }

  // (ii) the intersection of the generated members sits in the target.
  Bits inter = Bits::full(n);
  for (const Bits& m : masks) inter &= m;
  for (int i = 0; i < n; ++i)
    if (inter.test(i) &&
        !w.in_target_open(elems[static_cast<std::size_t>(i)])) {
      r.verdict = Verdict::False;
      r.witness = {{"intersection_escapes_target",
                    s.label(elems[static_cast<std::size_t>(i)])}};
      r.notes = "not a witness at these bounds: the generated intersection "
                "is not inside the target open";
      return r;
    }

  // (iii) every member keeps an element outside the target.
  for (const std::vector<ZooElement>& f : index_sets) {
    std::optional<ZooElement> esc = w.escape(f);
    if (!esc) {
      r.verdict = Verdict::False;
      r.witness = {{"no_escape_for", join_labels(s, f)}};
      r.notes = "not a witness: a member has no element outside the target";
      return r;
    }
    if (!s.contains(*esc))
      throw WitnessError("escape element is not in the poset");
    if (!w.in_member(f, *esc))
      throw WitnessError("escape element is not in its member: " +
                         s.label(*esc));
    if (w.in_target_open(*esc))
      throw WitnessError("escape element lies in the target open: " +
                         s.label(*esc));
  }

  r.verdict = Verdict::True;
  r.notes = w.target_open_is_empty
                ? "witnessed well-filteredness failure at the bounds; the "
                  "weak variant is inapplicable because the target open is "
                  "empty"
                : "witnessed weak-well-filteredness failure at the bounds";
  r.witness = {{"family", w.family_description},
               {"target", w.target_description},
               {"removable_universe", nlohmann::json::array()},
               {"index_sets", index_sets.size()}};
  for (const ZooElement& e : universe)
    r.witness["removable_universe"].push_back(s.label(e));
  return r;
}

PropertyReport verify_nonprincipal(const SymbolicPoset& s,
                                   const NonPrincipalTarget& target,
                                   int bound) {
  if (bound < 1) throw PreconditionError("scan bound must be positive");
  PropertyReport r;
  r.property = "non-principal";
  r.bounds = {{"candidate_bound", bound}, {"search_window", 2 * bound + 2}};
  std::vector<ZooElement> window = s.first_elements(2 * bound + 2);

  for (int i = 0; i < bound && i < static_cast<int>(window.size()); ++i) {
    const ZooElement& x = window[static_cast<std::size_t>(i)];
    // x outside the target already separates it: x is in up(x), not in the
    // target, so the two sets differ.
    if (!target.in_target(x)) continue;
    bool separated = false;
    for (const ZooElement& y : window)
      if (target.in_target(y) && !s.leq(x, y)) {
        separated = true;
        break;
      }
    if (!separated) {
      r.verdict = Verdict::False;
      r.witness = {{"principal_at", s.label(x)}};
      r.notes = "within the bounds the target could be the saturate of this "
                "point";
      return r;
    }
  }

  r.verdict = Verdict::True;
  r.notes = "the target is the saturate of none of the first " +
            std::to_string(bound) + " elements";
  r.witness = {{"target", target.description}};
  return r;
}

PropertyReport verify_residual_cases(const SymbolicPoset& s,
                                     const std::vector<ResidualCase>& cases,
                                     int bound) {
  if (bound < 1) throw PreconditionError("case-analysis bound must be positive");
  if (cases.empty())
    throw PreconditionError("case analysis needs at least one case");
  PropertyReport r;
  r.property = "residual-cases";
  r.bounds = {{"element_bound", bound}};
  std::vector<ZooElement> elems = s.first_elements(bound);

  std::size_t deltas = 0;
  std::vector<std::string> delta_sample;
  std::vector<std::string> noncompact_cases;
  for (const ResidualCase& c : cases)
    if (!c.residual_claimed_compact) noncompact_cases.push_back(c.case_name);

  for (const ZooElement& x : elems) {
    const ResidualCase* match = nullptr;
    int matches = 0;
    for (const ResidualCase& c : cases)
      if (c.applies(x)) {
        match = &c;
        ++matches;
      }
    if (matches != 1) {
      r.verdict = Verdict::False;
      r.witness = {{"element", s.label(x)}, {"matching_cases", matches}};
      r.notes = "the case analysis does not split the fragment: an element "
                "matches " +
                std::to_string(matches) + " cases";
      return r;
    }
    for (const ZooElement& y : elems) {
      bool actual = !(x == y) && s.leq(x, y);
      if (actual != match->expected(x, y)) {
        r.verdict = Verdict::False;
        r.witness = {{"case", match->case_name},
                     {"element", s.label(x)},
                     {"at", s.label(y)},
                     {"residual_membership", actual}};
        r.notes = "a residual deviates from its case's expectation";
        return r;
      }
      if (match->recorded && match->recorded(x, y) != actual) {
        ++deltas;
        if (delta_sample.size() < 3)
          delta_sample.push_back("residual of " + s.label(x) + " at " +
                                 s.label(y));
      }
    }
  }

  r.verdict = Verdict::True;
  r.notes = "every fragment residual matches its case";
  if (deltas) {
    r.notes += "; the recorded shorthand deviates at " +
               std::to_string(deltas) + " fragment memberships";
    r.witness = {{"recorded_form_deltas", deltas},
                 {"sample", delta_sample}};
  }
  if (!noncompact_cases.empty()) {
    r.notes += "; claimed non-compact residual case: ";
    for (std::size_t i = 0; i < noncompact_cases.size(); ++i) {
      if (i) r.notes += ", ";
      r.notes += noncompact_cases[i];
    }
  }
  return r;
}

PropertyReport verify_truncation_coherence(const SymbolicPoset& s, int lo,
                                           int hi) {
  if (lo < 1 || hi < lo)
    throw PreconditionError("coherence scales must satisfy 1 <= lo <= hi");
  PropertyReport r;
  r.property = "truncation-coherence";
  r.bounds = {{"scale_lo", lo}, {"scale_hi", hi}};

  Truncation prev = s.truncate(lo);
  for (int scale = lo + 1; scale <= hi; ++scale) {
    Truncation next = s.truncate(scale);
    std::set<ZooElement> in_next(next.elements.begin(), next.elements.end());
    Bits mask(next.poset.size());
    for (const ZooElement& e : prev.elements) {
      int j = next.index_of(e);
      if (j < 0) {
        r.verdict = Verdict::False;
        r.witness = {{"lost_element", s.label(e)}, {"scale", scale}};
        r.notes = "fragments are not monotone in the scale";
        return r;
      }
      mask.set(j);
    }
    FinitePoset induced = next.poset.induced(mask);
    bool same = induced.size() == prev.poset.size();
    for (int i = 0; same && i < induced.size(); ++i) {
      if (induced.label(i) != prev.poset.label(i)) same = false;
      for (int j = 0; same && j < induced.size(); ++j)
        if (induced.leq(i, j) != prev.poset.leq(i, j)) same = false;
    }
    if (!same) {
      r.verdict = Verdict::False;
      r.witness = {{"scale", scale}};
      r.notes = "a truncation is not the induced sub-poset of the next scale";
      return r;
    }
    prev = std::move(next);
  }

  r.verdict = Verdict::True;
  r.notes = "fragments grow monotonically and each truncation is induced "
            "from the next";
  return r;
}

// ---- claim dispatch ----

namespace {

int bound_or(const std::vector<int>& b, std::size_t i, int dflt) {
  return i < b.size() ? b[i] : dflt;
}

PropertyReport run_property_expectation(const ZooEntry& e,
                                        const std::string& action,
                                        int scale) {
  // action = "prop:<name>:<true|false>"
  std::string rest = action.substr(5);
  std::size_t colon = rest.rfind(':');
  if (colon == std::string::npos)
    throw PreconditionError("malformed property action: " + action);
  std::string prop = rest.substr(0, colon);
  std::string want = rest.substr(colon + 1);
  if (want != "true" && want != "false")
    throw PreconditionError("malformed property action: " + action);
  bool expected = want == "true";

  Truncation t = e.poset->truncate(scale);
  PropertyReport inner = evaluate_property(t.poset, prop);
  PropertyReport r;
  r.property = action;
  r.bounds = {{"scale", scale}};
  r.witness = inner.witness;
  if (inner.verdict == Verdict::NotComputed) {
    r.verdict = Verdict::NotComputed;
    r.notes = "fragment evaluation did not complete: " + inner.notes;
    return r;
  }
  bool got = inner.verdict == Verdict::True;
  r.verdict = got == expected ? Verdict::True : Verdict::False;
  r.notes = "fragment evaluation of '" + prop + "' returned " +
            verdict_name(inner.verdict) + ", expected " + want;
  return r;
}

PropertyReport run_co_compact_comparison(const ZooEntry& e, int scale) {
  if (!e.claimed_co_compact)
    throw PreconditionError(e.poset->name() +
                            " has no claimed co-compact closed family");
  PropertyReport r;
  r.property = "co-compact-closeds";
  r.bounds = {{"scale", scale}};
  Truncation t = e.poset->truncate(scale);
  QFamily q = compute_q_family(t.poset);
  FiniteTopology co = co_compact_closed_sets(t.poset, q);
  std::set<Bits> computed(co.sets.begin(), co.sets.end());
  std::set<Bits> claimed;
  for (const Bits& m : e.claimed_co_compact(t)) claimed.insert(m);
  claimed.insert(t.poset.empty_set());

  std::set<Bits> surplus, missing;
  for (const Bits& m : computed)
    if (!claimed.count(m)) surplus.insert(m);
  for (const Bits& m : claimed)
    if (!computed.count(m)) missing.insert(m);
  if (!surplus.empty() || !missing.empty()) {
    r.verdict = Verdict::False;
    r.witness = {{"unclaimed", set_name_sample(t.poset, surplus, 5)},
                 {"unrealized", set_name_sample(t.poset, missing, 5)}};
    r.notes = "the co-compact closed family deviates from the claimed one";
    return r;
  }
  r.verdict = Verdict::True;
  r.notes = "the co-compact closed family matches the claimed description (" +
            std::to_string(computed.size()) + " sets)";
  return r;
}

PropertyReport run_co_compact_td(const ZooEntry& e, int scale) {
  PropertyReport r;
  r.property = "co-compact-td";
  r.bounds = {{"scale", scale}};
  Truncation t = e.poset->truncate(scale);
  QFamily q = compute_q_family(t.poset);
  FiniteTopology co = co_compact_closed_sets(t.poset, q);
  bool td = is_td(co);
  r.verdict = td ? Verdict::True : Verdict::False;
  r.notes = std::string("the co-compact space of the fragment ") +
            (td ? "is" : "is not") + " T_D";
  return r;
}

PropertyReport run_kirr_shape(const ZooEntry& e, int scale) {
  if (!e.claimed_kirr)
    throw PreconditionError(e.poset->name() +
                            " has no claimed k-irreducible shape");
  PropertyReport r;
  r.property = "kirr-shape";
  r.bounds = {{"scale", scale}};
  Truncation t = e.poset->truncate(scale);
  QFamily q = compute_q_family(t.poset);
  std::set<Bits> got;
  for (int i : kirr_members(q))
    got.insert(q.members[static_cast<std::size_t>(i)]);
  std::set<Bits> want;
  for (const Bits& m : e.claimed_kirr(t)) want.insert(m);

  if (got != want) {
    std::set<Bits> surplus, missing;
    for (const Bits& m : got)
      if (!want.count(m)) surplus.insert(m);
    for (const Bits& m : want)
      if (!got.count(m)) missing.insert(m);
    r.verdict = Verdict::False;
    r.witness = {{"unclaimed", set_name_sample(t.poset, surplus, 5)},
                 {"unrealized", set_name_sample(t.poset, missing, 5)}};
    r.notes = "the k-irreducible members deviate from the claimed shape";
    return r;
  }
  r.verdict = Verdict::True;
  r.notes = "the k-irreducible members match the claimed shape (" +
            std::to_string(got.size()) + " members)";
  return r;
}

PropertyReport run_chain_decomp_bottom(const ZooEntry& e, int scale) {
  PropertyReport r;
  r.property = "chain-decomp-bottom";
  r.bounds = {{"scale", scale}};
  Truncation t = e.poset->truncate(scale);
  bool cond = decomposition_condition(t.poset, DecompositionKind::Chain);
  Bits non_chain(t.poset.size());
  for (int x = 0; x < t.poset.size(); ++x)
    if (!t.poset.is_chain(t.poset.up(x))) non_chain.set(x);
  Bits mins = t.poset.minimal_elements(t.poset.full_set());

  std::vector<std::string> names;
  non_chain.for_each([&](int i) { names.push_back(t.poset.label(i)); });
  r.witness = {{"non_chain_up_sets_at", names}};
  if (!cond && mins.count() == 1 && non_chain == mins) {
    r.verdict = Verdict::True;
    r.notes = "the chain decomposition fails exactly at the bottom";
  } else {
    r.verdict = Verdict::False;
    r.notes = "the chain decomposition does not fail exactly at the bottom "
              "on this fragment";
  }
  return r;
}

PropertyReport run_compact_residual_decomp(const ZooEntry& e, int scale) {
  PropertyReport r;
  r.property = "compact-residual-decomp";
  r.bounds = {{"scale", scale}};
  Truncation t = e.poset->truncate(scale);
  bool cond =
      decomposition_condition(t.poset, DecompositionKind::CompactResidual);
  r.verdict = cond ? Verdict::True : Verdict::False;
  r.notes = std::string("the compact-residual decomposition ") +
            (cond ? "holds" : "fails") + " on the fragment";
  return r;
}

PropertyReport run_claim_action(const ZooEntry& e, const ZooClaim& c) {
  const SymbolicPoset& s = *e.poset;
  const std::vector<int>& b = c.bounds;
  const std::string& a = c.action;
  if (a == "order-axioms") return verify_order_axioms(s, bound_or(b, 0, 50));
  if (a == "q-soundness")
    return verify_claimed_q_soundness(e, bound_or(b, 0, e.default_scale));
  if (a == "noncompact") {
    if (e.noncompact_witnesses.empty())
      throw PreconditionError(s.name() + " has no non-compactness witness");
    return verify_noncompactness(s, e.noncompact_witnesses.front(),
                                 bound_or(b, 0, limits::kElementBound),
                                 bound_or(b, 1, limits::kSubfamilyBound));
  }
  if (a == "wwf-failure") {
    if (e.filtered_witnesses.empty())
      throw PreconditionError(s.name() + " has no filtered-family witness");
    return verify_wwf_failure(s, e.filtered_witnesses.front(),
                              bound_or(b, 0, limits::kElementBound),
                              bound_or(b, 1, limits::kSubfamilyBound));
  }
  if (a == "nonprincipal") {
    if (e.nonprincipal_targets.empty())
      throw PreconditionError(s.name() + " has no non-principality target");
    return verify_nonprincipal(s, e.nonprincipal_targets.front(),
                               bound_or(b, 0, 20));
  }
  if (a == "kd-cases") {
    if (e.residual_cases.empty())
      throw PreconditionError(s.name() + " has no residual case analysis");
    return verify_residual_cases(s, e.residual_cases, bound_or(b, 0, 30));
  }
  if (a == "co-compact")
    return run_co_compact_comparison(e, bound_or(b, 0, e.default_scale));
  if (a == "co-compact-td")
    return run_co_compact_td(e, bound_or(b, 0, e.default_scale));
  if (a == "kirr-shape")
    return run_kirr_shape(e, bound_or(b, 0, e.default_scale));
  if (a == "chain-decomp-bottom")
    return run_chain_decomp_bottom(e, bound_or(b, 0, e.default_scale));
  if (a == "compact-residual-decomp")
    return run_compact_residual_decomp(e, bound_or(b, 0, e.default_scale));
  if (a.rfind("prop:", 0) == 0)
    return run_property_expectation(e, a, bound_or(b, 0, e.default_scale));
  throw PreconditionError("unknown zoo action: " + a);
}

}  // namespace

PropertyReport run_zoo_action(const ZooEntry& e, const std::string& action,
                              const std::vector<int>& bounds) {
  if (action == "coherence")
    return verify_truncation_coherence(*e.poset, 1, bound_or(bounds, 0, 5));
  ZooClaim c;
  c.status = ClaimStatus::Executable;
  c.action = action;
  c.bounds = bounds;
  return run_claim_action(e, c);
}

std::vector<PropertyReport> run_zoo_claims(const ZooEntry& e) {
  std::vector<PropertyReport> out;
  for (const ZooClaim& c : e.claims) {
    if (c.status == ClaimStatus::RecordedOnly) {
      PropertyReport r;
      r.property = "recorded-claim";
      r.verdict = Verdict::NotComputed;
      r.witness = {{"statement", c.statement}};
      r.notes = "recorded-only: " + c.reason;
      if (!c.truncation_note.empty())
        r.notes += " [truncation: " + c.truncation_note + "]";
      out.push_back(std::move(r));
      continue;
    }
    PropertyReport r = run_claim_action(e, c);
    r.notes = c.statement + " — " + r.notes;
    if (!c.truncation_note.empty())
      r.notes += " [truncation: " + c.truncation_note + "]";
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json zoo_claims_to_json(const ZooEntry& e) {
  nlohmann::json claims = nlohmann::json::array();
  for (const ZooClaim& c : e.claims) {
    nlohmann::json j{
        {"statement", c.statement},
        {"status",
         c.status == ClaimStatus::Executable ? "executable" : "recorded-only"}};
    if (!c.action.empty()) j["action"] = c.action;
    if (!c.bounds.empty()) j["bounds"] = c.bounds;
    if (!c.truncation_note.empty()) j["truncation_note"] = c.truncation_note;
    if (!c.reason.empty()) j["reason"] = c.reason;
    claims.push_back(std::move(j));
  }
  return nlohmann::json{{"entry", e.poset->name()},
                        {"title", e.poset->title()},
                        {"default_scale", e.default_scale},
                        {"caveats", e.poset->truncation_caveats()},
                        {"claims", std::move(claims)}};
}

}  // namespace scottq
