#include "scottq/topology.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace scottq {

namespace {

std::vector<Bits> complement_all(const std::vector<Bits>& sets, int ground) {
  std::vector<Bits> out;
  out.reserve(sets.size());
  for (const Bits& s : sets) out.push_back(Bits::full(ground) - s);
  return out;
}

void sort_family(std::vector<Bits>& family) {
  std::sort(family.begin(), family.end(), [](const Bits& a, const Bits& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca > cb;
    return a < b;
  });
}

}  // namespace

std::vector<Bits> FiniteTopology::opens() const {
  return form == SetForm::Opens ? sets : complement_all(sets, ground);
}

std::vector<Bits> FiniteTopology::closeds() const {
  return form == SetForm::Closeds ? sets : complement_all(sets, ground);
}

bool FiniteTopology::is_valid() const {
  std::unordered_set<Bits, BitsHash> family(sets.begin(), sets.end());
  if (!family.count(Bits(ground)) || !family.count(Bits::full(ground)))
    return false;
  for (const Bits& a : sets)
    for (const Bits& b : sets)
      if (!family.count(a | b) || !family.count(a & b)) return false;
  return true;
}

bool is_scott_open_definitional(const FinitePoset& p, const Bits& u,
                                const ScottOptions& opt) {
  const int n = p.size();
  if (n > opt.definitional_max)
    throw ResourceError("definitional Scott-open test is bounded at " +
                        std::to_string(opt.definitional_max) + " elements");
  if (!p.is_upper_set(u)) return false;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    Bits d(n);
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) d.set(i);
    if (!p.is_directed(d)) continue;
    auto s = p.sup(d);
    if (s && u.test(*s) && !d.intersects(u)) return false;
  }
  return true;
}

namespace {

// Direct upper-set enumeration for carriers too big for the subset scan.
// Scott opens of a finite poset are exactly its upper sets; the law tests
// pin the two paths against each other on every small poset.
void upper_sets_rec(const FinitePoset& p, const std::vector<int>& order,
                    std::size_t at, Bits current, std::vector<Bits>& out,
                    std::size_t cap) {
  if (out.size() > cap)
    throw ResourceError("Scott-open family exceeded the configured cap");
  if (at == order.size()) {
    out.push_back(current);
    return;
  }
  int x = order[at];
  // Exclude x.
  upper_sets_rec(p, order, at + 1, current, out, cap);
  // Include x only when everything strictly above is already in: elements
  // are visited maximals-first, so up(x) minus {x} has been decided.
  Bits above = p.up(x);
  above.reset(x);
  if (above.is_subset_of(current)) {
    current.set(x);
    upper_sets_rec(p, order, at + 1, current, out, cap);
  }
}

std::vector<int> maximals_first_order(const FinitePoset& p) {
  // Order by descending up-set size is a linear extension from the top.
  std::vector<int> order(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return p.up(a).count() < p.up(b).count();
  });
  return order;
}

}  // namespace

FiniteTopology scott_opens(const FinitePoset& p, const ScottOptions& opt) {
  const int n = p.size();
  FiniteTopology t;
  t.ground = n;
  t.labels = p.labels();
  t.form = SetForm::Opens;

  if (n <= opt.definitional_max) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Bits u(n);
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) u.set(i);
      if (is_scott_open_definitional(p, u, opt)) t.sets.push_back(u);
      if (t.sets.size() > opt.open_cap)
        throw ResourceError("Scott-open family exceeded the configured cap");
    }
  } else {
    upper_sets_rec(p, maximals_first_order(p), 0, Bits(n), t.sets, opt.open_cap);
  }
  sort_family(t.sets);
  return t;
}

bool is_saturated(const FiniteTopology& t, const Bits& s) {
  Bits inter = Bits::full(t.ground);
  for (const Bits& u : t.opens())
    if (s.is_subset_of(u)) inter &= u;
  return inter == s;
}

bool is_compact(const FiniteTopology& t, const Bits& s) {
  (void)t;
  (void)s;
  // Finite ground set: any cover is already finite.
  return true;
}

bool is_compact_by_covers(const FiniteTopology& t, const Bits& s) {
  // Walks every subfamily that covers s and confirms a finite subcover
  // exists. On a finite ground family the subfamily is its own finite
  // subcover, so a cover without one cannot occur; the loop is the point.
  std::vector<Bits> opens = t.opens();
  const std::size_t k = opens.size();
  if (k > 20)
    throw ResourceError("cover enumeration is bounded at 20 opens");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    Bits unioned(t.ground);
    for (std::size_t i = 0; i < k; ++i)
      if (m >> i & 1) unioned |= opens[i];
    if (!s.is_subset_of(unioned)) continue;  // not a cover
    bool finite_subcover_exists = false;
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
      Bits part(t.ground);
      for (std::size_t i = 0; i < k; ++i)
        if (sub >> i & 1) part |= opens[i];
      if (s.is_subset_of(part)) {
        finite_subcover_exists = true;
        break;
      }
      if (sub == 0) break;
    }
    if (!finite_subcover_exists) return false;
  }
  return true;
}

Bits closure_of(const FiniteTopology& t, const Bits& s) {
  Bits c = Bits::full(t.ground);
  for (const Bits& a : t.closeds())
    if (s.is_subset_of(a)) c &= a;
  return c;
}

bool is_irreducible_closed(const FiniteTopology& t, const Bits& a) {
  std::vector<Bits> closed = t.closeds();
  bool is_closed = false;
  for (const Bits& c : closed)
    if (c == a) {
      is_closed = true;
      break;
    }
  if (!is_closed)
    throw PreconditionError("irreducibility asked of a non-closed set");
  if (a.empty()) return false;
  for (const Bits& b : closed) {
    if (a.is_subset_of(b)) continue;
    for (const Bits& c : closed) {
      if (a.is_subset_of(c)) continue;
      if (a.is_subset_of(b | c)) return false;
    }
  }
  return true;
}

bool is_sober(const FiniteTopology& t) {
  for (const Bits& a : t.closeds()) {
    if (a.empty()) continue;
    if (!is_irreducible_closed(t, a)) continue;
    bool is_point_closure = false;
    for (int x = 0; x < t.ground && !is_point_closure; ++x)
      if (closure_of(t, Bits::singleton(t.ground, x)) == a)
        is_point_closure = true;
    if (!is_point_closure) return false;
  }
  return true;
}

bool is_td(const FiniteTopology& t) {
  std::vector<Bits> closed = t.closeds();
  std::unordered_set<Bits, BitsHash> family(closed.begin(), closed.end());
  for (int x = 0; x < t.ground; ++x) {
    Bits residue = closure_of(t, Bits::singleton(t.ground, x));
    residue.reset(x);
    if (!family.count(residue)) return false;
  }
  return true;
}

FinitePoset specialization_order(const FiniteTopology& t) {
  const int n = t.ground;
  std::vector<Bits> cl;
  cl.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    cl.push_back(closure_of(t, Bits::singleton(n, x)));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (cl[static_cast<std::size_t>(x)] == cl[static_cast<std::size_t>(y)])
        throw PreconditionError(
            "specialization order needs a T0 space; two points share a closure");
  std::vector<Bits> rows(static_cast<std::size_t>(n), Bits(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (cl[static_cast<std::size_t>(y)].test(x))
        rows[static_cast<std::size_t>(x)].set(y);
  std::vector<std::string> labels =
      t.labels.empty() ? std::vector<std::string>(static_cast<std::size_t>(n)) : t.labels;
  if (t.labels.empty())
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = "x" + std::to_string(i);
  return FinitePoset::from_leq_rows(std::move(labels), std::move(rows));
}

std::string dump_topology(const FiniteTopology& t) {
  std::string out;
  for (const Bits& s : t.sets) {
    std::vector<std::string> names;
    s.for_each([&](int i) { names.push_back(t.labels[static_cast<std::size_t>(i)]); });
    std::sort(names.begin(), names.end());
    out += "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out += ",";
      out += names[i];
    }
    out += "}\n";
  }
  return out;
}

}  // namespace scottq
