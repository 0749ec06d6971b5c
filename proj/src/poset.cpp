#include "scottq/poset.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace scottq {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '(' || c == ')' ||
              c == '-';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

FinitePoset FinitePoset::from_relations(
    std::vector<std::string> labels,
    const std::vector<std::pair<int, int>>& less) {
  const int n = static_cast<int>(labels.size());
  std::vector<Bits> up(static_cast<std::size_t>(n), Bits(n));
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)].set(i);
  for (auto [x, y] : less) up[static_cast<std::size_t>(x)].set(y);

  // Transitive closure: propagate rows until stable. Rows only grow, so the
  // outer loop runs at most n times.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      Bits row = up[static_cast<std::size_t>(x)];
      Bits grown = row;
      row.for_each([&](int y) { grown |= up[static_cast<std::size_t>(y)]; });
      if (!(grown == row)) {
        up[static_cast<std::size_t>(x)] = grown;
        changed = true;
      }
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (up[static_cast<std::size_t>(x)].test(y) &&
          up[static_cast<std::size_t>(y)].test(x))
        throw CycleError("order relation has a cycle through '" + labels[static_cast<std::size_t>(x)] +
                         "' and '" + labels[static_cast<std::size_t>(y)] + "'");

  return from_leq_rows(std::move(labels), std::move(up), /*trusted=*/true);
}

FinitePoset FinitePoset::from_leq_rows(std::vector<std::string> labels,
                                       std::vector<Bits> up, bool trusted) {
  const int n = static_cast<int>(labels.size());
  if (!trusted) {
    for (int x = 0; x < n; ++x) {
      const Bits& row = up[static_cast<std::size_t>(x)];
      if (!row.test(x)) throw PreconditionError("relation is not reflexive");
      bool transitive = true;
      row.for_each([&](int y) {
        if (!up[static_cast<std::size_t>(y)].is_subset_of(row)) transitive = false;
        if (y != x && up[static_cast<std::size_t>(y)].test(x))
          throw CycleError("relation is not antisymmetric");
      });
      if (!transitive) throw PreconditionError("relation is not transitive");
    }
  }
  FinitePoset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  p.down_.assign(static_cast<std::size_t>(n), Bits(n));
  for (int x = 0; x < n; ++x)
    p.up_[static_cast<std::size_t>(x)].for_each(
        [&](int y) { p.down_[static_cast<std::size_t>(y)].set(x); });
  return p;
}

int FinitePoset::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

Bits FinitePoset::up_closure(const Bits& s) const {
  Bits r(size());
  s.for_each([&](int x) { r |= up(x); });
  return r;
}

Bits FinitePoset::down_closure(const Bits& s) const {
  Bits r(size());
  s.for_each([&](int x) { r |= down(x); });
  return r;
}

bool FinitePoset::is_upper_set(const Bits& s) const {
  bool ok = true;
  s.for_each([&](int x) {
    if (!up(x).is_subset_of(s)) ok = false;
  });
  return ok;
}

bool FinitePoset::is_lower_set(const Bits& s) const {
  bool ok = true;
  s.for_each([&](int x) {
    if (!down(x).is_subset_of(s)) ok = false;
  });
  return ok;
}

Bits FinitePoset::minimal_elements(const Bits& s) const {
  Bits r(size());
  s.for_each([&](int x) {
    Bits below = down(x) & s;
    below.reset(x);
    if (below.empty()) r.set(x);
  });
  return r;
}

Bits FinitePoset::maximal_elements(const Bits& s) const {
  Bits r(size());
  s.for_each([&](int x) {
    Bits above = up(x) & s;
    above.reset(x);
    if (above.empty()) r.set(x);
  });
  return r;
}

bool FinitePoset::is_directed(const Bits& s) const {
  if (s.empty()) return false;
  // Pairwise upper bounds suffice: bounds for larger finite subsets follow
  // by induction inside s.
  bool ok = true;
  s.for_each([&](int x) {
    if (!ok) return;
    s.for_each([&](int y) {
      if (!ok || y < x) return;
      if (!(up(x) & up(y)).intersects(s)) ok = false;
    });
  });
  return ok;
}

bool FinitePoset::is_filtered(const Bits& s) const {
  if (s.empty()) return false;
  bool ok = true;
  s.for_each([&](int x) {
    if (!ok) return;
    s.for_each([&](int y) {
      if (!ok || y < x) return;
      if (!(down(x) & down(y)).intersects(s)) ok = false;
    });
  });
  return ok;
}

std::optional<int> FinitePoset::sup(const Bits& s) const {
  Bits ub = full_set();
  s.for_each([&](int x) { ub &= up(x); });
  std::optional<int> least;
  ub.for_each([&](int x) {
    if (!least && ub.is_subset_of(up(x))) least = x;
  });
  return least;
}

std::optional<int> FinitePoset::inf(const Bits& s) const {
  Bits lb = full_set();
  s.for_each([&](int x) { lb &= down(x); });
  std::optional<int> greatest;
  lb.for_each([&](int x) {
    if (!greatest && lb.is_subset_of(down(x))) greatest = x;
  });
  return greatest;
}

bool FinitePoset::is_chain(const Bits& s) const {
  bool ok = true;
  s.for_each([&](int x) {
    if (ok && !s.is_subset_of(up(x) | down(x))) ok = false;
  });
  return ok;
}

std::vector<std::pair<int, int>> FinitePoset::cover_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x) {
    Bits strictly_above = up(x);
    strictly_above.reset(x);
    strictly_above.for_each([&](int y) {
      Bits between = strictly_above & down(y);
      between.reset(y);
      if (between.empty()) out.emplace_back(x, y);
    });
  }
  return out;
}

FinitePoset FinitePoset::dual() const {
  FinitePoset p;
  p.labels_ = labels_;
  p.up_ = down_;
  p.down_ = up_;
  return p;
}

FinitePoset FinitePoset::induced(const Bits& s) const {
  std::vector<int> keep = s.to_indices();
  const int m = static_cast<int>(keep.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (int old : keep) labels.push_back(label(old));
  std::vector<Bits> up_rows(static_cast<std::size_t>(m), Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (leq(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]))
        up_rows[static_cast<std::size_t>(i)].set(j);
  return from_leq_rows(std::move(labels), std::move(up_rows), /*trusted=*/true);
}

FinitePoset FinitePoset::relabel(const std::vector<int>& perm) const {
  const int n = size();
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  std::vector<Bits> up_rows(static_cast<std::size_t>(n), Bits(n));
  for (int i = 0; i < n; ++i) {
    labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = label(i);
    for (int j = 0; j < n; ++j)
      if (leq(i, j))
        up_rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].set(
            perm[static_cast<std::size_t>(j)]);
  }
  return from_leq_rows(std::move(labels), std::move(up_rows), /*trusted=*/true);
}

FinitePoset parse_poset(const std::string& text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<int, int>> less;
  bool saw_elements = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Strip comments and surrounding whitespace.
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;

    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (head == "elements:") {
      if (saw_elements)
        throw ParseError("duplicate elements: line" + where);
      saw_elements = true;
      std::string name;
      while (ls >> name) {
        if (!valid_name(name))
          throw ParseError("bad element name '" + name + "'" + where);
        if (index.count(name))
          throw ParseError("duplicate element '" + name + "'" + where);
        index.emplace(name, static_cast<int>(labels.size()));
        labels.push_back(name);
      }
    } else if (head == "order:") {
      if (!saw_elements)
        throw ParseError("order: before elements:" + where);
      std::string tok;
      while (ls >> tok) {
        auto lt = tok.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 >= tok.size())
          throw ParseError("bad order token '" + tok + "'" + where);
        std::string a = tok.substr(0, lt);
        std::string b = tok.substr(lt + 1);
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end())
          throw ParseError("unknown element '" + a + "'" + where);
        if (ib == index.end())
          throw ParseError("unknown element '" + b + "'" + where);
        if (ia->second == ib->second)
          throw CycleError("element '" + a + "' declared below itself" + where);
        less.emplace_back(ia->second, ib->second);
      }
    } else {
      throw ParseError("unrecognized line head '" + head + "'" + where);
    }
  }
  if (!saw_elements) throw ParseError("missing elements: line");
  if (labels.empty()) throw ParseError("empty posets are not supported");
  return FinitePoset::from_relations(std::move(labels), less);
}

std::string set_names(const FinitePoset& p, const Bits& s) {
  std::vector<std::string> names;
  s.for_each([&](int i) { names.push_back(p.label(i)); });
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  out += "}";
  return out;
}

std::string poset_text(const FinitePoset& p) {
  std::string out = "elements:";
  for (int i = 0; i < p.size(); ++i) out += " " + p.label(i);
  out += "\n";
  std::vector<std::pair<int, int>> covers = p.cover_edges();
  if (!covers.empty()) {
    out += "order:";
    for (auto [a, b] : covers) out += " " + p.label(a) + "<" + p.label(b);
    out += "\n";
  }
  return out;
}

}  // namespace scottq
