#include "scottq/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "scottq/domain.hpp"
#include "scottq/enumerate.hpp"
#include "scottq/errors.hpp"
#include "scottq/limits.hpp"
#include "scottq/qfamily.hpp"

namespace scottq {

namespace {

std::string code_hex(const CanonicalCode& c) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(c.words.size() * 16);
  for (std::uint64_t w : c.words)
    for (int shift = 60; shift >= 0; shift -= 4)
      out += digits[(w >> shift) & 0xf];
  return out;
}

}  // namespace

QProvider default_q_provider() {
  return [](const FinitePoset& p) { return compute_q_family(p).order; };
}

nlohmann::json ScanResult::to_json() const {
  nlohmann::json cols = nlohmann::json::array();
  for (const Collision& c : collisions)
    cols.push_back({{"left_code", code_hex(c.left)},
                    {"right_code", code_hex(c.right)},
                    {"left", c.left_text},
                    {"right", c.right_text}});
  return {{"n_max", n_max},
          {"classes_by_n", classes_by_n},
          {"total_classes", total_classes},
          {"collisions", std::move(cols)}};
}

ScanResult q_uniqueness_scan(int n_max) {
  return q_uniqueness_scan(n_max, default_q_provider());
}

ScanResult q_uniqueness_scan(int n_max, const QProvider& provider) {
  if (n_max < 1) throw PreconditionError("scan size must be positive");
  if (n_max > limits::kScanMaxN)
    throw ResourceError("scan is bounded at " +
                        std::to_string(limits::kScanMaxN) + " elements");

  const auto started = std::chrono::steady_clock::now();
  ScanResult result;
  result.n_max = n_max;
  std::vector<FinitePoset> posets;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<FinitePoset> level = enumerate_posets(n);
    result.classes_by_n.push_back(static_cast<std::int64_t>(level.size()));
    for (FinitePoset& p : level) posets.push_back(std::move(p));
  }
  result.total_classes = static_cast<std::int64_t>(posets.size());

  // Family codes are computed in parallel slices (the provider must be a
  // pure function); everything order-sensitive happens in the deterministic
  // sequential merge below.
  const std::size_t workers = std::min<std::size_t>(
      {posets.size(), 4, std::max<std::size_t>(1, std::thread::hardware_concurrency())});
  std::vector<CanonicalCode> family_codes(posets.size());
  if (workers > 1) {
    std::vector<std::future<void>> tasks;
    const std::size_t chunk = (posets.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(posets.size(), lo + chunk);
      if (lo >= hi) break;
      tasks.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i)
          family_codes[i] = canonical_code(provider(posets[i]));
      }));
    }
    for (auto& t : tasks) t.get();
  } else {
    for (std::size_t i = 0; i < posets.size(); ++i)
      family_codes[i] = canonical_code(provider(posets[i]));
  }

  std::map<CanonicalCode, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < posets.size(); ++i)
    groups[family_codes[i]].push_back(i);

  for (const auto& [code, members] : groups) {
    if (members.size() < 2) continue;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const FinitePoset& pa = posets[members[a]];
        const FinitePoset& pb = posets[members[b]];
        // Re-verification from scratch. Failures here are not scan results
        // but defects in the canonicalizer or the enumerator.
        if (!are_isomorphic(provider(pa), provider(pb)))
          throw std::logic_error(
              "family orders share a canonical code but are not isomorphic");
        if (are_isomorphic(pa, pb))
          throw std::logic_error(
              "enumeration produced two isomorphic posets");
        result.collisions.push_back(Collision{canonical_code(pa),
                                              canonical_code(pb),
                                              poset_text(pa), poset_text(pb)});
      }
  }
  result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return result;
}

// ---- hypothesis bundles ----

namespace {

struct BundlePart {
  std::string name;
  Verdict verdict;
  std::string detail;
};

PropertyReport combine_bundle(const std::string& name,
                              const std::vector<BundlePart>& parts) {
  PropertyReport r;
  r.property = name;
  r.verdict = Verdict::True;
  nlohmann::json part_json = nlohmann::json::object();
  for (const BundlePart& part : parts) {
    part_json[part.name] = verdict_name(part.verdict);
    if (part.verdict == Verdict::False && r.verdict != Verdict::False) {
      r.verdict = Verdict::False;
      r.notes = "fails at " + part.name +
                (part.detail.empty() ? "" : ": " + part.detail);
    } else if (part.verdict == Verdict::NotComputed &&
               r.verdict == Verdict::True) {
      r.verdict = Verdict::NotComputed;
      r.notes = part.name + " not computed" +
                (part.detail.empty() ? "" : ": " + part.detail);
    }
  }
  if (r.verdict == Verdict::True) r.notes = "every part of the bundle holds";
  r.witness = {{"parts", std::move(part_json)}};
  return r;
}

BundlePart evaluated_part(const FinitePoset& p, const std::string& prop) {
  PropertyReport r = evaluate_property(p, prop);
  return {prop, r.verdict, r.verdict == Verdict::True ? "" : r.notes};
}

BundlePart decomposition_part(const FinitePoset& p, DecompositionKind kind,
                              const std::string& name) {
  return {name,
          decomposition_condition(p, kind) ? Verdict::True : Verdict::False,
          ""};
}

}  // namespace

std::vector<PropertyReport> hypothesis_report(const FinitePoset& p) {
  std::vector<PropertyReport> out;
  BundlePart co_sober = evaluated_part(p, "co-sober");

  out.push_back(combine_bundle("quasicontinuous-domain",
                               {evaluated_part(p, "quasicts")}));
  out.push_back(combine_bundle(
      "co-sober+quasicontinuous-decomposition",
      {co_sober, decomposition_part(p, DecompositionKind::Quasicontinuous,
                                    "quasicontinuous-decomposition")}));
  out.push_back(combine_bundle(
      "co-sober+chain-decomposition",
      {co_sober,
       decomposition_part(p, DecompositionKind::Chain, "chain-decomposition")}));
  out.push_back(combine_bundle(
      "co-sober+compact-residual-decomposition",
      {co_sober, decomposition_part(p, DecompositionKind::CompactResidual,
                                    "compact-residual-decomposition")}));
  out.push_back(combine_bundle("chain-family-property",
                               {evaluated_part(p, "kl")}));
  out.push_back(combine_bundle("co-sober+residual-compactness",
                               {co_sober, evaluated_part(p, "kd")}));
  out.push_back(combine_bundle("co-sober+q-determined",
                               {co_sober, evaluated_part(p, "qdet")}));
  out.push_back(combine_bundle("co-sober+weakly-well-filtered",
                               {co_sober, evaluated_part(p, "wwf")}));
  return out;
}

// ---- implication matrix ----

nlohmann::json ImplicationMatrix::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const ImplicationRow& row : rows)
    rows_json.push_back({{"name", row.name},
                         {"n_cap", row.n_cap},
                         {"violations_by_n", row.violations_by_n},
                         {"witnesses", row.witness_texts}});
  return {{"n_max", n_max}, {"rows", std::move(rows_json)}};
}

std::string ImplicationMatrix::to_csv() const {
  std::string out = "implication,cap";
  for (int n = 1; n <= n_max; ++n) out += ",n" + std::to_string(n);
  out += "\n";
  for (const ImplicationRow& row : rows) {
    out += row.name + "," + std::to_string(row.n_cap);
    for (int n = 1; n <= n_max; ++n) {
      out += ",";
      if (n <= row.n_cap)
        out += std::to_string(
            row.violations_by_n[static_cast<std::size_t>(n - 1)]);
    }
    out += "\n";
  }
  return out;
}

namespace {

constexpr int kSecondLevelCap = 4;  // rows that walk Q of the family order
constexpr int kFirstLevelCap = 5;

ImplicationRow scan_row(const std::string& name, int cap,
                        const std::vector<std::vector<FinitePoset>>& levels,
                        const std::function<bool(const FinitePoset&)>& holds) {
  ImplicationRow row;
  row.name = name;
  row.n_cap = std::min(cap, static_cast<int>(levels.size()));
  for (int n = 1; n <= row.n_cap; ++n) {
    std::int64_t bad = 0;
    for (const FinitePoset& p : levels[static_cast<std::size_t>(n - 1)])
      if (!holds(p)) {
        ++bad;
        if (row.witness_texts.size() < 3)
          row.witness_texts.push_back(poset_text(p));
      }
    row.violations_by_n.push_back(bad);
  }
  return row;
}

}  // namespace

ImplicationMatrix implication_matrix(int n_max) {
  if (n_max < 1) throw PreconditionError("matrix size must be positive");
  if (n_max > kFirstLevelCap)
    throw ResourceError("the implication matrix is bounded at " +
                        std::to_string(kFirstLevelCap) + " elements");

  std::vector<std::vector<FinitePoset>> levels;
  for (int n = 1; n <= n_max; ++n) levels.push_back(enumerate_posets(n));

  ImplicationMatrix m;
  m.n_max = n_max;

  m.rows.push_back(scan_row(
      "quasicontinuous-implies-family-domain", kSecondLevelCap, levels,
      [](const FinitePoset& p) {
        if (evaluate_property(p, "quasicts").verdict != Verdict::True)
          return true;  // implication holds vacuously
        return is_domain(compute_q_family(p).order);
      }));
  m.rows.push_back(scan_row(
      "chain-family-iff-co-sober-and-chain-decomposition", kSecondLevelCap,
      levels, [](const FinitePoset& p) {
        return chain_family_equivalence_report(p).verdict == Verdict::True;
      }));
  m.rows.push_back(scan_row(
      "members-are-up-closures-of-their-minimal-points", kFirstLevelCap,
      levels, [](const FinitePoset& p) {
        QFamily q = compute_q_family(p);
        for (const Bits& k : q.members)
          if (p.up_closure(p.minimal_elements(k)) != k) return false;
        return true;
      }));
  m.rows.push_back(scan_row(
      "strongly-prime-members-are-principal-filters", kSecondLevelCap, levels,
      [](const FinitePoset& p) {
        return strongly_prime_members_report(p).verdict == Verdict::True;
      }));
  return m;
}

}  // namespace scottq
