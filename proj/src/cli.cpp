#include "scottq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scottq/analysis.hpp"
#include "scottq/errors.hpp"
#include "scottq/experiments.hpp"
#include "scottq/zoo.hpp"

namespace scottq {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The documented default caps, echoed into every JSON report so a reader
// can audit how much was actually checked without consulting the source.
nlohmann::json default_limits_json() {
  return {{"element_bound", limits::kElementBound},
          {"subfamily_bound", limits::kSubfamilyBound},
          {"q_member_cap", limits::kQMemberCap},
          {"scan_max_n", limits::kScanMaxN},
          {"zoo_scale", limits::kZooScale}};
}

nlohmann::json envelope(const RunConfig& cfg) {
  nlohmann::json env{{"command", cfg.command},
                     {"default_limits", default_limits_json()}};
  if (!cfg.bounds.empty()) env["bound_overrides"] = cfg.bounds;
  return env;
}

void emit_json(nlohmann::json env, std::ostream& out) {
  out << env.dump(2) << "\n";
}

void print_report(const PropertyReport& r, std::ostream& out) {
  out << "[" << verdict_name(r.verdict) << "] " << r.property;
  if (!r.notes.empty()) out << " -- " << r.notes;
  out << "\n";
  if (!r.witness.is_null() && r.verdict != Verdict::True)
    out << "    witness: " << r.witness.dump() << "\n";
}

bool resource_capped(const std::vector<PropertyReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const PropertyReport& r) {
                       return r.verdict == Verdict::NotComputed &&
                              r.property != "recorded-claim";
                     });
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  FinitePoset p = parse_poset(read_file(cfg.input));
  EvaluateOptions opt;
  opt.q.member_cap = cfg.q_member_cap;
  std::vector<PropertyReport> reports;
  for (const std::string& prop : cfg.properties) {
    if (prop == "hypothesis-report") {
      std::vector<PropertyReport> bundle = hypothesis_report(p);
      reports.insert(reports.end(),
                     std::make_move_iterator(bundle.begin()),
                     std::make_move_iterator(bundle.end()));
    } else {
      reports.push_back(evaluate_property(p, prop, opt));
    }
  }
  if (cfg.format == "json") {
    nlohmann::json env = envelope(cfg);
    env["input"] = cfg.input;
    env["elements"] = p.size();
    env["q_member_cap"] = cfg.q_member_cap;
    nlohmann::json arr = nlohmann::json::array();
    for (const PropertyReport& r : reports) arr.push_back(r.to_json());
    env["result"] = std::move(arr);
    emit_json(std::move(env), out);
  } else {
    out << cfg.input << ": " << p.size() << " elements"
        << " (q member cap " << cfg.q_member_cap << ")\n";
    for (const PropertyReport& r : reports) print_report(r, out);
  }
  return resource_capped(reports) ? 3 : 0;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_max < 1)
    throw PreconditionError(
        "enumerate needs a positive size (positional N or --n-max)");
  if (cfg.experiment == "q-uniqueness") {
    ScanResult r = q_uniqueness_scan(cfg.n_max);
    if (cfg.format == "json") {
      nlohmann::json env = envelope(cfg);
      env["experiment"] = cfg.experiment;
      env["result"] = r.to_json();
      emit_json(std::move(env), out);
    } else {
      out << r.collisions.size() << " collisions / " << r.total_classes
          << " classes\n";
      out << "classes by size:";
      for (std::int64_t c : r.classes_by_n) out << " " << c;
      out << "\n";
      for (const Collision& c : r.collisions) {
        out << "collision between\n" << c.left_text << "and\n" << c.right_text;
      }
      out << "elapsed: " << r.elapsed_ms << " ms\n";
    }
    return 0;
  }
  if (cfg.experiment == "implication-matrix") {
    ImplicationMatrix m = implication_matrix(cfg.n_max);
    if (cfg.format == "json") {
      nlohmann::json env = envelope(cfg);
      env["experiment"] = cfg.experiment;
      env["result"] = m.to_json();
      emit_json(std::move(env), out);
    } else {
      out << m.to_csv();
    }
    return 0;
  }
  throw PreconditionError("unknown experiment: " + cfg.experiment);
}

int cmd_zoo(const RunConfig& cfg, std::ostream& out) {
  const ZooEntry& e = zoo_entry(cfg.zoo_entry);
  std::vector<PropertyReport> reports;
  if (cfg.action == "claims") {
    reports = run_zoo_claims(e);
  } else {
    reports.push_back(run_zoo_action(e, cfg.action, cfg.bounds));
  }
  if (cfg.format == "json") {
    nlohmann::json env = envelope(cfg);
    env["entry"] = e.poset->name();
    env["title"] = e.poset->title();
    env["action"] = cfg.action;
    nlohmann::json arr = nlohmann::json::array();
    for (const PropertyReport& r : reports) arr.push_back(r.to_json());
    env["result"] = std::move(arr);
    emit_json(std::move(env), out);
  } else {
    out << e.poset->name() << ": " << e.poset->title() << "\n";
    for (const PropertyReport& r : reports) print_report(r, out);
  }
  return resource_capped(reports) ? 3 : 0;
}

int cmd_export_dot(const RunConfig& cfg, std::ostream& out) {
  const std::vector<std::string>& names = zoo_entry_names();
  FinitePoset p = [&] {
    if (std::find(names.begin(), names.end(), cfg.input) != names.end()) {
      const ZooEntry& e = zoo_entry(cfg.input);
      int scale = cfg.bounds.empty() ? e.default_scale : cfg.bounds.front();
      return e.poset->truncate(scale).poset;
    }
    return parse_poset(read_file(cfg.input));
  }();
  out << poset_dot(p);
  return 0;
}

}  // namespace

std::string poset_dot(const FinitePoset& p) {
  std::string s = "digraph poset {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i) s += "  \"" + p.label(i) + "\";\n";
  for (auto [lo, hi] : p.cover_edges())
    s += "  \"" + p.label(lo) + "\" -> \"" + p.label(hi) + "\";\n";
  s += "}\n";
  return s;
}

int run_command(const RunConfig& cfg, std::ostream& out) {
  for (int b : cfg.bounds)
    if (b <= 0) throw PreconditionError("bounds must be positive");
  if (cfg.q_member_cap == 0 || cfg.q_member_cap > limits::kQMemberCap)
    throw PreconditionError("q member cap must be positive and at most " +
                            std::to_string(limits::kQMemberCap));
  if (cfg.command == "check") return cmd_check(cfg, out);
  if (cfg.command == "enumerate") return cmd_enumerate(cfg, out);
  if (cfg.command == "zoo") return cmd_zoo(cfg, out);
  if (cfg.command == "export-dot") return cmd_export_dot(cfg, out);
  throw PreconditionError("unknown command: " + cfg.command);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{
      "finite-order toolkit: Scott topologies, compact-saturated families, "
      "exhaustive small-poset experiments and bounded witness checks"};
  app.name("scottq");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  CLI::App* check =
      app.add_subcommand("check", "evaluate properties of a poset file");
  check->add_option("file", cfg.input, "poset text file")->required();
  check
      ->add_option("--props", cfg.properties,
                   "property names: co-sober, kd, quasicts, domain, kl, "
                   "qdet, wwf, wf, sp, hypothesis-report")
      ->required()
      ->delimiter(',');
  check->add_option("--q-cap", cfg.q_member_cap,
                    "cap on family size before refusing");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "exhaustive experiments over all posets up to a size");
  enumerate->add_option("n", cfg.n_max, "largest poset size");
  enumerate->add_option("--n-max", cfg.n_max,
                        "largest poset size (alternative to the positional)");
  enumerate
      ->add_option("--experiment", cfg.experiment,
                   "q-uniqueness | implication-matrix")
      ->check(CLI::IsMember({"q-uniqueness", "implication-matrix"}))
      ->capture_default_str();

  CLI::App* zoo = app.add_subcommand(
      "zoo", "run a catalog entry's claims or one named verification");
  zoo->add_option("entry", cfg.zoo_entry, "catalog entry name")->required();
  zoo->add_option("--action", cfg.action,
                  "claims (default), coherence, or a claim action name such "
                  "as q-soundness, noncompact, wwf-failure, nonprincipal, "
                  "kd-cases, co-compact, kirr-shape")
      ->capture_default_str();
  zoo->add_option("--bound", cfg.bounds,
                  "positional bound overrides for the action");

  CLI::App* dot =
      app.add_subcommand("export-dot", "emit a Hasse diagram in DOT text");
  dot->add_option("target", cfg.input, "poset file or catalog entry name")
      ->required();
  dot->add_option("--bound", cfg.bounds,
                  "fragment scale when the target is a catalog entry");

  std::vector<const char*> argv;
  argv.push_back("scottq");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return run_command(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CycleError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const WitnessError& e) {
    err << "error: witness defect: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: resource cap: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace scottq
