#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bk/datasets.hpp"
#include "bk/io.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  bool quiet = false;
  bool dot = false;      // emit DOT at all
  std::string dot_path;  // empty: DOT replaces the normal stdout output
};

void notice(const Options& opt, const std::string& msg) {
  if (!opt.quiet) std::cerr << "notice: " << msg << "\n";
}

// Empty path sends the DOT to stdout in place of the normal report.
bool emit_dot(const Options& opt, const std::string& dot_text) {
  if (!opt.dot) return false;
  if (opt.dot_path.empty()) {
    std::cout << dot_text;
    return true;
  }
  bk::write_file(opt.dot_path, dot_text);
  return false;
}

std::vector<std::string> member_labels(const std::vector<std::string>& universe, bk::Mask s) {
  std::vector<std::string> out;
  for (int i : bk::mask_elements(s)) out.push_back(universe[i]);
  std::sort(out.begin(), out.end());
  return out;
}

bk::FormalContext context_of(const bk::LoadedInput& in) {
  return in.is_context ? in.context : bk::standard_context(in.lattice);
}

int run_concepts(const Options& opt, const std::string& input) {
  bk::LoadedInput in = bk::load_input(input);
  bk::FormalContext k = context_of(in);
  bk::ConceptLattice cl = bk::concept_lattice(k);
  if (emit_dot(opt, bk::concept_lattice_dot(cl))) return 0;
  if (opt.json) {
    json doc;
    doc["count"] = cl.concepts.size();
    json list = json::array();
    for (auto& c : cl.concepts)
      list.push_back({{"extent", member_labels(k.objects, c.extent)},
                      {"intent", member_labels(k.attributes, c.intent)}});
    doc["concepts"] = list;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << cl.concepts.size() << " concepts\n";
  for (auto& c : cl.concepts)
    std::cout << "  " << bk::set_label(member_labels(k.objects, c.extent)) << " / "
              << bk::set_label(member_labels(k.attributes, c.intent)) << "\n";
  return 0;
}

int run_basis(const Options& opt, const std::string& input, bool distributive_only, bool mark) {
  bk::LoadedInput in = bk::load_input(input);
  bk::FormalContext k = context_of(in);
  if (!bk::is_reduced(k)) {
    bk::FormalContext red = bk::reduce(k);
    std::vector<std::string> dropped;
    for (auto& m : k.attributes)
      if (red.attribute_index(m) < 0) dropped.push_back(m);
    for (auto& g : k.objects)
      if (red.object_index(g) < 0) dropped.push_back(g);
    notice(opt, "context is not reduced; using its reduction (removed: " +
                    bk::join_strings(dropped, ", ") + ")");
    k = red;
  }
  bk::ImplicationBasis basis = bk::canonical_direct_basis(k);
  if (distributive_only) basis = bk::distributive_part(basis);
  if (opt.json) {
    json doc;
    doc["attributes"] = basis.attributes;
    json list = json::array();
    for (auto& imp : basis.implications)
      list.push_back({{"premise", imp.premise},
                      {"conclusion", imp.conclusion},
                      {"distributive", imp.premise.size() == 1}});
    doc["implications"] = list;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  for (auto& imp : basis.implications) {
    std::cout << bk::implication_line(imp);
    if (mark) std::cout << (imp.premise.size() == 1 ? "  [distributive]" : "  [non-distributive]");
    std::cout << "\n";
  }
  return 0;
}

int run_bc(const Options& opt, const std::string& input, bool down, int level) {
  bk::LoadedInput in = bk::load_input(input);
  bool context_level = level == 0 ? in.is_context : level > 0;
  bk::CompletionReport report;
  if (context_level) {
    bk::FormalContext k = context_of(in);
    bk::ContextCompletion cc =
        down ? bk::birkhoff_completion_context_downset(k) : bk::birkhoff_completion_context(k);
    report = cc.report;
  } else {
    bk::Lattice l = in.is_context ? bk::concept_lattice(in.context).lattice : in.lattice;
    report = down ? bk::birkhoff_down(l) : bk::birkhoff_up(l);
  }
  if (emit_dot(opt, bk::completion_dot(report))) return 0;
  if (opt.json) {
    std::cout << bk::report_json(report);
    return 0;
  }
  std::cout << (report.up ? "up-set" : "down-set") << " completion at "
            << (report.context_level ? "context" : "lattice") << " level\n";
  std::cout << "original elements: " << report.embedding.size()
            << ", completed elements: " << report.completed.size() << "\n";
  for (auto& [removed, kept] : report.attribute_merges)
    std::cout << "attribute " << removed << " merged into " << kept << "\n";
  if (!report.added_generators.empty()) {
    std::cout << "added generators:\n";
    for (auto& [label, elem] : report.added_generators) {
      std::cout << "  " << label << " -> " << report.completed.label(elem);
      for (auto& [added, original] : report.coincidences)
        if (added == label) std::cout << "  (coincides with " << original << ")";
      std::cout << "\n";
    }
  }
  if (!report.invalidated.implications.empty()) {
    std::cout << "invalidated implications:\n";
    for (auto& imp : report.invalidated.implications)
      std::cout << "  " << bk::implication_line(imp) << "\n";
  }
  return 0;
}

int run_check(const Options& opt, const std::string& input) {
  bk::LoadedInput in = bk::load_input(input);
  bk::FormalContext k = context_of(in);
  bk::Lattice l = in.is_context ? bk::concept_lattice(in.context).lattice : in.lattice;

  json checks = json::array();
  std::ostringstream text;
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    all_ok = all_ok && ok;
    checks.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
    text << "check " << name << ": " << (ok ? "pass" : "FAIL");
    if (!detail.empty()) text << " (" << detail << ")";
    text << "\n";
  };

  bk::CommutationCheck comm = bk::verify_commutation(k);
  record("commutation", comm.ok,
         "context route " + std::to_string(comm.context_route_size) + " elements, lattice route " +
             std::to_string(comm.lattice_route_size) + " elements");

  bool law = bk::is_distributive_law(l);
  auto witness = bk::find_forbidden_sublattice(l);
  bk::CompletionReport up = bk::birkhoff_up(l);
  bk::CompletionReport down = bk::birkhoff_down(l);
  bool iso_up = bk::is_isomorphic(l, up.completed).has_value();
  bool iso_down = bk::is_isomorphic(l, down.completed).has_value();
  bool equiv = law == !witness.has_value() && law == iso_up && law == iso_down;
  std::string detail;
  if (witness) {
    std::vector<std::string> names;
    for (int e : witness->elems) names.push_back(l.label(e));
    detail = "non-distributive, " + witness->kind + " sublattice {" +
             bk::join_strings(names, ", ") + "}";
  } else {
    detail = "distributive";
  }
  detail += "; up-set completion " + std::to_string(up.completed.size()) +
            " elements, down-set completion " + std::to_string(down.completed.size()) +
            " elements";
  record("distributivity equivalences", equiv, detail);

  record("duality", bk::verify_duality(l), "down-set completion vs dual up-set completion");

  if (!in.is_context && bk::is_isomorphic(l, bk::dataset_fig6())) {
    bk::Fig6Report f = bk::fig6_check();
    record("extension", f.ok,
           "extension distributive: " + std::string(f.right_distributive ? "yes" : "no") +
               ", inclusion embedding: " + std::string(f.inclusion_embedding ? "yes" : "no") +
               ", completions " + std::to_string(f.left_up_size) + "/" +
               std::to_string(f.left_down_size) + " vs " + std::to_string(f.right_size) +
               " elements");
  }

  if (opt.json) {
    json doc;
    doc["ok"] = all_ok;
    doc["checks"] = checks;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text.str();
    std::cout << (all_ok ? "all checks passed\n" : "some checks FAILED\n");
  }
  return all_ok ? 0 : 1;
}

int run_render(const Options& opt, const std::string& input) {
  bk::LoadedInput in = bk::load_input(input);
  std::string dot_text = in.is_context
                             ? bk::concept_lattice_dot(bk::concept_lattice(in.context))
                             : bk::lattice_dot(in.lattice);
  if (opt.dot && !opt.dot_path.empty())
    bk::write_file(opt.dot_path, dot_text);
  else
    std::cout << dot_text;
  return 0;
}

int run_datasets(const Options& opt) {
  if (opt.json) {
    json list = json::array();
    for (auto& d : bk::bundled_datasets())
      list.push_back({{"name", d.name}, {"kind", d.kind}, {"note", d.note}});
    std::cout << list.dump(2) << "\n";
    return 0;
  }
  for (auto& d : bk::bundled_datasets())
    std::cout << d.name << "  (" << d.kind << ")  " << d.note << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birkhoff completions of finite lattices and formal contexts"};
  app.require_subcommand(1);

  Options opt;
  std::string input;
  bool distributive_only = false, mark = false, up = false, down = false;
  bool context_level = false, lattice_level = false;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json, "machine-readable JSON output");
    cmd->add_option("--dot", opt.dot_path,
                    "emit a DOT rendering; without a path it replaces the standard output")
        ->expected(0, 1);
    cmd->add_flag("--quiet", opt.quiet, "suppress notices");
  };
  auto add_input = [&input, &add_common](CLI::App* cmd) {
    cmd->add_option("input", input, "input file (.json lattice, .cxt or .csv context)")
        ->required();
    add_common(cmd);
  };

  CLI::App* concepts = app.add_subcommand("concepts", "list the concepts of a context");
  add_input(concepts);
  CLI::App* basis = app.add_subcommand("basis", "canonical direct implication basis");
  add_input(basis);
  basis->add_flag("--distributive-only", distributive_only,
                  "only the singleton-premise implications");
  basis->add_flag("--mark", mark, "tag each implication distributive or not");
  CLI::App* bc = app.add_subcommand("bc", "Birkhoff completion");
  add_input(bc);
  bc->add_flag("--up", up, "up-set completion (default)");
  bc->add_flag("--down", down, "down-set completion");
  bc->add_flag("--context-level", context_level, "complete the context itself");
  bc->add_flag("--lattice-level", lattice_level, "complete the (concept) lattice");
  CLI::App* check = app.add_subcommand("check", "verify completion properties of the input");
  add_input(check);
  CLI::App* render = app.add_subcommand("render", "DOT rendering of the input");
  add_input(render);
  CLI::App* datasets = app.add_subcommand("datasets", "list the bundled datasets");
  add_common(datasets);

  try {
    app.parse(argc, argv);
    for (const CLI::App* sub : app.get_subcommands())
      if (sub->count("--dot") > 0) opt.dot = true;
    if (up && down) throw bk::input_error("--up and --down are mutually exclusive");
    if (context_level && lattice_level)
      throw bk::input_error("--context-level and --lattice-level are mutually exclusive");
    int level = context_level ? 1 : lattice_level ? -1 : 0;
    if (concepts->parsed()) return run_concepts(opt, input);
    if (basis->parsed()) return run_basis(opt, input, distributive_only, mark);
    if (bc->parsed()) return run_bc(opt, input, down, level);
    if (check->parsed()) return run_check(opt, input);
    if (render->parsed()) return run_render(opt, input);
    if (datasets->parsed()) return run_datasets(opt);
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const bk::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
