// Command-line front end: validate and measure Morse words, build satellite
// cables, sweep the companion torus foliation, and run the width search.
//
// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 domain error,
// 4 internal inconsistency.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plait/plait.hpp"

namespace {

using nlohmann::json;

int exit_code_for(plait::errc code) {
  switch (code) {
    case plait::errc::not_a_knot:
    case plait::errc::invalid_site:
    case plait::errc::no_witness:
    case plait::errc::non_cancelable:
    case plait::errc::not_a_tree:
    case plait::errc::illegal_move:
      return 3;
    case plait::errc::bound_violation:
      return 4;
    default:
      return 2;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw plait::error(plait::errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw plait::error(plait::errc::parse_error, "cannot write '" + path + "'");
  out << text;
}

// Companion argument: a catalog name or a .morse path.
plait::MorsePresentation load_companion(const std::string& arg) {
  if (const plait::CatalogEntry* e = plait::find_catalog(arg)) return e->word();
  return plait::parse_morse(read_file(arg));
}

// Braid argument: inline text when it looks like one, otherwise a path.
plait::BraidWord load_braid(const std::string& arg) {
  if (arg.find(';') != std::string::npos || arg.rfind("index", 0) == 0)
    return plait::parse_braid_inline(arg);
  return plait::parse_braid(read_file(arg));
}

json check_to_json(const plait::BoundCheck& c) {
  return json{{"name", c.name},
              {"bound", c.bound},
              {"actual", c.actual},
              {"satisfied", c.satisfied},
              {"conjectural", c.conjectural}};
}

json report_to_json(const plait::BoundReport& r) {
  json j{{"width", r.width}, {"bridge", r.bridge}, {"trunk", r.trunk}};
  j["winding"] = r.winding ? json(*r.winding) : json(nullptr);
  if (r.companion_width) j["companion_width"] = *r.companion_width;
  if (r.companion_bridge) j["companion_bridge"] = *r.companion_bridge;
  j["checks"] = json::array();
  for (const plait::BoundCheck& c : r.checks) j["checks"].push_back(check_to_json(c));
  return j;
}

std::string counts_to_string(const std::vector<int>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i)
    out += (i ? " " : "") + std::to_string(counts[i]);
  return out;
}

int cmd_validate(const std::string& input) {
  const plait::MorsePresentation p =
      plait::find_catalog(input) ? plait::find_catalog(input)->word() : plait::parse_morse(read_file(input));
  std::cout << "ok: knot word with " << p.size() << " events\n";
  return 0;
}

int cmd_invariants(const std::string& input, bool as_json) {
  const plait::MorsePresentation p = load_companion(input);
  const plait::BoundReport report = plait::audit(p);
  const plait::ThickThinDecomposition d = plait::thick_thin(p);
  if (as_json) {
    json j = report_to_json(report);
    j["level_counts"] = plait::level_counts(p);
    j["thick"] = d.thick;
    j["thin"] = d.thin;
    j["bridge_position"] = plait::is_bridge_position(p);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "levels    " << counts_to_string(plait::level_counts(p)) << "\n";
    std::cout << "thick     " << counts_to_string(d.thick) << "\n";
    std::cout << "thin      " << counts_to_string(d.thin) << "\n";
    std::cout << "bridge position: " << (plait::is_bridge_position(p) ? "yes" : "no") << "\n";
    std::cout << plait::format_table(report);
  }
  return 0;
}

int cmd_satellite(const std::string& companion_arg, const std::string& braid_arg, int framing, int site,
                  const std::string& out_path, bool as_json) {
  const plait::SatelliteSpec spec = plait::SatelliteSpec::validate(
      load_companion(companion_arg), load_braid(braid_arg), framing, site);
  const plait::MorsePresentation word = plait::cable(spec);
  plait::canonical_invariants(spec);  // cross-check the scaling formulas
  const plait::BoundReport report = plait::audit(word, spec);
  if (!out_path.empty()) write_file(out_path, plait::to_morse_text(word));
  if (as_json) {
    json j = report_to_json(report);
    j["events"] = word.size();
    if (!out_path.empty()) j["out"] = out_path;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cable with " << word.size() << " events\n" << plait::format_table(report);
    if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_sweep(const std::string& companion_arg, const std::string& braid_arg, int framing, int site,
              const std::string& dot_dir, bool as_json) {
  const plait::SatelliteSpec spec = plait::SatelliteSpec::validate(
      load_companion(companion_arg), load_braid(braid_arg), framing, site);
  const plait::FoliationWord fw = plait::induced_foliation(spec);
  const std::vector<plait::LevelSphere> levels = plait::sweep_levels(fw, spec);
  const int n = spec.pattern.index();

  json rows = json::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const plait::ConnectivityGraph g = plait::build_graph(levels[i]);
    const int t = plait::trunk_r(g);
    const long long bound = plait::winding_trunk_bound(t, n);
    const bool ok = plait::audit_level(levels[i], n);
    if (as_json) {
      rows.push_back(json{{"level", i},
                          {"points", levels[i].total_points()},
                          {"trunk", t},
                          {"bound", bound},
                          {"ok", ok}});
    } else {
      std::cout << "level " << i << "  points " << levels[i].total_points() << "  trunk " << t
                << "  bound " << bound << "  " << (ok ? "pass" : "FAIL") << "\n";
    }
    if (!dot_dir.empty()) {
      std::filesystem::create_directories(dot_dir);
      write_file(dot_dir + "/level_" + std::to_string(i) + ".dot",
                 plait::to_dot(g, levels[i], "level_" + std::to_string(i)));
    }
  }
  // Throws NoWitness (exit 3) over an unknotted tube.
  const std::size_t witness = plait::branching_witness(levels);
  const int witness_trunk = plait::trunk_r(plait::build_graph(levels[witness]));
  if (as_json) {
    std::cout << json{{"levels", rows}, {"witness", witness}, {"witness_trunk", witness_trunk}}.dump(2)
              << "\n";
  } else {
    std::cout << "branching witness: level " << witness << " with trunk " << witness_trunk << "\n";
  }
  return 0;
}

int cmd_search(const std::string& input, std::uint64_t seed, std::size_t iters, int chains,
               std::optional<int> winding, const std::string& out_path, bool show_trace, bool as_json) {
  const plait::MorsePresentation p = load_companion(input);
  plait::SearchConfig cfg;
  cfg.seed = seed;
  cfg.max_iterations = iters;
  cfg.chains = chains;
  plait::SearchTrace trace;
  if (show_trace)
    trace = [](std::size_t it, long long w, const plait::Move& m) {
      std::cerr << "iter " << it << " width " << w << " move " << plait::move_kind_name(m.kind) << "\n";
    };
  const plait::SearchResult result = plait::minimize_width(p, cfg, winding, trace);
  const plait::BoundReport report = plait::audit(result.best);
  if (!out_path.empty()) write_file(out_path, plait::to_morse_text(result.best));
  if (as_json) {
    json j = report_to_json(report);
    j["iterations"] = result.iterations_run;
    j["accepted"] = result.accepted;
    j["start_width"] = plait::width(p);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "start width " << plait::width(p) << ", best width " << result.best_width << " after "
              << result.iterations_run << " iterations (" << result.accepted << " accepted)\n"
              << plait::format_table(report);
    if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_catalog_list(bool as_json) {
  if (as_json) {
    json j = json::array();
    for (const plait::CatalogEntry& e : plait::catalog())
      j.push_back(json{{"name", e.name},
                       {"bridge", e.declared_bridge},
                       {"width", e.declared_width},
                       {"two_bridge", e.two_bridge}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const plait::CatalogEntry& e : plait::catalog())
      std::cout << e.name << "  bridge " << e.declared_bridge << "  width " << e.declared_width
                << (e.two_bridge ? "  two-bridge" : "") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morse presentations, satellite cables and width bounds"};
  app.require_subcommand(1);

  std::string input, companion, braid, out_path, dot_dir;
  int framing = 0, site = 0, chains = 1;
  std::uint64_t seed = 1;
  std::size_t iters = 10000;
  int winding_flag = 0;
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON reports");

  CLI::App* validate = app.add_subcommand("validate", "check a .morse file");
  validate->add_option("input", input, "path or catalog name")->required();

  CLI::App* invariants = app.add_subcommand("invariants", "width, bridge, trunk and bound checks");
  invariants->add_option("input", input, "path or catalog name")->required();

  CLI::App* satellite = app.add_subcommand("satellite", "cable a companion with a braid pattern");
  satellite->add_option("companion", companion, "path or catalog name")->required();
  satellite->add_option("--braid", braid, ".braid path or inline 'index n; s+ j; ...'")->required();
  satellite->add_option("--framing", framing, "signed full twists");
  satellite->add_option("--site", site, "companion cup receiving the pattern");
  satellite->add_option("--out", out_path, "write the cable word here");

  CLI::App* sweep = app.add_subcommand("sweep", "level spheres of the companion torus");
  sweep->add_option("companion", companion, "path or catalog name")->required();
  sweep->add_option("--braid", braid, ".braid path or inline")->required();
  sweep->add_option("--framing", framing, "signed full twists");
  sweep->add_option("--site", site, "companion cup receiving the pattern");
  sweep->add_option("--dot-dir", dot_dir, "write one dot file per level here");

  CLI::App* search = app.add_subcommand("search", "anneal toward smaller width");
  search->add_option("input", input, "path or catalog name")->required();
  search->add_option("--seed", seed, "RNG seed");
  search->add_option("--iters", iters, "iteration budget");
  search->add_option("--chains", chains, "restart chains");
  search->add_option("--winding", winding_flag, "assert the satellite width floor for this winding");
  search->add_option("--out", out_path, "write the best word here");
  bool show_trace = false;
  search->add_flag("--trace", show_trace, "log accepted moves to stderr");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "bundled companions");
  CLI::App* catalog_list = catalog_cmd->add_subcommand("list", "list catalog entries");

  for (CLI::App* sub : {validate, invariants, satellite, sweep, search, catalog_cmd, catalog_list})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    plait::catalog();  // self-check: declared vs computed invariants
    if (*validate) return cmd_validate(input);
    if (*invariants) return cmd_invariants(input, as_json);
    if (*satellite) return cmd_satellite(companion, braid, framing, site, out_path, as_json);
    if (*sweep) return cmd_sweep(companion, braid, framing, site, dot_dir, as_json);
    if (*search)
      return cmd_search(input, seed, iters, chains,
                        winding_flag > 0 ? std::optional<int>(winding_flag) : std::nullopt, out_path,
                        show_trace, as_json);
    if (*catalog_list) return cmd_catalog_list(as_json);
    std::cerr << "missing subcommand\n";
    return 1;
  } catch (const plait::error& e) {
    std::cerr << "error: " << e.what();
    if (e.where()) std::cerr << " (line/event " << *e.where() << ")";
    std::cerr << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
