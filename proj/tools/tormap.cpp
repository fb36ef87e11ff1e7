// tormap: build, analyze, and verify semi-equivelar toroidal maps.
//
// Subcommands: tilings list, quotient, orbits, dual, covers, classify,
// symmetric-cover, minimal-cover, stretch-cover, verify-bounds, reproduce,
// export, lattice hnf, lattice sublattices.
//
// Exit codes: 0 success, 1 claim-check failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tormap/covers.hpp"
#include "tormap/dot_export.hpp"
#include "tormap/json_io.hpp"
#include "tormap/lattice.hpp"
#include "tormap/mat2.hpp"
#include "tormap/report.hpp"
#include "tormap/symmetry.hpp"
#include "tormap/tiling.hpp"
#include "tormap/torusmap.hpp"

namespace {

using nlohmann::json;
using tormap::Mat2;
using tormap::tilings::TilingType;
using tormap::torusmap::ToroidalMap;

struct Options {
  bool as_json = false;
  int threads = 1;          // reserved: all algorithms are deterministic
  long long seed = 0;       // reserved
  bool allow_degenerate = false;
};

ToroidalMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("map", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return tormap::json_io::parse(buf.str());
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw CLI::ValidationError("--out", "cannot write " + out_path);
  out << text;
}

TilingType tiling_from_flag(const std::string& tag) {
  auto t = tormap::tilings::type_from_tag(tag);
  if (!t) throw CLI::ValidationError("--tiling", "unknown tiling tag " + tag);
  return *t;
}

Mat2 lattice_from_flag(const std::string& csv, const std::string& flag) {
  Mat2 m;
  try {
    m = tormap::mat2_from_csv(csv);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(flag, e.what());
  }
  if (m.det() == 0) throw CLI::ValidationError(flag, "matrix is singular");
  return m;
}

int require_polyhedral(const ToroidalMap& m, const Options& opt) {
  if (m.polyhedral || opt.allow_degenerate) return 0;
  std::cerr << "map is not polyhedral (pass --allow-degenerate to proceed)\n";
  return 1;
}

json descriptor_json(const ToroidalMap& base,
                     const tormap::covers::CoverDescriptor& d) {
  ToroidalMap y = tormap::covers::realize(base, d);
  return json{{"lattice", tormap::json_io::lattice_to_json(d.cover_lattice)},
              {"sheets", d.sheets},
              {"edge_orbits", tormap::symmetry::edge_orbit_count(y)}};
}

int cmd_tilings_list(const Options& opt) {
  if (opt.as_json) {
    json rows = json::array();
    for (TilingType t : tormap::tilings::k_all_types) {
      auto pt = tormap::tilings::build_tiling(t);
      json row{{"tag", pt.tag},
               {"vertex_type", pt.vertex_type},
               {"vertices", pt.cell_vertices.size()},
               {"edges", pt.cell_edges.size()},
               {"faces", pt.cell_faces.size()},
               {"plane_edge_orbits", pt.plane_edge_orbit_count}};
      if (pt.edge_symbol) row["edge_symbol"] = pt.edge_symbol->str();
      rows.push_back(row);
    }
    std::cout << rows.dump(2) << '\n';
    return 0;
  }
  std::printf("%-10s %-12s %-12s %2s %2s %2s %s\n", "tag", "vertex type",
              "edge symbol", "V", "E", "F", "plane orbits");
  for (TilingType t : tormap::tilings::k_all_types) {
    auto pt = tormap::tilings::build_tiling(t);
    std::printf("%-10s %-12s %-12s %2zu %2zu %2zu %d\n", pt.tag.c_str(),
                pt.vertex_type.c_str(),
                pt.edge_symbol ? pt.edge_symbol->str().c_str() : "-",
                pt.cell_vertices.size(), pt.cell_edges.size(),
                pt.cell_faces.size(), pt.plane_edge_orbit_count);
  }
  return 0;
}

int cmd_quotient(const Options& opt, const std::string& tag,
                 const std::string& lattice_csv, const std::string& out) {
  ToroidalMap m = tormap::torusmap::quotient(
      tiling_from_flag(tag), lattice_from_flag(lattice_csv, "--lattice"));
  if (int rc = require_polyhedral(m, opt)) return rc;
  write_output(tormap::json_io::dump(m), out);
  return 0;
}

int cmd_orbits(const Options& opt, const std::string& path) {
  ToroidalMap m = load_map(path);
  auto rep = tormap::symmetry::orbit_report(m);
  if (opt.as_json) {
    json reps = json::array();
    for (const auto& orbit : rep.edge_orbits) reps.push_back(orbit.front());
    json j{{"aut_order", rep.aut_order},
           {"edge_orbits", rep.edge_orbit_count},
           {"vertex_orbits", rep.vertex_orbits.size()},
           {"face_orbits", rep.face_orbits.size()},
           {"edge_orbit_representatives", reps}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::printf("aut_order %lld\n", rep.aut_order);
  std::printf("edge orbits m = %d\n", rep.edge_orbit_count);
  for (const auto& orbit : rep.edge_orbits)
    std::printf("  orbit rep e%d (size %zu)\n", orbit.front(), orbit.size());
  return 0;
}

int cmd_dual(const std::string& path, const std::string& out) {
  ToroidalMap d = tormap::torusmap::dual_map(load_map(path));
  write_output(tormap::json_io::dump(d), out);
  return 0;
}

int cmd_covers(const Options& opt, const std::string& path, long long n) {
  ToroidalMap x = load_map(path);
  if (int rc = require_polyhedral(x, opt)) return rc;
  json out = json::array();
  for (const auto& d : tormap::covers::covers_of(x, n))
    out.push_back(descriptor_json(x, d));
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_classify(const Options& opt, const std::string& path, long long n) {
  ToroidalMap x = load_map(path);
  if (int rc = require_polyhedral(x, opt)) return rc;
  auto c = tormap::covers::classify_covers(x, n);
  json paper = json::array();
  for (const auto& d : c.paper_classes) paper.push_back(descriptor_json(x, d));
  json merged = json::array();
  for (const auto& group : c.merged_classes) {
    json g = json::array();
    for (const auto& d : group) g.push_back(descriptor_json(x, d));
    merged.push_back(g);
  }
  std::cout << json{{"paper_classes", paper}, {"merged_classes", merged}}.dump(2)
            << '\n';
  return 0;
}

int cmd_symmetric_cover(const Options& opt, const std::string& path) {
  ToroidalMap x = load_map(path);
  if (int rc = require_polyhedral(x, opt)) return rc;
  json out = json::array();
  out.push_back(descriptor_json(x, tormap::covers::symmetric_cover(x)));
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_stretch_cover(const Options& opt, const std::string& path,
                      long long n) {
  ToroidalMap x = load_map(path);
  if (int rc = require_polyhedral(x, opt)) return rc;
  json out = json::array();
  out.push_back(descriptor_json(x, tormap::covers::stretch_cover(x, n)));
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_minimal_cover(const Options& opt, const std::string& path, int k,
                      long long max_sheets) {
  ToroidalMap x = load_map(path);
  if (int rc = require_polyhedral(x, opt)) return rc;
  auto d = tormap::covers::minimal_k_orbital_cover(x, k, max_sheets);
  if (!d) {
    std::cout << json{{"status", "not_found"},
                      {"max_sheets", max_sheets}}.dump(2)
              << '\n';
    return 1;  // budget exhausted, requested cover not produced
  }
  json out = json::array();
  out.push_back(descriptor_json(x, *d));
  std::cout << out.dump(2) << '\n';
  return 0;
}

void print_findings(const std::vector<tormap::report::Finding>& findings,
                    bool as_json) {
  if (as_json) {
    json rows = json::array();
    for (const auto& f : findings)
      rows.push_back(json{{"claim", f.claim},
                          {"expected", f.expected},
                          {"observed", f.observed},
                          {"status", f.status}});
    std::cout << rows.dump(2) << '\n';
    return;
  }
  for (const auto& f : findings)
    std::printf("%-34s | %-42s | %s [%s]\n", f.claim.c_str(),
                f.expected.c_str(), f.observed.c_str(), f.status.c_str());
}

int cmd_verify_bounds(const Options& opt, const std::string& tag,
                      long long max_index) {
  std::vector<TilingType> tags;
  if (tag == "all")
    tags.assign(std::begin(tormap::tilings::k_all_types),
                std::end(tormap::tilings::k_all_types));
  else
    tags.push_back(tiling_from_flag(tag));
  auto findings = tormap::report::verify_bounds(tags, max_index, false);
  print_findings(findings, opt.as_json);
  return tormap::report::any_failed(findings) ? 1 : 0;
}

int cmd_reproduce(const Options& opt, const std::string& only) {
  tormap::report::ReproduceOptions ro;
  ro.only = only;
  auto findings = tormap::report::reproduce(ro);
  print_findings(findings, opt.as_json);
  return tormap::report::any_failed(findings) ? 1 : 0;
}

int cmd_export(const std::string& path, const std::string& format,
               const std::string& out) {
  ToroidalMap m = load_map(path);
  if (format == "dot")
    write_output(tormap::dot_export::to_dot(m), out);
  else if (format == "json")
    write_output(tormap::json_io::dump(m), out);
  else
    throw CLI::ValidationError("--format", "must be dot or json");
  return 0;
}

int cmd_lattice_hnf(const Options& opt, const std::string& csv) {
  auto r = tormap::lattice::hnf(lattice_from_flag(csv, "--matrix"));
  if (opt.as_json) {
    std::cout << json{{"hnf", tormap::json_io::lattice_to_json(r.form.matrix())},
                      {"unimodular", tormap::json_io::lattice_to_json(r.u)},
                      {"index", r.form.index()}}.dump(2)
              << '\n';
    return 0;
  }
  std::printf("hnf %s (index %lld), unimodular %s\n",
              tormap::to_csv(r.form.matrix()).c_str(), r.form.index(),
              tormap::to_csv(r.u).c_str());
  return 0;
}

int cmd_lattice_sublattices(const Options& opt, long long n) {
  auto forms = tormap::lattice::sublattices_of_index(n);
  if (opt.as_json) {
    json rows = json::array();
    for (const auto& h : forms)
      rows.push_back(tormap::json_io::lattice_to_json(h.matrix()));
    std::cout << rows.dump(2) << '\n';
    return 0;
  }
  for (const auto& h : forms)
    std::printf("%s\n", tormap::to_csv(h.matrix()).c_str());
  std::printf("sigma(%lld) = %zu sublattices\n", n, forms.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toroidal maps as lattice quotients of periodic tilings"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "machine-readable output");
  app.add_option("--threads", opt.threads, "worker count (reserved)");
  app.add_option("--seed", opt.seed, "RNG seed (reserved; runs deterministic)");
  bool require_poly = true;
  app.add_flag("--require-polyhedral", require_poly,
               "reject degenerate maps (default)");
  app.add_flag("--allow-degenerate", opt.allow_degenerate,
               "analyze non-polyhedral maps too");

  std::string tag, lattice_csv, map_path, out_path, format = "json", only;
  long long n = 1, max_index = 16, max_sheets = 16;
  int k = 1;

  auto* tilings_cmd = app.add_subcommand("tilings", "tiling registry");
  tilings_cmd->add_subcommand("list", "list the twelve tilings");
  tilings_cmd->require_subcommand(1);

  auto* quotient_cmd = app.add_subcommand("quotient", "build a quotient map");
  quotient_cmd->add_option("--tiling", tag, "tiling tag")->required();
  quotient_cmd->add_option("--lattice", lattice_csv, "matrix a,c,b,d")
      ->required();
  quotient_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* orbits_cmd = app.add_subcommand("orbits", "automorphisms and orbits");
  orbits_cmd->add_option("map", map_path, "map JSON file")->required();

  auto* dual_cmd = app.add_subcommand("dual", "combinatorial dual");
  dual_cmd->add_option("map", map_path, "map JSON file")->required();
  dual_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* covers_cmd = app.add_subcommand("covers", "all n-sheeted covers");
  covers_cmd->add_option("--n", n, "sheet count")->required();
  covers_cmd->add_option("map", map_path, "map JSON file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "cover classification");
  classify_cmd->add_option("--n", n, "sheet count")->required();
  classify_cmd->add_option("map", map_path, "map JSON file")->required();

  auto* sym_cmd = app.add_subcommand("symmetric-cover",
                                     "the <gamma^m, delta^m> cover");
  sym_cmd->add_option("map", map_path, "map JSON file")->required();

  auto* stretch_cmd =
      app.add_subcommand("stretch-cover", "the <gamma^n, delta> cover");
  stretch_cmd->add_option("--n", n, "sheet count")->required();
  stretch_cmd->add_option("map", map_path, "map JSON file")->required();

  auto* min_cmd =
      app.add_subcommand("minimal-cover", "least-sheet k-orbital cover");
  min_cmd->add_option("--k", k, "target edge-orbit count")->required();
  min_cmd->add_option("--max-sheets", max_sheets, "sheet budget")->required();
  min_cmd->add_option("map", map_path, "map JSON file")->required();

  auto* verify_cmd =
      app.add_subcommand("verify-bounds", "edge-orbit bound sweeps");
  verify_cmd->add_option("--tiling", tag, "tiling tag or 'all'")
      ->default_val("all");
  verify_cmd->add_option("--max-index", max_index, "lattice index bound")
      ->default_val(16);

  auto* repro_cmd =
      app.add_subcommand("reproduce", "regenerate the findings table");
  repro_cmd->add_option("--only", only, "claim-id prefix filter");

  auto* export_cmd = app.add_subcommand("export", "emit map as JSON or DOT");
  export_cmd->add_option("--format", format, "dot or json")->default_val("json");
  export_cmd->add_option("map", map_path, "map JSON file")->required();
  export_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* lattice_cmd = app.add_subcommand("lattice", "integer lattice tools");
  auto* hnf_cmd = lattice_cmd->add_subcommand("hnf", "Hermite normal form");
  hnf_cmd->add_option("--matrix", lattice_csv, "matrix a,c,b,d")->required();
  auto* sub_cmd =
      lattice_cmd->add_subcommand("sublattices", "index-n sublattices");
  sub_cmd->add_option("--n", n, "index")->required();
  lattice_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage errors are exit 2; --help is success
  }

  try {
    if (tilings_cmd->parsed()) return cmd_tilings_list(opt);
    if (quotient_cmd->parsed()) return cmd_quotient(opt, tag, lattice_csv, out_path);
    if (orbits_cmd->parsed()) return cmd_orbits(opt, map_path);
    if (dual_cmd->parsed()) return cmd_dual(map_path, out_path);
    if (covers_cmd->parsed()) return cmd_covers(opt, map_path, n);
    if (classify_cmd->parsed()) return cmd_classify(opt, map_path, n);
    if (sym_cmd->parsed()) return cmd_symmetric_cover(opt, map_path);
    if (stretch_cmd->parsed()) return cmd_stretch_cover(opt, map_path, n);
    if (min_cmd->parsed()) return cmd_minimal_cover(opt, map_path, k, max_sheets);
    if (verify_cmd->parsed()) return cmd_verify_bounds(opt, tag, max_index);
    if (repro_cmd->parsed()) return cmd_reproduce(opt, only);
    if (export_cmd->parsed()) return cmd_export(map_path, format, out_path);
    if (lattice_cmd->parsed()) {
      if (hnf_cmd->parsed()) return cmd_lattice_hnf(opt, lattice_csv);
      if (sub_cmd->parsed()) return cmd_lattice_sublattices(opt, n);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "map: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
