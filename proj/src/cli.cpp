#include "binconf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "binconf/families.hpp"
#include "binconf/glue.hpp"
#include "binconf/hyperplane.hpp"
#include "binconf/io.hpp"
#include "binconf/iso.hpp"
#include "binconf/triangle.hpp"

namespace binconf {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

IncidenceStructure load_structure(const std::string& path) {
  return parse_structure(slurp(path));
}

std::string format_type(const ConfigurationType& t) {
  std::ostringstream ss;
  ss << "(" << t.nu << "_" << t.rho << " " << t.beta << "_" << t.kappa << ")";
  return ss.str();
}

json type_to_json(const std::optional<ConfigurationType>& t) {
  if (!t) return nullptr;
  return json::array({t->nu, t->rho, t->beta, t->kappa});
}

json signature_to_json(const std::optional<BinomialSignature>& s) {
  if (!s) return nullptr;
  return json::array({s->k, s->m});
}

void emit_structure(const IncidenceStructure& k, const std::string& out_path, bool as_json,
                    const char* command, std::ostream& out) {
  std::string text = serialize_structure(k);
  if (!out_path.empty() && out_path != "-") write_file(out_path, text);
  if (as_json) {
    json j{{"command", command},
           {"points", k.point_count()},
           {"lines", k.line_count()},
           {"structure", text}};
    out << j.dump(2) << '\n';
  } else if (out_path.empty() || out_path == "-") {
    out << text;
  }
}

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"binomial point-line configuration toolkit"};
  app.name("binconf");
  app.require_subcommand(1);
  int rc = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family structure");
  std::string gen_spec, gen_out;
  bool gen_json = false;
  gen->add_option("spec", gen_spec, "family spec, e.g. GS:5,2 or V:3,3 or veblen")->required();
  gen->add_option("-o,--output", gen_out, "output file ('-' for stdout)");
  gen->add_flag("--json", gen_json);
  gen->callback([&] {
    auto k = make_family(FamilySpec::parse(gen_spec));
    emit_structure(k, gen_out, gen_json, "gen", out);
  });

  // type
  auto* type_cmd = app.add_subcommand("type", "print configuration type and binomial signature");
  std::string type_file;
  bool type_json = false;
  type_cmd->add_option("file", type_file)->required();
  type_cmd->add_flag("--json", type_json);
  type_cmd->callback([&] {
    auto k = load_structure(type_file);
    auto t = k.configuration_type();
    auto sig = t ? binomial_signature(*t) : std::nullopt;
    if (type_json) {
      json j{{"command", "type"},
             {"points", k.point_count()},
             {"lines", k.line_count()},
             {"configuration", t.has_value()},
             {"type", type_to_json(t)},
             {"binomial", signature_to_json(sig)}};
      out << j.dump(2) << '\n';
    } else if (!t) {
      out << "not a configuration\n";
    } else if (sig) {
      out << format_type(*t) << ", binomial k=" << sig->k << " m=" << sig->m << "\n";
    } else {
      out << format_type(*t) << ", not binomial\n";
    }
    if (!t) rc = 1;
  });

  // verify
  auto* verify = app.add_subcommand("verify", "partial-linear-space and configuration checks");
  std::string verify_file;
  bool verify_json = false;
  verify->add_option("file", verify_file)->required();
  verify->add_flag("--json", verify_json);
  verify->callback([&] {
    auto k = load_structure(verify_file);
    auto violation = k.pls_violation();
    auto t = k.configuration_type();
    auto sig = t ? binomial_signature(*t) : std::nullopt;
    if (verify_json) {
      json j{{"command", "verify"},
             {"points", k.point_count()},
             {"lines", k.line_count()},
             {"partial_linear_space", !violation.has_value()},
             {"configuration", t.has_value()},
             {"type", type_to_json(t)},
             {"binomial", signature_to_json(sig)}};
      if (violation)
        j["violation"] = {{"points", {violation->point_a, violation->point_b}},
                          {"lines", {violation->line_a, violation->line_b}}};
      out << j.dump(2) << '\n';
    } else {
      out << "points: " << k.point_count() << ", lines: " << k.line_count() << "\n";
      if (violation) {
        out << "partial linear space: no\n";
        out << "  points " << violation->point_a << " and " << violation->point_b
            << " lie on both " << violation->line_a << " and " << violation->line_b << "\n";
      } else {
        out << "partial linear space: yes\n";
        if (t) {
          out << "configuration: " << format_type(*t);
          if (sig) out << ", binomial k=" << sig->k << " m=" << sig->m;
          out << "\n";
        } else {
          out << "configuration: no (point rank or line size not constant)\n";
        }
      }
    }
    if (violation) rc = 1;
  });

  // dual
  auto* dual_cmd = app.add_subcommand("dual", "dualize a structure");
  std::string dual_file, dual_out;
  bool dual_json = false;
  dual_cmd->add_option("file", dual_file)->required();
  dual_cmd->add_option("-o,--output", dual_out);
  dual_cmd->add_flag("--json", dual_json);
  dual_cmd->callback([&] {
    emit_structure(load_structure(dual_file).dual(), dual_out, dual_json, "dual", out);
  });

  // hyperplanes
  auto* hyp = app.add_subcommand("hyperplanes", "enumerate all hyperplanes");
  std::string hyp_file;
  bool hyp_json = false, hyp_require_config = false;
  std::size_t hyp_cap = 24;
  hyp->add_option("file", hyp_file)->required();
  hyp->add_flag("--require-configuration", hyp_require_config,
                "keep only hyperplanes whose restriction is a configuration");
  hyp->add_option("--max-points", hyp_cap, "exhaustive search guard (default 24)");
  hyp->add_flag("--json", hyp_json);
  hyp->callback([&] {
    auto k = load_structure(hyp_file);
    auto views = enumerate_hyperplanes(k, hyp_cap);
    std::vector<std::pair<HyperplaneView, std::optional<ConfigurationType>>> kept;
    for (auto& v : views) {
      auto t = restriction(k, v.points).configuration_type();
      if (hyp_require_config && !t) continue;
      kept.emplace_back(std::move(v), t);
    }
    if (hyp_json) {
      json list = json::array();
      for (const auto& [v, t] : kept) {
        json entry{{"points", v.points}, {"deep_lines", v.deep_lines},
                   {"restriction_type", type_to_json(t)}};
        list.push_back(entry);
      }
      out << json{{"command", "hyperplanes"}, {"count", kept.size()}, {"hyperplanes", list}}
                 .dump(2)
          << '\n';
    } else {
      out << kept.size() << " hyperplanes\n";
      for (const auto& [v, t] : kept) {
        for (std::size_t i = 0; i < v.points.size(); ++i)
          out << (i ? " " : "") << v.points[i];
        if (t) out << "  # restriction " << format_type(*t);
        out << "\n";
      }
    }
  });

  // decompose
  auto* dec = app.add_subcommand("decompose", "decompose at a hyperplane");
  std::string dec_file, dec_hyp, dec_prefix = "decomp";
  bool dec_json = false;
  dec->add_option("file", dec_file)->required();
  dec->add_option("--hyperplane", dec_hyp,
                  "space-separated point ids, or an index into the sorted hyperplane list")
      ->required();
  dec->add_option("-o,--output-prefix", dec_prefix);
  dec->add_flag("--json", dec_json);
  dec->callback([&] {
    auto k = load_structure(dec_file);
    std::vector<std::string> h = split_ws(dec_hyp);
    if (h.size() == 1 && !k.has_point(h[0]) &&
        h[0].find_first_not_of("0123456789") == std::string::npos) {
      auto views = enumerate_hyperplanes(k);
      std::size_t idx = std::stoul(h[0]);
      if (idx >= views.size())
        throw Error("hyperplane index " + h[0] + " out of range (found " +
                    std::to_string(views.size()) + ")");
      h = views[idx].points;
    }
    try {
      auto d = decompose(k, h);
      std::string reduct_path = dec_prefix + "_reduct.cfg";
      std::string rest_path = dec_prefix + "_hyperplane.cfg";
      std::string map_path = dec_prefix + "_infinity.map";
      write_file(reduct_path, serialize_structure(d.reduct_part));
      write_file(rest_path, serialize_structure(d.hyperplane_part));
      write_file(map_path, serialize_gluing(d.infinity));
      if (dec_json) {
        json j{{"command", "decompose"},
               {"reduct", reduct_path},
               {"hyperplane", rest_path},
               {"infinity", map_path},
               {"reduct_type", type_to_json(d.reduct_part.configuration_type())},
               {"hyperplane_type", type_to_json(d.hyperplane_part.configuration_type())},
               {"bijective", d.infinity.bijective}};
        out << j.dump(2) << '\n';
      } else {
        out << "reduct: " << reduct_path << " ("
            << d.reduct_part.point_count() << " points, "
            << d.reduct_part.line_count() << " lines)\n";
        out << "hyperplane: " << rest_path << " ("
            << d.hyperplane_part.point_count() << " points, "
            << d.hyperplane_part.line_count() << " lines)\n";
        out << "infinity: " << map_path
            << (d.infinity.bijective ? " (bijective)" : "") << "\n";
      }
    } catch (const DecomposeError& e) {
      err << "decompose: " << e.what() << "\n";
      rc = 1;
    }
  });

  // compose
  auto* comp = app.add_subcommand("compose", "glue two structures along a map");
  std::string comp_left, comp_right, comp_map, comp_out;
  bool comp_json = false;
  comp->add_option("file1", comp_left)->required();
  comp->add_option("file2", comp_right)->required();
  comp->add_option("--map", comp_map, "gluing map file")->required();
  comp->add_option("-o,--output", comp_out);
  comp->add_flag("--json", comp_json);
  comp->callback([&] {
    auto k1 = load_structure(comp_left);
    auto k2 = load_structure(comp_right);
    try {
      auto inf = parse_gluing(slurp(comp_map), k1, k2);
      emit_structure(glue(k1, k2, inf), comp_out, comp_json, "compose", out);
    } catch (const GlueValidityError& e) {
      err << "compose: " << e.what() << "\n";
      rc = 1;
    }
  });

  // iso
  auto* iso = app.add_subcommand("iso", "isomorphism test");
  std::string iso_left, iso_right;
  bool iso_witness = false, iso_json = false, iso_certs = false;
  std::size_t iso_limit = 64;
  iso->add_option("file1", iso_left)->required();
  iso->add_option("file2", iso_right)->required();
  iso->add_flag("--witness", iso_witness, "print an isomorphism when one exists");
  iso->add_flag("--certificates", iso_certs, "print both canonical certificates");
  iso->add_option("--limit", iso_limit, "size guard on points+lines (default 64)");
  iso->add_flag("--json", iso_json);
  iso->callback([&] {
    auto a = load_structure(iso_left);
    auto b = load_structure(iso_right);
    IsoWitness witness;
    bool isomorphic = are_isomorphic(a, b, iso_limit, iso_witness ? &witness : nullptr);
    json j{{"command", "iso"}, {"isomorphic", isomorphic}};
    if (iso_certs) {
      j["certificates"] = {canonical_form(a, iso_limit).hex(),
                           canonical_form(b, iso_limit).hex()};
    }
    if (iso_json) {
      if (isomorphic && iso_witness)
        j["witness"] = {{"points", witness.points}, {"lines", witness.lines}};
      out << j.dump(2) << '\n';
    } else {
      out << (isomorphic ? "isomorphic" : "not isomorphic") << "\n";
      if (iso_certs)
        out << "certificate 1: " << j["certificates"][0].get<std::string>()
            << "\ncertificate 2: " << j["certificates"][1].get<std::string>() << "\n";
      if (isomorphic && iso_witness) {
        for (const auto& [from, to] : witness.points) out << from << " -> " << to << "\n";
        for (const auto& [from, to] : witness.lines) out << from << " -> " << to << "\n";
      }
    }
    if (!isomorphic) rc = 1;
  });

  // classify-gluings
  auto* cls = app.add_subcommand("classify-gluings",
                                 "partition valid bijective gluings by isomorphism type");
  std::string cls_left, cls_right;
  bool cls_json = false;
  std::uint64_t cls_cap = 362880;
  cls->add_option("file1", cls_left)->required();
  cls->add_option("file2", cls_right)->required();
  cls->add_option("--cap", cls_cap, "candidate count guard (default 9!)");
  cls->add_flag("--json", cls_json);
  cls->callback([&] {
    auto k1 = load_structure(cls_left);
    auto k2 = load_structure(cls_right);
    auto classes = classify_gluings(k1, k2, cls_cap);
    if (cls_json) {
      json list = json::array();
      for (const auto& c : classes) {
        json rep = json::array();
        for (const auto& [line, point] : c.representative.entries)
          rep.push_back(json::array({line, point}));
        list.push_back(json{{"size", c.size},
                            {"certificate", c.certificate_hex},
                            {"representative", rep}});
      }
      out << json{{"command", "classify-gluings"},
                  {"classes", classes.size()},
                  {"class_list", list}}
                 .dump(2)
          << '\n';
    } else {
      out << classes.size() << " classes\n";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        out << "class " << (i + 1) << ": size " << classes[i].size
            << ", certificate " << classes[i].certificate_hex << "\n";
        for (const auto& [line, point] : classes[i].representative.entries)
          out << "  " << line << " -> " << point << "\n";
      }
    }
  });

  // triangle
  auto* tri = app.add_subcommand("triangle", "build a Pascal triangle of configurations");
  std::string tri_family, tri_custom, tri_out_dir, tri_strategy = "first-valid";
  int tri_depth = 4;
  bool tri_verify = false, tri_json = false;
  std::uint64_t tri_seed = 0;
  tri->add_option("--family", tri_family, "grassmannian | veronesian | dual-veronesian");
  tri->add_option("--custom", tri_custom, "manifest with boundary cells: 'm k <file>'");
  tri->add_option("--depth", tri_depth);
  tri->add_option("--strategy", tri_strategy, "first-valid | random");
  tri->add_option("--seed", tri_seed);
  tri->add_option("-o,--output-dir", tri_out_dir);
  tri->add_flag("--verify", tri_verify);
  tri->add_flag("--json", tri_json);
  tri->callback([&] {
    if (tri_family.empty() == tri_custom.empty())
      throw CLI::ValidationError("triangle", "exactly one of --family/--custom is required");
    ConfigTriangle t;
    if (!tri_family.empty()) {
      t = build_family_triangle(triangle_family_from_name(tri_family), tri_depth);
    } else {
      // Boundary manifest: one 'm k <structure-file>' per boundary cell.
      fs::path base = fs::path(tri_custom).parent_path();
      std::istringstream in(slurp(tri_custom));
      std::map<int, IncidenceStructure> column, row;
      std::string line;
      int line_no = 0, depth = 0;
      while (std::getline(in, line)) {
        ++line_no;
        auto pos = line.find('#');
        if (pos != std::string::npos) line = line.substr(0, pos);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() < 3) throw ParseError(line_no, "expected 'm k <structure-file>'");
        if (tokens[0].find_first_not_of("0123456789") != std::string::npos ||
            tokens[1].find_first_not_of("0123456789") != std::string::npos)
          throw ParseError(line_no, "cell coordinates must be integers");
        int m = std::stoi(tokens[0]), k = std::stoi(tokens[1]);
        if (m != 1 && k != 1)
          throw ParseError(line_no, "custom manifests list boundary cells only (m=1 or k=1)");
        auto path = base / tokens[2];
        auto cell = load_structure(path.string());
        if (k == 1) column.emplace(m, std::move(cell));
        else row.emplace(k, std::move(cell));
        depth = std::max({depth, m, k});
      }
      std::vector<IncidenceStructure> bcol, brow;
      for (int m = 1; m <= depth; ++m) {
        auto it = column.find(m);
        if (it == column.end()) throw Error("manifest misses boundary cell (" +
                                            std::to_string(m) + ",1)");
        bcol.push_back(it->second);
      }
      brow.push_back(bcol[0]);
      for (int k = 2; k <= depth; ++k) {
        auto it = row.find(k);
        if (it == row.end()) throw Error("manifest misses boundary cell (1," +
                                         std::to_string(k) + ")");
        brow.push_back(it->second);
      }
      GluingChooser chooser;
      if (tri_strategy == "first-valid") chooser.kind = GluingChooser::Kind::FirstValid;
      else if (tri_strategy == "random") {
        chooser.kind = GluingChooser::Kind::RandomSeeded;
        chooser.seed = tri_seed;
      } else throw Error("unknown strategy '" + tri_strategy + "'");
      t = build_custom_triangle(bcol, brow, chooser);
    }

    if (!tri_out_dir.empty()) {
      fs::create_directories(tri_out_dir);
      std::ostringstream manifest;
      for (const auto& [idx, entry] : t.entries) {
        auto [m, k] = idx;
        std::string cell_name = "cell_" + std::to_string(m) + "_" + std::to_string(k) + ".cfg";
        write_file((fs::path(tri_out_dir) / cell_name).string(), serialize_structure(entry));
        std::string glue_name = "-";
        auto git = t.gluings.find(idx);
        if (git != t.gluings.end()) {
          glue_name = "glue_" + std::to_string(m) + "_" + std::to_string(k) + ".map";
          write_file((fs::path(tri_out_dir) / glue_name).string(),
                     serialize_gluing(git->second));
        }
        manifest << m << " " << k << " " << cell_name << " " << glue_name << "\n";
      }
      write_file((fs::path(tri_out_dir) / "manifest.txt").string(), manifest.str());
    }

    TriangleReport report;
    if (tri_verify) report = verify_triangle(t);
    bool ok = t.unresolved.empty() && (!tri_verify || report.all_pass);
    if (tri_json) {
      json cells = json::array();
      for (const auto& [idx, entry] : t.entries) {
        auto t_opt = entry.configuration_type();
        cells.push_back(json{{"m", idx.first},
                             {"k", idx.second},
                             {"points", entry.point_count()},
                             {"lines", entry.line_count()},
                             {"type", type_to_json(t_opt)}});
      }
      json j{{"command", "triangle"},
             {"provenance", t.provenance},
             {"depth", t.depth},
             {"cells", cells},
             {"all_pass", ok}};
      out << j.dump(2) << '\n';
    } else {
      out << "triangle " << t.provenance << " depth " << t.depth << "\n";
      if (tri_verify) {
        for (const auto& cell : report.cells)
          if (!cell.pass())
            out << "cell (" << cell.m << "," << cell.k << ") FAILED: " << cell.message << "\n";
        out << (report.all_pass ? "all cells pass" : "verification failed") << "\n";
      }
      for (const auto& [m, k] : t.unresolved)
        out << "unresolved cell (" << m << "," << k << ")\n";
    }
    if (!ok) rc = 1;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "binconf: " << e.what() << "\n";
    return 2;
  } catch (const binconf::ParseError& e) {
    err << "binconf: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "binconf: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "binconf: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace binconf
