#include "burnside/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "burnside/catalog.hpp"
#include "burnside/errors.hpp"
#include "burnside/green.hpp"
#include "burnside/json_io.hpp"
#include "burnside/orbits.hpp"
#include "burnside/ring.hpp"
#include "burnside/structure.hpp"

namespace burnside {

namespace {

struct RunConfig {
  std::string input_file;
  std::string catalog_name;
  std::string format = "json";
  std::string out_file;
  int element_cap = 100000;
  int congruence_cap = 12;
  unsigned seed = 12345;
};

struct Source {
  MonoidPtr monoid;
  std::optional<PartialMSet> mset;
};

Source load_source(const RunConfig& cfg) {
  if (!cfg.input_file.empty() && !cfg.catalog_name.empty()) {
    throw InputError("pass either --input or --catalog, not both");
  }
  if (!cfg.catalog_name.empty()) {
    CatalogObject obj = catalog_build(cfg.catalog_name);
    return {obj.monoid, obj.mset};
  }
  if (!cfg.input_file.empty()) {
    Json j = load_json_file(cfg.input_file);
    ClosureOptions opts{cfg.element_cap};
    if (j.is_object() && j.contains("action")) {
      PartialMSet x = parse_mset(j, opts);
      MonoidPtr m = x.monoid();
      return {m, std::move(x)};
    }
    return {parse_monoid(j, opts), std::nullopt};
  }
  throw InputError("no input: pass --input FILE or --catalog NAME");
}

std::string inline_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    bool first = true;
    for (const auto& e : v) {
      if (!first) s += ", ";
      first = false;
      s += inline_value(e);
    }
    return s + "]";
  }
  return v.dump();
}

bool scalar_array(const Json& a) {
  for (const auto& e : a) {
    if (e.is_object() || e.is_array()) return false;
  }
  return true;
}

void render_text(const Json& j, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !scalar_array(v))) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << k << ": " << inline_value(v) << "\n";
      }
    }
    return;
  }
  if (j.is_array()) {
    int idx = 0;
    for (const auto& v : j) {
      if (v.is_object() || (v.is_array() && !scalar_array(v))) {
        os << pad << "[" << idx << "]:\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << inline_value(v) << "\n";
      }
      ++idx;
    }
    return;
  }
  os << pad << inline_value(j) << "\n";
}

void deliver(const Json& report, const RunConfig& cfg, std::ostream& out) {
  std::ostringstream rendered;
  if (cfg.format == "json") {
    rendered << report.dump(2) << "\n";
  } else {
    render_text(report, rendered, 0);
  }
  if (!cfg.out_file.empty()) {
    std::ofstream f(cfg.out_file);
    if (!f) throw InputError("cannot write output file: " + cfg.out_file);
    f << rendered.str();
  } else {
    out << rendered.str();
  }
}

Json basis_manifest(const OrbitBasis& basis) {
  Json arr = Json::array();
  for (int i = 0; i < basis.size(); ++i) {
    const StrongOrbitClass& cls = basis.classes[i];
    Json entry;
    entry["id"] = i;
    entry["points"] = cls.rep.points();
    entry["apex_j"] = cls.apex_j;
    entry["idempotent"] = cls.cong.e;
    entry["congruence_classes"] = cls.cong.classes;
    entry["aut_order"] = cls.aut_order;
    entry["encoding"] = cls.encoding;
    arr.push_back(std::move(entry));
  }
  return arr;
}

Json cmd_analyze(const Source& src) {
  const FiniteMonoid& m = *src.monoid;
  GreenData g = compute_green(m);
  Json j;
  j["command"] = "analyze";
  j["size"] = m.size();
  j["identity"] = m.identity();
  if (m.has_labels()) j["labels"] = m.labels();
  j["stable"] = check_stability(m, g);
  j["idempotents"] = g.idempotents;
  Json counts;
  counts["r"] = g.r_classes.size();
  counts["l"] = g.l_classes.size();
  counts["j"] = g.j_classes.size();
  counts["h"] = g.h_classes.size();
  j["class_counts"] = std::move(counts);
  Json jc = Json::array();
  for (std::size_t id = 0; id < g.j_classes.size(); ++id) {
    Json entry;
    entry["id"] = id;
    entry["size"] = g.j_classes[id].size();
    entry["regular"] = static_cast<bool>(g.regular_j[id]);
    if (g.designated_idem[id] >= 0) {
      int e = g.designated_idem[id];
      entry["designated_idempotent"] = e;
      entry["r_class_size"] = g.r_classes[g.r_class[e]].size();
      entry["max_subgroup_order"] = maximal_subgroup(m, g, e).order();
    } else {
      entry["designated_idempotent"] = nullptr;
    }
    jc.push_back(std::move(entry));
  }
  j["j_classes"] = std::move(jc);
  return j;
}

Json cmd_orbits(const Source& src) {
  PartialMSet x = src.mset ? *src.mset : right_regular(src.monoid);
  GreenData g = compute_green(*src.monoid);
  Json j;
  j["command"] = "orbits";
  j["points"] = x.points();
  j["weak_orbits"] = weak_orbits(x);
  Json strong = Json::array();
  for (const auto& orbit : strong_orbits(x, g)) {
    CanonicalOrbit canon = canonical_form(orbit, src.monoid, g);
    OrbitAutomorphisms aut = aut_group(src.monoid, g, canon.cong);
    Json entry;
    entry["points"] = orbit.points;
    entry["apex_j"] = orbit.apex_j;
    entry["idempotent"] = canon.cong.e;
    entry["congruence_classes"] = canon.cong.classes;
    entry["aut_order"] = aut.order;
    strong.push_back(std::move(entry));
  }
  j["strong_orbits"] = std::move(strong);
  return j;
}

Json cmd_burnside(const Source& src, const RunConfig& cfg) {
  BasisPtr basis = compute_basis(src.monoid, cfg.congruence_cap);
  Json j;
  j["command"] = "burnside";
  j["rank"] = basis->size();
  j["one_index"] = basis->one_index;
  j["basis"] = basis_manifest(*basis);
  j["multiplication"] = multiplication_table(basis);
  return j;
}

Json cmd_marks(const Source& src, const RunConfig& cfg) {
  BasisPtr basis = compute_basis(src.monoid, cfg.congruence_cap);
  MarksTable marks = marks_table(basis);
  SemisimplicityCertificate cert = semisimplicity_certificate(marks, cfg.seed);
  Json j;
  j["command"] = "marks";
  j["rank"] = basis->size();
  j["basis"] = basis_manifest(*basis);
  j["matrix"] = marks.matrix;
  j["determinant"] = cert.determinant;
  j["index"] = cert.index;
  j["semisimple"] = cert.semisimple;
  j["multiplicative"] = cert.multiplicative;
  j["pairs_checked"] = cert.pairs_checked;
  return j;
}

Json cmd_structure(const Source& src, const RunConfig& cfg) {
  BasisPtr basis = compute_basis(src.monoid, cfg.congruence_cap);
  StructureAnalysis a = analyze_structure(basis);
  Json j;
  j["command"] = "structure";
  j["distinguishable"] = a.distinguishable;
  j["verdict"] = a.distinguishable ? "distinguishable" : "not distinguishable";
  Json witnesses = Json::array();
  for (const auto& jc : a.report.regular) {
    if (!jc.distinguishable) witnesses.push_back(jc.j_class);
  }
  j["witness_j_classes"] = std::move(witnesses);
  j["er"] = a.report.er;
  j["commuting_idempotents"] = a.report.commuting_idempotents;
  Json per = Json::array();
  for (const auto& jc : a.report.regular) {
    Json entry;
    entry["id"] = jc.j_class;
    entry["distinguishable"] = jc.distinguishable;
    entry["indistinct_l_pairs"] = jc.indistinct_pairs;
    per.push_back(std::move(entry));
  }
  j["j_classes"] = std::move(per);
  j["designated_idempotents"] = a.designated;
  Json counts = Json::array();
  for (const auto& ring : a.rings) counts.push_back(ring.subgroup_reps.size());
  j["subgroup_class_counts"] = std::move(counts);
  j["rank_burnside"] = a.rank_burnside;
  j["rank_product"] = a.rank_product;
  j["phi_matrix"] = a.phi_matrix;
  j["structure_matrix"] = a.structure_mat;
  return j;
}

Json cmd_catalog_list() {
  Json j;
  j["command"] = "catalog";
  Json arr = Json::array();
  for (const auto& entry : catalog_entries()) {
    Json e;
    e["name"] = entry.name;
    e["args"] = entry.args;
    e["summary"] = entry.summary;
    arr.push_back(std::move(e));
  }
  j["entries"] = std::move(arr);
  return j;
}

Json cmd_catalog_emit(const std::string& request) {
  CatalogObject obj = catalog_build(request);
  Json j;
  j["command"] = "catalog";
  j["name"] = obj.name;
  j["notes"] = obj.notes;
  j["monoid"] = emit_monoid(*obj.monoid);
  if (obj.mset) j["mset"] = emit_mset(*obj.mset);
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  std::vector<std::string> catalog_tokens;
  CLI::App app{"Burnside rings of finite monoids from partial actions"};
  app.require_subcommand(1);

  auto add_common = [&cfg, &catalog_tokens](CLI::App* sub) {
    sub->add_option("--input", cfg.input_file, "JSON file with a monoid or an action");
    sub->add_option("--catalog", catalog_tokens,
                    "catalog entry with arguments, e.g. full_transformation 2");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--element-cap", cfg.element_cap, "closure size cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--congruence-cap", cfg.congruence_cap, "R-class size cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for sampled certificate checks");
    sub->add_option("--out", cfg.out_file, "write the report to a file");
  };

  CLI::App* analyze =
      app.add_subcommand("analyze", "Green's relations, idempotents, maximal subgroups");
  CLI::App* orbits = app.add_subcommand(
      "orbits", "orbit decomposition (of the right regular action unless an action is given)");
  CLI::App* burn = app.add_subcommand("burnside", "orbit-class basis and multiplication table");
  CLI::App* marks = app.add_subcommand("marks", "table of marks and semisimplicity certificate");
  CLI::App* structure =
      app.add_subcommand("structure", "distinguishability and the coordinatewise map");
  for (CLI::App* sub : {analyze, orbits, burn, marks, structure}) add_common(sub);

  CLI::App* cat = app.add_subcommand("catalog", "built-in example monoids and actions");
  cat->require_subcommand(1);
  CLI::App* cat_list = cat->add_subcommand("list", "list catalog entries");
  add_common(cat_list);
  CLI::App* cat_emit = cat->add_subcommand("emit", "emit a catalog entry as JSON");
  add_common(cat_emit);
  std::vector<std::string> emit_tokens;
  cat_emit->add_option("name", emit_tokens, "entry name and arguments")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  for (const auto& tok : catalog_tokens) {
    if (!cfg.catalog_name.empty()) cfg.catalog_name += ' ';
    cfg.catalog_name += tok;
  }

  auto error_report = [&](const char* kind, const std::string& message) {
    Json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    try {
      deliver(j, cfg, out);
    } catch (const Error&) {
      err << kind << " error: " << message << "\n";
    }
  };

  try {
    Json report;
    if (analyze->parsed()) {
      report = cmd_analyze(load_source(cfg));
    } else if (orbits->parsed()) {
      report = cmd_orbits(load_source(cfg));
    } else if (burn->parsed()) {
      report = cmd_burnside(load_source(cfg), cfg);
    } else if (marks->parsed()) {
      report = cmd_marks(load_source(cfg), cfg);
    } else if (structure->parsed()) {
      report = cmd_structure(load_source(cfg), cfg);
    } else if (cat_list->parsed()) {
      report = cmd_catalog_list();
    } else if (cat_emit->parsed()) {
      std::string request;
      for (const auto& tok : emit_tokens) {
        if (!request.empty()) request += ' ';
        request += tok;
      }
      report = cmd_catalog_emit(request);
    } else {
      throw InputError("no command given");
    }
    deliver(report, cfg, out);
    return 0;
  } catch (const InputError& e) {
    error_report("input", e.what());
    return 2;
  } catch (const CapError& e) {
    error_report("cap", e.what());
    return 3;
  } catch (const InternalError& e) {
    error_report("internal", e.what());
    return 4;
  } catch (const std::exception& e) {
    error_report("internal", e.what());
    return 4;
  }
}

}  // namespace burnside
