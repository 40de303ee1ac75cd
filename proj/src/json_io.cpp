#include "burnside/json_io.hpp"

#include <fstream>
#include <sstream>

#include "burnside/catalog.hpp"
#include "burnside/errors.hpp"

namespace burnside {

namespace {

std::vector<std::vector<int>> parse_int_matrix(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError(std::string(what) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw InputError(std::string(what) + " entries must be integers");
      }
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

MonoidPtr parse_generated(const Json& j, const ClosureOptions& opts) {
  std::string type = j.at("type").get<std::string>();
  if (type == "transformations") {
    if (!j.contains("degree")) throw InputError("transformation input needs a degree");
    int degree = j.at("degree").get<int>();
    auto gens = parse_int_matrix(j.at("generators"), "generators");
    return std::make_shared<const FiniteMonoid>(
        generate_from_transformations(degree, gens, opts));
  }
  if (type == "matrices") {
    if (!j.contains("dim")) throw InputError("matrix input needs a dimension");
    int dim = j.at("dim").get<int>();
    int field = 0;
    const Json& f = j.at("field");
    if (f.is_string()) {
      if (f.get<std::string>() != "Z") {
        throw InputError("matrix field must be a prime power or \"Z\"");
      }
    } else if (f.is_number_integer()) {
      field = f.get<int>();
    } else {
      throw InputError("matrix field must be a prime power or \"Z\"");
    }
    if (!j.at("generators").is_array()) {
      throw InputError("matrix generators must be an array");
    }
    std::vector<Matrix> gens;
    for (const auto& g : j.at("generators")) {
      gens.push_back(parse_int_matrix(g, "matrix generator"));
    }
    return std::make_shared<const FiniteMonoid>(
        generate_from_matrices(field, dim, gens, opts));
  }
  throw InputError("unknown generator type: " + type);
}

}  // namespace

MonoidPtr parse_monoid(const Json& j, const ClosureOptions& opts) {
  if (j.is_string()) {
    return catalog_build(j.get<std::string>()).monoid;
  }
  if (!j.is_object()) {
    throw InputError("monoid input must be an object or a catalog name");
  }
  if (j.contains("type")) return parse_generated(j, opts);
  if (!j.contains("cayley")) {
    throw InputError("monoid input needs a cayley table or a generator description");
  }
  auto table = parse_int_matrix(j.at("cayley"), "cayley table");
  std::optional<std::vector<std::string>> labels;
  if (j.contains("labels")) {
    labels.emplace();
    for (const auto& l : j.at("labels")) labels->push_back(l.get<std::string>());
  }
  auto m = std::make_shared<const FiniteMonoid>(FiniteMonoid::from_cayley(table, labels));
  if (j.contains("size") && j.at("size").get<int>() != m->size()) {
    throw InputError("declared size disagrees with the cayley table");
  }
  if (j.contains("identity") && j.at("identity").get<int>() != m->identity()) {
    throw InputError("declared identity disagrees with the cayley table");
  }
  return m;
}

PartialMSet parse_mset(const Json& j, const ClosureOptions& opts) {
  if (!j.is_object() || !j.contains("monoid") || !j.contains("action")) {
    throw InputError("action input needs monoid and action fields");
  }
  MonoidPtr m = parse_monoid(j.at("monoid"), opts);
  const Json& rows = j.at("action");
  if (!rows.is_array()) throw InputError("action must be an array of rows");
  int points = static_cast<int>(rows.size());
  if (j.contains("points") && j.at("points").get<int>() != points) {
    throw InputError("declared point count disagrees with the action rows");
  }
  PartialMSet x(m, points);
  for (int p = 0; p < points; ++p) {
    const Json& row = rows[p];
    if (!row.is_array() || static_cast<int>(row.size()) != m->size()) {
      throw InputError("each action row needs one entry per monoid element");
    }
    for (int t = 0; t < m->size(); ++t) {
      const Json& v = row[t];
      if (v.is_null()) {
        x.set(p, t, -1);
        continue;
      }
      if (!v.is_number_integer()) {
        throw InputError("action entries must be point indices or null");
      }
      int q = v.get<int>();
      if (q < 0 || q >= points) {
        throw InputError("action entry out of range");
      }
      x.set(p, t, q);
    }
  }
  if (j.contains("labels")) {
    std::vector<std::string> labels;
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    x.set_labels(std::move(labels));
  }
  ValidationReport report = validate(x);
  if (!report.ok()) {
    throw InputError("invalid action: " + report.message());
  }
  return x;
}

Json emit_monoid(const FiniteMonoid& m) {
  Json j;
  j["size"] = m.size();
  j["identity"] = m.identity();
  j["cayley"] = m.cayley_rows();
  if (m.has_labels()) j["labels"] = m.labels();
  return j;
}

Json emit_mset(const PartialMSet& x) {
  Json j;
  j["monoid"] = emit_monoid(*x.monoid());
  j["points"] = x.points();
  Json rows = Json::array();
  for (int p = 0; p < x.points(); ++p) {
    Json row = Json::array();
    for (int t = 0; t < x.msize(); ++t) {
      if (x.defined(p, t)) {
        row.push_back(x.act(p, t));
      } else {
        row.push_back(nullptr);
      }
    }
    rows.push_back(std::move(row));
  }
  j["action"] = std::move(rows);
  if (x.has_labels()) {
    Json labels = Json::array();
    for (int p = 0; p < x.points(); ++p) labels.push_back(x.label(p));
    j["labels"] = std::move(labels);
  }
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace burnside
