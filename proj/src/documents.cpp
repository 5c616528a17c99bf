#include "qf/documents.hpp"

#include <limits>
#include <numeric>

#include "qf/errors.hpp"

namespace qf {

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& require_field(const Json& doc, const std::string& key, const std::string& path) {
  if (!doc.is_object()) throw DocumentError(path, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw DocumentError(join(path, key), "missing field");
  return *it;
}

std::int64_t as_int(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) throw DocumentError(path, "expected an integer");
  return value.get<std::int64_t>();
}

std::string as_string(const Json& value, const std::string& path) {
  if (!value.is_string()) throw DocumentError(path, "expected a string");
  return value.get<std::string>();
}

const Json& as_array(const Json& value, const std::string& path) {
  if (!value.is_array()) throw DocumentError(path, "expected an array");
  return value;
}

std::vector<std::int64_t> int_vector(const Json& value, const std::string& path) {
  const Json& arr = as_array(value, path);
  std::vector<std::int64_t> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_int(arr[i], index_path(path, i)));
  return out;
}

Json int_to_json(const Int& value, const std::string& what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    throw InternalError(what + " too large to serialize");
  return Json(static_cast<std::int64_t>(value));
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw DocumentError("", "invalid JSON");
  return doc;
}

PermGroup parse_group_document(const Json& doc, const std::string& path) {
  const std::string type = as_string(require_field(doc, "type", path), join(path, "type"));
  if (type != "permutation") throw DocumentError(join(path, "type"), "expected \"permutation\"");
  const std::int64_t degree = as_int(require_field(doc, "degree", path), join(path, "degree"));
  if (degree < 1 || degree > 1 << 20) throw DocumentError(join(path, "degree"), "degree out of range");

  PermGroup group;
  group.degree = static_cast<int>(degree);
  const std::string gen_path = join(path, "generators");
  const Json& gens = as_array(require_field(doc, "generators", path), gen_path);
  if (gens.empty()) throw DocumentError(gen_path, "at least one generator required");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = index_path(gen_path, i);
    const std::vector<std::int64_t> images = int_vector(gens[i], p);
    if (static_cast<std::int64_t>(images.size()) != degree)
      throw DocumentError(p, "generator image list must have length equal to the degree");
    std::vector<int> img(images.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (images[j] < 0 || images[j] >= degree)
        throw DocumentError(index_path(p, j), "point image out of range");
      img[j] = static_cast<int>(images[j]);
    }
    try {
      group.generators.emplace_back(img);
    } catch (const Error& ex) {
      throw DocumentError(p, ex.what());
    }
  }
  return group;
}

CharacterTable parse_table_document(const Json& doc, const std::string& path) {
  const std::string type = as_string(require_field(doc, "type", path), join(path, "type"));
  if (type != "character_table")
    throw DocumentError(join(path, "type"), "expected \"character_table\"");

  CharacterTable table;
  table.group_order = as_int(require_field(doc, "group_order", path), join(path, "group_order"));
  table.class_sizes =
      int_vector(require_field(doc, "class_sizes", path), join(path, "class_sizes"));
  table.element_orders =
      int_vector(require_field(doc, "element_orders", path), join(path, "element_orders"));
  table.num_classes = static_cast<int>(table.class_sizes.size());

  const std::string pm_path = join(path, "power_maps");
  const Json& pm = require_field(doc, "power_maps", path);
  if (!pm.is_object()) throw DocumentError(pm_path, "expected an object");
  table.exponent = static_cast<std::int64_t>(pm.size());
  if (table.exponent < 1) throw DocumentError(pm_path, "at least one residue required");
  table.power_maps.resize(pm.size());
  for (std::int64_t t = 0; t < table.exponent; ++t) {
    const std::string key = std::to_string(t);
    const auto it = pm.find(key);
    if (it == pm.end())
      throw DocumentError(join(pm_path, key), "missing residue (keys must be 0..exponent-1)");
    const std::vector<std::int64_t> m = int_vector(*it, join(pm_path, key));
    table.power_maps[t].reserve(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] < 0 || m[j] >= table.num_classes)
        throw DocumentError(index_path(join(pm_path, key), j), "class index out of range");
      table.power_maps[t].push_back(static_cast<int>(m[j]));
    }
  }

  const std::string irr_path = join(path, "irreducibles");
  const Json& irr = as_array(require_field(doc, "irreducibles", path), irr_path);
  for (std::size_t r = 0; r < irr.size(); ++r) {
    const std::string row_path = index_path(irr_path, r);
    const Json& row = as_array(irr[r], row_path);
    std::vector<Cyclotomic> values;
    values.reserve(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string cell = as_string(row[j], index_path(row_path, j));
      Cyclotomic value = Cyclotomic::zero(1);
      try {
        value = Cyclotomic::parse(cell);
      } catch (const Error& ex) {
        throw DocumentError(index_path(row_path, j), ex.what());
      }
      if (table.exponent % value.order() != 0)
        throw ValidationError("character value order must divide the exponent");
      values.push_back(value.lifted(table.exponent));
    }
    table.irreducibles.push_back(std::move(values));
  }

  for (const std::vector<Cyclotomic>& row : table.irreducibles) {
    if (row.empty()) throw ValidationError("irreducibles must be a square matrix");
    const Cyclotomic& head = row[0];
    if (!head.integrality().rational_integer || head.rational_value() < 1)
      throw ValidationError("column 0 must hold the degrees");
    table.degrees.push_back(rat_num(head.rational_value()));
  }
  for (int r = 0; r < static_cast<int>(table.degrees.size()); ++r)
    if (table.degrees[r] == 1) table.linear_indices.push_back(r);

  validate_table(table);
  return table;
}

Json serialize_table(const CharacterTable& table) {
  Json doc = Json::object();
  doc["type"] = "character_table";
  doc["group_order"] = table.group_order;
  doc["class_sizes"] = table.class_sizes;
  doc["element_orders"] = table.element_orders;
  Json pm = Json::object();
  for (std::size_t t = 0; t < table.power_maps.size(); ++t)
    pm[std::to_string(t)] = table.power_maps[t];
  doc["power_maps"] = std::move(pm);
  Json rows = Json::array();
  for (const std::vector<Cyclotomic>& row : table.irreducibles) {
    Json cells = Json::array();
    for (const Cyclotomic& value : row) cells.push_back(value.to_string());
    rows.push_back(std::move(cells));
  }
  doc["irreducibles"] = std::move(rows);
  return doc;
}

Representation parse_rep_document(const Json& doc, const TablePtr& table,
                                  const std::string& path) {
  if (!doc.is_object()) throw DocumentError(path, "expected an object");
  const int k = table->num_classes;

  if (doc.contains("values")) {
    const std::string vpath = join(path, "values");
    const Json& arr = as_array(doc["values"], vpath);
    if (static_cast<int>(arr.size()) != k)
      throw DocumentError(vpath, "one value per conjugacy class required");
    ClassFunction f{table, {}};
    for (std::size_t j = 0; j < arr.size(); ++j) {
      const std::string cell = as_string(arr[j], index_path(vpath, j));
      try {
        f.values.push_back(Cyclotomic::parse(cell));
      } catch (const Error& ex) {
        throw DocumentError(index_path(vpath, j), ex.what());
      }
    }
    const Decomposition dec = from_class_function(f);
    if (!dec.character)
      throw ValidationError("class values do not decompose into integer multiplicities");
    for (const Int& m : dec.character->coords)
      if (m < 0) throw ValidationError("representation multiplicities must be non-negative");
    Representation rep{table, dec.character->coords};
    rep.validate();
    return rep;
  }

  const std::string rpath = join(path, "rep");
  const Json& entries = as_array(require_field(doc, "rep", path), rpath);
  Representation rep{table, std::vector<Int>(k, 0)};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string epath = index_path(rpath, i);
    const std::int64_t irr = as_int(require_field(entries[i], "irr", epath), join(epath, "irr"));
    const std::int64_t mult =
        as_int(require_field(entries[i], "mult", epath), join(epath, "mult"));
    if (irr < 0 || irr >= k) throw DocumentError(join(epath, "irr"), "irreducible index out of range");
    if (mult < 1) throw DocumentError(join(epath, "mult"), "multiplicity must be positive");
    rep.mults[irr] += mult;
  }
  rep.validate();
  return rep;
}

TablePtr resolve_group_document(const Json& doc, const std::string& path) {
  const std::string type = as_string(require_field(doc, "type", path), join(path, "type"));
  if (type == "permutation")
    return std::make_shared<const CharacterTable>(compute_table(parse_group_document(doc, path)));
  if (type == "character_table")
    return std::make_shared<const CharacterTable>(parse_table_document(doc, path));
  throw DocumentError(join(path, "type"), "expected \"permutation\" or \"character_table\"");
}

JobDocument parse_job_document(const Json& doc) {
  JobDocument job;
  job.table = resolve_group_document(require_field(doc, "group", ""), "group");
  job.pi1 = parse_rep_document(require_field(doc, "pi1", ""), job.table, "pi1");
  job.pi2 = parse_rep_document(require_field(doc, "pi2", ""), job.table, "pi2");
  if (doc.contains("config")) {
    const Json& cfg = doc["config"];
    if (!cfg.is_object()) throw DocumentError("config", "expected an object");
    if (cfg.contains("height_bound")) {
      const std::int64_t h = as_int(cfg["height_bound"], "config.height_bound");
      if (h < 1 || h > std::numeric_limits<int>::max())
        throw DocumentError("config.height_bound", "must be a positive integer");
      job.config.height_bound = static_cast<int>(h);
    }
    if (cfg.contains("candidate_limit")) {
      const std::int64_t l = as_int(cfg["candidate_limit"], "config.candidate_limit");
      if (l < 1) throw DocumentError("config.candidate_limit", "must be a positive integer");
      job.config.candidate_limit = l;
    }
  }
  return job;
}

Json serialize_k_groups(const KGroups& groups) {
  Json torsion = Json::array();
  for (const Int& d : groups.torsion) torsion.push_back(int_to_json(d, "torsion factor"));
  return Json{{"torsion", std::move(torsion)},
              {"free_rank", groups.free_rank},
              {"k1_rank", groups.k1_rank}};
}

Json serialize_coords(const std::vector<Int>& coords) {
  Json out = Json::array();
  for (const Int& c : coords) out.push_back(int_to_json(c, "coordinate"));
  return out;
}

Json serialize_values(const std::vector<Cyclotomic>& values) {
  Json out = Json::array();
  for (const Cyclotomic& v : values) out.push_back(v.to_string());
  return out;
}

Json serialize_obstruction(const Obstruction& obstruction) {
  return std::visit(
      [](const auto& record) -> Json {
        using T = std::decay_t<decltype(record)>;
        if constexpr (std::is_same_v<T, obstruction::DimensionMismatch>) {
          return Json{{"kind", "dimension_mismatch"},
                      {"n1", int_to_json(record.n1, "dimension")},
                      {"n2", int_to_json(record.n2, "dimension")}};
        } else if constexpr (std::is_same_v<T, obstruction::NotFaithful>) {
          return Json{{"kind", "not_faithful"}, {"which", record.which}};
        } else if constexpr (std::is_same_v<T, obstruction::VanishingSetMismatch>) {
          return Json{{"kind", "vanishing_set_mismatch"}, {"v1", record.v1}, {"v2", record.v2}};
        } else if constexpr (std::is_same_v<T, obstruction::NormMismatch>) {
          return Json{{"kind", "norm_mismatch"},
                      {"class_index", record.class_index},
                      {"norm1", int_to_json(record.norm1, "norm")},
                      {"norm2", int_to_json(record.norm2, "norm")}};
        } else if constexpr (std::is_same_v<T, obstruction::KTheoryMismatch>) {
          return Json{{"kind", "k_theory_mismatch"},
                      {"groups1", serialize_k_groups(record.groups1)},
                      {"groups2", serialize_k_groups(record.groups2)}};
        } else if constexpr (std::is_same_v<T, obstruction::ForcedUnitNotVirtual>) {
          return Json{{"kind", "forced_unit_not_virtual"},
                      {"forced_values", serialize_values(record.forced_values)},
                      {"bad_index", record.bad_index},
                      {"bad_coordinate", record.bad_coordinate.to_string()}};
        } else if constexpr (std::is_same_v<T, obstruction::ForcedUnitNotUnit>) {
          Json out{{"kind", "forced_unit_not_unit"},
                   {"forced_coords", serialize_coords(record.forced.coords)}};
          out["reason"] = record.reason == UnitCheck::Failure::ZeroValue ? "zero_value"
                                                                        : "non_integral_inverse";
          if (record.reason == UnitCheck::Failure::ZeroValue) out["zero_class"] = record.zero_class;
          return out;
        } else {
          static_assert(std::is_same_v<T, obstruction::NoIntegralSolution>);
          return Json{{"kind", "no_integral_solution"}};
        }
      },
      obstruction);
}

Json serialize_verdict(const Verdict& verdict) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Conjugate>) {
          return Json{{"verdict", "conjugate"},
                      {"witness", serialize_coords(v.witness.coords)},
                      {"inverse", serialize_coords(v.inverse.coords)}};
        } else if constexpr (std::is_same_v<T, NotConjugate>) {
          return Json{{"verdict", "not_conjugate"},
                      {"obstruction", serialize_obstruction(v.obstruction)}};
        } else {
          static_assert(std::is_same_v<T, Unknown>);
          return Json{{"verdict", "unknown"},
                      {"candidates_tested", v.candidates_tested},
                      {"height_bound", v.height_bound},
                      {"lattice_rank", v.lattice_rank}};
        }
      },
      verdict);
}

}  // namespace qf
