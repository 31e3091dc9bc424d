#include "perihall/cli/catalog_file.hpp"

#include <json.hpp>
#include <limits>

#include "perihall/error.hpp"

namespace perihall::cli {

using json = nlohmann::ordered_json;
using hall::Integer;
using hall::Rational;
using ffla::FieldSpec;
using ffla::MatrixFp;
using repcat::Rep;

namespace {

std::int64_t to_i64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ContractViolation("catalog: integer " + v.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

json rational_json(const Rational& r) {
  return json::array({to_i64(boost::multiprecision::numerator(r)), to_i64(boost::multiprecision::denominator(r))});
}

json stalks_json(const StalkList& s) {
  json a = json::array();
  for (const auto& [c, sh] : s) a.push_back(json::array({c, sh}));
  return a;
}

[[noreturn]] void bad(const std::string& source, const std::string& what) {
  throw ParseError(source, 0, 0, "catalog: " + what);
}

const json& field(const json& j, const char* key, const std::string& source) {
  if (!j.is_object() || !j.contains(key)) bad(source, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key, const std::string& source) {
  try {
    return field(j, key, source).get<T>();
  } catch (const json::exception& e) {
    bad(source, std::string("field '") + key + "': " + e.what());
  }
}

Rational rational_of(const json& j, const std::string& source) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    bad(source, "expected [numerator, denominator]");
  const auto n = j[0].get<std::int64_t>(), d = j[1].get<std::int64_t>();
  if (d <= 0) bad(source, "non-positive denominator");
  const Rational r{Integer(n), Integer(d)};
  if (boost::multiprecision::denominator(r) != d) bad(source, "rational not in lowest terms");
  return r;
}

StalkList stalks_from(const json& j, const std::string& source) {
  if (!j.is_array()) bad(source, "expected a stalk list");
  StalkList out;
  for (const auto& s : j) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() || !s[1].is_number_integer())
      bad(source, "expected [class, shift]");
    out.emplace_back(s[0].get<std::uint32_t>(), s[1].get<int>());
  }
  return out;
}

}  // namespace

StalkList stalks_of(const cyclecat::PeriodicObject& x) {
  StalkList s;
  for (const auto& t : x.summands()) s.emplace_back(t.cls, t.shift);
  return s;
}

cyclecat::PeriodicObject object_of(const StalkList& s) {
  std::vector<cyclecat::Stalk> out;
  for (const auto& [c, sh] : s) out.push_back({c, sh});
  return cyclecat::PeriodicObject(std::move(out), cyclecat::kPeriod);
}

CatalogFile snapshot(const repcat::Catalog& catalog, hall::HallAlgebra& alg, const repcat::DimVector& bound) {
  CatalogFile c;
  c.quiver_hash = catalog.quiver()->hash();
  c.quiver_text = catalog.quiver()->canonical_text();
  c.q = catalog.field().q();
  c.bound = bound;
  for (std::size_t id = 0; id < catalog.size(); ++id) {
    const auto cls = static_cast<repcat::ClassId>(id);
    const Rep r = catalog.representative(cls);
    ClassRecord rec{catalog.name(cls), r.dims(), {}};
    for (std::size_t a = 0; a < catalog.quiver()->arrows().size(); ++a) {
      const auto& m = r.map(a);
      std::vector<std::vector<std::int64_t>> rows;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
      }
      rec.maps.push_back(std::move(rows));
    }
    c.classes.push_back(std::move(rec));
  }
  for (const auto& t : alg.computed()) {
    const auto v = alg.hall_number(t.x, t.y, t.l);
    c.constants.push_back({stalks_of(t.x), stalks_of(t.y), stalks_of(t.l), v.a(), v.b()});
  }
  return c;
}

std::string to_json(const CatalogFile& c) {
  json j;
  j["schema"] = "perihall-catalog";
  j["version"] = c.version;
  j["tool"] = c.tool;
  j["quiver_hash"] = c.quiver_hash;
  j["quiver"] = c.quiver_text;
  j["q"] = c.q;
  j["bound"] = c.bound;
  json classes = json::array();
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto& r = c.classes[i];
    classes.push_back({{"id", i}, {"name", r.name}, {"dims", r.dims}, {"maps", r.maps}});
  }
  j["classes"] = std::move(classes);
  json consts = json::array();
  for (const auto& k : c.constants)
    consts.push_back({{"x", stalks_json(k.x)},
                      {"y", stalks_json(k.y)},
                      {"l", stalks_json(k.l)},
                      {"a", rational_json(k.a)},
                      {"b", rational_json(k.b)}});
  j["constants"] = std::move(consts);
  return j.dump(1) + "\n";
}

CatalogFile from_json(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source, 0, static_cast<int>(e.byte), std::string("catalog: ") + e.what());
  }
  if (get<std::string>(j, "schema", source) != "perihall-catalog") bad(source, "not a perihall catalog");
  CatalogFile c;
  c.version = get<int>(j, "version", source);
  if (c.version != kCatalogVersion)
    throw ContractViolation(source + ": catalog schema version " + std::to_string(c.version) +
                            " is not supported (expected " + std::to_string(kCatalogVersion) + ")");
  c.tool = get<std::string>(j, "tool", source);
  c.quiver_hash = get<std::string>(j, "quiver_hash", source);
  c.quiver_text = get<std::string>(j, "quiver", source);
  c.q = get<std::uint32_t>(j, "q", source);
  c.bound = get<repcat::DimVector>(j, "bound", source);
  const auto& classes = field(j, "classes", source);
  if (!classes.is_array()) bad(source, "'classes' must be an array");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& r = classes[i];
    if (get<std::size_t>(r, "id", source) != i) bad(source, "class ids must be 0, 1, 2, ... in order");
    c.classes.push_back({get<std::string>(r, "name", source), get<repcat::DimVector>(r, "dims", source),
                         get<std::vector<std::vector<std::vector<std::int64_t>>>>(r, "maps", source)});
  }
  const auto& consts = field(j, "constants", source);
  if (!consts.is_array()) bad(source, "'constants' must be an array");
  for (const auto& k : consts)
    c.constants.push_back({stalks_from(field(k, "x", source), source), stalks_from(field(k, "y", source), source),
                           stalks_from(field(k, "l", source), source), rational_of(field(k, "a", source), source),
                           rational_of(field(k, "b", source), source)});
  return c;
}

void seed(repcat::Catalog& catalog, const CatalogFile& c) {
  if (catalog.size() != 0) throw ContractViolation("seed: catalog is not empty");
  const auto& q = catalog.quiver();
  const FieldSpec f = catalog.field();
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto& r = c.classes[i];
    if (r.dims.size() != q->num_vertices() || r.maps.size() != q->arrows().size())
      throw ContractViolation("class " + std::to_string(i) + " does not fit the quiver");
    std::vector<MatrixFp> maps;
    for (std::size_t a = 0; a < r.maps.size(); ++a)
      maps.push_back(MatrixFp::from_rows(f, r.maps[a], r.dims[q->arrows()[a].target]));
    const auto id = catalog.classify_indecomposable(Rep(q, f, r.dims, std::move(maps)));
    if (id != i) throw ContractViolation("class " + std::to_string(i) + " (" + r.name + ") repeats class " +
                                         std::to_string(id));
    if (catalog.name(id) != r.name)
      throw ContractViolation("class " + std::to_string(i) + " is named " + catalog.name(id) + ", file says " +
                              r.name);
  }
}

}  // namespace perihall::cli
