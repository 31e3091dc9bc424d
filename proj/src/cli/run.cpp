#include "perihall/cli/run.hpp"

#include <fstream>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <sstream>

#include "perihall/cli/catalog_file.hpp"
#include "perihall/cli/quiver_spec.hpp"
#include "perihall/error.hpp"
#include "perihall/hall/verify.hpp"

namespace perihall::cli {

using json = nlohmann::ordered_json;
using cyclecat::OrbitCategory;
using ffla::FieldSpec;
using cyclecat::PeriodicObject;
using hall::HallAlgebra;
using hall::HallValue;
using hall::HallVector;
using hall::Report;

namespace {

struct Context {
  std::shared_ptr<repcat::Catalog> catalog;
  std::shared_ptr<OrbitCategory> cat;
  std::shared_ptr<HallAlgebra> alg;
  repcat::DimVector bound;
};

repcat::DimVector resolve_bound(const std::vector<std::size_t>& max_dim, std::size_t n) {
  if (max_dim.empty()) return repcat::DimVector(n, 1);
  if (max_dim.size() == 1) return repcat::DimVector(n, max_dim[0]);
  if (max_dim.size() != n)
    throw ContractViolation("--max-dim has " + std::to_string(max_dim.size()) + " entries for " + std::to_string(n) +
                            " vertices");
  return max_dim;
}

Context make_context(const QuiverSpec& spec, std::uint32_t p, const JobSpec& job, const CatalogFile* from) {
  if (job.budget == 0) throw ContractViolation("--budget must be positive");
  Context c;
  c.catalog = std::make_shared<repcat::Catalog>(spec.quiver, FieldSpec(p), Budget{job.budget});
  c.bound = from ? from->bound : resolve_bound(job.max_dim, spec.quiver->num_vertices());
  if (from) seed(*c.catalog, *from);
  else c.catalog->enumerate_indecomposables(c.bound);
  c.cat = std::make_shared<OrbitCategory>(c.catalog);
  c.alg = std::make_shared<HallAlgebra>(std::make_shared<hall::OrbitOracle>(c.cat));
  return c;
}

Context make_context(const JobSpec& job) {
  const auto spec = load_quiver_spec(job.quiver);
  return make_context(spec, job.p.value_or(spec.p.value_or(2)), job, nullptr);
}

std::int64_t to_i64(const hall::Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ContractViolation("integer " + v.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

json rational_json(const hall::Rational& r) {
  return json::array({to_i64(boost::multiprecision::numerator(r)), to_i64(boost::multiprecision::denominator(r))});
}

json value_json(const HallValue& v) {
  return {{"a", rational_json(v.a())}, {"b", rational_json(v.b())}, {"text", v.to_string()}};
}

json vector_json(const OrbitCategory& cat, const HallVector& v) {
  json a = json::array();
  for (const auto& [x, c] : v.terms()) {
    json t = value_json(c);
    t["object"] = cat.name(x);
    a.push_back(std::move(t));
  }
  return a;
}

std::string vector_table(const OrbitCategory& cat, const HallVector& v) {
  if (v.is_zero()) return "0\n";
  std::string s;
  for (const auto& [x, c] : v.terms()) s += c.to_string() + "\tu_" + cat.name(x) + "\n";
  return s;
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"label", c.label}, {"ok", c.ok}, {"detail", c.detail}, {"informational", c.informational}});
  return {{"property", r.property},
          {"checks", std::move(checks)},
          {"passed", r.count() - r.failures()},
          {"failed", r.failures()}};
}

void need_args(const JobSpec& job, std::size_t n, const char* usage) {
  if (job.args.size() != n) throw ContractViolation(std::string("usage: ") + usage);
}

template <class T>
std::vector<T> spread(const std::vector<T>& all, std::size_t n) {
  if (n == 0 || n >= all.size()) return all;
  std::vector<T> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(all[i * all.size() / n]);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, sep)) out.push_back(t);
  return out;
}

void apply_fault(Context& c, const std::string& spec, std::ostream& err) {
  hall::Triple t;
  if (spec == "auto") {
    const auto objs = c.cat->enumerate(c.bound);
    bool found = false;
    for (std::size_t i = 0; i < objs.size() && !found; ++i)
      for (std::size_t j = 0; j < objs.size() && !found; ++j) {
        if (objs[i].is_zero() || objs[j].is_zero()) continue;
        const auto s = c.alg->support(objs[i], objs[j]);
        if (s.empty()) continue;
        t = {objs[i], objs[j], s.front()};
        found = true;
      }
    if (!found) throw ContractViolation("--fault-inject: no nonzero structure constant in scope");
  } else {
    const auto parts = split(spec, ',');
    if (parts.size() != 3) throw ContractViolation("--fault-inject expects auto or X,Y,L");
    t = {c.cat->parse(parts[0]), c.cat->parse(parts[1]), c.cat->parse(parts[2])};
  }
  c.alg->inject_fault(t);
  err << "fault injected: F(" << c.cat->name(t.x) << ", " << c.cat->name(t.y) << ", " << c.cat->name(t.l)
      << ") + 1\n";
}

struct Output {
  std::string text;
  int status = 0;
};

Output emit(const JobSpec& job, const json& j, const std::string& table, int status = 0) {
  return {job.format == Format::Json ? j.dump(1) + "\n" : table, status};
}

Output emit_reports(const JobSpec& job, const std::vector<Report>& reports) {
  json a = json::array();
  std::string t;
  int status = 0;
  for (const auto& r : reports) {
    a.push_back(report_json(r));
    t += r.text();
    if (!r.passed()) status = 1;
  }
  return emit(job, reports.size() == 1 ? a[0] : a, t, status);
}

Output cmd_objects(const JobSpec& job, Context& c) {
  json a = json::array();
  std::ostringstream t;
  t << "index\tname\t|Aut|\n";
  const auto objs = c.cat->enumerate(c.bound);
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto aut = c.cat->aut_order(objs[i]);
    a.push_back({{"index", i}, {"name", c.cat->name(objs[i])}, {"stalks", stalks_of(objs[i])}, {"aut", aut}});
    t << i << '\t' << c.cat->name(objs[i]) << '\t' << aut << '\n';
  }
  return emit(job, a, t.str());
}

Output cmd_hom(const JobSpec& job, Context& c) {
  need_args(job, 2, "hom X Y");
  const auto x = c.cat->parse(job.args[0]), y = c.cat->parse(job.args[1]);
  const auto h = c.cat->hom(x, y);
  const auto cover = c.cat->hom_dim_covering(x, y);
  hall::Integer size = 1;
  for (std::size_t i = 0; i < h->dim(); ++i) size *= c.catalog->field().q();
  json j{{"source", c.cat->name(x)},
         {"target", c.cat->name(y)},
         {"dim", h->dim()},
         {"covering_dim", cover},
         {"chain_dim", h->chain_dim()},
         {"boundary_dim", h->boundary_dim()},
         {"size", size.str()}};
  std::ostringstream t;
  t << "Hom(" << c.cat->name(x) << ", " << c.cat->name(y) << ")\n"
    << "dim\t" << h->dim() << "\ncovering_dim\t" << cover << "\nchain_dim\t" << h->chain_dim()
    << "\nboundary_dim\t" << h->boundary_dim() << "\nsize\t" << size.str() << '\n';
  return emit(job, j, t.str(), h->dim() == cover ? 0 : 1);
}

Output cmd_cone(const JobSpec& job, Context& c) {
  need_args(job, 2, "cone X Y");
  const auto x = c.cat->parse(job.args[0]), y = c.cat->parse(job.args[1]);
  const auto& h = c.cat->cone_histogram(x, y);
  json a = json::array();
  std::ostringstream t;
  t << "count\tcone\n";
  for (const auto& [cone, n] : h) {
    a.push_back({{"cone", c.cat->name(cone)}, {"count", n}});
    t << n << '\t' << c.cat->name(cone) << '\n';
  }
  return emit(job, a, t.str());
}

Output cmd_hall(const JobSpec& job, Context& c) {
  need_args(job, 3, "hall X Y L");
  const auto x = c.cat->parse(job.args[0]), y = c.cat->parse(job.args[1]), l = c.cat->parse(job.args[2]);
  const auto v = c.alg->hall_number(x, y, l);
  json j{{"x", c.cat->name(x)}, {"y", c.cat->name(y)}, {"l", c.cat->name(l)}, {"value", value_json(v)}};
  return emit(job, j, v.to_string() + "\n");
}

Output cmd_mult(const JobSpec& job, Context& c) {
  need_args(job, 2, "mult X Y");
  const auto v = c.alg->multiply(c.cat->parse(job.args[0]), c.cat->parse(job.args[1]));
  return emit(job, vector_json(*c.cat, v), vector_table(*c.cat, v));
}

Output cmd_pbw(const JobSpec& job, Context& c) {
  need_args(job, 1, "pbw M");
  const auto m = c.cat->parse(job.args[0]);
  const auto e = hall::pbw_expand(*c.alg, m);
  const bool ok = hall::pbw_evaluate(*c.alg, e) == c.alg->basis(m);
  const std::string text = hall::to_string(*c.alg, e);
  json terms = json::array();
  for (const auto& [k, v] : e) {
    json t = value_json(v);
    t["shift2"] = k[0];
    t["shift1"] = k[1];
    t["shift0"] = k[2];
    terms.push_back(std::move(t));
  }
  json j{{"object", c.cat->name(m)}, {"expression", text}, {"terms", std::move(terms)}, {"round_trip", ok}};
  return emit(job, j, "u_" + c.cat->name(m) + " = " + text + "\nround trip: " + (ok ? "ok" : "FAILED") + "\n",
              ok ? 0 : 1);
}

Output cmd_verify(const JobSpec& job, Context& c) {
  need_args(job, 1, "verify {orbit|lemma|symmetry|assoc|presentation|classical}");
  const std::string& what = job.args[0];
  auto& alg = *c.alg;
  auto& cat = *c.cat;
  const auto objs = cat.enumerate(c.bound);
  std::vector<std::pair<PeriodicObject, PeriodicObject>> pairs;
  for (const auto& a : objs)
    for (const auto& b : objs) pairs.emplace_back(a, b);
  if (what == "assoc") {
    const auto triples = job.samples ? hall::sample_triples(objs, job.samples) : hall::all_triples(objs);
    return emit_reports(job, {hall::verify_unit(alg, objs), hall::verify_assoc(alg, triples)});
  }
  if (what == "symmetry") {
    std::vector<hall::Triple> triples;
    for (const auto& [x, y] : spread(pairs, job.samples))
      for (const auto& l : alg.support(x, y)) triples.push_back({x, y, l});
    std::vector<std::array<PeriodicObject, 4>> quads;
    for (const auto& t : hall::sample_triples(objs, job.limit))
      for (const auto& m : objs) quads.push_back({t[0], t[1], t[2], m});
    return emit_reports(job, {hall::verify_symmetry(alg, triples), hall::verify_support(alg, triples),
                              hall::verify_symmetry_decorated(alg, quads, job.limit)});
  }
  if (what == "lemma") return emit_reports(job, {hall::verify_lemma(alg, spread(pairs, job.samples), job.limit)});
  if (what == "orbit") {
    std::vector<hall::ObjectTriple> inst;
    for (const auto& [z, m] : spread(pairs, job.samples)) {
      for (const auto& [l, n] : cat.cone_histogram(z, m)) {
        if (inst.size() == job.limit) break;
        inst.push_back({z, l, m});
      }
      if (inst.size() == job.limit) break;
    }
    return emit_reports(job, {hall::verify_orbit(alg, inst)});
  }
  if (what == "presentation") {
    std::vector<std::vector<repcat::ClassId>> mods;
    for (const auto& m : c.catalog->enumerate_modules(c.bound)) mods.push_back(m.summands);
    return emit_reports(job, {hall::verify_presentation(alg, mods, objs)});
  }
  if (what == "classical") {
    std::vector<PeriodicObject> mods;
    for (const auto& m : c.catalog->enumerate_modules(c.bound)) mods.push_back(cat.object(m.summands));
    const auto triples = job.samples ? hall::sample_triples(mods, job.samples) : hall::all_triples(mods);
    return emit_reports(job, {hall::classical_comparison(alg, triples)});
  }
  throw ContractViolation("unknown verify property '" + what + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ContractViolation("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Output cmd_catalog(const JobSpec& job, std::ostream& err) {
  if (job.args.empty()) throw ContractViolation("usage: catalog {export|import FILE|check FILE}");
  const std::string& sub = job.args[0];
  if (sub == "export") {
    need_args(job, 1, "catalog export [--out FILE]");
    auto c = make_context(job);
    if (job.fault) apply_fault(c, *job.fault, err);
    const auto objs = c.cat->enumerate(c.bound);
    std::vector<std::pair<PeriodicObject, PeriodicObject>> pairs;
    for (const auto& x : objs)
      for (const auto& y : objs) pairs.emplace_back(x, y);
    for (const auto& [x, y] : spread(pairs, job.samples)) c.alg->multiply(x, y);
    return {to_json(snapshot(*c.catalog, *c.alg, c.bound)), 0};
  }
  need_args(job, 2, "catalog {import|check} FILE");
  const auto file = from_json(read_file(job.args[1]), job.args[1]);
  const auto spec = parse_quiver_spec(file.quiver_text, job.args[1] + " (quiver)");
  if (spec.quiver->hash() != file.quiver_hash)
    throw ContractViolation(job.args[1] + ": quiver hash " + file.quiver_hash + " does not match its quiver (" +
                            spec.quiver->hash() + ")");
  if (sub == "import") {
    make_context(spec, file.q, job, &file);
    if (!job.out.empty()) return {to_json(file), 0};
    std::ostringstream t;
    t << "catalog " << job.args[1] << ": " << file.classes.size() << " classes, " << file.constants.size()
      << " constants, q = " << file.q << ", quiver " << file.quiver_hash << '\n';
    return {t.str(), 0};
  }
  if (sub == "check") {
    auto c = make_context(spec, file.q, job, &file);
    if (job.fault) apply_fault(c, *job.fault, err);
    Report r{"catalog check", {}};
    for (const auto& k : file.constants) {
      const auto x = object_of(k.x), y = object_of(k.y), l = object_of(k.l);
      const HallValue stored(file.q, k.a, k.b);
      const HallValue now = c.alg->source_value(x, y, l);
      r.add("F(" + c.cat->name(x) + ", " + c.cat->name(y) + ", " + c.cat->name(l) + ")", stored == now,
            stored == now ? now.to_string() : "stored " + stored.to_string() + ", recomputed " + now.to_string());
    }
    return emit_reports(job, {r});
  }
  throw ContractViolation("unknown catalog subcommand '" + sub + "'");
}

Output dispatch(const JobSpec& job, std::ostream& err) {
  if (job.command == "catalog") return cmd_catalog(job, err);
  auto c = make_context(job);
  if (job.fault) apply_fault(c, *job.fault, err);
  if (job.command == "objects") return cmd_objects(job, c);
  if (job.command == "hom") return cmd_hom(job, c);
  if (job.command == "cone") return cmd_cone(job, c);
  if (job.command == "hall") return cmd_hall(job, c);
  if (job.command == "mult") return cmd_mult(job, c);
  if (job.command == "pbw") return cmd_pbw(job, c);
  if (job.command == "verify") return cmd_verify(job, c);
  throw ContractViolation("unknown command '" + job.command + "'");
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  Output o;
  try {
    o = dispatch(job, err);
  } catch (const CapExceeded& e) {
    err << "error: budget exhausted: " << e.what() << '\n';
    return 2;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (job.out.empty()) {
    out << o.text;
  } else {
    std::ofstream f(job.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << job.out << "'\n";
      return 2;
    }
    f << o.text;
  }
  return o.status;
}

}  // namespace perihall::cli
