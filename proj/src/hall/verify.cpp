#include "perihall/hall/verify.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "perihall/error.hpp"
#include "perihall/repcat/catalog.hpp"
#include "perihall/repcat/rep.hpp"

namespace perihall::hall {

using cyclecat::ChainMap;
using ffla::FieldSpec;
using ffla::MatrixFp;
using repcat::Rep;
using cyclecat::ComplexPtr;
using cyclecat::ConeBuilder;
using cyclecat::HomSpace;
using cyclecat::OrbitCategory;

void Report::add(std::string label, bool ok, std::string detail, bool informational) {
  checks.push_back({std::move(label), ok, std::move(detail), informational});
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::count() const {
  return std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.informational; });
}

std::size_t Report::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.informational && !c.ok; });
}

const Check* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.informational && !c.ok) return &c;
  return nullptr;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.informational ? (c.ok ? "info ok  " : "info FAIL") : (c.ok ? "PASS     " : "FAIL     ")) << ' '
       << c.label;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << property << ": " << (count() - failures()) << '/' << count() << " passed\n";
  return os.str();
}

std::vector<ObjectTriple> all_triples(const std::vector<PeriodicObject>& objects) {
  std::vector<ObjectTriple> out;
  for (const auto& a : objects)
    for (const auto& b : objects)
      for (const auto& c : objects) out.push_back({a, b, c});
  return out;
}

std::vector<ObjectTriple> sample_triples(const std::vector<PeriodicObject>& objects, std::size_t n) {
  const std::size_t k = objects.size();
  const std::size_t total = k * k * k;
  std::vector<ObjectTriple> out;
  if (total == 0) return out;
  if (n >= total) return all_triples(objects);
  // stride coprime to k^3 walks the whole cube without repeats
  std::size_t stride = total / n + 1;
  while (std::gcd(stride, total) != 1) ++stride;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({objects[idx / (k * k)], objects[(idx / k) % k], objects[idx % k]});
    idx = (idx + stride) % total;
  }
  return out;
}

namespace {

std::string vec_string(HallAlgebra& alg, const HallVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [x, c] : v.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ") u_" + alg.oracle().name(x);
  }
  return s;
}

std::string triple_label(HallAlgebra& alg, const PeriodicObject& a, const PeriodicObject& b,
                         const PeriodicObject& c) {
  auto& o = alg.oracle();
  return "(" + o.name(a) + ", " + o.name(b) + ", " + o.name(c) + ")";
}

OrbitCategory& orbit_category(HallAlgebra& alg) {
  auto* o = dynamic_cast<OrbitOracle*>(&alg.oracle());
  if (!o) throw ContractViolation("this harness needs the orbit category backend");
  return o->category();
}

std::uint64_t hist_count(const cyclecat::ConeHistogram& h, const PeriodicObject& c) {
  auto it = h.find(c);
  return it == h.end() ? 0 : it->second;
}

HallValue q_power_value(std::uint32_t q, long twice_exponent) { return HallValue::sqrt_q_power(q, twice_exponent); }

// Rank of s |-> g * s (left) or s * g (right) from `from` into `into`.
std::size_t composition_rank(const HomSpace& from, const ChainMap& g, bool g_first, const HomSpace& into) {
  const FieldSpec f = from.field();
  ffla::RowSpace image(f, into.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) {
    std::vector<Elem> e(from.dim(), 0);
    e[k] = 1;
    const ChainMap s = from.element(e);
    const ChainMap comp = g_first ? g * s : s * g;
    image.add(into.coordinates(comp.flat()));
  }
  return image.dim();
}

// A chain map with the same blocks but the given (equal-shaped) endpoints.
ChainMap rebase(const ChainMap& u, ComplexPtr src, ComplexPtr tgt) {
  return ChainMap::trusted(std::move(src), std::move(tgt), u.flat());
}

std::vector<Elem> unit_vector(std::size_t n, std::size_t k) {
  std::vector<Elem> e(n, 0);
  e[k] = 1;
  return e;
}

// Blocks of a map (m ; f): A + B -> L from m: A -> L and f: B -> L.
std::vector<Elem> stack_sources(const ComplexPtr& d, const ComplexPtr& l, const ChainMap& m, const ChainMap& f) {
  cyclecat::BlockLayout lay(*d, *l);
  std::vector<Elem> out(lay.size(), 0);
  for (int i = 0; i < cyclecat::kPeriod; ++i)
    for (std::size_t v = 0; v < lay.num_vertices(); ++v)
      cyclecat::write_block(lay, out, i, v, ffla::vstack(m.block(i, v), f.block(i, v)));
  return out;
}

// Blocks of (f, g): L -> A + B.
std::vector<Elem> stack_targets(const ComplexPtr& l, const ComplexPtr& d, const ChainMap& f, const ChainMap& g) {
  cyclecat::BlockLayout lay(*l, *d);
  std::vector<Elem> out(lay.size(), 0);
  for (int i = 0; i < cyclecat::kPeriod; ++i)
    for (std::size_t v = 0; v < lay.num_vertices(); ++v)
      cyclecat::write_block(lay, out, i, v, ffla::hstack(f.block(i, v), g.block(i, v)));
  return out;
}

struct Morphisms {
  std::vector<ChainMap> maps;
  std::vector<PeriodicObject> cones;
};

Morphisms all_morphisms(OrbitCategory& cat, const ComplexPtr& a, const ComplexPtr& b) {
  Morphisms out;
  auto h = cat.hom(a, b);
  ConeBuilder builder(a, b);
  h->for_each(cat.budget(), [&](const std::vector<Elem>&, const std::vector<Elem>& flat) {
    out.maps.push_back(ChainMap::trusted(a, b, flat));
    out.cones.push_back(cat.normalize(builder.build(flat)));
    return true;
  });
  return out;
}

}  // namespace

Report verify_unit(HallAlgebra& alg, const std::vector<PeriodicObject>& objects) {
  Report r{"unit", {}};
  const PeriodicObject zero;
  for (const auto& x : objects) {
    const auto ux = alg.basis(x);
    const auto left = alg.multiply(zero, x), right = alg.multiply(x, zero);
    r.add("u_0 * u_" + alg.oracle().name(x), left == ux, vec_string(alg, left));
    r.add("u_" + alg.oracle().name(x) + " * u_0", right == ux, vec_string(alg, right));
  }
  return r;
}

Report verify_assoc(HallAlgebra& alg, const std::vector<ObjectTriple>& triples) {
  Report r{"associativity", {}};
  for (const auto& [x, y, z] : triples) {
    const auto lhs = alg.multiply(alg.basis(z), alg.multiply(x, y));
    const auto rhs = alg.multiply(alg.multiply(z, x), alg.basis(y));
    const bool ok = lhs == rhs;
    r.add("(X,Y,Z) = " + triple_label(alg, x, y, z), ok,
          ok ? vec_string(alg, lhs) : "sum_L F_XY^L F_ZL^M = " + vec_string(alg, lhs) +
                                          " but sum_L' F_ZX^L' F_L'Y^M = " + vec_string(alg, rhs));
  }
  return r;
}

Report verify_symmetry(HallAlgebra& alg, const std::vector<Triple>& triples) {
  Report r{"symmetry", {}};
  for (const auto& t : triples) {
    const HallValue a = alg.source_value(t.x, t.y, t.l);
    const HallValue b = alg.expressions(t.x, t.y, t.l).via_target;
    r.add("F" + triple_label(alg, t.x, t.y, t.l), a == b, a.to_string() + " vs " + b.to_string());
  }
  return r;
}

Report verify_support(HallAlgebra& alg, const std::vector<Triple>& triples) {
  Report r{"support", {}};
  for (const auto& t : triples) {
    const auto s = alg.support(t.x, t.y);
    const bool in = std::find(s.begin(), s.end(), t.l) != s.end();
    const HallValue f = alg.source_value(t.x, t.y, t.l);
    const bool positive = f.a() > 0 || f.b() > 0;
    r.add("F" + triple_label(alg, t.x, t.y, t.l), (positive == in) && (f.is_zero() || f.is_monomial()),
          f.to_string());
  }
  return r;
}

Report verify_symmetry_decorated(HallAlgebra& alg, const std::vector<std::array<PeriodicObject, 4>>& quads,
                                 std::size_t max_instances) {
  auto& cat = orbit_category(alg);
  Report r{"decorated symmetry", {}};
  const std::uint32_t q = alg.q();
  std::size_t instances = 0, literal_agree = 0;
  for (const auto& [x, y, z, m] : quads) {
    if (instances >= max_instances) break;
    const PeriodicObject mx = m + x;
    const ComplexPtr d = cyclecat::direct_sum({cat.wrap(m), cat.wrap(x)});
    const auto wm = cat.wrap(m), wx = cat.wrap(x);
    const auto ls = alg.support(x, y), lps = alg.support(z, x);
    const PeriodicObject z1 = z.shifted(1, 3);
    for (const auto& l : ls) {
      const auto wl = cat.wrap(l);
      // Hom(M + X, L) side, grouped by L'
      std::map<PeriodicObject, std::uint64_t> lhs;
      {
        const auto ms = all_morphisms(cat, wm, wl), fs = all_morphisms(cat, wx, wl);
        ConeBuilder builder(d, wl);
        for (std::size_t i = 0; i < ms.maps.size(); ++i) {
          if (!(ms.cones[i] == z1)) continue;
          for (std::size_t j = 0; j < fs.maps.size(); ++j) {
            if (!(fs.cones[j] == y)) continue;
            const auto c = cat.normalize(builder.build(stack_sources(d, wl, ms.maps[i], fs.maps[j])));
            ++lhs[c.shifted(-1, 3)];
          }
        }
      }
      for (const auto& lp : lps) {
        const auto wlp = cat.wrap(lp);
        std::uint64_t rhs = 0;
        const auto fs = all_morphisms(cat, wlp, wm), ms = all_morphisms(cat, wlp, wx);
        ConeBuilder builder(wlp, d);
        for (std::size_t i = 0; i < fs.maps.size(); ++i) {
          if (!(fs.cones[i] == y)) continue;
          for (std::size_t j = 0; j < ms.maps.size(); ++j) {
            if (!(ms.cones[j] == z1)) continue;
            const auto neg = ms.maps[j].scaled(cat.field().neg(1));
            if (cat.normalize(builder.build(stack_targets(wlp, d, fs.maps[i], neg))) == l) ++rhs;
          }
        }
        const std::uint64_t left = lhs.count(lp) ? lhs[lp] : 0;
        if (left == 0 && rhs == 0) continue;
        const HallValue lv = HallValue(q, Rational(left, alg.oracle().aut_order(l))) *
                             q_power_value(q, alg.bracket_exponent(mx, l) - alg.bracket_exponent(l, l));
        const HallValue rv = HallValue(q, Rational(rhs, alg.oracle().aut_order(lp))) *
                             q_power_value(q, alg.bracket_exponent(lp, mx) - alg.bracket_exponent(lp, lp));
        const HallValue rv_literal = HallValue(q, Rational(rhs, alg.oracle().aut_order(lp))) *
                                     q_power_value(q, alg.bracket_exponent(z, m) - alg.bracket_exponent(z, z));
        if (lv == rv_literal) ++literal_agree;
        std::string label = "(X,Y,Z,M) = (" + cat.name(x) + ", " + cat.name(y) + ", " + cat.name(z) + ", " +
                            cat.name(m) + "), L = " + cat.name(l) + ", L' = " + cat.name(lp);
        r.add(label, lv == rv, lv.to_string() + " vs " + rv.to_string());
        ++instances;
      }
    }
  }
  r.add("right-hand factor {Z,M}/{Z,Z} in place of {L',M+X}/{L',L'}", literal_agree == instances,
        std::to_string(literal_agree) + " of " + std::to_string(instances) + " instances agree", true);
  return r;
}

Report verify_lemma(HallAlgebra& alg, const std::vector<std::pair<PeriodicObject, PeriodicObject>>& pairs,
                    std::size_t max_triangles) {
  auto& cat = orbit_category(alg);
  Report r{"stable-space lemma", {}};
  std::size_t done = 0;
  for (const auto& [z, m] : pairs) {
    const auto wz = cat.wrap(z), wm = cat.wrap(m);
    auto h = cat.hom(wz, wm);
    h->for_each(cat.budget(), [&](const std::vector<Elem>& coords, const std::vector<Elem>& flat) {
      const auto cone = cyclecat::mapping_cone(ChainMap::trusted(wz, wm, flat));
      const ComplexPtr c = cone.cone;
      const ComplexPtr z1 = cone.projection.target();
      const PeriodicObject l = cat.normalize(*c);
      const HomSpace from(z1, c), end_c(c, c), end_z1(z1, z1);
      const std::size_t rank_left = composition_rank(from, cone.projection, true, end_c);
      const std::size_t rank_right = composition_rank(from, cone.projection, false, end_z1);
      const long e1 = alg.bracket_exponent(m, l) - alg.bracket_exponent(z, l) - alg.bracket_exponent(l, l);
      const long e2 = alg.bracket_exponent(z, m) - alg.bracket_exponent(z, l) - alg.bracket_exponent(z, z);
      std::ostringstream lab;
      lab << cat.name(z) << " -> " << cat.name(m) << " -> " << cat.name(l) << " (l = [";
      for (std::size_t k = 0; k < coords.size(); ++k) lab << (k ? "," : "") << coords[k];
      lab << "])";
      r.add("|n Hom(Z[1],L)| " + lab.str(), e1 % 2 == 0 && e1 == 2 * static_cast<long>(rank_left),
            "q^" + std::to_string(rank_left) + " vs radicand q^" + std::to_string(e1));
      r.add("|Hom(Z[1],L) n| " + lab.str(), e2 % 2 == 0 && e2 == 2 * static_cast<long>(rank_right),
            "q^" + std::to_string(rank_right) + " vs radicand q^" + std::to_string(e2));
      return ++done < max_triangles;
    });
    if (done >= max_triangles) break;
  }
  return r;
}

namespace {

struct Automorphisms {
  std::vector<ChainMap> maps, inverses;
};

Automorphisms automorphisms(OrbitCategory& cat, const ComplexPtr& w) {
  Automorphisms out;
  auto h = cat.hom(w, w);
  std::vector<std::vector<Elem>> coords;
  h->for_each(cat.budget(), [&](const std::vector<Elem>& c, const std::vector<Elem>& flat) {
    ChainMap u = ChainMap::trusted(w, w, flat);
    if (cat.is_iso(u)) {
      out.maps.push_back(u);
      coords.push_back(c);
    }
    return true;
  });
  const auto id = h->coordinates(ChainMap::identity(w).flat());
  for (const auto& a : out.maps) {
    bool found = false;
    for (const auto& b : out.maps)
      if (h->coordinates((a * b).flat()) == id) {
        out.inverses.push_back(b);
        found = true;
        break;
      }
    if (!found) throw InternalError("automorphism without inverse");
  }
  return out;
}

// Some psi: b -> a with theta * psi = id_a, as a chain map.
std::optional<ChainMap> inverse_of(const ChainMap& theta, const HomSpace& back, const HomSpace& end_a) {
  const FieldSpec f = back.field();
  const std::size_t n = back.dim();
  MatrixFp a(f, end_a.dim(), n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto c = end_a.coordinates((theta * back.element(unit_vector(n, k))).flat());
    for (std::size_t j = 0; j < c.size(); ++j) a.set(j, k, c[j]);
  }
  const auto target = end_a.coordinates(ChainMap::identity(theta.source()).flat());
  auto s = ffla::solve(a, target);
  if (!s) return std::nullopt;
  return back.element(s->particular);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
  return out;
}

std::vector<std::size_t> all_indices(std::size_t n) { return complement({}, n); }

PeriodicObject stalks_of(const ComplexPtr& c, const std::vector<std::size_t>& idx, int shift) {
  std::vector<cyclecat::Stalk> s;
  for (auto i : idx) s.push_back({c->layout()[i].stalk.cls, c->layout()[i].stalk.shift + shift});
  return PeriodicObject(std::move(s), 3);
}

struct TriangleMaps {
  ChainMap l, m, n;
};

struct BlockForm {
  std::vector<std::size_t> z1, l1;
};

// Searches summand subsets Z1 of Z and L1 of L giving the block form.
std::optional<BlockForm> block_form(OrbitCategory& cat, const TriangleMaps& t, const ComplexPtr& wz,
                                    const ComplexPtr& wm, const ComplexPtr& wl, const ComplexPtr& wz1) {
  const std::size_t nz = wz->layout().size(), nl = wl->layout().size();
  const auto allm = all_indices(wm->layout().size());
  auto null = [&](const ChainMap& u) { return cat.hom(u.source(), u.target())->is_null_homotopic(u.flat()); };
  auto part = [&](const ChainMap& u, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return u.restricted(a, b, cat.restricted(u.source(), a), cat.restricted(u.target(), b));
  };
  for (const auto& i1 : subsets(nz)) {
    const auto z1 = stalks_of(wz, i1, 1);
    for (const auto& j1 : subsets(nl)) {
      if (!(stalks_of(wl, j1, 0) == z1)) continue;
      const auto i2 = complement(i1, nz), j2 = complement(j1, nl);
      if (!null(part(t.l, i1, allm))) continue;
      if (!null(part(t.m, allm, j1))) continue;
      if (!null(part(t.n, j1, i2)) || !null(part(t.n, j2, i1))) continue;
      if (!cat.is_iso(part(t.n, j1, i1))) continue;
      if (!cat.is_radical(part(t.n, j2, i2))) continue;
      (void)wz1;
      return BlockForm{i1, j1};
    }
  }
  return std::nullopt;
}

}  // namespace

OrbitData triangle_orbits(HallAlgebra& alg, const PeriodicObject& z, const PeriodicObject& l,
                          const PeriodicObject& m) {
  auto& cat = orbit_category(alg);
  const auto wz = cat.wrap(z), wm = cat.wrap(m), wl = cat.wrap(l), wz1 = cat.shifted_wrap(z, 1);
  auto hl = cat.hom(wz, wm), hm = cat.hom(wm, wl), hn = cat.hom(wl, wz1);
  std::set<std::array<std::vector<Elem>, 3>> w;
  hl->for_each(cat.budget(), [&](const std::vector<Elem>&, const std::vector<Elem>& flat) {
    const auto cone = cyclecat::mapping_cone(ChainMap::trusted(wz, wm, flat));
    if (!(cat.normalize(*cone.cone) == l)) return true;
    const HomSpace to_l(cone.cone, wl), back(wl, cone.cone), end_c(cone.cone, cone.cone);
    const ChainMap pi = rebase(cone.projection, cone.cone, wz1);
    to_l.for_each(cat.budget(), [&](const std::vector<Elem>&, const std::vector<Elem>& tf) {
      const ChainMap theta = ChainMap::trusted(cone.cone, wl, tf);
      if (!cat.is_iso(theta)) return true;
      const auto inv = inverse_of(theta, back, end_c);
      if (!inv) throw InternalError("isomorphism of cones without inverse");
      const ChainMap mm = cone.inclusion * theta, nn = *inv * pi;
      w.insert({hl->coordinates(flat), hm->coordinates(mm.flat()), hn->coordinates(nn.flat())});
      return true;
    });
    return true;
  });

  const auto az = automorphisms(cat, wz), al = automorphisms(cat, wl);
  OrbitData out;
  std::map<std::array<std::vector<Elem>, 3>, std::size_t> orbit_of;
  for (const auto& t : w) {
    if (orbit_of.count(t)) continue;
    const std::size_t id = out.orbits++;
    const ChainMap l0 = hl->element(t[0]), m0 = hm->element(t[1]), n0 = hn->element(t[2]);
    for (std::size_t a = 0; a < az.maps.size(); ++a) {
      const ChainMap ainv1 = az.inverses[a].shifted(1, wz1, wz1);
      for (std::size_t c = 0; c < al.maps.size(); ++c) {
        std::array<std::vector<Elem>, 3> img{hl->coordinates((az.maps[a] * l0).flat()),
                                             hm->coordinates((m0 * al.inverses[c]).flat()),
                                             hn->coordinates((al.maps[c] * n0 * ainv1).flat())};
        if (!w.count(img)) throw InternalError("orbit leaves W(Z,L;M)");
        orbit_of.emplace(img, id);
      }
    }
  }
  for (const auto& t : w) out.triangles.push_back({t[0], t[1], t[2], orbit_of.at(t)});
  return out;
}

Report verify_orbit(HallAlgebra& alg, const std::vector<ObjectTriple>& instances) {
  auto& cat = orbit_category(alg);
  Report r{"representative form and orbit sums", {}};
  const std::uint32_t q = alg.q();
  for (const auto& [z, l, m] : instances) {
    const auto wz = cat.wrap(z), wm = cat.wrap(m), wl = cat.wrap(l), wz1 = cat.shifted_wrap(z, 1);
    auto hl = cat.hom(wz, wm), hm = cat.hom(wm, wl), hn = cat.hom(wl, wz1);
    auto from = cat.hom(wz1, wl), end_l = cat.hom(wl, wl), end_z1 = cat.hom(wz1, wz1);
    const auto data = triangle_orbits(alg, z, l, m);
    const std::string lab = "(Z,L,M) = " + triple_label(alg, z, l, m);

    std::vector<std::vector<TriangleWitness>> members(data.orbits);
    for (const auto& t : data.triangles) members[t.orbit].push_back(t);
    HallValue sum1 = HallValue::zero(q), sum2 = HallValue::zero(q);
    bool forms_ok = true;
    for (std::size_t o = 0; o < data.orbits; ++o) {
      std::optional<BlockForm> form;
      TriangleMaps found{hl->element(members[o][0].l), hm->element(members[o][0].m), hn->element(members[o][0].n)};
      for (const auto& t : members[o]) {
        TriangleMaps tm{hl->element(t.l), hm->element(t.m), hn->element(t.n)};
        form = block_form(cat, tm, wz, wm, wl, wz1);
        if (form) {
          found = tm;
          break;
        }
      }
      if (!form) {
        forms_ok = false;
        r.add(lab + " orbit " + std::to_string(o), false, "no member has the block form");
        continue;
      }
      const auto z1 = stalks_of(wz, form->z1, 0), l1 = stalks_of(wl, form->l1, 0);
      const std::size_t rn = composition_rank(*from, found.n, true, *end_l);
      const std::size_t nr = composition_rank(*from, found.n, false, *end_z1);
      const long end_l1 = static_cast<long>(alg.oracle().hom_dim(l1, l1));
      const long end_z1o = static_cast<long>(alg.oracle().hom_dim(z1, z1));
      sum1 += HallValue(q, Rational(1, alg.oracle().aut_order(l1))) * q_power_value(q, 2 * (end_l1 - long(rn)));
      sum2 += HallValue(q, Rational(1, alg.oracle().aut_order(z1))) * q_power_value(q, 2 * (end_z1o - long(nr)));
    }
    if (forms_ok)
      r.add(lab + " block form", true,
            std::to_string(data.orbits) + " orbits, " + std::to_string(data.triangles.size()) + " triangles");
    const HallValue lhs1 = HallValue(q, Rational(hist_count(cat.cone_histogram(m, l), z.shifted(1, 3)),
                                                 alg.oracle().aut_order(l)));
    const HallValue lhs2 = HallValue(q, Rational(hist_count(cat.cone_histogram(z, m), l), alg.oracle().aut_order(z)));
    r.add(lab + " |(M,L)_Z[1]|/|Aut L|", lhs1 == sum1, lhs1.to_string() + " vs orbit sum " + sum1.to_string());
    r.add(lab + " |(Z,M)_L|/|Aut Z|", lhs2 == sum2, lhs2.to_string() + " vs orbit sum " + sum2.to_string());
  }
  return r;
}

Report verify_presentation(HallAlgebra& alg, const std::vector<std::vector<ClassId>>& modules,
                           const std::vector<PeriodicObject>& objects) {
  auto& cat = orbit_category(alg);
  Report r{"presentation", {}};
  const std::uint32_t q = alg.q();
  auto obj = [](const std::vector<ClassId>& ids, int s) { return PeriodicObject::module(ids, s, 3); };
  auto euler = [&](const std::vector<ClassId>& a, const std::vector<ClassId>& b) {
    return repcat::euler_form(cat.catalog().module(a), cat.catalog().module(b));
  };
  for (const auto& xa : modules)
    for (const auto& ya : modules) {
      const std::string pair = "X = " + cat.name(obj(xa, 0)) + ", Y = " + cat.name(obj(ya, 0));
      const PeriodicObject x = obj(xa, 0), y = obj(ya, 0);
      for (int n = 0; n < 3; ++n) {
        HallVector rhs(q);
        for (const auto& l : alg.support(x, y)) {
          if (!l.part(1).empty() || !l.part(2).empty()) throw InternalError("extension of modules is not a module");
          rhs.add(l.shifted(n, 3), alg.hall_number(x, y, l));
        }
        const auto lhs = alg.multiply(x.shifted(n, 3), y.shifted(n, 3));
        r.add("relation (1) n=" + std::to_string(n) + " " + pair, lhs == rhs,
              lhs == rhs ? vec_string(alg, lhs) : vec_string(alg, lhs) + " vs " + vec_string(alg, rhs));
      }
      // F_{X,Y[1]}^{K[1]+C} terms
      std::vector<std::pair<PeriodicObject, HallValue>> terms;
      bool split_ok = true;
      for (const auto& l : alg.support(x, y.shifted(1, 3))) {
        if (!l.part(2).empty()) split_ok = false;
        terms.emplace_back(l, alg.hall_number(x, y.shifted(1, 3), l));
      }
      if (!split_ok) r.add("relations (2)(3) " + pair, false, "a middle term has a shift-2 part");
      struct Variant {
        std::string name;
        int first, second;  // shifts of X and Y on the left
        int k_shift, c_shift;
      };
      const Variant variants[] = {{"relation (2) n=0", 0, 1, 1, 0},
                                  {"relation (2) n=1", 1, 2, 2, 1},
                                  {"relation (3)", 2, 0, 0, 2}};
      for (const auto& v : variants) {
        const auto lhs = alg.multiply(x.shifted(v.first, 3), y.shifted(v.second, 3));
        HallVector literal(q), twisted(q);
        for (const auto& [l, f] : terms) {
          const auto k = l.part(1), c = l.part(0);
          const auto prod = alg.multiply(obj(k, v.k_shift), obj(c, v.c_shift));
          literal = literal + prod.scaled(f);
          twisted = twisted + prod.scaled(f * HallValue::sqrt_q_power(q, -euler(k, c)));
        }
        r.add(v.name + " " + pair, lhs == literal,
              lhs == literal ? vec_string(alg, lhs) : vec_string(alg, lhs) + " vs " + vec_string(alg, literal));
        r.add(v.name + " with q^(-<K,C>/2) " + pair, lhs == twisted,
              lhs == twisted ? vec_string(alg, lhs) : vec_string(alg, lhs) + " vs " + vec_string(alg, twisted), true);
      }
    }
  for (const auto& m : objects) {
    const auto e = pbw_expand(alg, m);
    const auto back = pbw_evaluate(alg, e);
    const bool ok = back == alg.basis(m);
    r.add("ordered products u_" + cat.name(m), ok, to_string(alg, e));
  }
  return r;
}

Report classical_comparison(HallAlgebra& alg, const std::vector<ObjectTriple>& triples) {
  auto& cat = orbit_category(alg);
  Report r{"classical comparison", {}};
  const std::uint32_t q = alg.q();
  for (const auto& [x, y, l] : triples) {
    for (const auto* o : {&x, &y, &l})
      if (!o->part(1).empty() || !o->part(2).empty())
        throw ContractViolation("classical comparison takes module objects");
    const Rep xr = cat.catalog().module(x.part(0)), yr = cat.catalog().module(y.part(0)),
              lr = cat.catalog().module(l.part(0));
    const std::uint64_t g = repcat::classical_hall_g(xr, yr, lr, cat.budget());
    const long twice = repcat::euler_form(xr, xr) - repcat::euler_form(xr, lr);
    const HallValue expected = HallValue(q, Rational(g)) * HallValue::sqrt_q_power(q, twice);
    const HallValue f = alg.hall_number(x, y, l);
    r.add("F" + triple_label(alg, x, y, l), f == expected,
          "g = " + std::to_string(g) + ", F = " + f.to_string() + ", g q^(" + std::to_string(twice) +
              "/2) = " + expected.to_string());
  }
  return r;
}

}  // namespace perihall::hall
