#include <random>

#include "doctest.h"
#include "perihall/cyclecat/orbit_category.hpp"
#include "perihall/repcat/ext.hpp"
#include "perihall/repcat/krull_schmidt.hpp"

using namespace perihall;
using namespace perihall::cyclecat;
using repcat::Catalog;
using repcat::Quiver;

namespace {

struct Fixture {
  std::shared_ptr<Catalog> catalog;
  OrbitCategory cat;
  Fixture(std::size_t n, std::uint32_t p)
      : catalog(std::make_shared<Catalog>(Quiver::linear(n), FieldSpec(p))), cat(catalog) {
    catalog->enumerate_indecomposables(repcat::DimVector(n, 2));
  }
  ClassId id(const std::string& name) const { return *catalog->by_name(name); }
  PeriodicObject obj(const std::string& text) const { return cat.parse(text); }
};

ComplexPtr stalk_complex(const Rep& x, int position) {
  Rep z = Rep::zero(x.quiver_ptr(), x.field());
  std::array<Rep, kPeriod> pos{z, z, z};
  pos[position] = x;
  return std::make_shared<const CycleComplex>(
      pos, std::array<RepMap, kPeriod>{RepMap::zero(pos[0], pos[1]), RepMap::zero(pos[1], pos[2]),
                                       RepMap::zero(pos[2], pos[0])});
}

}  // namespace

TEST_CASE("wrap examples and round trips") {
  Fixture a1(1, 2);
  auto s = a1.obj("S1");
  auto w = a1.cat.wrap(s);
  CHECK(w->position(0).dim(0) == 1);
  CHECK(w->position(1).is_zero());
  CHECK(w->position(2).is_zero());
  CHECK(a1.cat.normalize(*w) == s);
  CHECK(a1.cat.normalize(*a1.cat.wrap(a1.obj("S1[1]"))) == a1.obj("S1[1]"));

  Fixture a2(2, 2);
  auto ws1 = a2.cat.wrap(a2.obj("S1"));
  CHECK(ws1->position(0).dims() == repcat::DimVector{1, 1});  // P1
  CHECK(ws1->position(2).dims() == repcat::DimVector{0, 1});  // P2
  CHECK(a2.cat.normalize(*ws1) == a2.obj("S1"));

  const auto all = a2.cat.enumerate({1, 1});
  CHECK(all.size() == 125);
  for (const auto& x : all) {
    auto c = a2.cat.wrap(x);
    CHECK(a2.cat.normalize(*c) == x);
    CHECK(a2.cat.normalize(*shift(c, 1)) == x.shifted(1, 3));
    CHECK(a2.cat.normalize(*shift(c, 2)) == x.shifted(2, 3));
    CHECK(a2.cat.normalize(*shift(c, 3)) == x);
    auto s3 = shift(c, 3), s12 = shift(shift(c, 1), 2);
    for (int i = 0; i < 3; ++i) CHECK(s3->differential(i) == s12->differential(i));
    CHECK(a2.cat.parse(a2.cat.name(x)) == x);
  }
}

TEST_CASE("enumeration sizes") {
  Fixture a1(1, 2);
  CHECK(a1.cat.enumerate({1}).size() == 8);
  CHECK(a1.cat.enumerate({0}).size() == 1);
  CHECK(a1.cat.enumerate({0})[0].is_zero());
}

TEST_CASE("normalize examples") {
  Fixture a1(1, 2);
  const FieldSpec f(2);
  Rep s = a1.catalog->representative(a1.id("S1"));
  // stalk at the first position
  CHECK(a1.cat.normalize(*stalk_complex(s, 0)) == a1.obj("S1"));
  CHECK(a1.cat.normalize(*stalk_complex(s, 2)) == a1.obj("S1[1]"));
  CHECK(a1.cat.normalize(*stalk_complex(s, 1)) == a1.obj("S1[2]"));

  Rep z = Rep::zero(s.quiver_ptr(), f);
  CycleComplex contractible({s, s, z}, {RepMap::identity(s), RepMap::zero(s, z), RepMap::zero(z, s)});
  CHECK(a1.cat.normalize(contractible).is_zero());

  CycleComplex ex({s, s, s}, {RepMap::identity(s), RepMap::zero(s, s), RepMap::zero(s, s)});
  CHECK(a1.cat.normalize(ex) == a1.obj("S1[1]"));
  CHECK_THROWS_AS(CycleComplex({s, s, s}, {RepMap::identity(s), RepMap::identity(s), RepMap::zero(s, s)}),
                  ContractViolation);
}

TEST_CASE("hom space examples") {
  Fixture a1(1, 2);
  CHECK(a1.cat.hom(a1.obj("S1"), a1.obj("S1"))->dim() == 1);
  CHECK(a1.cat.hom(a1.obj("S1"), a1.obj("S1[1]"))->dim() == 0);
  CHECK(a1.cat.hom_dim_covering(a1.obj("S1"), a1.obj("S1")) == 1);

  Fixture a2(2, 2);
  auto x = a2.obj("S1"), y = a2.obj("S2[1]");
  auto h = a2.cat.hom(x, y);
  CHECK(h->dim() == 1);
  CHECK(a2.cat.hom_dim_covering(x, y) == 1);
  CHECK(repcat::ext1_dim(a2.catalog->representative(a2.id("S1")), a2.catalog->representative(a2.id("S2"))) == 1);

  // the nonzero class: cone is P1[1]
  std::vector<Elem> one{1};
  auto u = h->element(one);
  CHECK(u.is_chain_map());
  CHECK(a2.cat.cone_class(u) == a2.obj("P1[1]"));
  CHECK(a2.cat.is_radical(u));

  // residue-2 degree vanishes
  for (ClassId a = 0; a < a2.catalog->size(); ++a)
    for (ClassId b = 0; b < a2.catalog->size(); ++b)
      for (int i = 0; i < 3; ++i) {
        auto x0 = PeriodicObject::stalk(a, i, 3), y0 = PeriodicObject::stalk(b, i + 2, 3);
        CHECK(a2.cat.hom_dim_covering(x0, y0) == 0);
        CHECK(a2.cat.hom(x0, y0)->dim() == 0);
      }
}

TEST_CASE("hom dimensions agree with the covering formula") {
  for (auto [n, p] : {std::pair{1, 2u}, std::pair{1, 3u}}) {
    Fixture fx(n, p);
    auto all = fx.cat.enumerate({1});
    for (const auto& x : all)
      for (const auto& y : all) CHECK(fx.cat.hom(x, y)->dim() == fx.cat.hom_dim_covering(x, y));
  }
  Fixture a2(2, 2);
  auto all = a2.cat.enumerate({1, 1});
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 0; j < all.size(); j += 2)
      CHECK(a2.cat.hom(all[i], all[j])->dim() == a2.cat.hom_dim_covering(all[i], all[j]));
}

TEST_CASE("automorphism orders") {
  Fixture a1(1, 2);
  CHECK(a1.cat.aut_order(a1.obj("S1")) == 1);
  CHECK(a1.cat.aut_order(a1.obj("S1+S1")) == 6);
  CHECK(a1.cat.aut_order(a1.obj("S1+S1[1]")) == 1);
  Fixture a2(2, 2);
  CHECK(a2.cat.aut_order(a2.obj("S1+S2[1]")) == 2);
  CHECK(a2.cat.aut_order(a2.obj("P1")) == 1);
  Fixture b(1, 3);
  CHECK(b.cat.aut_order(b.obj("S1+S1[2]")) == 4);
  CHECK(b.cat.aut_order(b.obj("S1+S1")) == 48);

  // module objects: D3 automorphisms are module automorphisms
  for (const auto& x : a2.cat.enumerate({1, 1})) {
    if (!x.part(1).empty() || !x.part(2).empty()) continue;
    CHECK(a2.cat.aut_order(x) == repcat::aut_order(a2.catalog->module(x.part(0))));
  }
}

TEST_CASE("cone axioms and homotopy invariance") {
  Fixture a2(2, 2);
  std::mt19937_64 rng(7);
  auto all = a2.cat.enumerate({1, 1});
  std::size_t sampled = 0;
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); j += 11) {
      const auto& x = all[i];
      const auto& y = all[j];
      auto h = a2.cat.hom(x, y);
      CHECK(a2.cat.cone_class(ChainMap::zero(a2.cat.wrap(x), a2.cat.wrap(y))) == x.shifted(1, 3) + y);
      h->for_each(Budget{}, [&](const std::vector<Elem>& coords, const std::vector<Elem>& flat) {
        auto base = a2.cat.cone_class(ChainMap(h->source(), h->target(), flat));
        for (int k = 0; k < 3; ++k) {
          auto b = h->random_boundary(rng);
          std::vector<Elem> g(flat);
          for (std::size_t t = 0; t < g.size(); ++t) g[t] = a2.cat.field().add(g[t], b[t]);
          ChainMap u(h->source(), h->target(), g);
          CHECK(h->coordinates(g) == coords);
          CHECK(a2.cat.cone_class(u) == base);
          auto s = h->homotopy_between(u, ChainMap::trusted(h->source(), h->target(), flat));
          REQUIRE(s);
          CHECK(witnesses(*s, u, ChainMap::trusted(h->source(), h->target(), flat)));
        }
        ++sampled;
        return true;
      });
    }
  CHECK(sampled >= 100);
  for (const auto& x : all) CHECK(a2.cat.cone_class(ChainMap::identity(a2.cat.wrap(x))).is_zero());
}

TEST_CASE("triangle rotation and K0 mod 2") {
  Fixture a2(2, 2);
  auto all = a2.cat.enumerate({1, 1});
  std::size_t checked = 0;
  for (std::size_t i = 0; i < all.size(); i += 5)
    for (std::size_t j = 1; j < all.size(); j += 9) {
      const auto& x = all[i];
      const auto& l = all[j];
      auto h = a2.cat.hom(x, l);
      h->for_each(Budget{}, [&](const std::vector<Elem>&, const std::vector<Elem>& flat) {
        ChainMap u(h->source(), h->target(), flat);
        auto c = mapping_cone(u);
        const auto y = a2.cat.normalize(*c.cone);
        CHECK(c.inclusion.is_chain_map());
        CHECK(c.projection.is_chain_map());
        CHECK(HomSpace(u.source(), c.cone).is_null_homotopic((u * c.inclusion).flat()));
        CHECK(a2.cat.normalize(*mapping_cone(c.inclusion).cone) == x.shifted(1, 3));
        auto k0 = a2.cat.k0_mod2(x), k1 = a2.cat.k0_mod2(y), k2 = a2.cat.k0_mod2(l);
        for (std::size_t v = 0; v < k0.size(); ++v) CHECK((k0[v] + k1[v]) % 2 == k2[v]);
        ++checked;
        return true;
      });
    }
  CHECK(checked >= 100);
}

TEST_CASE("radical morphisms") {
  Fixture a1(1, 2);
  auto w = a1.cat.wrap(a1.obj("S1+S1"));
  CHECK_FALSE(a1.cat.is_radical(ChainMap::identity(a1.cat.wrap(a1.obj("S1")))));
  CHECK(a1.cat.is_radical(ChainMap::zero(w, w)));
  CHECK_FALSE(a1.cat.is_radical(ChainMap::identity(w)));
  // End(S+S) is a full matrix ring, so only zero is radical.
  auto h = a1.cat.hom(w, w);
  std::size_t radical = 0;
  h->for_each(Budget{}, [&](const std::vector<Elem>&, const std::vector<Elem>& flat) {
    ChainMap u(w, w, flat);
    if (a1.cat.is_radical(u)) ++radical;
    CHECK(a1.cat.is_radical(u) == u.is_zero());
    return true;
  });
  CHECK(radical == 1);
  // S1 + S2[1] over A2: the cross component S1 -> S2[1] is radical
  Fixture a2(2, 2);
  auto x = a2.cat.wrap(a2.obj("S1+S2[1]"));
  auto e = a2.cat.hom(x, x);
  std::size_t rad2 = 0;
  e->for_each(Budget{}, [&](const std::vector<Elem>&, const std::vector<Elem>& flat) {
    if (a2.cat.is_radical(ChainMap(x, x, flat))) ++rad2;
    return true;
  });
  CHECK(e->dim() == 3);
  CHECK(rad2 == 2);
}

TEST_CASE("complex text form and errors") {
  Fixture a2(2, 3);
  auto s = to_string(*a2.cat.wrap(a2.obj("S1")));
  CHECK(s.find("X1:") != std::string::npos);
  CHECK(s.find("d3:") != std::string::npos);
  CHECK_THROWS_AS(a2.cat.parse("Q7"), ContractViolation);
  CHECK_THROWS_AS(a2.cat.parse("S1[x]"), ContractViolation);
  CHECK(a2.cat.parse("S1[4]") == a2.obj("S1[1]"));
  CHECK(a2.cat.name(a2.obj("S2[2]+S1")) == "S1+S2[2]");
}
