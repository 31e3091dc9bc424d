#include <random>
#include <set>

#include "doctest.h"
#include "perihall/repcat/catalog.hpp"
#include "perihall/repcat/ext.hpp"
#include "perihall/repcat/krull_schmidt.hpp"

using namespace perihall;
using namespace perihall::repcat;

namespace {

struct A2 {
  FieldSpec f;
  QuiverPtr q = Quiver::linear(2);
  Rep s1 = Rep::simple(q, f, 0);
  Rep s2 = Rep::simple(q, f, 1);
  Rep p1 = Rep::projective(q, f, 0);
  Rep p2 = Rep::projective(q, f, 1);
  explicit A2(std::uint32_t p = 2) : f(p) {}
};

Rep random_rep(QuiverPtr q, FieldSpec f, std::size_t maxd, std::mt19937& rng) {
  DimVector d(q->num_vertices());
  for (auto& x : d) x = rng() % (maxd + 1);
  std::vector<MatrixFp> maps;
  for (const auto& a : q->arrows()) {
    MatrixFp m(f, d[a.source], d[a.target]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, rng() % f.p());
    maps.push_back(m);
  }
  return Rep(q, f, d, maps);
}

RepMap random_hom(const Rep& x, const Rep& y, std::mt19937& rng) {
  auto b = hom_basis(x, y);
  std::vector<Elem> c(b.size());
  for (auto& e : c) e = rng() % x.field().p();
  return linear_combination(x, y, b, c);
}

// Test-side oracle: every tuple of per-vertex matrices, filtered to
// invertible intertwiners.  Independent of hom_basis.
std::uint64_t brute_aut(const Rep& x) {
  const FieldSpec f = x.field();
  std::size_t n = 0;
  for (auto d : x.dims()) n += d * d;
  std::vector<Elem> flat(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    RepMap m = RepMap::trusted(x, x, RepMap::from_flat(x, x, flat).components());
    if (m.is_intertwiner() && m.is_iso()) ++count;
    std::size_t i = 0;
    for (; i < n; ++i) {
      flat[i] = (flat[i] + 1) % f.p();
      if (flat[i]) break;
    }
    if (i == n) return count;
  }
}

// Distinct k-dimensional subspaces of F_p^n, via spans of k-tuples.
std::size_t brute_subspaces(std::uint32_t p, std::size_t n, std::size_t k) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  auto vec = [&](std::size_t code) {
    std::vector<std::uint32_t> v(n);
    for (std::size_t i = 0; i < n; ++i, code /= p) v[i] = code % p;
    return v;
  };
  std::set<std::set<std::vector<std::uint32_t>>> spans;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    std::set<std::vector<std::uint32_t>> span;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < k; ++i) combos *= p;
    for (std::size_t c = 0; c < combos; ++c) {
      std::vector<std::uint32_t> s(n, 0);
      std::size_t cc = c;
      for (std::size_t i = 0; i < k; ++i, cc /= p) {
        auto v = vec(idx[i]);
        for (std::size_t j = 0; j < n; ++j) s[j] = (s[j] + (cc % p) * v[j]) % p;
      }
      span.insert(s);
    }
    if (span.size() == combos) spans.insert(span);
    std::size_t i = 0;
    for (; i < k; ++i) {
      idx[i] = (idx[i] + 1) % total;
      if (idx[i]) break;
    }
    if (i == k) break;
  }
  return spans.size();
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{0, 1, "a"}, {1, 0, "b"}}), ContractViolation);
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), ContractViolation);
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{0, 1, "a"}, {0, 1, "a"}}), ContractViolation);
  Quiver k({"1", "2"}, {{0, 1, "a"}, {0, 1, "b"}});
  CHECK(k.paths_from(0).size() == 3);
  CHECK(Quiver::linear(3)->paths_from(0).size() == 3);
  CHECK(Quiver::linear(2)->hash() == Quiver::linear(2)->hash());
  CHECK(Quiver::linear(2)->hash() != Quiver::linear(3)->hash());
}

TEST_CASE("hom examples") {
  FieldSpec f(2);
  auto a1 = Quiver::linear(1);
  Rep s = Rep::simple(a1, f, 0);
  CHECK(hom_dim(s, s) == 1);
  A2 a;
  CHECK(hom_dim(a.s1, a.s2) == 0);
  CHECK(hom_dim(a.p1, a.s1) == 1);
  CHECK(hom_dim(a.s2, a.p1) == 1);
  CHECK(hom_dim(a.p1, a.p1) == 1);
  for (const auto& m : hom_basis(a.p1, a.s1)) CHECK(m.is_intertwiner());
}

TEST_CASE("factorize examples and exactness") {
  A2 a;
  auto z = RepMap::zero(a.p1, a.s1);
  auto fz = factorize(z);
  CHECK(fz.kernel.rep.dims() == a.p1.dims());
  CHECK(fz.image.rep.is_zero());
  CHECK(fz.cokernel.rep.dims() == a.s1.dims());

  auto id = factorize(RepMap::identity(a.p1));
  CHECK(id.kernel.rep.is_zero());
  CHECK(id.cokernel.rep.is_zero());

  auto surj = hom_basis(a.p1, a.s1).at(0);
  auto fs = factorize(surj);
  CHECK(is_isomorphic(fs.kernel.rep, a.s2));
  CHECK(fs.cokernel.rep.is_zero());

  std::mt19937 rng(3);
  auto q3 = Quiver::linear(3);
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f(p);
    for (int it = 0; it < 40; ++it) {
      Rep x = random_rep(q3, f, 2, rng), y = random_rep(q3, f, 2, rng);
      RepMap m = random_hom(x, y, rng);
      auto fa = factorize(m);
      for (std::size_t v = 0; v < 3; ++v) {
        CHECK(x.dim(v) == fa.kernel.rep.dim(v) + fa.image.rep.dim(v));
        CHECK(y.dim(v) == fa.image.rep.dim(v) + fa.cokernel.rep.dim(v));
      }
      CHECK(fa.kernel.inclusion.is_intertwiner());
      CHECK(fa.image.inclusion.is_intertwiner());
      CHECK(fa.onto_image.is_intertwiner());
      CHECK(fa.cokernel.projection.is_intertwiner());
      CHECK((fa.kernel.inclusion * m).is_zero());
      CHECK((m * fa.cokernel.projection).is_zero());
      CHECK(fa.onto_image * fa.image.inclusion == m);
    }
  }
}

TEST_CASE("decompose examples") {
  FieldSpec f(2);
  auto a1 = Quiver::linear(1);
  Rep s = Rep::simple(a1, f, 0);
  auto g = decompose_grouped(direct_sum(s, s));
  REQUIRE(g.size() == 1);
  CHECK(g[0].multiplicity == 2);
  CHECK(is_isomorphic(g[0].rep, s));

  A2 a;
  auto gp = decompose_grouped(a.p1);
  REQUIRE(gp.size() == 1);
  CHECK(gp[0].multiplicity == 1);

  // P1 + S1 conjugated by a basis change at vertex 1
  Rep ps = direct_sum(a.p1, a.s1);
  MatrixFp t = MatrixFp::from_rows(f, {{1, 1}, {0, 1}});
  Rep twisted(a.q, f, ps.dims(), {*ffla::inverse(t) * ps.map(0)});
  auto pieces = decompose(twisted);
  REQUIRE(pieces.size() == 2);
  CHECK(is_isomorphic(direct_sum(pieces[0], pieces[1]), twisted));
  bool has_p1 = false, has_s1 = false;
  for (const auto& pc : pieces) {
    has_p1 = has_p1 || is_isomorphic(pc, a.p1);
    has_s1 = has_s1 || is_isomorphic(pc, a.s1);
  }
  CHECK(has_p1);
  CHECK(has_s1);
}

TEST_CASE("Krull-Schmidt on random representations") {
  std::mt19937 rng(17);
  auto q3 = Quiver::linear(3);
  Quiver kq({"1", "2"}, {{0, 1, "a"}, {0, 1, "b"}});
  auto kron = std::make_shared<const Quiver>(kq);
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f(p);
    for (auto q : {q3, kron}) {
      Catalog cat(q, f);
      for (int it = 0; it < 25; ++it) {
        Rep x = random_rep(q, f, 2, rng);
        auto pieces = decompose(x);
        if (!pieces.empty()) CHECK(is_isomorphic(direct_sum(pieces), x));
        for (const auto& pc : pieces) CHECK(is_indecomposable(pc));
        CHECK(cat.classify(x) == cat.classify(x));
      }
    }
  }
}

TEST_CASE("is_isomorphic examples") {
  A2 a;
  CHECK(is_isomorphic(a.p1, a.p1));
  CHECK_FALSE(is_isomorphic(a.s1, a.s2));
  CHECK_FALSE(is_isomorphic(a.p1, direct_sum(a.s1, a.s2)));
  CHECK(hom_dim(a.p1, a.p1) != hom_dim(direct_sum(a.s1, a.s2), direct_sum(a.s1, a.s2)));
}

TEST_CASE("aut_order against brute force") {
  FieldSpec f(2);
  auto a1 = Quiver::linear(1);
  Rep s = Rep::simple(a1, f, 0);
  CHECK(aut_order(s) == 1);
  CHECK(aut_order(direct_sum(s, s)) == 6);
  A2 a;
  Rep ps = direct_sum(a.p1, a.s1);
  CHECK(brute_aut(ps) == 2);
  CHECK(aut_order(ps) == 2);
  std::mt19937 rng(23);
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec fp(p);
    for (int it = 0; it < 15; ++it) {
      Rep x = random_rep(Quiver::linear(2), fp, 2, rng);
      CHECK(aut_order(x) == brute_aut(x));
    }
  }
  // multiplicativity when there are no cross homs
  Rep x = a.s1, y = a.s2;
  REQUIRE(hom_dim(x, y) == 0);
  REQUIRE(hom_dim(y, x) == 0);
  CHECK(aut_order(direct_sum(x, y)) == aut_order(x) * aut_order(y));
}

TEST_CASE("projective resolutions") {
  A2 a;
  auto r = proj_resolution(a.s1);
  CHECK(r.p0_tops == std::vector<std::size_t>{0});
  CHECK(r.p1_tops == std::vector<std::size_t>{1});
  auto rp = proj_resolution(a.p1);
  CHECK(rp.p1.is_zero());
  CHECK(is_isomorphic(rp.p0, a.p1));
  FieldSpec f(3);
  auto a1 = Quiver::linear(1);
  Rep s2 = direct_sum(Rep::simple(a1, f, 0), Rep::simple(a1, f, 0));
  CHECK(proj_resolution(s2).p1.is_zero());

  std::mt19937 rng(8);
  auto q3 = Quiver::linear(3);
  for (int it = 0; it < 30; ++it) {
    Rep x = random_rep(q3, FieldSpec(2), 2, rng);
    auto res = proj_resolution(x);
    CHECK((res.iota * res.pi).is_zero());
    auto fk = factorize(res.pi);
    CHECK(fk.cokernel.rep.is_zero());
    for (std::size_t v = 0; v < 3; ++v) CHECK(fk.kernel.rep.dim(v) == res.p1.dim(v));
  }
}

TEST_CASE("ext examples and Euler identity") {
  FieldSpec f(2);
  auto a1 = Quiver::linear(1);
  Rep s = Rep::simple(a1, f, 0);
  CHECK(ext1_dim(s, s) == 0);
  A2 a;
  for (const Rep& y : {a.s1, a.s2, a.p1, direct_sum(a.s1, a.s2)}) CHECK(ext1_dim(a.p1, y) == 0);
  CHECK(ext1_basis(a.s1, a.s2).size() == 1);

  Catalog cat(Quiver::linear(3), FieldSpec(3));
  auto reps = enumerate_reps(cat, {1, 1, 1});
  for (const auto& x : reps)
    for (const auto& y : reps)
      CHECK(static_cast<long>(hom_dim(x, y)) - static_cast<long>(ext1_dim(x, y)) == euler_form(x, y));
}

TEST_CASE("ext transport") {
  A2 a;
  auto e = ext1_basis(a.s1, a.s2).at(0);
  CHECK(ext_transport(e, RepMap::identity(a.s2), TransportSide::Pushforward) == e);
  CHECK(ext_transport(e, RepMap::identity(a.s1), TransportSide::Pullback) == e);
  CHECK(ext_transport(e, RepMap::zero(a.s2, a.s2), TransportSide::Pushforward).is_zero());
  auto incl = hom_basis(a.s2, a.p1).at(0);
  auto pushed = ext_transport(e, incl, TransportSide::Pushforward);
  CHECK(pushed.space().dim() == 0);
  CHECK(pushed.is_zero());
  CHECK_THROWS_AS(ext_transport(e, RepMap::identity(a.p1), TransportSide::Pushforward), ContractViolation);

  // functoriality on random composable triples over A3
  std::mt19937 rng(99);
  auto q3 = Quiver::linear(3);
  int checked = 0;
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec fp(p);
    while (checked < 50 * (p == 2 ? 1 : 2)) {
      Rep x = random_rep(q3, fp, 2, rng), y = random_rep(q3, fp, 2, rng);
      Rep y2 = random_rep(q3, fp, 2, rng), y3 = random_rep(q3, fp, 2, rng);
      auto basis = ext1_basis(x, y);
      if (basis.empty()) continue;
      std::vector<Elem> c(basis.size());
      for (auto& v : c) v = rng() % p;
      auto cls = basis[0].scaled(0);
      for (std::size_t i = 0; i < basis.size(); ++i) cls = cls + basis[i].scaled(c[i]);
      RepMap g = random_hom(y, y2, rng), h = random_hom(y2, y3, rng);
      auto two_step = ext_transport(ext_transport(cls, g, TransportSide::Pushforward), h, TransportSide::Pushforward);
      auto one_step = ext_transport(cls, g * h, TransportSide::Pushforward);
      CHECK(two_step == one_step);
      Rep x2 = random_rep(q3, fp, 2, rng), x3 = random_rep(q3, fp, 2, rng);
      RepMap u = random_hom(x2, x, rng), w = random_hom(x3, x2, rng);
      auto pb2 = ext_transport(ext_transport(cls, u, TransportSide::Pullback), w, TransportSide::Pullback);
      auto pb1 = ext_transport(cls, w * u, TransportSide::Pullback);
      CHECK(pb2 == pb1);
      ++checked;
    }
  }
}

TEST_CASE("extension_total") {
  A2 a;
  auto e = ext1_basis(a.s1, a.s2).at(0);
  auto split = extension_total(e.scaled(0));
  CHECK(is_isomorphic(split.middle, direct_sum(a.s2, a.s1)));
  auto ext = extension_total(e);
  CHECK(is_isomorphic(ext.middle, a.p1));
  CHECK(hom_dim(ext.middle, ext.middle) == 1);
  CHECK(extension_class(ext.inclusion, ext.projection) == e);
  A2 b(3);
  auto e3 = ext1_basis(b.s1, b.s2).at(0);
  CHECK(is_isomorphic(extension_total(e3.scaled(2)).middle, extension_total(e3).middle));
  CHECK(extension_class(extension_total(e3.scaled(2)).inclusion, extension_total(e3.scaled(2)).projection) ==
        e3.scaled(2));
}

TEST_CASE("enumerate_reps examples") {
  auto a1 = Quiver::linear(1);
  Catalog c2(a1, FieldSpec(2));
  CHECK(enumerate_reps(c2, {2}).size() == 3);
  Catalog c3(a1, FieldSpec(3));
  CHECK(enumerate_reps(c3, {1}).size() == 2);
  A2 a;
  Catalog ca(a.q, a.f);
  auto mods = ca.enumerate_modules({1, 1});
  CHECK(mods.size() == 5);
  auto inds = ca.enumerate_indecomposables({1, 1});
  CHECK(inds.size() == 3);
  std::set<std::string> names;
  for (auto id : inds) names.insert(ca.name(id));
  CHECK(names == std::set<std::string>{"S1", "S2", "P1"});
  // duplicate-free
  auto reps = enumerate_reps(ca, {2, 2});
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(is_isomorphic(reps[i], reps[j]));
  CHECK(reps.size() == 14);
}

TEST_CASE("classical Hall numbers") {
  FieldSpec f(2);
  auto a1 = Quiver::linear(1);
  Rep s = Rep::simple(a1, f, 0);
  CHECK(classical_hall_g(s, Rep::zero(a1, f), s) == 1);
  CHECK(classical_hall_g(s, s, direct_sum(s, s)) == 3);
  A2 a;
  CHECK(classical_hall_g(a.s1, a.s2, a.p1) == 0);
  CHECK(classical_hall_g(a.s2, a.s1, a.p1) == 1);

  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec fp(p);
    Rep sp = Rep::simple(a1, fp, 0);
    auto power = [&](std::size_t k) {
      Rep r = Rep::zero(a1, fp);
      for (std::size_t i = 0; i < k; ++i) r = direct_sum(r, sp);
      return r;
    };
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        auto g = classical_hall_g(power(k), power(n - k), power(n));
        CHECK(g == ffla::gaussian_binomial(n, k, p));
        if (k <= 3) CHECK(g == brute_subspaces(p, n, k));
      }
  }
}
