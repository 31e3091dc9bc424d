#include <random>

#include "doctest.h"
#include "perihall/error.hpp"
#include "perihall/ffla/matrix.hpp"

using namespace perihall;
using namespace perihall::ffla;

namespace {

MatrixFp random_matrix(FieldSpec f, std::size_t r, std::size_t c, std::mt19937& rng) {
  MatrixFp m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() % f.p());
  return m;
}

// Every vector of F_q^n, in odometer order.
std::vector<std::vector<Elem>> all_vectors(FieldSpec f, std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> v(n, 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    for (; i < n; ++i) {
      v[i] = (v[i] + 1) % f.p();
      if (v[i]) break;
    }
    if (i == n) return out;
  }
}

}  // namespace

TEST_CASE("field construction rejects non-primes") {
  CHECK_THROWS_AS(FieldSpec(4), ContractViolation);
  CHECK_THROWS_AS(FieldSpec(1), ContractViolation);
  CHECK_THROWS_AS(FieldSpec(32771), ContractViolation);
  FieldSpec f(7);
  CHECK(f.q() == 7);
  for (Elem a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("rank examples") {
  CHECK(rank(MatrixFp::from_rows(FieldSpec(2), {{1, 1}, {1, 1}})) == 1);
  CHECK(rank(MatrixFp::identity(FieldSpec(3), 2)) == 2);
  CHECK(rank(MatrixFp::from_rows(FieldSpec(5), {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  FieldSpec f2(2);
  auto k = kernel_basis(MatrixFp::from_rows(f2, {{1}, {1}}));
  REQUIRE(k.rows() == 1);
  CHECK(k(0, 0) == 1);
  CHECK(k(0, 1) == 1);
  CHECK(kernel_basis(MatrixFp(f2, 2, 2)).rows() == 2);
  CHECK(kernel_basis(MatrixFp::identity(f2, 2)).rows() == 0);
}

TEST_CASE("solve examples") {
  FieldSpec f2(2);
  std::vector<Elem> b{1, 0};
  auto s = solve(MatrixFp::identity(f2, 2), b);
  REQUIRE(s);
  CHECK(s->particular == std::vector<Elem>{1, 0});
  CHECK(s->kernel.rows() == 0);

  std::vector<Elem> one{1};
  CHECK_FALSE(solve(MatrixFp::from_rows(f2, {{0}}), one));

  std::vector<Elem> zero{0};
  auto t = solve(MatrixFp::from_rows(f2, {{1, 1}}), zero);
  REQUIRE(t);
  CHECK(t->particular == std::vector<Elem>{0, 0});
  REQUIRE(t->kernel.rows() == 1);
  CHECK(t->kernel(0, 0) == 1);
  CHECK(t->kernel(0, 1) == 1);

  std::vector<Elem> bad{1, 2, 3};
  CHECK_THROWS_AS(solve(MatrixFp::identity(f2, 2), bad), ContractViolation);
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    FieldSpec f(p);
    for (int it = 0; it < 40; ++it) {
      auto m = random_matrix(f, 1 + rng() % 6, 1 + rng() % 6, rng);
      auto r = rref(m);
      CHECK(rref(r.matrix).matrix == r.matrix);
      auto nc = nullspace_columns(m);
      CHECK(r.rank + nc.rows() == m.cols());
      CHECK((m * nc.transpose()).is_zero());
      auto kl = kernel_basis(m);
      CHECK(kl.rows() + rank(m) == m.rows());
      CHECK((kl * m).is_zero());
      CHECK(rank(kl) == kl.rows());
    }
  }
}

TEST_CASE("solve agrees with brute force") {
  std::mt19937 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f(p);
    for (int it = 0; it < 30; ++it) {
      const std::size_t cols = 1 + rng() % 4;
      auto a = random_matrix(f, 1 + rng() % 4, cols, rng);
      std::vector<Elem> b(a.rows());
      for (auto& e : b) e = rng() % p;
      auto s = solve(a, b);
      bool brute = false;
      for (const auto& x : all_vectors(f, cols)) {
        MatrixFp xc = MatrixFp::from_flat(f, cols, 1, x);
        if ((a * xc).entries() == b) brute = true;
      }
      CHECK(s.has_value() == brute);
      if (s) {
        MatrixFp xc = MatrixFp::from_flat(f, cols, 1, s->particular);
        CHECK((a * xc).entries() == b);
      }
    }
  }
}

TEST_CASE("inverse and power") {
  FieldSpec f(3);
  auto m = MatrixFp::from_rows(f, {{1, 2}, {0, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == MatrixFp::identity(f, 2));
  CHECK(power(m, 3) == MatrixFp::identity(f, 2));
  CHECK_FALSE(inverse(MatrixFp::from_rows(f, {{1, 1}, {1, 1}})));
}

TEST_CASE("row space reduction and coordinates") {
  FieldSpec f(5);
  RowSpace s(MatrixFp::from_rows(f, {{1, 2, 0}, {0, 0, 1}}));
  CHECK(s.dim() == 2);
  std::vector<Elem> v{3, 1, 4};
  auto c = s.coordinates(v);
  REQUIRE(c);
  CHECK(*c == std::vector<Elem>{3, 4});
  std::vector<Elem> w{0, 1, 0};
  CHECK_FALSE(s.contains(w));
  CHECK(s.free_columns() == std::vector<std::size_t>{1});
  CHECK(s.add(w));
  CHECK(s.dim() == 3);
}

TEST_CASE("subspace enumeration matches Gaussian binomials") {
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        FieldSpec f(p);
        std::uint64_t distinct = 0;
        std::vector<MatrixFp> seen;
        for_each_subspace(f, n, k, [&](const MatrixFp& m) {
          CHECK(rank(m) == k);
          CHECK(rref(m).matrix == m);
          ++distinct;
          return true;
        });
        // oracle: count k-subsets of independent vectors / |GL_k|
        std::uint64_t ordered = 1, gl = 1, qn = 1, qk = 1;
        for (std::size_t i = 0; i < n; ++i) qn *= p;
        for (std::size_t i = 0; i < k; ++i) {
          std::uint64_t qi = 1;
          for (std::size_t j = 0; j < i; ++j) qi *= p;
          ordered *= qn - qi;
          qk *= p;
        }
        for (std::size_t i = 0; i < k; ++i) {
          std::uint64_t qi = 1;
          for (std::size_t j = 0; j < i; ++j) qi *= p;
          gl *= qk - qi;
        }
        CHECK(distinct == ordered / gl);
        CHECK(gaussian_binomial(n, k, p) == ordered / gl);
      }
}

TEST_CASE("budget") {
  Budget b{100};
  CHECK_NOTHROW(b.require(2, 6, "x"));
  CHECK_THROWS_AS(b.require(2, 7, "x"), CapExceeded);
  try {
    b.require(3, 5, "probe");
  } catch (const CapExceeded& e) {
    CHECK(e.dimension() == 5);
  }
}
