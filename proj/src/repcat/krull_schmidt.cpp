#include "perihall/repcat/krull_schmidt.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace perihall::repcat {

namespace {

std::size_t max_dim(const Rep& x) {
  std::size_t n = 1;
  for (auto d : x.dims()) n = std::max(n, d);
  return n;
}

RepMap power(const RepMap& y, std::size_t e) {
  std::vector<MatrixFp> c;
  for (const auto& m : y.components()) c.push_back(ffla::power(m, e));
  return RepMap::trusted(y.source(), y.target(), std::move(c));
}

bool is_nilpotent(const RepMap& y) { return power(y, max_dim(y.source())).is_zero(); }

// Fitting decomposition x = Im(y^N) + Ker(y^N), if it is proper.
std::optional<std::pair<Rep, Rep>> fitting_split(const RepMap& y) {
  RepMap z = power(y, max_dim(y.source()));
  if (z.is_zero() || z.is_iso()) return std::nullopt;
  return std::make_pair(image(z).rep, kernel(z).rep);
}

Elem eval_poly(const std::vector<Elem>& c, Elem x, FieldSpec f) {
  Elem r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = f.add(f.mul(r, x), c[i]);
  return r;
}

std::vector<Elem> roots(const std::vector<Elem>& poly, FieldSpec f) {
  std::vector<Elem> out;
  for (Elem l = 0; l < f.p(); ++l)
    if (eval_poly(poly, l, f) == 0) out.push_back(l);
  return out;
}

std::optional<std::pair<Rep, Rep>> split_with(const RepMap& b) {
  const FieldSpec f = b.source().field();
  const RepMap one = RepMap::identity(b.source());
  auto rs = roots(minimal_polynomial(b), f);
  if (std::find(rs.begin(), rs.end(), 0u) == rs.end()) rs.insert(rs.begin(), 0u);
  for (Elem l : rs)
    if (auto s = fitting_split(b - one.scaled(l))) return s;
  return std::nullopt;
}

// Every b_i = l_i + n_i with n_i in a nilpotent two-sided ideal J.
bool local_certificate(const Rep& x, const std::vector<RepMap>& basis) {
  const FieldSpec f = x.field();
  const RepMap one = RepMap::identity(x);
  std::vector<RepMap> j;
  for (const auto& b : basis) {
    auto rs = roots(minimal_polynomial(b), f);
    if (rs.size() != 1) return false;
    RepMap n = b - one.scaled(rs[0]);
    if (!is_nilpotent(n)) return false;
    j.push_back(std::move(n));
  }
  ffla::RowSpace jspace(f, flat_size(x, x));
  for (const auto& n : j) jspace.add(n.flat());
  for (const auto& b : basis)
    for (const auto& n : j)
      if (!jspace.contains((b * n).flat()) || !jspace.contains((n * b).flat())) return false;
  // powers of J must reach zero
  std::vector<RepMap> cur;
  for (std::size_t i = 0; i < jspace.dim(); ++i) cur.push_back(RepMap::from_flat(x, x, jspace.basis()[i]));
  std::size_t last_dim = jspace.dim() + 1;
  while (!cur.empty()) {
    if (cur.size() >= last_dim) return false;
    last_dim = cur.size();
    ffla::RowSpace next(f, flat_size(x, x));
    for (const auto& a : cur)
      for (const auto& n : j) next.add((a * n).flat());
    cur.clear();
    for (std::size_t i = 0; i < next.dim(); ++i) cur.push_back(RepMap::from_flat(x, x, next.basis()[i]));
  }
  return true;
}

// Calls fn on every element of span(basis); stops when fn returns true.
template <class F>
bool for_each_element(const Rep& x, const Rep& y, const std::vector<RepMap>& basis, const Budget& budget,
                      const char* what, F&& fn) {
  const FieldSpec f = x.field();
  budget.require(f.q(), basis.size(), what);
  std::vector<std::vector<Elem>> flats;
  for (const auto& b : basis) flats.push_back(b.flat());
  std::vector<Elem> cur(flat_size(x, y), 0);
  std::vector<Elem> digit(basis.size(), 0);
  for (;;) {
    if (fn(cur)) return true;
    std::size_t d = 0;
    for (; d < digit.size(); ++d) {
      digit[d] = (digit[d] + 1) % f.p();
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = f.add(cur[i], flats[d][i]);
      if (digit[d] != 0) break;
    }
    if (d == digit.size()) return false;
  }
}

std::optional<std::pair<Rep, Rep>> find_split(const Rep& x, const std::vector<RepMap>& basis, const Budget& budget) {
  for (const auto& b : basis)
    if (auto s = split_with(b)) return s;
  if (local_certificate(x, basis)) return std::nullopt;
  const FieldSpec f = x.field();
  std::mt19937_64 rng(0x5eed ^ x.total_dim());
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Elem> c(basis.size());
    for (auto& e : c) e = static_cast<Elem>(rng() % f.p());
    if (auto s = split_with(linear_combination(x, x, basis, c))) return s;
  }
  std::optional<std::pair<Rep, Rep>> found;
  for_each_element(x, x, basis, budget, "decompose", [&](const std::vector<Elem>& v) {
    found = fitting_split(RepMap::from_flat(x, x, v));
    return found.has_value();
  });
  return found;
}

}  // namespace

std::vector<Elem> minimal_polynomial(const RepMap& endo) {
  const Rep& x = endo.source();
  const FieldSpec f = x.field();
  const std::size_t n = flat_size(x, x);
  std::vector<std::vector<Elem>> pows;
  ffla::RowSpace span(f, n);
  RepMap cur = RepMap::identity(x);
  for (;;) {
    auto v = cur.flat();
    if (!span.add(v)) {
      MatrixFp a(f, n, pows.size());
      for (std::size_t j = 0; j < pows.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) a.set(i, j, pows[j][i]);
      auto s = ffla::solve(a, v);
      std::vector<Elem> poly;
      for (auto c : s->particular) poly.push_back(f.neg(c));
      poly.push_back(1);
      return poly;
    }
    pows.push_back(std::move(v));
    cur = cur * endo;
  }
}

std::vector<Rep> decompose(const Rep& x, const Budget& budget) {
  if (x.is_zero()) return {};
  auto basis = hom_basis(x, x);
  if (basis.size() <= 1) return {x};
  auto s = find_split(x, basis, budget);
  if (!s) return {x};
  auto a = decompose(s->first, budget);
  auto b = decompose(s->second, budget);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Summand> decompose_grouped(const Rep& x, const Budget& budget) {
  std::vector<Summand> out;
  for (auto& piece : decompose(x, budget)) {
    bool merged = false;
    for (auto& s : out)
      if (s.rep.dims() == piece.dims() && isomorphic_indecomposables(s.rep, piece)) {
        ++s.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back({piece, 1});
  }
  return out;
}

bool is_indecomposable(const Rep& x, const Budget& budget) {
  return !x.is_zero() && decompose(x, budget).size() == 1;
}

bool isomorphic_indecomposables(const Rep& x, const Rep& y) {
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  auto h = hom_basis(x, y);
  auto g = hom_basis(y, x);
  for (const auto& phi : h)
    for (const auto& psi : g)
      if ((phi * psi).is_iso()) return true;
  return false;
}

bool is_isomorphic(const Rep& x, const Rep& y, const Budget& budget) {
  if (!x.same_category(y)) throw ContractViolation("is_isomorphic: quiver or field mismatch");
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  if (x == y) return true;
  auto h = hom_basis(x, y);
  if (h.size() != hom_dim(x, x) || hom_dim(y, x) != hom_dim(y, y)) return false;
  for (const auto& b : h)
    if (b.is_iso()) return true;
  const FieldSpec f = x.field();
  std::mt19937_64 rng(0x15e0 ^ x.total_dim());
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Elem> c(h.size());
    for (auto& e : c) e = static_cast<Elem>(rng() % f.p());
    if (linear_combination(x, y, h, c).is_iso()) return true;
  }
  if (Budget::power_or_saturate(f.q(), h.size()) <= budget.cap)
    return for_each_element(x, y, h, budget, "is_isomorphic",
                            [&](const std::vector<Elem>& v) { return RepMap::from_flat(x, y, v).is_iso(); });
  // Too many candidates: compare Krull-Schmidt decompositions instead.
  auto dx = decompose_grouped(x, budget);
  auto dy = decompose_grouped(y, budget);
  if (dx.size() != dy.size()) return false;
  std::vector<bool> used(dy.size(), false);
  for (const auto& s : dx) {
    bool hit = false;
    for (std::size_t j = 0; j < dy.size() && !hit; ++j)
      if (!used[j] && dy[j].multiplicity == s.multiplicity && isomorphic_indecomposables(s.rep, dy[j].rep))
        used[j] = hit = true;
    if (!hit) return false;
  }
  return true;
}

std::uint64_t aut_order(const Rep& x, const Budget& budget) {
  if (x.is_zero()) return 1;
  auto basis = hom_basis(x, x);
  std::uint64_t count = 0;
  for_each_element(x, x, basis, budget, "aut_order", [&](const std::vector<Elem>& v) {
    if (RepMap::from_flat(x, x, v).is_iso()) ++count;
    return false;
  });
  return count;
}

}  // namespace perihall::repcat
