#include "perihall/repcat/catalog.hpp"

#include <algorithm>
#include <functional>

#include "perihall/repcat/krull_schmidt.hpp"

namespace perihall::repcat {

namespace {

std::size_t total(const DimVector& d) {
  std::size_t s = 0;
  for (auto x : d) s += x;
  return s;
}

bool graded_less(const DimVector& a, const DimVector& b) {
  if (total(a) != total(b)) return total(a) < total(b);
  return a < b;
}

}  // namespace

Catalog::Catalog(QuiverPtr quiver, FieldSpec field, Budget budget)
    : quiver_(std::move(quiver)), field_(field), budget_(budget) {}

std::string Catalog::make_name(const Rep& x, ClassId id) const {
  const auto& q = *quiver_;
  if (x.total_dim() == 1)
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
      if (x.dim(v) == 1) return "S" + q.label(v);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    Rep p = Rep::projective(quiver_, field_, v);
    if (p.dims() == x.dims() && isomorphic_indecomposables(p, x)) return "P" + q.label(v);
  }
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    Rep i = Rep::injective(quiver_, field_, v);
    if (i.dims() == x.dims() && isomorphic_indecomposables(i, x)) return "I" + q.label(v);
  }
  return "M" + std::to_string(id);
}

ClassId Catalog::lookup_or_insert_locked(const Rep& x) {
  auto& same = by_dims_[x.dims()];
  for (auto id : same)
    if (isomorphic_indecomposables(entries_[id].rep, x)) return id;
  const auto id = static_cast<ClassId>(entries_.size());
  entries_.push_back({x, make_name(x, id)});
  same.push_back(id);
  return id;
}

ClassId Catalog::classify_indecomposable(const Rep& x) {
  if (x.is_zero()) throw ContractViolation("classify_indecomposable: zero representation");
  std::lock_guard lock(mutex_);
  return lookup_or_insert_locked(x);
}

std::vector<ClassId> Catalog::classify(const Rep& x) {
  if (x.is_zero()) return {};
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(x.key());
    if (it != memo_.end()) return it->second;
  }
  auto pieces = decompose(x, budget_);
  std::vector<ClassId> ids;
  std::lock_guard lock(mutex_);
  for (const auto& p : pieces) ids.push_back(lookup_or_insert_locked(p));
  std::sort(ids.begin(), ids.end());
  memo_.emplace(x.key(), ids);
  return ids;
}

std::optional<ClassId> Catalog::find(const Rep& x) const {
  std::lock_guard lock(mutex_);
  auto it = by_dims_.find(x.dims());
  if (it == by_dims_.end()) return std::nullopt;
  for (auto id : it->second)
    if (isomorphic_indecomposables(entries_[id].rep, x)) return id;
  return std::nullopt;
}

std::optional<ClassId> Catalog::by_name(const std::string& name) const {
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].name == name) return static_cast<ClassId>(i);
  return std::nullopt;
}

std::size_t Catalog::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

Rep Catalog::representative(ClassId id) const {
  std::lock_guard lock(mutex_);
  return entries_.at(id).rep;
}

std::string Catalog::name(ClassId id) const {
  std::lock_guard lock(mutex_);
  return entries_.at(id).name;
}

DimVector Catalog::dims(ClassId id) const {
  std::lock_guard lock(mutex_);
  return entries_.at(id).rep.dims();
}

Rep Catalog::module(const std::vector<ClassId>& summands) const {
  if (summands.empty()) return Rep::zero(quiver_, field_);
  std::vector<Rep> parts;
  for (auto id : summands) parts.push_back(representative(id));
  return direct_sum(parts);
}

DimVector Catalog::module_dims(const std::vector<ClassId>& summands) const {
  DimVector d(quiver_->num_vertices(), 0);
  for (auto id : summands) {
    auto e = dims(id);
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += e[v];
  }
  return d;
}

std::vector<ClassId> Catalog::enumerate_indecomposables(const DimVector& bound) {
  const auto& q = *quiver_;
  const std::size_t n = q.num_vertices();
  if (bound.size() != n) throw ContractViolation("enumerate_indecomposables: bound length mismatch");
  std::vector<DimVector> dvs;
  DimVector d(n, 0);
  std::function<void(std::size_t)> gen = [&](std::size_t v) {
    if (v == n) {
      if (total(d) > 0) dvs.push_back(d);
      return;
    }
    for (std::size_t k = 0; k <= bound[v]; ++k) {
      d[v] = k;
      gen(v + 1);
    }
  };
  gen(0);
  std::sort(dvs.begin(), dvs.end(), graded_less);
  for (const auto& dv : dvs) {
    std::size_t entries = 0;
    for (const auto& a : q.arrows()) entries += dv[a.source] * dv[a.target];
    budget_.require(field_.q(), entries, "enumerate_reps");
    std::vector<Elem> digit(entries, 0);
    for (;;) {
      std::vector<MatrixFp> maps;
      std::size_t off = 0;
      for (const auto& a : q.arrows()) {
        const std::size_t k = dv[a.source] * dv[a.target];
        maps.push_back(MatrixFp::from_flat(field_, dv[a.source], dv[a.target],
                                           std::vector<Elem>(digit.begin() + off, digit.begin() + off + k)));
        off += k;
      }
      Rep x(quiver_, field_, dv, std::move(maps));
      if (is_indecomposable(x, budget_)) classify_indecomposable(x);
      std::size_t i = 0;
      for (; i < digit.size(); ++i) {
        digit[i] = (digit[i] + 1) % field_.p();
        if (digit[i] != 0) break;
      }
      if (i == digit.size()) break;
    }
  }
  std::vector<ClassId> out;
  {
    std::lock_guard lock(mutex_);
    for (std::size_t id = 0; id < entries_.size(); ++id) {
      const auto& dv = entries_[id].rep.dims();
      bool inside = true;
      for (std::size_t v = 0; v < n; ++v) inside = inside && dv[v] <= bound[v];
      if (inside) out.push_back(static_cast<ClassId>(id));
    }
  }
  std::stable_sort(out.begin(), out.end(), [this](ClassId a, ClassId b) {
    return graded_less(dims(a), dims(b));
  });
  return out;
}

std::vector<ModuleClass> Catalog::enumerate_modules(const DimVector& bound) {
  auto inds = enumerate_indecomposables(bound);
  const std::size_t n = bound.size();
  std::vector<ModuleClass> out;
  ModuleClass cur{{}, DimVector(n, 0)};
  std::function<void(std::size_t)> gen = [&](std::size_t start) {
    out.push_back(cur);
    for (std::size_t i = start; i < inds.size(); ++i) {
      auto d = dims(inds[i]);
      bool fits = true;
      for (std::size_t v = 0; v < n; ++v) fits = fits && cur.dims[v] + d[v] <= bound[v];
      if (!fits) continue;
      for (std::size_t v = 0; v < n; ++v) cur.dims[v] += d[v];
      cur.summands.push_back(inds[i]);
      gen(i);
      cur.summands.pop_back();
      for (std::size_t v = 0; v < n; ++v) cur.dims[v] -= d[v];
    }
  };
  gen(0);
  for (auto& m : out) std::sort(m.summands.begin(), m.summands.end());
  std::stable_sort(out.begin(), out.end(), [](const ModuleClass& a, const ModuleClass& b) {
    if (a.dims != b.dims) return graded_less(a.dims, b.dims);
    return a.summands < b.summands;
  });
  return out;
}

std::vector<Rep> enumerate_reps(Catalog& catalog, const DimVector& bound) {
  std::vector<Rep> out;
  for (const auto& m : catalog.enumerate_modules(bound)) out.push_back(catalog.module(m.summands));
  return out;
}

std::uint64_t classical_hall_g(const Rep& x, const Rep& y, const Rep& l, const Budget& budget) {
  const std::size_t n = l.dims().size();
  for (std::size_t v = 0; v < n; ++v)
    if (x.dim(v) + y.dim(v) != l.dim(v)) return 0;
  const FieldSpec f = l.field();
  std::uint64_t candidates = 1;
  for (std::size_t v = 0; v < n; ++v) {
    candidates *= ffla::gaussian_binomial(l.dim(v), x.dim(v), f.q());
    if (candidates > budget.cap) throw CapExceeded("classical_hall_g", candidates, budget.cap);
  }
  std::uint64_t count = 0;
  std::vector<MatrixFp> chosen(n);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      // arrow stability: the image of U_s lies in U_t
      const auto& arrows = l.quiver().arrows();
      for (std::size_t a = 0; a < arrows.size(); ++a) {
        ffla::RowSpace tgt(chosen[arrows[a].target]);
        MatrixFp img = chosen[arrows[a].source] * l.map(a);
        for (std::size_t i = 0; i < img.rows(); ++i)
          if (!tgt.contains(img.row(i))) return;
      }
      SubRep u = subrep(l, chosen);
      if (!is_isomorphic(u.rep, x, budget)) return;
      Quotient qt = quotient(l, u.spaces);
      if (is_isomorphic(qt.rep, y, budget)) ++count;
      return;
    }
    ffla::for_each_subspace(f, l.dim(v), x.dim(v), [&](const MatrixFp& m) {
      chosen[v] = m;
      rec(v + 1);
      return true;
    });
  };
  rec(0);
  return count;
}

}  // namespace perihall::repcat
