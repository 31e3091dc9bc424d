#include "perihall/repcat/rep.hpp"

#include <sstream>

#include "perihall/error.hpp"

namespace perihall::repcat {

namespace {

std::string make_key(FieldSpec f, const DimVector& dims, const std::vector<MatrixFp>& maps) {
  std::string k;
  k.reserve(8 + 2 * dims.size());
  auto put = [&k](std::uint32_t v) {
    k.push_back(static_cast<char>(v & 0xff));
    k.push_back(static_cast<char>((v >> 8) & 0xff));
  };
  put(f.p());
  for (auto d : dims) put(static_cast<std::uint32_t>(d));
  for (const auto& m : maps)
    for (auto e : m.entries()) put(e);
  return k;
}

}  // namespace

Rep::Rep(QuiverPtr quiver, FieldSpec field, DimVector dims, std::vector<MatrixFp> maps) {
  if (!quiver) throw ContractViolation("Rep: null quiver");
  if (dims.size() != quiver->num_vertices()) throw ContractViolation("Rep: dim vector length mismatch");
  if (maps.size() != quiver->arrows().size()) throw ContractViolation("Rep: arrow map count mismatch");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto& ar = quiver->arrows()[a];
    if (maps[a].rows() != dims[ar.source] || maps[a].cols() != dims[ar.target] || !(maps[a].field() == field))
      throw ContractViolation("Rep: arrow '" + ar.name + "' has the wrong shape");
  }
  auto d = std::make_shared<Data>();
  d->total = 0;
  for (auto x : dims) d->total += x;
  d->key = make_key(field, dims, maps);
  d->quiver = std::move(quiver);
  d->field = field;
  d->dims = std::move(dims);
  d->maps = std::move(maps);
  d_ = std::move(d);
}

bool Rep::same_category(const Rep& o) const {
  return field() == o.field() && (d_->quiver == o.d_->quiver || *d_->quiver == *o.d_->quiver);
}

Rep Rep::zero(QuiverPtr quiver, FieldSpec field) {
  DimVector dims(quiver->num_vertices(), 0);
  std::vector<MatrixFp> maps(quiver->arrows().size(), MatrixFp(field, 0, 0));
  return Rep(std::move(quiver), field, std::move(dims), std::move(maps));
}

Rep Rep::simple(QuiverPtr quiver, FieldSpec field, std::size_t v) {
  DimVector dims(quiver->num_vertices(), 0);
  dims.at(v) = 1;
  std::vector<MatrixFp> maps;
  for (const auto& a : quiver->arrows()) maps.emplace_back(field, dims[a.source], dims[a.target]);
  return Rep(std::move(quiver), field, std::move(dims), std::move(maps));
}

Rep Rep::projective(QuiverPtr quiver, FieldSpec field, std::size_t v) {
  const auto& paths = quiver->paths_from(v);
  const std::size_t n = quiver->num_vertices();
  DimVector dims(n, 0);
  std::vector<std::size_t> local(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) local[i] = dims[paths[i].end]++;
  std::vector<MatrixFp> maps;
  for (const auto& a : quiver->arrows()) maps.emplace_back(field, dims[a.source], dims[a.target]);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (auto a : quiver->arrows_out_of(paths[i].end)) {
      auto ext = paths[i].arrows;
      ext.push_back(a);
      for (std::size_t j = 0; j < paths.size(); ++j)
        if (paths[j].arrows == ext && paths[j].start == v) maps[a].set(local[i], local[j], 1);
    }
  }
  return Rep(std::move(quiver), field, std::move(dims), std::move(maps));
}

Rep Rep::injective(QuiverPtr quiver, FieldSpec field, std::size_t v) {
  const std::size_t n = quiver->num_vertices();
  // paths w ~> v, grouped by start vertex w
  std::vector<std::vector<Path>> to(n);
  for (std::size_t w = 0; w < n; ++w)
    for (const auto& p : quiver->paths_from(w))
      if (p.end == v) to[w].push_back(p);
  DimVector dims(n);
  for (std::size_t w = 0; w < n; ++w) dims[w] = to[w].size();
  std::vector<MatrixFp> maps;
  for (std::size_t a = 0; a < quiver->arrows().size(); ++a) {
    const auto& ar = quiver->arrows()[a];
    MatrixFp m(field, dims[ar.source], dims[ar.target]);
    for (std::size_t i = 0; i < to[ar.source].size(); ++i) {
      const auto& p = to[ar.source][i];
      if (p.arrows.empty() || p.arrows.front() != a) continue;
      std::vector<std::size_t> rest(p.arrows.begin() + 1, p.arrows.end());
      for (std::size_t j = 0; j < to[ar.target].size(); ++j)
        if (to[ar.target][j].arrows == rest) m.set(i, j, 1);
    }
    maps.push_back(std::move(m));
  }
  return Rep(std::move(quiver), field, std::move(dims), std::move(maps));
}

RepMap::RepMap(Rep s, Rep t, std::vector<MatrixFp> c, bool check)
    : src_(std::move(s)), tgt_(std::move(t)), comps_(std::move(c)) {
  const std::size_t n = src_.quiver().num_vertices();
  if (!src_.same_category(tgt_)) throw ContractViolation("RepMap: quiver or field mismatch");
  if (comps_.size() != n) throw ContractViolation("RepMap: component count mismatch");
  for (std::size_t v = 0; v < n; ++v)
    if (comps_[v].rows() != src_.dim(v) || comps_[v].cols() != tgt_.dim(v))
      throw ContractViolation("RepMap: component shape mismatch at vertex " + src_.quiver().label(v));
  if (check && !is_intertwiner()) throw ContractViolation("RepMap: not an intertwiner");
}

RepMap::RepMap(Rep source, Rep target, std::vector<MatrixFp> components)
    : RepMap(std::move(source), std::move(target), std::move(components), true) {}

RepMap RepMap::trusted(Rep source, Rep target, std::vector<MatrixFp> components) {
  return RepMap(std::move(source), std::move(target), std::move(components), false);
}

RepMap RepMap::zero(const Rep& x, const Rep& y) {
  std::vector<MatrixFp> c;
  for (std::size_t v = 0; v < x.dims().size(); ++v) c.emplace_back(x.field(), x.dim(v), y.dim(v));
  return trusted(x, y, std::move(c));
}

RepMap RepMap::identity(const Rep& x) {
  std::vector<MatrixFp> c;
  for (std::size_t v = 0; v < x.dims().size(); ++v) c.push_back(MatrixFp::identity(x.field(), x.dim(v)));
  return trusted(x, x, std::move(c));
}

std::size_t flat_size(const Rep& x, const Rep& y) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < x.dims().size(); ++v) n += x.dim(v) * y.dim(v);
  return n;
}

RepMap RepMap::from_flat(const Rep& x, const Rep& y, std::span<const Elem> flat) {
  if (flat.size() != flat_size(x, y)) throw ContractViolation("RepMap::from_flat: length mismatch");
  std::vector<MatrixFp> c;
  std::size_t off = 0;
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    const std::size_t k = x.dim(v) * y.dim(v);
    c.push_back(MatrixFp::from_flat(x.field(), x.dim(v), y.dim(v),
                                    std::vector<Elem>(flat.begin() + off, flat.begin() + off + k)));
    off += k;
  }
  return trusted(x, y, std::move(c));
}

std::vector<Elem> RepMap::flat() const {
  std::vector<Elem> out;
  for (const auto& m : comps_) out.insert(out.end(), m.entries().begin(), m.entries().end());
  return out;
}

bool RepMap::is_zero() const {
  for (const auto& m : comps_)
    if (!m.is_zero()) return false;
  return true;
}

bool RepMap::is_iso() const {
  for (const auto& m : comps_)
    if (!ffla::is_invertible(m)) return false;
  return true;
}

bool RepMap::is_intertwiner() const {
  const auto& arrows = src_.quiver().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (!(src_.map(a) * comps_[arrows[a].target] == comps_[arrows[a].source] * tgt_.map(a))) return false;
  return true;
}

RepMap RepMap::operator+(const RepMap& o) const {
  std::vector<MatrixFp> c;
  for (std::size_t v = 0; v < comps_.size(); ++v) c.push_back(comps_[v] + o.comps_.at(v));
  return trusted(src_, tgt_, std::move(c));
}

RepMap RepMap::operator-(const RepMap& o) const {
  std::vector<MatrixFp> c;
  for (std::size_t v = 0; v < comps_.size(); ++v) c.push_back(comps_[v] - o.comps_.at(v));
  return trusted(src_, tgt_, std::move(c));
}

RepMap RepMap::operator-() const { return scaled(src_.field().neg(1)); }

RepMap RepMap::scaled(Elem s) const {
  std::vector<MatrixFp> c;
  for (const auto& m : comps_) c.push_back(m.scaled(s));
  return trusted(src_, tgt_, std::move(c));
}

RepMap RepMap::operator*(const RepMap& g) const {
  if (!(tgt_.dims() == g.src_.dims())) throw ContractViolation("RepMap composition: middle objects differ");
  std::vector<MatrixFp> c;
  for (std::size_t v = 0; v < comps_.size(); ++v) c.push_back(comps_[v] * g.comps_[v]);
  return trusted(src_, g.tgt_, std::move(c));
}

Rep direct_sum(const Rep& x, const Rep& y) {
  if (!x.same_category(y)) throw ContractViolation("direct_sum: quiver or field mismatch");
  DimVector dims(x.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = x.dim(v) + y.dim(v);
  std::vector<MatrixFp> maps;
  for (std::size_t a = 0; a < x.maps().size(); ++a) maps.push_back(ffla::diag(x.map(a), y.map(a)));
  return Rep(x.quiver_ptr(), x.field(), std::move(dims), std::move(maps));
}

Rep direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw ContractViolation("direct_sum: empty list");
  const Rep& first = parts.front();
  const std::size_t n = first.dims().size();
  DimVector dims(n, 0);
  for (const auto& r : parts)
    for (std::size_t v = 0; v < n; ++v) dims[v] += r.dim(v);
  std::vector<MatrixFp> maps;
  const auto& arrows = first.quiver().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    MatrixFp m(first.field(), dims[arrows[a].source], dims[arrows[a].target]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& r : parts) {
      m.set_block(r0, c0, r.map(a));
      r0 += r.map(a).rows();
      c0 += r.map(a).cols();
    }
    maps.push_back(std::move(m));
  }
  return Rep(first.quiver_ptr(), first.field(), std::move(dims), std::move(maps));
}

RepMap direct_sum(const RepMap& f, const RepMap& g) {
  std::vector<MatrixFp> c;
  for (std::size_t v = 0; v < f.components().size(); ++v) c.push_back(ffla::diag(f.component(v), g.component(v)));
  return RepMap::trusted(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()), std::move(c));
}

std::vector<RepMap> hom_basis(const Rep& x, const Rep& y) {
  if (!x.same_category(y)) throw ContractViolation("hom_basis: quiver or field mismatch");
  const FieldSpec f = x.field();
  const std::size_t n = x.dims().size();
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) off[v + 1] = off[v] + x.dim(v) * y.dim(v);
  const std::size_t unknowns = off[n];
  const auto& arrows = x.quiver().arrows();
  std::size_t eqs = 0;
  for (const auto& a : arrows) eqs += x.dim(a.source) * y.dim(a.target);
  MatrixFp e(f, eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
    const auto& a = arrows[ai];
    const std::size_t s = a.source, t = a.target;
    const MatrixFp& xa = x.map(ai);
    const MatrixFp& ya = y.map(ai);
    for (std::size_t i = 0; i < x.dim(s); ++i)
      for (std::size_t j = 0; j < y.dim(t); ++j, ++row) {
        // sum_k xa[i,k] phi_t[k,j] - sum_k phi_s[i,k] ya[k,j]
        for (std::size_t k = 0; k < x.dim(t); ++k)
          if (xa(i, k)) e.set(row, off[t] + k * y.dim(t) + j, f.add(e(row, off[t] + k * y.dim(t) + j), xa(i, k)));
        for (std::size_t k = 0; k < y.dim(s); ++k)
          if (ya(k, j)) e.set(row, off[s] + i * y.dim(s) + k, f.sub(e(row, off[s] + i * y.dim(s) + k), ya(k, j)));
      }
  }
  MatrixFp ns = ffla::nullspace_columns(e);
  std::vector<RepMap> out;
  for (std::size_t i = 0; i < ns.rows(); ++i) out.push_back(RepMap::from_flat(x, y, ns.row(i)));
  return out;
}

std::size_t hom_dim(const Rep& x, const Rep& y) { return hom_basis(x, y).size(); }

long euler_form(const Rep& x, const Rep& y) {
  long s = 0;
  for (std::size_t v = 0; v < x.dims().size(); ++v) s += static_cast<long>(x.dim(v) * y.dim(v));
  for (const auto& a : x.quiver().arrows()) s -= static_cast<long>(x.dim(a.source) * y.dim(a.target));
  return s;
}

std::optional<std::vector<Elem>> combination_of(const std::vector<RepMap>& basis, const RepMap& target) {
  auto t = target.flat();
  const FieldSpec f = target.source().field();
  MatrixFp a(f, t.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto b = basis[j].flat();
    for (std::size_t i = 0; i < t.size(); ++i) a.set(i, j, b[i]);
  }
  auto s = ffla::solve(a, t);
  if (!s) return std::nullopt;
  return s->particular;
}

RepMap linear_combination(const Rep& x, const Rep& y, const std::vector<RepMap>& basis, std::span<const Elem> c) {
  RepMap r = RepMap::zero(x, y);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (c[j]) r = r + basis[j].scaled(c[j]);
  return r;
}

SubRep subrep(const Rep& x, const std::vector<MatrixFp>& generators) {
  const std::size_t n = x.dims().size();
  const FieldSpec f = x.field();
  std::vector<ffla::RowSpace> spaces;
  DimVector dims(n);
  std::vector<MatrixFp> incl;
  for (std::size_t v = 0; v < n; ++v) {
    if (generators.at(v).cols() != x.dim(v)) throw ContractViolation("subrep: generator width mismatch");
    spaces.emplace_back(generators[v]);
    dims[v] = spaces.back().dim();
    incl.push_back(spaces.back().basis_matrix());
  }
  std::vector<MatrixFp> maps;
  const auto& arrows = x.quiver().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const std::size_t s = arrows[a].source, t = arrows[a].target;
    MatrixFp img = incl[s] * x.map(a);
    MatrixFp m(f, dims[s], dims[t]);
    for (std::size_t i = 0; i < dims[s]; ++i) {
      auto c = spaces[t].coordinates(img.row(i));
      if (!c) throw ContractViolation("subrep: subspaces are not arrow-stable");
      for (std::size_t j = 0; j < dims[t]; ++j) m.set(i, j, (*c)[j]);
    }
    maps.push_back(std::move(m));
  }
  Rep sub(x.quiver_ptr(), f, std::move(dims), std::move(maps));
  RepMap inc = RepMap::trusted(sub, x, std::move(incl));
  return SubRep{std::move(sub), std::move(inc), std::move(spaces)};
}

Quotient quotient(const Rep& y, const std::vector<ffla::RowSpace>& spaces) {
  const std::size_t n = y.dims().size();
  const FieldSpec f = y.field();
  DimVector dims(n);
  std::vector<MatrixFp> sections, projs;
  for (std::size_t v = 0; v < n; ++v) {
    auto free = spaces.at(v).free_columns();
    dims[v] = free.size();
    MatrixFp s(f, free.size(), y.dim(v));
    for (std::size_t i = 0; i < free.size(); ++i) s.set(i, free[i], 1);
    MatrixFp pr(f, y.dim(v), free.size());
    std::vector<Elem> e(y.dim(v), 0);
    for (std::size_t i = 0; i < y.dim(v); ++i) {
      e[i] = 1;
      auto r = spaces[v].reduce(e);
      e[i] = 0;
      for (std::size_t j = 0; j < free.size(); ++j) pr.set(i, j, r[free[j]]);
    }
    sections.push_back(std::move(s));
    projs.push_back(std::move(pr));
  }
  std::vector<MatrixFp> maps;
  const auto& arrows = y.quiver().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a)
    maps.push_back(sections[arrows[a].source] * y.map(a) * projs[arrows[a].target]);
  Rep q(y.quiver_ptr(), f, std::move(dims), std::move(maps));
  RepMap pr = RepMap::trusted(y, q, std::move(projs));
  return Quotient{std::move(q), std::move(pr), std::move(sections)};
}

SubRep kernel(const RepMap& f) {
  std::vector<MatrixFp> gens;
  for (const auto& m : f.components()) gens.push_back(ffla::kernel_basis(m));
  return subrep(f.source(), gens);
}

SubRep image(const RepMap& f) { return subrep(f.target(), f.components()); }

Quotient cokernel(const RepMap& f) {
  std::vector<ffla::RowSpace> spaces;
  for (const auto& m : f.components()) spaces.emplace_back(m);
  return quotient(f.target(), spaces);
}

RepMap corestrict(const RepMap& f, const SubRep& sub) {
  const FieldSpec fs = f.source().field();
  std::vector<MatrixFp> c;
  for (std::size_t v = 0; v < f.components().size(); ++v) {
    const MatrixFp& m = f.component(v);
    MatrixFp r(fs, m.rows(), sub.rep.dim(v));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto co = sub.spaces[v].coordinates(m.row(i));
      if (!co) throw ContractViolation("corestrict: image not contained in the subrepresentation");
      for (std::size_t j = 0; j < co->size(); ++j) r.set(i, j, (*co)[j]);
    }
    c.push_back(std::move(r));
  }
  return RepMap::trusted(f.source(), sub.rep, std::move(c));
}

Factorization factorize(const RepMap& f) {
  if (!f.is_intertwiner()) throw ContractViolation("factorize: input is not an intertwiner");
  SubRep im = image(f);
  RepMap onto = corestrict(f, im);
  return Factorization{kernel(f), im, onto, quotient(f.target(), im.spaces)};
}

std::optional<MatrixFp> left_solve(const MatrixFp& a, const MatrixFp& b) {
  if (a.cols() != b.cols()) throw ContractViolation("left_solve: width mismatch");
  const std::size_t k = a.rows();
  auto r = ffla::rref(ffla::hstack(a.transpose(), b.transpose()));
  MatrixFp xt(a.field(), k, b.rows());
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] >= k) return std::nullopt;
    for (std::size_t j = 0; j < b.rows(); ++j) xt.set(r.pivots[i], j, r.matrix(i, k + j));
  }
  return xt.transpose();
}

std::string to_string(const Rep& x) {
  std::ostringstream os;
  os << "dim(";
  for (std::size_t v = 0; v < x.dims().size(); ++v) os << (v ? "," : "") << x.dim(v);
  os << ")";
  const auto& arrows = x.quiver().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) os << ' ' << arrows[a].name << '=' << x.map(a);
  return os.str();
}

}  // namespace perihall::repcat
