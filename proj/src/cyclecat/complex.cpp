#include "perihall/cyclecat/complex.hpp"

#include <sstream>

#include "perihall/error.hpp"

namespace perihall::cyclecat {

namespace {

MatrixFp submatrix(const MatrixFp& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  MatrixFp r(m.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r.set(i, j, m(rows[i], cols[j]));
  return r;
}

// Indices of the chosen summands inside position i, vertex v.
std::vector<std::size_t> block_indices(const CycleComplex& c, const std::vector<std::size_t>& summands, int i,
                                       std::size_t v) {
  std::vector<std::size_t> idx;
  for (auto k : summands) {
    const auto& b = c.layout().at(k);
    for (std::size_t j = 0; j < b.dims[pos(i)][v]; ++j) idx.push_back(b.offset[pos(i)][v] + j);
  }
  return idx;
}

void check_shapes(const std::array<Rep, kPeriod>& x, const std::array<RepMap, kPeriod>& d) {
  for (int i = 0; i < kPeriod; ++i) {
    if (!(d[i].source().dims() == x[i].dims()) || !(d[i].target().dims() == x[pos(i + 1)].dims()))
      throw ContractViolation("CycleComplex: differential " + std::to_string(i) + " has the wrong shape");
    if (!x[i].same_category(x[0])) throw ContractViolation("CycleComplex: positions live in different categories");
  }
}

}  // namespace

CycleComplex::CycleComplex(std::array<Rep, kPeriod> positions, std::array<RepMap, kPeriod> differentials,
                           std::vector<SummandBlock> layout)
    : x_(std::move(positions)), d_(std::move(differentials)), layout_(std::move(layout)) {
  check_shapes(x_, d_);
  for (int i = 0; i < kPeriod; ++i) {
    if (!d_[i].is_intertwiner()) throw ContractViolation("CycleComplex: differential is not a morphism");
    if (!(d_[i] * d_[pos(i + 1)]).is_zero()) throw ContractViolation("CycleComplex: d_i d_{i+1} != 0");
  }
}

CycleComplex::CycleComplex(Trusted, std::array<Rep, kPeriod> positions, std::array<RepMap, kPeriod> differentials,
                           std::vector<SummandBlock> layout)
    : x_(std::move(positions)), d_(std::move(differentials)), layout_(std::move(layout)) {}

bool CycleComplex::is_zero() const {
  return x_[0].is_zero() && x_[1].is_zero() && x_[2].is_zero();
}

ComplexPtr shift(const ComplexPtr& c, int n) {
  const Elem sign = (n % 2 == 0) ? 1 : c->field().neg(1);
  std::array<Rep, kPeriod> x{c->position(n), c->position(n + 1), c->position(n + 2)};
  std::array<RepMap, kPeriod> d{c->differential(n).scaled(sign), c->differential(n + 1).scaled(sign),
                                c->differential(n + 2).scaled(sign)};
  std::vector<SummandBlock> lay;
  for (const auto& b : c->layout()) {
    SummandBlock nb;
    nb.stalk = {b.stalk.cls, pos(b.stalk.shift + n)};
    for (int i = 0; i < kPeriod; ++i) {
      nb.offset[i] = b.offset[pos(i + n)];
      nb.dims[i] = b.dims[pos(i + n)];
    }
    lay.push_back(std::move(nb));
  }
  return std::make_shared<const CycleComplex>(CycleComplex::Trusted{}, std::move(x), std::move(d), std::move(lay));
}

ComplexPtr direct_sum(const std::vector<ComplexPtr>& parts) {
  if (parts.empty()) throw ContractViolation("direct_sum: no complexes");
  const std::size_t n = parts[0]->num_vertices();
  std::array<Rep, kPeriod> x{parts[0]->position(0), parts[0]->position(1), parts[0]->position(2)};
  std::vector<SummandBlock> lay;
  bool have_layout = true;
  std::array<std::vector<std::size_t>, kPeriod> base;
  for (auto& b : base) b.assign(n, 0);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = *parts[k];
    if (p.layout().empty() && !p.is_zero()) have_layout = false;
    for (const auto& b : p.layout()) {
      SummandBlock nb = b;
      for (int i = 0; i < kPeriod; ++i)
        for (std::size_t v = 0; v < n; ++v) nb.offset[i][v] += base[i][v];
      lay.push_back(std::move(nb));
    }
    for (int i = 0; i < kPeriod; ++i)
      for (std::size_t v = 0; v < n; ++v) base[i][v] += p.dim(i, v);
  }
  for (int i = 0; i < kPeriod; ++i) {
    std::vector<Rep> ps;
    for (const auto& p : parts) ps.push_back(p->position(i));
    x[i] = repcat::direct_sum(ps);
  }
  std::array<RepMap, kPeriod> d{RepMap::zero(x[0], x[1]), RepMap::zero(x[1], x[2]), RepMap::zero(x[2], x[0])};
  for (int i = 0; i < kPeriod; ++i) {
    std::vector<MatrixFp> comps;
    for (std::size_t v = 0; v < n; ++v) {
      MatrixFp m(x[i].field(), x[i].dim(v), x[pos(i + 1)].dim(v));
      std::size_t r = 0, c = 0;
      for (const auto& p : parts) {
        const auto& blk = p->differential(i).component(v);
        m.set_block(r, c, blk);
        r += blk.rows();
        c += blk.cols();
      }
      comps.push_back(std::move(m));
    }
    d[i] = RepMap::trusted(x[i], x[pos(i + 1)], std::move(comps));
  }
  if (!have_layout) lay.clear();
  return std::make_shared<const CycleComplex>(CycleComplex::Trusted{}, std::move(x), std::move(d), std::move(lay));
}

ComplexPtr restrict_complex(const ComplexPtr& c, const std::vector<std::size_t>& summands) {
  const std::size_t n = c->num_vertices();
  const auto& arrows = c->quiver()->arrows();
  std::array<std::vector<std::vector<std::size_t>>, kPeriod> idx;
  std::array<Rep, kPeriod> x{c->position(0), c->position(1), c->position(2)};
  for (int i = 0; i < kPeriod; ++i) {
    for (std::size_t v = 0; v < n; ++v) idx[i].push_back(block_indices(*c, summands, i, v));
    DimVector dims(n);
    for (std::size_t v = 0; v < n; ++v) dims[v] = idx[i][v].size();
    std::vector<MatrixFp> maps;
    for (std::size_t a = 0; a < arrows.size(); ++a)
      maps.push_back(submatrix(c->position(i).map(a), idx[i][arrows[a].source], idx[i][arrows[a].target]));
    x[i] = Rep(c->quiver(), c->field(), std::move(dims), std::move(maps));
  }
  std::array<RepMap, kPeriod> d{RepMap::zero(x[0], x[1]), RepMap::zero(x[1], x[2]), RepMap::zero(x[2], x[0])};
  for (int i = 0; i < kPeriod; ++i) {
    std::vector<MatrixFp> comps;
    for (std::size_t v = 0; v < n; ++v)
      comps.push_back(submatrix(c->differential(i).component(v), idx[i][v], idx[pos(i + 1)][v]));
    d[i] = RepMap::trusted(x[i], x[pos(i + 1)], std::move(comps));
  }
  std::vector<SummandBlock> lay;
  std::array<std::vector<std::size_t>, kPeriod> base;
  for (auto& b : base) b.assign(n, 0);
  for (auto k : summands) {
    SummandBlock nb = c->layout().at(k);
    for (int i = 0; i < kPeriod; ++i)
      for (std::size_t v = 0; v < n; ++v) {
        nb.offset[i][v] = base[i][v];
        base[i][v] += nb.dims[i][v];
      }
    lay.push_back(std::move(nb));
  }
  return std::make_shared<const CycleComplex>(CycleComplex::Trusted{}, std::move(x), std::move(d), std::move(lay));
}

BlockLayout::BlockLayout(const CycleComplex& src, const CycleComplex& tgt, int degree) {
  const std::size_t n = src.num_vertices();
  for (int i = 0; i < kPeriod; ++i) {
    off_[i].resize(n);
    rows_[i].resize(n);
    cols_[i].resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      off_[i][v] = size_;
      rows_[i][v] = src.dim(i, v);
      cols_[i][v] = tgt.dim(i + degree, v);
      size_ += rows_[i][v] * cols_[i][v];
    }
  }
}

MatrixFp read_block(FieldSpec f, const BlockLayout& lay, std::span<const Elem> flat, int i, std::size_t v) {
  const std::size_t r = lay.rows(i, v), c = lay.cols(i, v), o = lay.offset(i, v);
  return MatrixFp::from_flat(f, r, c, std::vector<Elem>(flat.begin() + o, flat.begin() + o + r * c));
}

void write_block(const BlockLayout& lay, std::vector<Elem>& flat, int i, std::size_t v, const MatrixFp& m) {
  if (m.rows() != lay.rows(i, v) || m.cols() != lay.cols(i, v)) throw ContractViolation("write_block: shape mismatch");
  std::copy(m.entries().begin(), m.entries().end(), flat.begin() + lay.offset(i, v));
}

ChainMap::ChainMap(ComplexPtr src, ComplexPtr tgt, std::vector<Elem> flat, bool check)
    : src_(std::move(src)), tgt_(std::move(tgt)), flat_(std::move(flat)) {
  if (flat_.size() != BlockLayout(*src_, *tgt_).size()) throw ContractViolation("ChainMap: flat length mismatch");
  if (check && !is_chain_map()) throw ContractViolation("ChainMap: not a chain map");
}

ChainMap::ChainMap(ComplexPtr src, ComplexPtr tgt, std::vector<Elem> flat)
    : ChainMap(std::move(src), std::move(tgt), std::move(flat), true) {}

ChainMap ChainMap::trusted(ComplexPtr src, ComplexPtr tgt, std::vector<Elem> flat) {
  return ChainMap(std::move(src), std::move(tgt), std::move(flat), false);
}

ChainMap ChainMap::from_components(ComplexPtr src, ComplexPtr tgt, const std::array<RepMap, kPeriod>& comps) {
  BlockLayout lay(*src, *tgt);
  std::vector<Elem> flat(lay.size(), 0);
  for (int i = 0; i < kPeriod; ++i)
    for (std::size_t v = 0; v < lay.num_vertices(); ++v) write_block(lay, flat, i, v, comps[i].component(v));
  return ChainMap(std::move(src), std::move(tgt), std::move(flat));
}

ChainMap ChainMap::zero(ComplexPtr src, ComplexPtr tgt) {
  const std::size_t n = BlockLayout(*src, *tgt).size();
  return trusted(std::move(src), std::move(tgt), std::vector<Elem>(n, 0));
}

ChainMap ChainMap::identity(ComplexPtr c) {
  BlockLayout lay(*c, *c);
  std::vector<Elem> flat(lay.size(), 0);
  for (int i = 0; i < kPeriod; ++i)
    for (std::size_t v = 0; v < lay.num_vertices(); ++v)
      write_block(lay, flat, i, v, MatrixFp::identity(c->field(), c->dim(i, v)));
  return trusted(c, c, std::move(flat));
}

MatrixFp ChainMap::block(int i, std::size_t v) const {
  return read_block(src_->field(), BlockLayout(*src_, *tgt_), flat_, i, v);
}

RepMap ChainMap::component(int i) const {
  BlockLayout lay(*src_, *tgt_);
  std::vector<MatrixFp> c;
  for (std::size_t v = 0; v < lay.num_vertices(); ++v) c.push_back(read_block(src_->field(), lay, flat_, i, v));
  return RepMap::trusted(src_->position(i), tgt_->position(i), std::move(c));
}

bool ChainMap::is_chain_map() const {
  BlockLayout lay(*src_, *tgt_);
  const FieldSpec f = src_->field();
  for (int i = 0; i < kPeriod; ++i) {
    if (!component(i).is_intertwiner()) return false;
    for (std::size_t v = 0; v < lay.num_vertices(); ++v) {
      MatrixFp lhs = src_->differential(i).component(v) * read_block(f, lay, flat_, i + 1, v);
      MatrixFp rhs = read_block(f, lay, flat_, i, v) * tgt_->differential(i).component(v);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool ChainMap::is_zero() const {
  for (auto e : flat_)
    if (e) return false;
  return true;
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
  if (o.flat_.size() != flat_.size()) throw ContractViolation("ChainMap sum: shape mismatch");
  const FieldSpec f = src_->field();
  auto r = flat_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(r[i], o.flat_[i]);
  return trusted(src_, tgt_, std::move(r));
}

ChainMap ChainMap::operator-(const ChainMap& o) const { return *this + o.scaled(src_->field().neg(1)); }

ChainMap ChainMap::scaled(Elem s) const {
  const FieldSpec f = src_->field();
  auto r = flat_;
  for (auto& e : r) e = f.mul(e, s);
  return trusted(src_, tgt_, std::move(r));
}

ChainMap ChainMap::operator*(const ChainMap& g) const {
  BlockLayout a(*src_, *tgt_), b(*g.src_, *g.tgt_), c(*src_, *g.tgt_);
  const FieldSpec f = src_->field();
  std::vector<Elem> out(c.size(), 0);
  for (int i = 0; i < kPeriod; ++i)
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
      if (a.cols(i, v) != b.rows(i, v)) throw ContractViolation("ChainMap composition: middle complexes differ");
      write_block(c, out, i, v, read_block(f, a, flat_, i, v) * read_block(f, b, g.flat_, i, v));
    }
  return trusted(src_, g.tgt_, std::move(out));
}

ChainMap ChainMap::shifted(int n) const { return shifted(n, shift(src_, n), shift(tgt_, n)); }

ChainMap ChainMap::shifted(int n, ComplexPtr src_shifted, ComplexPtr tgt_shifted) const {
  BlockLayout from(*src_, *tgt_), to(*src_shifted, *tgt_shifted);
  const FieldSpec f = src_->field();
  std::vector<Elem> out(to.size(), 0);
  for (int i = 0; i < kPeriod; ++i)
    for (std::size_t v = 0; v < to.num_vertices(); ++v) write_block(to, out, i, v, read_block(f, from, flat_, i + n, v));
  return trusted(std::move(src_shifted), std::move(tgt_shifted), std::move(out));
}

ChainMap ChainMap::restricted(const std::vector<std::size_t>& src_summands,
                              const std::vector<std::size_t>& tgt_summands) const {
  return restricted(src_summands, tgt_summands, restrict_complex(src_, src_summands),
                    restrict_complex(tgt_, tgt_summands));
}

ChainMap ChainMap::restricted(const std::vector<std::size_t>& src_summands,
                              const std::vector<std::size_t>& tgt_summands, ComplexPtr src_sub,
                              ComplexPtr tgt_sub) const {
  BlockLayout from(*src_, *tgt_), to(*src_sub, *tgt_sub);
  const FieldSpec f = src_->field();
  std::vector<Elem> out(to.size(), 0);
  for (int i = 0; i < kPeriod; ++i)
    for (std::size_t v = 0; v < to.num_vertices(); ++v) {
      auto rows = block_indices(*src_, src_summands, i, v);
      auto cols = block_indices(*tgt_, tgt_summands, i, v);
      write_block(to, out, i, v, submatrix(read_block(f, from, flat_, i, v), rows, cols));
    }
  return trusted(std::move(src_sub), std::move(tgt_sub), std::move(out));
}

Homotopy::Homotopy(ComplexPtr src, ComplexPtr tgt, std::vector<Elem> flat)
    : src_(std::move(src)), tgt_(std::move(tgt)), flat_(std::move(flat)) {
  if (flat_.size() != BlockLayout(*src_, *tgt_, -1).size()) throw ContractViolation("Homotopy: flat length mismatch");
  for (int i = 0; i < kPeriod; ++i)
    if (!component(i).is_intertwiner()) throw ContractViolation("Homotopy: component is not a morphism");
}

RepMap Homotopy::component(int i) const {
  BlockLayout lay(*src_, *tgt_, -1);
  std::vector<MatrixFp> c;
  for (std::size_t v = 0; v < lay.num_vertices(); ++v) c.push_back(read_block(src_->field(), lay, flat_, i, v));
  return RepMap::trusted(src_->position(i), tgt_->position(i - 1), std::move(c));
}

ChainMap Homotopy::boundary() const {
  BlockLayout hl(*src_, *tgt_, -1), ml(*src_, *tgt_);
  const FieldSpec f = src_->field();
  std::vector<Elem> out(ml.size(), 0);
  for (int i = 0; i < kPeriod; ++i)
    for (std::size_t v = 0; v < ml.num_vertices(); ++v) {
      MatrixFp a = read_block(f, hl, flat_, i, v) * tgt_->differential(i - 1).component(v);
      MatrixFp b = src_->differential(i).component(v) * read_block(f, hl, flat_, i + 1, v);
      write_block(ml, out, i, v, a + b);
    }
  return ChainMap::trusted(src_, tgt_, std::move(out));
}

bool witnesses(const Homotopy& s, const ChainMap& f, const ChainMap& g) {
  return (f - g).flat() == s.boundary().flat();
}

ConeBuilder::ConeBuilder(ComplexPtr src, ComplexPtr tgt)
    : src_(std::move(src)), tgt_(std::move(tgt)), lay_(*src_, *tgt_),
      positions_{src_->position(0), src_->position(1), src_->position(2)} {
  const std::size_t n = src_->num_vertices();
  for (int i = 0; i < kPeriod; ++i) positions_[i] = repcat::direct_sum(src_->position(i + 1), tgt_->position(i));
  for (int i = 0; i < kPeriod; ++i)
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t a1 = src_->dim(i + 1, v), b0 = tgt_->dim(i, v);
      const std::size_t a2 = src_->dim(i + 2, v), b1 = tgt_->dim(i + 1, v);
      MatrixFp m(src_->field(), a1 + b0, a2 + b1);
      m.set_block(0, 0, -src_->differential(i + 1).component(v));
      m.set_block(a1, a2, tgt_->differential(i).component(v));
      templates_[i].push_back(std::move(m));
    }
}

CycleComplex ConeBuilder::build(std::span<const Elem> u) const {
  if (u.size() != lay_.size()) throw ContractViolation("ConeBuilder: map length mismatch");
  const FieldSpec f = src_->field();
  const std::size_t n = src_->num_vertices();
  std::array<RepMap, kPeriod> d{RepMap::zero(positions_[0], positions_[1]), RepMap::zero(positions_[1], positions_[2]),
                                RepMap::zero(positions_[2], positions_[0])};
  for (int i = 0; i < kPeriod; ++i) {
    std::vector<MatrixFp> comps;
    for (std::size_t v = 0; v < n; ++v) {
      MatrixFp m = templates_[i][v];
      m.set_block(0, src_->dim(i + 2, v), read_block(f, lay_, u, i + 1, v));
      comps.push_back(std::move(m));
    }
    d[i] = RepMap::trusted(positions_[i], positions_[pos(i + 1)], std::move(comps));
  }
  return CycleComplex(CycleComplex::Trusted{}, positions_, std::move(d));
}

Cone mapping_cone(const ChainMap& u) {
  ConeBuilder b(u.source(), u.target());
  auto cone = std::make_shared<const CycleComplex>(b.build(u.flat()));
  const auto& src = u.source();
  const auto& tgt = u.target();
  auto src1 = shift(src, 1);
  const FieldSpec f = src->field();
  const std::size_t n = src->num_vertices();
  BlockLayout il(*tgt, *cone), pl(*cone, *src1);
  std::vector<Elem> inc(il.size(), 0), proj(pl.size(), 0);
  for (int i = 0; i < kPeriod; ++i)
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t a1 = src->dim(i + 1, v), b0 = tgt->dim(i, v);
      MatrixFp im(f, b0, a1 + b0);
      im.set_block(0, a1, MatrixFp::identity(f, b0));
      write_block(il, inc, i, v, im);
      MatrixFp pm(f, a1 + b0, a1);
      pm.set_block(0, 0, MatrixFp::identity(f, a1));
      write_block(pl, proj, i, v, pm);
    }
  return Cone{cone, ChainMap(tgt, cone, std::move(inc)), ChainMap(cone, src1, std::move(proj))};
}

std::string to_string(const CycleComplex& c) {
  std::ostringstream os;
  for (int i = 0; i < kPeriod; ++i) os << "X" << i + 1 << ": " << repcat::to_string(c.position(i)) << "\n";
  for (int i = 0; i < kPeriod; ++i) {
    os << "d" << i + 1 << ":";
    for (std::size_t v = 0; v < c.num_vertices(); ++v)
      os << ' ' << c.quiver()->label(v) << '=' << c.differential(i).component(v);
    os << "\n";
  }
  return os.str();
}

}  // namespace perihall::cyclecat
