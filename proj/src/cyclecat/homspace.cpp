#include "perihall/cyclecat/homspace.hpp"

namespace perihall::cyclecat {

namespace {

// Linear equations in the entries of a flat block vector.
class Equations {
 public:
  Equations(FieldSpec f, std::size_t unknowns) : f_(f), n_(unknowns) {}

  // Starts a batch of m x n scalar equations; each add_term adds
  // sign * L * F * R to it, F being the unknown block at (offset, r, c).
  void begin(std::size_t m, std::size_t n) {
    base_ = rows_.size();
    m_ = m;
    k_ = n;
    rows_.resize(base_ + m * n, std::vector<Elem>(n_, 0));
  }
  void add_term(const MatrixFp& l, std::size_t offset, std::size_t r, std::size_t c, const MatrixFp& rm, Elem sign) {
    for (std::size_t x = 0; x < m_; ++x)
      for (std::size_t k = 0; k < r; ++k) {
        const Elem lk = f_.mul(sign, l(x, k));
        if (!lk) continue;
        for (std::size_t y = 0; y < k_; ++y) {
          auto& row = rows_[base_ + x * k_ + y];
          for (std::size_t j = 0; j < c; ++j) {
            const Elem rv = rm(j, y);
            if (rv) row[offset + k * c + j] = f_.add(row[offset + k * c + j], f_.mul(lk, rv));
          }
        }
      }
  }
  MatrixFp solutions() const {
    MatrixFp e(f_, rows_.size(), n_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < n_; ++j) e.set(i, j, rows_[i][j]);
    return nullspace_columns(e);
  }

 private:
  FieldSpec f_;
  std::size_t n_;
  std::vector<std::vector<Elem>> rows_;
  std::size_t base_ = 0, m_ = 0, k_ = 0;
};

// Blocks of degree `degree` must be intertwiners X^i -> Y^{i+degree}.
void intertwiner_equations(Equations& eq, const CycleComplex& x, const CycleComplex& y, int degree,
                           const BlockLayout& lay) {
  const FieldSpec f = x.field();
  const auto& arrows = x.quiver()->arrows();
  for (int i = 0; i < kPeriod; ++i)
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const std::size_t s = arrows[a].source, t = arrows[a].target;
      eq.begin(x.dim(i, s), y.dim(i + degree, t));
      eq.add_term(x.position(i).map(a), lay.offset(i, t), lay.rows(i, t), lay.cols(i, t),
                  MatrixFp::identity(f, y.dim(i + degree, t)), 1);
      eq.add_term(MatrixFp::identity(f, x.dim(i, s)), lay.offset(i, s), lay.rows(i, s), lay.cols(i, s),
                  y.position(i + degree).map(a), f.neg(1));
    }
}

std::vector<Elem> row_of(const MatrixFp& m, std::size_t r) {
  auto s = m.row(r);
  return {s.begin(), s.end()};
}

}  // namespace

HomSpace::HomSpace(ComplexPtr src, ComplexPtr tgt)
    : src_(std::move(src)),
      tgt_(std::move(tgt)),
      lay_(*src_, *tgt_),
      bound_(src_->field(), lay_.size()),
      reps_(src_->field(), lay_.size()) {
  if (src_->quiver() != tgt_->quiver() && !(*src_->quiver() == *tgt_->quiver()))
    throw ContractViolation("HomSpace: complexes over different quivers");
  if (src_->field().p() != tgt_->field().p()) throw ContractViolation("HomSpace: different fields");
  const FieldSpec f = field();
  const std::size_t nv = src_->num_vertices();

  Equations eq(f, lay_.size());
  intertwiner_equations(eq, *src_, *tgt_, 0, lay_);
  for (int i = 0; i < kPeriod; ++i)
    for (std::size_t v = 0; v < nv; ++v) {
      eq.begin(src_->dim(i, v), tgt_->dim(i + 1, v));
      eq.add_term(src_->differential(i).component(v), lay_.offset(i + 1, v), lay_.rows(i + 1, v),
                  lay_.cols(i + 1, v), MatrixFp::identity(f, tgt_->dim(i + 1, v)), 1);
      eq.add_term(MatrixFp::identity(f, src_->dim(i, v)), lay_.offset(i, v), lay_.rows(i, v), lay_.cols(i, v),
                  tgt_->differential(i).component(v), f.neg(1));
    }
  const MatrixFp z = eq.solutions();
  chain_dim_ = z.rows();

  BlockLayout hl(*src_, *tgt_, -1);
  Equations heq(f, hl.size());
  intertwiner_equations(heq, *src_, *tgt_, -1, hl);
  const MatrixFp h = heq.solutions();
  for (std::size_t r = 0; r < h.rows(); ++r) {
    htpy_basis_.push_back(row_of(h, r));
    htpy_bound_.push_back(Homotopy(src_, tgt_, htpy_basis_.back()).boundary().flat());
    bound_.add(htpy_bound_.back());
  }
  for (std::size_t r = 0; r < z.rows(); ++r) reps_.add(bound_.reduce(row_of(z, r)));
  if (reps_.dim() + bound_.dim() != chain_dim_) throw InternalError("HomSpace: boundaries are not chain maps");
}

std::vector<Elem> HomSpace::coordinates(std::span<const Elem> flat) const {
  if (flat.size() != lay_.size()) throw ContractViolation("HomSpace::coordinates: length mismatch");
  auto c = reps_.coordinates(bound_.reduce(flat));
  if (!c) throw ContractViolation("HomSpace::coordinates: not a chain map");
  return *c;
}

std::vector<Elem> HomSpace::representative(std::span<const Elem> coords) const {
  if (coords.size() != dim()) throw ContractViolation("HomSpace::representative: wrong number of coordinates");
  const FieldSpec f = field();
  std::vector<Elem> out(lay_.size(), 0);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (!coords[k]) continue;
    const auto& r = reps_.basis()[k];
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(coords[k], r[j]));
  }
  return out;
}

ChainMap HomSpace::element(std::span<const Elem> coords) const {
  return ChainMap::trusted(src_, tgt_, representative(coords));
}

bool HomSpace::is_null_homotopic(std::span<const Elem> flat) const { return bound_.contains(flat); }

std::optional<Homotopy> HomSpace::homotopy_between(const ChainMap& f, const ChainMap& g) const {
  const FieldSpec fs = field();
  const auto diff = (f - g).flat();
  if (htpy_basis_.empty()) {
    for (auto e : diff)
      if (e) return std::nullopt;
    return Homotopy(src_, tgt_, std::vector<Elem>(BlockLayout(*src_, *tgt_, -1).size(), 0));
  }
  MatrixFp a(fs, lay_.size(), htpy_bound_.size());
  for (std::size_t k = 0; k < htpy_bound_.size(); ++k)
    for (std::size_t j = 0; j < lay_.size(); ++j) a.set(j, k, htpy_bound_[k][j]);
  auto s = solve(a, diff);
  if (!s) return std::nullopt;
  std::vector<Elem> out(htpy_basis_[0].size(), 0);
  for (std::size_t k = 0; k < htpy_basis_.size(); ++k)
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] = fs.add(out[j], fs.mul(s->particular[k], htpy_basis_[k][j]));
  return Homotopy(src_, tgt_, std::move(out));
}

std::vector<Elem> HomSpace::random_boundary(std::mt19937_64& rng) const {
  const FieldSpec f = field();
  std::vector<Elem> out(lay_.size(), 0);
  for (const auto& r : bound_.basis()) {
    const Elem c = static_cast<Elem>(rng() % f.p());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(c, r[j]));
  }
  return out;
}

}  // namespace perihall::cyclecat
