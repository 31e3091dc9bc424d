#include "perihall/repcat/ext.hpp"

#include "perihall/error.hpp"

namespace perihall::repcat {

namespace {

std::vector<Elem> along_path(const Rep& x, std::vector<Elem> v, const Path& p) {
  for (auto a : p.arrows) v = x.map(a).apply_row(v);
  return v;
}

Rep sum_of_projectives(const Rep& like, const std::vector<std::size_t>& tops) {
  if (tops.empty()) return Rep::zero(like.quiver_ptr(), like.field());
  std::vector<Rep> parts;
  for (auto v : tops) parts.push_back(Rep::projective(like.quiver_ptr(), like.field(), v));
  return direct_sum(parts);
}

// Generators of the top of x: per vertex, unit vectors completing the span of
// the images of incoming arrows.
std::vector<std::pair<std::size_t, std::vector<Elem>>> top_generators(const Rep& x) {
  std::vector<std::pair<std::size_t, std::vector<Elem>>> out;
  const auto& q = x.quiver();
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    ffla::RowSpace radical(x.field(), x.dim(v));
    for (auto a : q.arrows_into(v))
      for (std::size_t i = 0; i < x.map(a).rows(); ++i) radical.add(x.map(a).row(i));
    for (auto c : radical.free_columns()) {
      std::vector<Elem> e(x.dim(v), 0);
      e[c] = 1;
      out.emplace_back(v, std::move(e));
    }
  }
  return out;
}

// The map sum_k P_{v_k} -> y sending the trivial path of summand k to gens[k].
RepMap map_from_projectives(const Rep& p, const Rep& y,
                            const std::vector<std::pair<std::size_t, std::vector<Elem>>>& gens) {
  const auto& q = y.quiver();
  std::vector<MatrixFp> comps;
  for (std::size_t w = 0; w < q.num_vertices(); ++w) comps.emplace_back(y.field(), p.dim(w), y.dim(w));
  std::vector<std::size_t> row(q.num_vertices(), 0);
  for (const auto& [v, g] : gens) {
    for (const auto& path : q.paths_from(v)) {
      auto img = along_path(y, g, path);
      for (std::size_t j = 0; j < img.size(); ++j) comps[path.end].set(row[path.end], j, img[j]);
      ++row[path.end];
    }
  }
  return RepMap(p, y, std::move(comps));
}

}  // namespace

ProjectiveResolution proj_resolution(const Rep& x) {
  ProjectiveResolution r{x, x, x, RepMap::identity(x), RepMap::identity(x), {}, {}};
  auto gens0 = top_generators(x);
  for (const auto& g : gens0) r.p0_tops.push_back(g.first);
  r.p0 = sum_of_projectives(x, r.p0_tops);
  r.pi = map_from_projectives(r.p0, x, gens0);
  SubRep k = kernel(r.pi);
  auto kgens = top_generators(k.rep);
  std::vector<std::pair<std::size_t, std::vector<Elem>>> gens1;
  for (auto& [w, g] : kgens) {
    r.p1_tops.push_back(w);
    gens1.emplace_back(w, k.inclusion.component(w).apply_row(g));
  }
  r.p1 = sum_of_projectives(x, r.p1_tops);
  r.iota = map_from_projectives(r.p1, r.p0, gens1);
  for (std::size_t v = 0; v < x.dims().size(); ++v)
    if (ffla::rank(r.iota.component(v)) != r.p1.dim(v))
      throw InternalError("proj_resolution: syzygy map is not injective");
  for (std::size_t v = 0; v < x.dims().size(); ++v)
    if (ffla::rank(r.pi.component(v)) != x.dim(v)) throw InternalError("proj_resolution: cover is not surjective");
  return r;
}

ExtSpace::ExtSpace(const Rep& x, const Rep& y)
    : res_(proj_resolution(x)), y_(y), boundaries_(x.field(), 0) {
  if (!x.same_category(y)) throw ContractViolation("ExtSpace: quiver or field mismatch");
  h1_ = hom_basis(res_.p1, y);
  for (const auto& h : h1_) h1_flat_.push_back(h.flat());
  boundaries_ = ffla::RowSpace(x.field(), h1_.size());
  for (const auto& g : hom_basis(res_.p0, y)) {
    auto c = combination_of(h1_, res_.iota * g);
    if (!c) throw InternalError("ExtSpace: restriction leaves Hom(P1, y)");
    boundaries_.add(*c);
  }
  free_ = boundaries_.free_columns();
}

std::vector<Elem> ExtSpace::coordinates(const RepMap& cocycle) const {
  auto c = combination_of(h1_, cocycle);
  if (!c) throw ContractViolation("ExtSpace: not a map P1 -> y");
  auto r = boundaries_.reduce(*c);
  std::vector<Elem> out;
  for (auto j : free_) out.push_back(r[j]);
  return out;
}

RepMap ExtSpace::representative(std::span<const Elem> coords) const {
  if (coords.size() != free_.size()) throw ContractViolation("ExtSpace: coordinate length mismatch");
  RepMap r = RepMap::zero(res_.p1, y_);
  for (std::size_t i = 0; i < free_.size(); ++i)
    if (coords[i]) r = r + h1_[free_[i]].scaled(coords[i]);
  return r;
}

ExtClass::ExtClass(std::shared_ptr<const ExtSpace> space, std::vector<Elem> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
  if (coords_.size() != space_->dim()) throw ContractViolation("ExtClass: coordinate length mismatch");
}

bool ExtClass::is_zero() const {
  for (auto c : coords_)
    if (c) return false;
  return true;
}

ExtClass ExtClass::scaled(Elem s) const {
  auto c = coords_;
  const FieldSpec f = source().field();
  for (auto& e : c) e = f.mul(e, s);
  return ExtClass(space_, std::move(c));
}

ExtClass ExtClass::operator+(const ExtClass& o) const {
  if (o.space_ != space_) throw ContractViolation("ExtClass: sum across different spaces");
  auto c = coords_;
  const FieldSpec f = source().field();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(c[i], o.coords_[i]);
  return ExtClass(space_, std::move(c));
}

std::vector<ExtClass> ext1_basis(const Rep& x, const Rep& y) {
  auto space = std::make_shared<const ExtSpace>(x, y);
  const long expect = static_cast<long>(hom_dim(x, y)) - euler_form(x, y);
  if (expect != static_cast<long>(space->dim())) throw InternalError("ext1_basis: Euler identity violated");
  std::vector<ExtClass> out;
  for (std::size_t i = 0; i < space->dim(); ++i) {
    std::vector<Elem> c(space->dim(), 0);
    c[i] = 1;
    out.emplace_back(space, std::move(c));
  }
  return out;
}

std::size_t ext1_dim(const Rep& x, const Rep& y) { return ExtSpace(x, y).dim(); }

ExtClass ext_class_of(std::shared_ptr<const ExtSpace> space, const RepMap& cocycle) {
  auto c = space->coordinates(cocycle);
  return ExtClass(std::move(space), std::move(c));
}

ExtClass ext_transport(const ExtClass& e, const RepMap& f, TransportSide side) {
  if (side == TransportSide::Pushforward) {
    if (!(f.source() == e.target())) throw ContractViolation("ext_transport: map does not start at the target");
    auto space = std::make_shared<const ExtSpace>(e.source(), f.target());
    return ext_class_of(space, e.cocycle() * f);
  }
  if (!(f.target() == e.source())) throw ContractViolation("ext_transport: map does not end at the source");
  auto space = std::make_shared<const ExtSpace>(f.source(), e.target());
  const auto& r = e.space().resolution();
  const auto& r2 = space->resolution();
  // lift f to f0: P0' -> P0 with f0 pi = pi' f
  auto b = hom_basis(r2.p0, r.p0);
  std::vector<RepMap> bp;
  for (const auto& m : b) bp.push_back(m * r.pi);
  auto c = combination_of(bp, r2.pi * f);
  if (!c) throw InternalError("ext_transport: no lift through the projective cover");
  RepMap f0 = linear_combination(r2.p0, r.p0, b, *c);
  // then f1: P1' -> P1 with f1 iota = iota' f0
  RepMap target = r2.iota * f0;
  std::vector<MatrixFp> comps;
  for (std::size_t v = 0; v < f.components().size(); ++v) {
    auto s = left_solve(r.iota.component(v), target.component(v));
    if (!s) throw InternalError("ext_transport: syzygy lift failed");
    comps.push_back(std::move(*s));
  }
  RepMap f1(r2.p1, r.p1, std::move(comps));
  return ext_class_of(space, f1 * e.cocycle());
}

Extension extension_total(const ExtClass& e) {
  const auto& r = e.space().resolution();
  const Rep& y = e.target();
  const FieldSpec fs = y.field();
  RepMap c = e.cocycle();
  Rep sum = direct_sum(r.p0, y);
  std::vector<MatrixFp> psi;
  for (std::size_t v = 0; v < y.dims().size(); ++v) psi.push_back(ffla::hstack(r.iota.component(v), -c.component(v)));
  RepMap psi_map(r.p1, sum, std::move(psi));
  Quotient q = cokernel(psi_map);
  std::vector<MatrixFp> inc, proj;
  for (std::size_t v = 0; v < y.dims().size(); ++v) {
    MatrixFp into(fs, y.dim(v), r.p0.dim(v) + y.dim(v));
    into.set_block(0, r.p0.dim(v), MatrixFp::identity(fs, y.dim(v)));
    inc.push_back(into * q.projection.component(v));
    MatrixFp down = ffla::vstack(r.pi.component(v), MatrixFp(fs, y.dim(v), e.source().dim(v)));
    proj.push_back(q.section[v] * down);
  }
  Extension out{q.rep, RepMap(y, q.rep, std::move(inc)), RepMap(q.rep, e.source(), std::move(proj))};
  return out;
}

ExtClass extension_class(const RepMap& inclusion, const RepMap& projection) {
  const Rep& x = projection.target();
  const Rep& y = inclusion.source();
  auto space = std::make_shared<const ExtSpace>(x, y);
  const auto& r = space->resolution();
  auto b = hom_basis(r.p0, projection.source());
  std::vector<RepMap> bp;
  for (const auto& m : b) bp.push_back(m * projection);
  auto c = combination_of(bp, r.pi);
  if (!c) throw ContractViolation("extension_class: projection is not surjective");
  RepMap h = linear_combination(r.p0, projection.source(), b, *c);
  RepMap ih = r.iota * h;
  std::vector<MatrixFp> comps;
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    auto s = left_solve(inclusion.component(v), ih.component(v));
    if (!s) throw ContractViolation("extension_class: sequence is not exact in the middle");
    comps.push_back(std::move(*s));
  }
  return ext_class_of(space, RepMap::trusted(r.p1, y, std::move(comps)));
}

}  // namespace perihall::repcat
