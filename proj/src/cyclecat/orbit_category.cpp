#include "perihall/cyclecat/orbit_category.hpp"

#include <sstream>

#include "perihall/repcat/ext.hpp"

namespace perihall::cyclecat {

namespace {

ComplexPtr zero_complex(const repcat::QuiverPtr& q, FieldSpec f) {
  Rep z = Rep::zero(q, f);
  return std::make_shared<const CycleComplex>(
      CycleComplex::Trusted{}, std::array<Rep, kPeriod>{z, z, z},
      std::array<RepMap, kPeriod>{RepMap::zero(z, z), RepMap::zero(z, z), RepMap::zero(z, z)});
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

OrbitCategory::OrbitCategory(std::shared_ptr<repcat::Catalog> catalog) : catalog_(std::move(catalog)) {
  if (!catalog_) throw ContractViolation("OrbitCategory: null catalog");
}

PeriodicObject OrbitCategory::object(const std::vector<ClassId>& shift0, const std::vector<ClassId>& shift1,
                                     const std::vector<ClassId>& shift2) const {
  std::vector<Stalk> s;
  for (auto c : shift0) s.push_back({c, 0});
  for (auto c : shift1) s.push_back({c, 1});
  for (auto c : shift2) s.push_back({c, 2});
  return PeriodicObject(std::move(s), kPeriod);
}

ComplexPtr OrbitCategory::base_wrap(ClassId cls) {
  std::lock_guard lock(mutex_);
  if (auto it = base_.find(cls); it != base_.end()) return it->second;
  const auto res = repcat::proj_resolution(catalog_->representative(cls));
  Rep z = Rep::zero(quiver(), field());
  SummandBlock b;
  b.stalk = {cls, 0};
  const std::size_t n = quiver()->num_vertices();
  for (int i = 0; i < kPeriod; ++i) b.offset[i].assign(n, 0);
  b.dims = {res.p0.dims(), z.dims(), res.p1.dims()};
  auto c = std::make_shared<const CycleComplex>(
      std::array<Rep, kPeriod>{res.p0, z, res.p1},
      std::array<RepMap, kPeriod>{RepMap::zero(res.p0, z), RepMap::zero(z, res.p1), res.iota},
      std::vector<SummandBlock>{b});
  base_.emplace(cls, c);
  return c;
}

ComplexPtr OrbitCategory::wrap(const PeriodicObject& x) {
  std::lock_guard lock(mutex_);
  if (auto it = wraps_.find(x); it != wraps_.end()) return it->second;
  ComplexPtr c;
  if (x.is_zero()) {
    c = zero_complex(quiver(), field());
  } else {
    std::vector<ComplexPtr> parts;
    for (const auto& s : x.summands()) parts.push_back(s.shift ? shift(base_wrap(s.cls), s.shift) : base_wrap(s.cls));
    c = parts.size() == 1 ? parts[0] : direct_sum(parts);
  }
  wraps_.emplace(x, c);
  return c;
}

ComplexPtr OrbitCategory::shifted_wrap(const PeriodicObject& x, int n) {
  std::lock_guard lock(mutex_);
  n = pos(n);
  if (n == 0) return wrap(x);
  auto key = std::make_pair(x, n);
  if (auto it = shifted_.find(key); it != shifted_.end()) return it->second;
  auto c = shift(wrap(x), n);
  shifted_.emplace(key, c);
  return c;
}

PeriodicObject OrbitCategory::normalize(const CycleComplex& c) {
  const auto k1 = repcat::kernel(c.differential(0));
  const auto k2 = repcat::kernel(c.differential(1));
  const auto h = repcat::cokernel(repcat::corestrict(c.differential(0), k2));
  const auto cq = repcat::cokernel(c.differential(1));
  const RepMap g = repcat::corestrict(c.differential(2), k1);
  std::vector<MatrixFp> comps;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) comps.push_back(cq.section[v] * g.component(v));
  const RepMap f(cq.rep, k1.rep, std::move(comps));
  const auto fac = repcat::factorize(f);
  return object(catalog_->classify(fac.cokernel.rep), catalog_->classify(fac.kernel.rep),
                catalog_->classify(h.rep));
}

std::shared_ptr<const HomSpace> OrbitCategory::hom(const ComplexPtr& a, const ComplexPtr& b) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(a.get(), b.get());
  if (auto it = homs_.find(key); it != homs_.end()) return it->second.space;
  auto s = std::make_shared<const HomSpace>(a, b);
  homs_.emplace(key, HomEntry{a, b, s});
  return s;
}

std::size_t OrbitCategory::module_hom_dim(ClassId a, ClassId b) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(a, b);
  if (auto it = mhom_.find(key); it != mhom_.end()) return it->second;
  const auto d = repcat::hom_dim(catalog_->representative(a), catalog_->representative(b));
  mhom_.emplace(key, d);
  return d;
}

std::size_t OrbitCategory::module_ext_dim(ClassId a, ClassId b) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(a, b);
  if (auto it = mext_.find(key); it != mext_.end()) return it->second;
  const auto d = repcat::ext1_dim(catalog_->representative(a), catalog_->representative(b));
  mext_.emplace(key, d);
  return d;
}

std::size_t OrbitCategory::hom_dim_covering(const PeriodicObject& x, const PeriodicObject& y) {
  std::size_t total = 0;
  for (const auto& s : x.summands())
    for (const auto& t : y.summands()) {
      const int r = pos(t.shift - s.shift);
      if (r == 0) total += module_hom_dim(s.cls, t.cls);
      else if (r == 1) total += module_ext_dim(s.cls, t.cls);
    }
  return total;
}

PeriodicObject OrbitCategory::cone_class(const ChainMap& u) {
  return normalize(ConeBuilder(u.source(), u.target()).build(u.flat()));
}

const ConeHistogram& OrbitCategory::cone_histogram(const PeriodicObject& x, const PeriodicObject& l) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(x, l);
  if (auto it = hist_.find(key); it != hist_.end()) return it->second;
  auto a = wrap(x), b = wrap(l);
  auto space = hom(a, b);
  ConeBuilder builder(a, b);
  ConeHistogram h;
  space->for_each(budget(), [&](const std::vector<Elem>&, const std::vector<Elem>& flat) {
    ++h[normalize(builder.build(flat))];
    return true;
  });
  return hist_.emplace(key, std::move(h)).first->second;
}

std::uint64_t OrbitCategory::aut_order(const PeriodicObject& x) {
  const auto& h = cone_histogram(x, x);
  auto it = h.find(PeriodicObject());
  return it == h.end() ? 0 : it->second;
}

ComplexPtr OrbitCategory::restricted(const ComplexPtr& c, const std::vector<std::size_t>& summands) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(c.get(), summands);
  if (auto it = restricted_.find(key); it != restricted_.end()) return it->second.sub;
  auto sub = restrict_complex(c, summands);
  restricted_.emplace(key, RestrictEntry{c, sub});
  return sub;
}

bool OrbitCategory::is_radical(const ChainMap& u) {
  const auto& sl = u.source()->layout();
  const auto& tl = u.target()->layout();
  if ((sl.empty() && !u.source()->is_zero()) || (tl.empty() && !u.target()->is_zero()))
    throw ContractViolation("is_radical: complexes without summand layout");
  for (std::size_t k = 0; k < sl.size(); ++k)
    for (std::size_t l = 0; l < tl.size(); ++l) {
      if (!(sl[k].stalk == tl[l].stalk)) continue;
      auto part = u.restricted({k}, {l}, restricted(u.source(), {k}), restricted(u.target(), {l}));
      if (part.is_zero()) continue;
      if (is_iso(part)) return false;
    }
  return true;
}

std::vector<PeriodicObject> OrbitCategory::enumerate(const repcat::DimVector& bound) {
  const auto mods = catalog_->enumerate_modules(bound);
  std::vector<PeriodicObject> out;
  out.reserve(mods.size() * mods.size() * mods.size());
  for (const auto& a : mods)
    for (const auto& b : mods)
      for (const auto& c : mods) out.push_back(object(a.summands, b.summands, c.summands));
  return out;
}

std::string OrbitCategory::name(const PeriodicObject& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& t : x.summands()) {
    if (!s.empty()) s += "+";
    s += catalog_->name(t.cls);
    if (t.shift) s += "[" + std::to_string(t.shift) + "]";
  }
  return s;
}

PeriodicObject OrbitCategory::parse(const std::string& text) const {
  const std::string all = trim(text);
  if (all == "0" || all.empty()) return {};
  std::vector<Stalk> out;
  std::stringstream ss(all);
  std::string term;
  while (std::getline(ss, term, '+')) {
    term = trim(term);
    int shift = 0;
    std::string nm = term;
    if (auto b = term.find('['); b != std::string::npos) {
      if (term.back() != ']') throw ContractViolation("object name '" + term + "': expected ']'");
      const std::string digits = term.substr(b + 1, term.size() - b - 2);
      if (digits.empty() || digits.find_first_not_of("-0123456789") != std::string::npos)
        throw ContractViolation("object name '" + term + "': bad shift");
      shift = std::stoi(digits);
      nm = term.substr(0, b);
    }
    auto id = catalog_->by_name(nm);
    if (!id) throw ContractViolation("unknown class '" + nm + "'");
    out.push_back({*id, shift});
  }
  return PeriodicObject(std::move(out), kPeriod);
}

repcat::DimVector OrbitCategory::k0_mod2(const PeriodicObject& x) const {
  repcat::DimVector d(quiver()->num_vertices(), 0);
  for (const auto& s : x.summands()) {
    const auto e = catalog_->dims(s.cls);
    for (std::size_t v = 0; v < d.size(); ++v) d[v] = (d[v] + e[v]) % 2;
  }
  return d;
}

}  // namespace perihall::cyclecat
