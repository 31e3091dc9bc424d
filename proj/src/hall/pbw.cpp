#include "perihall/hall/pbw.hpp"

#include "perihall/error.hpp"

namespace perihall::hall {

namespace {

cyclecat::OrbitCategory& orbit_category(HallAlgebra& alg) {
  auto* o = dynamic_cast<OrbitOracle*>(&alg.oracle());
  if (!o) throw ContractViolation("ordered-product expansion needs the orbit category backend");
  return o->category();
}

HallVector ordered_product(HallAlgebra& alg, const PbwKey& k) {
  auto z = PeriodicObject::module(k[0], 2, 3);
  auto y = PeriodicObject::module(k[1], 1, 3);
  auto x = PeriodicObject::module(k[2], 0, 3);
  return alg.multiply(alg.multiply(alg.basis(z), alg.basis(y)), alg.basis(x));
}

const PbwExpression& expand(HallAlgebra& alg, cyclecat::OrbitCategory& cat, const PeriodicObject& m,
                            std::map<PeriodicObject, PbwExpression>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  const PbwKey key{m.part(2), m.part(1), m.part(0)};
  const HallVector p = ordered_product(alg, key);
  const HallValue lead = p.coefficient(m);
  if (lead.is_zero()) throw InternalError("ordered product misses its leading term " + cat.name(m));
  // u_m = (p - sum_{n != m} c_n u_n) / lead
  PbwExpression e;
  const HallValue inv = HallValue::one(alg.q()) / lead;
  e[key] = inv;
  for (const auto& [n, c] : p.terms()) {
    if (n == m) continue;
    if (!dim_order_less(cat, n, m))
      throw InternalError("ordered product of " + cat.name(m) + " has a term " + cat.name(n) + " not below it");
    for (const auto& [k2, c2] : expand(alg, cat, n, memo)) {
      auto& slot = e.try_emplace(k2, HallValue::zero(alg.q())).first->second;
      slot -= c * c2 * inv;
    }
  }
  for (auto it = e.begin(); it != e.end();) it = it->second.is_zero() ? e.erase(it) : std::next(it);
  return memo.emplace(m, std::move(e)).first->second;
}

}  // namespace

bool dim_order_less(const cyclecat::OrbitCategory& cat, const PeriodicObject& n, const PeriodicObject& m) {
  bool strict = false;
  for (int s = 0; s < 3; ++s) {
    const auto a = cat.catalog().module_dims(n.part(s));
    const auto b = cat.catalog().module_dims(m.part(s));
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (a[v] > b[v]) return false;
      if (a[v] < b[v]) strict = true;
    }
  }
  return strict;
}

PbwExpression pbw_expand(HallAlgebra& alg, const PeriodicObject& m) {
  auto& cat = orbit_category(alg);
  std::map<PeriodicObject, PbwExpression> memo;
  return expand(alg, cat, m, memo);
}

HallVector pbw_evaluate(HallAlgebra& alg, const PbwExpression& e) {
  HallVector out(alg.q());
  for (const auto& [k, c] : e) out = out + ordered_product(alg, k).scaled(c);
  return out;
}

std::string to_string(HallAlgebra& alg, const PbwExpression& e) {
  auto& cat = orbit_category(alg);
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : e) {
    if (!s.empty()) s += " + ";
    std::string factors;
    const char* labels[] = {"u^[2]_", "u^[1]_", "u^[0]_"};
    for (int i = 0; i < 3; ++i) {
      if (k[i].empty()) continue;
      if (!factors.empty()) factors += " · ";
      factors += labels[i] + cat.name(PeriodicObject::module(k[i], 0, 3));
    }
    if (factors.empty()) factors = "1";
    s += "(" + c.to_string() + ") · " + factors;
  }
  return s;
}

}  // namespace perihall::hall
