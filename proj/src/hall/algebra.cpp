#include "perihall/hall/algebra.hpp"

#include "perihall/error.hpp"

namespace perihall::hall {

HallAlgebra::HallAlgebra(std::shared_ptr<CategoryOracle> oracle) : oracle_(std::move(oracle)) {
  if (!oracle_) throw ContractViolation("HallAlgebra: null oracle");
  const int t = oracle_->period();
  if (t <= 1 || t % 2 == 0) throw ContractViolation("HallAlgebra: period must be odd and > 1");
}

long HallAlgebra::bracket_exponent(const PeriodicObject& a, const PeriodicObject& b) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = brackets_.find({a, b}); it != brackets_.end()) return it->second;
  }
  long e = 0;
  for (int i = 1; i <= period(); ++i) {
    const long d = static_cast<long>(oracle_->hom_dim(oracle_->shift(a, i), b));
    e += (i % 2 == 0) ? d : -d;
  }
  std::lock_guard lock(mutex_);
  brackets_.emplace(std::make_pair(a, b), e);
  return e;
}

Expressions HallAlgebra::expressions(const PeriodicObject& x, const PeriodicObject& y, const PeriodicObject& l) {
  const Triple key{x, y, l};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto count = [&](const ConeHistogram& h, const PeriodicObject& c) -> std::uint64_t {
    auto it = h.find(c);
    return it == h.end() ? 0 : it->second;
  };
  const std::uint32_t qq = q();
  const std::uint64_t ca = count(oracle_->cone_histogram(x, l), y);
  const long ea = bracket_exponent(x, l) - bracket_exponent(x, x);
  const std::uint64_t cb = count(oracle_->cone_histogram(l, y), oracle_->shift(x, 1));
  const long eb = bracket_exponent(l, y) - bracket_exponent(y, y);
  Expressions e{HallValue(qq, Rational(ca, oracle_->aut_order(x))) * HallValue::sqrt_q_power(qq, ea),
                HallValue(qq, Rational(cb, oracle_->aut_order(y))) * HallValue::sqrt_q_power(qq, eb)};
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, e).first->second;
}

HallValue HallAlgebra::source_value(const PeriodicObject& x, const PeriodicObject& y, const PeriodicObject& l) {
  const auto e = expressions(x, y, l);
  const bool faulty = fault_ && *fault_ == Triple{x, y, l};
  return faulty ? e.via_source + HallValue::one(q()) : e.via_source;
}

HallValue HallAlgebra::hall_number(const PeriodicObject& x, const PeriodicObject& y, const PeriodicObject& l) {
  const auto e = expressions(x, y, l);
  if (!fault_ && !(e.via_source == e.via_target))
    throw InternalError("structure constant expressions disagree for (" + oracle_->name(x) + ", " + oracle_->name(y) +
                        ", " + oracle_->name(l) + "): " + e.via_source.to_string() + " vs " +
                        e.via_target.to_string());
  return source_value(x, y, l);
}

std::vector<PeriodicObject> HallAlgebra::support(const PeriodicObject& x, const PeriodicObject& y) {
  std::vector<PeriodicObject> out;
  for (const auto& [l, n] : oracle_->cone_histogram(oracle_->shift(y, -1), x)) out.push_back(l);
  return out;
}

HallVector HallAlgebra::multiply(const PeriodicObject& x, const PeriodicObject& y) {
  HallVector out(q());
  auto ls = support(x, y);
  if (fault_ && fault_->x == x && fault_->y == y) {
    bool present = false;
    for (const auto& l : ls) present = present || l == fault_->l;
    if (!present) ls.push_back(fault_->l);
  }
  for (const auto& l : ls) out.add(l, hall_number(x, y, l));
  return out;
}

HallVector HallAlgebra::multiply(const HallVector& a, const HallVector& b) {
  HallVector out(q());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) out = out + multiply(x, y).scaled(cx * cy);
  return out;
}

std::vector<Triple> HallAlgebra::computed() const {
  std::lock_guard lock(mutex_);
  std::vector<Triple> out;
  for (const auto& [k, v] : cache_) out.push_back(k);
  return out;
}

}  // namespace perihall::hall
