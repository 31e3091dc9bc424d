#include "perihall/error.hpp"
#include "perihall/hall/oracle.hpp"
#include "perihall/hall/value.hpp"

namespace perihall::hall {

namespace {

// Number of m x n matrices of rank r over F_q.
Integer rank_count(std::size_t m, std::size_t n, std::size_t r, std::uint32_t q) {
  Integer qm = 1, qn = 1, qr = 1;
  for (std::size_t i = 0; i < m; ++i) qm *= q;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  for (std::size_t i = 0; i < r; ++i) qr *= q;
  Integer num = 1, den = 1, qj = 1;
  for (std::size_t j = 0; j < r; ++j) {
    num *= (qm - qj) * (qn - qj);
    den *= qr - qj;
    qj *= q;
  }
  return num / den;
}

}  // namespace

GradedOracle::GradedOracle(int t, std::uint32_t q) : t_(t), q_(q) {
  if (t < 3 || t % 2 == 0) throw ContractViolation("GradedOracle: t must be odd and > 1");
  ffla::FieldSpec check(q);
}

PeriodicObject GradedOracle::object(const std::vector<std::size_t>& dims) const {
  if (dims.size() != static_cast<std::size_t>(t_)) throw ContractViolation("GradedOracle: need one dim per degree");
  std::vector<cyclecat::Stalk> s;
  for (int i = 0; i < t_; ++i)
    for (std::size_t k = 0; k < dims[i]; ++k) s.push_back({0, i});
  return PeriodicObject(std::move(s), t_);
}

std::vector<std::size_t> GradedOracle::degree_dims(const PeriodicObject& x) const {
  std::vector<std::size_t> d(t_, 0);
  for (const auto& s : x.summands()) ++d[((s.shift % t_) + t_) % t_];
  return d;
}

std::vector<PeriodicObject> GradedOracle::enumerate(std::size_t bound) const {
  std::vector<PeriodicObject> out;
  std::vector<std::size_t> d(t_, 0);
  for (;;) {
    out.push_back(object(d));
    int i = t_ - 1;
    for (; i >= 0; --i) {
      if (++d[i] <= bound) break;
      d[i] = 0;
    }
    if (i < 0) return out;
  }
}

std::size_t GradedOracle::hom_dim(const PeriodicObject& x, const PeriodicObject& y) {
  const auto a = degree_dims(x), b = degree_dims(y);
  std::size_t s = 0;
  for (int i = 0; i < t_; ++i) s += a[i] * b[i];
  return s;
}

const ConeHistogram& GradedOracle::cone_histogram(const PeriodicObject& x, const PeriodicObject& l) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(x, l);
  if (auto it = hist_.find(key); it != hist_.end()) return it->second;
  const auto a = degree_dims(x), b = degree_dims(l);
  ConeHistogram h;
  std::vector<std::size_t> r(t_, 0);
  for (;;) {
    Integer count = 1;
    std::vector<std::size_t> c(t_);
    for (int i = 0; i < t_; ++i) {
      const int prev = (i + t_ - 1) % t_;
      count *= rank_count(a[i], b[i], r[i], q_);
      c[i] = (b[i] - r[i]) + (a[prev] - r[prev]);
    }
    if (count > 0) h[object(c)] += static_cast<std::uint64_t>(count);
    int i = 0;
    for (; i < t_; ++i) {
      if (++r[i] <= std::min(a[i], b[i])) break;
      r[i] = 0;
    }
    if (i == t_) break;
  }
  return hist_.emplace(key, std::move(h)).first->second;
}

std::uint64_t GradedOracle::aut_order(const PeriodicObject& x) {
  const auto a = degree_dims(x);
  Integer n = 1;
  for (int i = 0; i < t_; ++i) n *= rank_count(a[i], a[i], a[i], q_);
  return static_cast<std::uint64_t>(n);
}

std::string GradedOracle::name(const PeriodicObject& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& st : x.summands()) {
    if (!s.empty()) s += "+";
    s += "S1";
    if (st.shift) s += "[" + std::to_string(st.shift) + "]";
  }
  return s;
}

}  // namespace perihall::hall
