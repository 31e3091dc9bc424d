#include "perihall/hall/value.hpp"

#include <cmath>

#include "perihall/error.hpp"

namespace perihall::hall {

namespace {

// r with r*r == q, or 0.
std::uint32_t exact_sqrt(std::uint32_t q) {
  auto r = static_cast<std::uint32_t>(std::lround(std::sqrt(static_cast<double>(q))));
  for (std::uint32_t c = r > 0 ? r - 1 : 0; c <= r + 1; ++c)
    if (c * c == q) return c;
  return 0;
}

Integer ipow(std::uint32_t q, long k) {
  Integer r = 1;
  for (long i = 0; i < k; ++i) r *= q;
  return r;
}

}  // namespace

std::string rational_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

HallValue::HallValue(std::uint32_t q, Rational a, Rational b) : q_(q), a_(std::move(a)), b_(std::move(b)) {
  if (q < 2) throw ContractViolation("HallValue: q must be at least 2");
  normalize();
}

void HallValue::normalize() {
  if (b_ != 0)
    if (auto r = exact_sqrt(q_)) {
      a_ += b_ * r;
      b_ = 0;
    }
}

HallValue HallValue::sqrt_q_power(std::uint32_t q, long k) {
  const long half = (k >= 0 ? k : -k) / 2;
  const bool odd = (k % 2) != 0;
  Rational m = Rational(ipow(q, half));
  if (k < 0) m = 1 / m;
  if (!odd) return HallValue(q, m);
  if (k > 0) return HallValue(q, 0, m);
  return HallValue(q, 0, m / q);
}

void HallValue::check(const HallValue& o) const {
  if (q_ != o.q_) throw ContractViolation("HallValue: mixing different q");
}

HallValue HallValue::operator+(const HallValue& o) const {
  check(o);
  return HallValue(q_, a_ + o.a_, b_ + o.b_);
}

HallValue HallValue::operator-(const HallValue& o) const {
  check(o);
  return HallValue(q_, a_ - o.a_, b_ - o.b_);
}

HallValue HallValue::operator-() const { return HallValue(q_, -a_, -b_); }

HallValue HallValue::operator*(const HallValue& o) const {
  check(o);
  return HallValue(q_, a_ * o.a_ + b_ * o.b_ * q_, a_ * o.b_ + b_ * o.a_);
}

HallValue HallValue::operator/(const HallValue& o) const {
  check(o);
  const Rational n = o.a_ * o.a_ - o.b_ * o.b_ * q_;
  if (n == 0) throw ContractViolation("HallValue: division by zero");
  return *this * HallValue(q_, o.a_ / n, -o.b_ / n);
}

std::string HallValue::to_string() const {
  const std::string root = "√" + std::to_string(q_);
  auto radical_term = [&](const Rational& b, bool leading) {
    std::string s;
    Rational m = b;
    if (m < 0) {
      s += leading ? "-" : " - ";
      m = -m;
    } else if (!leading) {
      s += " + ";
    }
    if (m == 1) return s + root;
    const std::string r = rational_string(m);
    if (r.find('/') != std::string::npos) return s + "(" + r + ")·" + root;
    return s + r + "·" + root;
  };
  if (b_ == 0) return rational_string(a_);
  if (a_ == 0) return radical_term(b_, true);
  return rational_string(a_) + radical_term(b_, false);
}

HallVector HallVector::basis(std::uint32_t q, const PeriodicObject& x, HallValue c) {
  HallVector v(q);
  v.add(x, c);
  return v;
}

HallValue HallVector::coefficient(const PeriodicObject& x) const {
  auto it = t_.find(x);
  return it == t_.end() ? HallValue::zero(q_) : it->second;
}

void HallVector::add(const PeriodicObject& x, const HallValue& c) {
  if (c.q() != q_) throw ContractViolation("HallVector: mixing different q");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

HallVector HallVector::operator+(const HallVector& o) const {
  HallVector r = *this;
  for (const auto& [x, c] : o.t_) r.add(x, c);
  return r;
}

HallVector HallVector::operator-(const HallVector& o) const {
  HallVector r = *this;
  for (const auto& [x, c] : o.t_) r.add(x, -c);
  return r;
}

HallVector HallVector::scaled(const HallValue& c) const {
  HallVector r(q_);
  for (const auto& [x, v] : t_) r.add(x, v * c);
  return r;
}

}  // namespace perihall::hall
