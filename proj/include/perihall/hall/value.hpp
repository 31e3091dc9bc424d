#pragma once

// Exact scalars a + b sqrt(q) with rational a, b, and finitely supported
// combinations of basis symbols u_[X].

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>

#include "perihall/cyclecat/periodic.hpp"

namespace perihall::hall {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

class HallValue {
 public:
  explicit HallValue(std::uint32_t q = 2, Rational a = 0, Rational b = 0);
  static HallValue zero(std::uint32_t q) { return HallValue(q); }
  static HallValue one(std::uint32_t q) { return HallValue(q, 1); }
  // q^(k/2).
  static HallValue sqrt_q_power(std::uint32_t q, long k);

  std::uint32_t q() const { return q_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // Exactly one of a, b is nonzero.
  bool is_monomial() const { return (a_ == 0) != (b_ == 0); }

  HallValue operator+(const HallValue& o) const;
  HallValue operator-(const HallValue& o) const;
  HallValue operator-() const;
  HallValue operator*(const HallValue& o) const;
  HallValue operator/(const HallValue& o) const;
  HallValue& operator+=(const HallValue& o) { return *this = *this + o; }
  HallValue& operator-=(const HallValue& o) { return *this = *this - o; }
  HallValue& operator*=(const HallValue& o) { return *this = *this * o; }
  bool operator==(const HallValue& o) const { return q_ == o.q_ && a_ == o.a_ && b_ == o.b_; }

  // "0", "3/2", "√2", "(3/2)·√2", "-√3", "1 + (1/2)·√2", ...
  std::string to_string() const;

 private:
  void check(const HallValue& o) const;
  void normalize();
  std::uint32_t q_;
  Rational a_, b_;
};

std::string rational_string(const Rational& r);

using cyclecat::PeriodicObject;

// Finitely supported map basis symbol -> coefficient, never storing zeros.
class HallVector {
 public:
  explicit HallVector(std::uint32_t q = 2) : q_(q) {}
  static HallVector basis(std::uint32_t q, const PeriodicObject& x, HallValue c);

  std::uint32_t q() const { return q_; }
  const std::map<PeriodicObject, HallValue>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  HallValue coefficient(const PeriodicObject& x) const;
  void add(const PeriodicObject& x, const HallValue& c);

  HallVector operator+(const HallVector& o) const;
  HallVector operator-(const HallVector& o) const;
  HallVector scaled(const HallValue& c) const;
  bool operator==(const HallVector& o) const { return t_ == o.t_; }

 private:
  std::uint32_t q_;
  std::map<PeriodicObject, HallValue> t_;
};

}  // namespace perihall::hall
