#pragma once

// Normal form of an object of a periodic category: a multiset of shifted
// indecomposables, kept sorted by (shift, class).

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "perihall/repcat/catalog.hpp"

namespace perihall::cyclecat {

using repcat::ClassId;

struct Stalk {
  ClassId cls;
  int shift;
  auto operator<=>(const Stalk& o) const {
    if (auto c = shift <=> o.shift; c != 0) return c;
    return cls <=> o.cls;
  }
  bool operator==(const Stalk&) const = default;
};

class PeriodicObject {
 public:
  PeriodicObject() = default;
  // Shifts are reduced mod period.
  PeriodicObject(std::vector<Stalk> summands, int period);
  static PeriodicObject stalk(ClassId cls, int shift, int period) { return PeriodicObject({{cls, shift}}, period); }
  static PeriodicObject module(const std::vector<ClassId>& ids, int shift, int period);

  const std::vector<Stalk>& summands() const { return s_; }
  bool is_zero() const { return s_.empty(); }
  std::size_t size() const { return s_.size(); }
  PeriodicObject shifted(int n, int period) const;
  PeriodicObject operator+(const PeriodicObject& o) const;
  // Sorted class ids of the summands living in the given shift.
  std::vector<ClassId> part(int shift) const;

  auto operator<=>(const PeriodicObject&) const = default;
  bool operator==(const PeriodicObject&) const = default;

 private:
  std::vector<Stalk> s_;
};

}  // namespace perihall::cyclecat
