#include "perihall/cyclecat/periodic.hpp"

#include <algorithm>

#include "perihall/error.hpp"

namespace perihall::cyclecat {

PeriodicObject::PeriodicObject(std::vector<Stalk> summands, int period) : s_(std::move(summands)) {
  if (period < 1) throw ContractViolation("PeriodicObject: period must be positive");
  for (auto& s : s_) s.shift = ((s.shift % period) + period) % period;
  std::sort(s_.begin(), s_.end());
}

PeriodicObject PeriodicObject::module(const std::vector<ClassId>& ids, int shift, int period) {
  std::vector<Stalk> s;
  for (auto id : ids) s.push_back({id, shift});
  return PeriodicObject(std::move(s), period);
}

PeriodicObject PeriodicObject::shifted(int n, int period) const {
  auto s = s_;
  for (auto& x : s) x.shift += n;
  return PeriodicObject(std::move(s), period);
}

PeriodicObject PeriodicObject::operator+(const PeriodicObject& o) const {
  PeriodicObject r;
  r.s_ = s_;
  r.s_.insert(r.s_.end(), o.s_.begin(), o.s_.end());
  std::sort(r.s_.begin(), r.s_.end());
  return r;
}

std::vector<ClassId> PeriodicObject::part(int shift) const {
  std::vector<ClassId> out;
  for (const auto& s : s_)
    if (s.shift == shift) out.push_back(s.cls);
  return out;
}

}  // namespace perihall::cyclecat
