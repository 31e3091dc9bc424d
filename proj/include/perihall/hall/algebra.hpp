#pragma once

// Structure constants and multiplication of the Hall algebra of a t-periodic
// category (t odd), over any CategoryOracle.
//
// With {A,B} = prod_{i=1..t} |Hom(A[i],B)|^((-1)^i):
//   F_{XY}^L = |(X,L)_Y| / |Aut X| * ({X,L}/{X,X})^(1/2)
//            = |(L,Y)_{X[1]}| / |Aut Y| * ({L,Y}/{Y,Y})^(1/2)
// and u_X * u_Y = sum_L F_{XY}^L u_L.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "perihall/hall/oracle.hpp"
#include "perihall/hall/value.hpp"

namespace perihall::hall {

struct Triple {
  PeriodicObject x, y, l;
  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

struct Expressions {
  HallValue via_source;  // |(X,L)_Y| form
  HallValue via_target;  // |(L,Y)_{X[1]}| form
};

class HallAlgebra {
 public:
  explicit HallAlgebra(std::shared_ptr<CategoryOracle> oracle);

  CategoryOracle& oracle() const { return *oracle_; }
  std::uint32_t q() const { return oracle_->q(); }
  int period() const { return oracle_->period(); }

  // log_q {a,b}.
  long bracket_exponent(const PeriodicObject& a, const PeriodicObject& b);
  Expressions expressions(const PeriodicObject& x, const PeriodicObject& y, const PeriodicObject& l);
  // via_source, plus 1 on the fault target; never asserts.
  HallValue source_value(const PeriodicObject& x, const PeriodicObject& y, const PeriodicObject& l);
  // Throws InternalError if the two expressions differ, unless a fault is
  // injected.  The fault target gets +1.
  HallValue hall_number(const PeriodicObject& x, const PeriodicObject& y, const PeriodicObject& l);
  // The classes L with F_{XY}^L != 0 candidates: cones of Hom(Y[-1], X).
  std::vector<PeriodicObject> support(const PeriodicObject& x, const PeriodicObject& y);

  HallVector unit() const { return HallVector::basis(q(), PeriodicObject(), HallValue::one(q())); }
  HallVector basis(const PeriodicObject& x) const { return HallVector::basis(q(), x, HallValue::one(q())); }
  HallVector multiply(const PeriodicObject& x, const PeriodicObject& y);
  HallVector multiply(const HallVector& a, const HallVector& b);

  void inject_fault(std::optional<Triple> target) { fault_ = std::move(target); }
  const std::optional<Triple>& fault() const { return fault_; }
  // Every triple whose expressions have been computed, in order.
  std::vector<Triple> computed() const;

 private:
  std::shared_ptr<CategoryOracle> oracle_;
  std::optional<Triple> fault_;
  mutable std::mutex mutex_;
  std::map<Triple, Expressions> cache_;
  std::map<std::pair<PeriodicObject, PeriodicObject>, long> brackets_;
};

}  // namespace perihall::hall
