#pragma once

// What the structure-constant formula needs from a t-periodic category.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "perihall/cyclecat/orbit_category.hpp"

namespace perihall::hall {

using cyclecat::ConeHistogram;
using cyclecat::PeriodicObject;

class CategoryOracle {
 public:
  virtual ~CategoryOracle() = default;
  virtual int period() const = 0;
  virtual std::uint32_t q() const = 0;
  virtual PeriodicObject shift(const PeriodicObject& x, int n) const { return x.shifted(n, period()); }
  virtual std::size_t hom_dim(const PeriodicObject& x, const PeriodicObject& y) = 0;
  // All morphisms x -> l, counted by the class of their cone.
  virtual const ConeHistogram& cone_histogram(const PeriodicObject& x, const PeriodicObject& l) = 0;
  virtual std::uint64_t aut_order(const PeriodicObject& x) = 0;
  virtual std::string name(const PeriodicObject& x) const = 0;
};

// |(X,L)_Y|: morphisms x -> l whose cone has class y.
inline std::uint64_t cone_fiber_count(CategoryOracle& o, const PeriodicObject& x, const PeriodicObject& l,
                                      const PeriodicObject& y) {
  const auto& h = o.cone_histogram(x, l);
  auto it = h.find(y);
  return it == h.end() ? 0 : it->second;
}

// The orbit category of representations (t = 3).
class OrbitOracle : public CategoryOracle {
 public:
  explicit OrbitOracle(std::shared_ptr<cyclecat::OrbitCategory> cat) : cat_(std::move(cat)) {}
  cyclecat::OrbitCategory& category() const { return *cat_; }
  int period() const override { return cyclecat::kPeriod; }
  std::uint32_t q() const override { return cat_->field().q(); }
  std::size_t hom_dim(const PeriodicObject& x, const PeriodicObject& y) override {
    return cat_->hom_dim_covering(x, y);
  }
  const ConeHistogram& cone_histogram(const PeriodicObject& x, const PeriodicObject& l) override {
    return cat_->cone_histogram(x, l);
  }
  std::uint64_t aut_order(const PeriodicObject& x) override { return cat_->aut_order(x); }
  std::string name(const PeriodicObject& x) const override { return cat_->name(x); }

 private:
  std::shared_ptr<cyclecat::OrbitCategory> cat_;
};

// Z/t-graded vector spaces over F_q: the orbit category of D^b(mod k) by
// [t].  Every object is a sum of shifts of the one simple (class id 0).
// Morphisms are degreewise linear maps; cone(u) = coker u + (ker u)[1].
// Counts are computed from rank formulas, no enumeration.
class GradedOracle : public CategoryOracle {
 public:
  GradedOracle(int t, std::uint32_t q);
  int period() const override { return t_; }
  std::uint32_t q() const override { return q_; }
  std::size_t hom_dim(const PeriodicObject& x, const PeriodicObject& y) override;
  const ConeHistogram& cone_histogram(const PeriodicObject& x, const PeriodicObject& l) override;
  std::uint64_t aut_order(const PeriodicObject& x) override;
  std::string name(const PeriodicObject& x) const override;

  PeriodicObject object(const std::vector<std::size_t>& degree_dims) const;
  std::vector<std::size_t> degree_dims(const PeriodicObject& x) const;
  // All objects with at most `bound` copies in each degree.
  std::vector<PeriodicObject> enumerate(std::size_t bound) const;

 private:
  int t_;
  std::uint32_t q_;
  std::mutex mutex_;
  std::map<std::pair<PeriodicObject, PeriodicObject>, ConeHistogram> hist_;
};

}  // namespace perihall::hall
