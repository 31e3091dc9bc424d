#pragma once

// Hom in the homotopy category of 3-cycle complexes: chain maps modulo the
// boundaries of (intertwining) homotopies.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "perihall/cyclecat/complex.hpp"
#include "perihall/error.hpp"
#include "perihall/ffla/matrix.hpp"

namespace perihall::cyclecat {

class HomSpace {
 public:
  HomSpace(ComplexPtr src, ComplexPtr tgt);

  const ComplexPtr& source() const { return src_; }
  const ComplexPtr& target() const { return tgt_; }
  const BlockLayout& layout() const { return lay_; }
  FieldSpec field() const { return src_->field(); }

  std::size_t dim() const { return reps_.dim(); }
  std::size_t chain_dim() const { return chain_dim_; }
  std::size_t boundary_dim() const { return bound_.dim(); }

  // Coordinates of the homotopy class of a chain map (given as flat blocks).
  // Throws ContractViolation if flat is not a chain map.
  std::vector<Elem> coordinates(std::span<const Elem> flat) const;
  // The canonical representative of the class with these coordinates.
  std::vector<Elem> representative(std::span<const Elem> coords) const;
  ChainMap element(std::span<const Elem> coords) const;
  bool is_null_homotopic(std::span<const Elem> flat) const;
  std::optional<Homotopy> homotopy_between(const ChainMap& f, const ChainMap& g) const;
  // A uniformly random null-homotopic chain map, as flat blocks.
  std::vector<Elem> random_boundary(std::mt19937_64& rng) const;

  // Visits one representative per homotopy class, in odometer order of the
  // coordinates.  fn(coords, flat) returns false to stop.  Returns the
  // number of classes visited.
  template <class Fn>
  std::uint64_t for_each(const Budget& budget, Fn&& fn) const;

 private:
  ComplexPtr src_, tgt_;
  BlockLayout lay_;
  std::size_t chain_dim_ = 0;
  ffla::RowSpace bound_;  // null-homotopic chain maps
  ffla::RowSpace reps_;   // complement of bound_ inside the chain maps
  std::vector<std::vector<Elem>> htpy_basis_, htpy_bound_;
};

template <class Fn>
std::uint64_t HomSpace::for_each(const Budget& budget, Fn&& fn) const {
  const FieldSpec f = field();
  const std::size_t n = dim();
  budget.require(f.q(), n, "Hom enumeration");
  const auto& rows = reps_.basis();
  std::vector<Elem> coords(n, 0), flat(lay_.size(), 0);
  std::uint64_t visited = 0;
  for (;;) {
    ++visited;
    if (!fn(static_cast<const std::vector<Elem>&>(coords), static_cast<const std::vector<Elem>&>(flat))) return visited;
    std::size_t k = 0;
    for (; k < n; ++k) {
      coords[k] = f.add(coords[k], 1);
      const auto& r = rows[k];
      for (std::size_t j = 0; j < flat.size(); ++j)
        if (r[j]) flat[j] = f.add(flat[j], r[j]);
      if (coords[k]) break;
    }
    if (k == n) return visited;
  }
}

}  // namespace perihall::cyclecat
