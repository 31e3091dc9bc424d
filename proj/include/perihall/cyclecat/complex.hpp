#pragma once

// 3-cycle complexes over representations.
//
// Positions are indexed 0, 1, 2 (the usual X_1, X_2, X_3) and the
// differential d_i maps position i to position i+1 mod 3.  With the row
// convention the complex condition is d_i * d_{i+1} = 0.
//
// Shift: shift(c, 1) has positions X_{i+1} and differentials -d_{i+1}.
// A stalk module at position 0 is the object in shift 0; the normalization
// recipe then forces position 2 <-> shift 1 and position 1 <-> shift 2.

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perihall/cyclecat/periodic.hpp"
#include "perihall/repcat/rep.hpp"

namespace perihall::cyclecat {

using ffla::Elem;
using ffla::FieldSpec;
using ffla::MatrixFp;
using repcat::DimVector;
using repcat::Rep;
using repcat::RepMap;

constexpr int kPeriod = 3;

inline int pos(int i) { return ((i % kPeriod) + kPeriod) % kPeriod; }

// Where the summands of a direct-sum complex sit inside each position.
struct SummandBlock {
  Stalk stalk;
  std::array<std::vector<std::size_t>, kPeriod> offset;  // [position][vertex]
  std::array<DimVector, kPeriod> dims;
};

class CycleComplex {
 public:
  // Validates shapes and d_i d_{i+1} = 0.
  CycleComplex(std::array<Rep, kPeriod> positions, std::array<RepMap, kPeriod> differentials,
               std::vector<SummandBlock> layout = {});
  // Skips the d_i d_{i+1} = 0 check; for constructions that guarantee it.
  struct Trusted {};
  CycleComplex(Trusted, std::array<Rep, kPeriod> positions, std::array<RepMap, kPeriod> differentials,
               std::vector<SummandBlock> layout = {});

  const Rep& position(int i) const { return x_[pos(i)]; }
  const RepMap& differential(int i) const { return d_[pos(i)]; }
  const std::vector<SummandBlock>& layout() const { return layout_; }
  FieldSpec field() const { return x_[0].field(); }
  const repcat::QuiverPtr& quiver() const { return x_[0].quiver_ptr(); }
  std::size_t num_vertices() const { return x_[0].dims().size(); }
  std::size_t dim(int i, std::size_t v) const { return x_[pos(i)].dim(v); }
  bool is_zero() const;

 private:
  std::array<Rep, kPeriod> x_;
  std::array<RepMap, kPeriod> d_;
  std::vector<SummandBlock> layout_;
};

using ComplexPtr = std::shared_ptr<const CycleComplex>;

ComplexPtr shift(const ComplexPtr& c, int n);
ComplexPtr direct_sum(const std::vector<ComplexPtr>& parts);
// The sub-direct-sum on the listed layout summands (in the given order).
ComplexPtr restrict_complex(const ComplexPtr& c, const std::vector<std::size_t>& summands);

// Offsets of per-(position, vertex) blocks in flat morphism vectors.  A block
// maps position i of the source to position i + degree of the target.
class BlockLayout {
 public:
  BlockLayout(const CycleComplex& src, const CycleComplex& tgt, int degree = 0);
  std::size_t size() const { return size_; }
  std::size_t offset(int i, std::size_t v) const { return off_[pos(i)][v]; }
  std::size_t rows(int i, std::size_t v) const { return rows_[pos(i)][v]; }
  std::size_t cols(int i, std::size_t v) const { return cols_[pos(i)][v]; }
  std::size_t num_vertices() const { return off_[0].size(); }

 private:
  std::array<std::vector<std::size_t>, kPeriod> off_, rows_, cols_;
  std::size_t size_ = 0;
};

MatrixFp read_block(FieldSpec f, const BlockLayout& lay, std::span<const Elem> flat, int i, std::size_t v);
void write_block(const BlockLayout& lay, std::vector<Elem>& flat, int i, std::size_t v, const MatrixFp& m);

class ChainMap {
 public:
  // Validates the intertwiner and chain conditions.
  ChainMap(ComplexPtr src, ComplexPtr tgt, std::vector<Elem> flat);
  static ChainMap trusted(ComplexPtr src, ComplexPtr tgt, std::vector<Elem> flat);
  static ChainMap from_components(ComplexPtr src, ComplexPtr tgt, const std::array<RepMap, kPeriod>& comps);
  static ChainMap zero(ComplexPtr src, ComplexPtr tgt);
  static ChainMap identity(ComplexPtr c);

  const ComplexPtr& source() const { return src_; }
  const ComplexPtr& target() const { return tgt_; }
  const std::vector<Elem>& flat() const { return flat_; }
  MatrixFp block(int i, std::size_t v) const;
  RepMap component(int i) const;

  bool is_chain_map() const;
  bool is_zero() const;
  ChainMap operator+(const ChainMap& o) const;
  ChainMap operator-(const ChainMap& o) const;
  ChainMap scaled(Elem s) const;
  // "this then g".
  ChainMap operator*(const ChainMap& g) const;
  // The same components viewed as a map shift(src, n) -> shift(tgt, n); the
  // shifted complexes may be supplied so that cached pointers are reused.
  ChainMap shifted(int n) const;
  ChainMap shifted(int n, ComplexPtr src_shifted, ComplexPtr tgt_shifted) const;
  // Components between the chosen layout summands.
  ChainMap restricted(const std::vector<std::size_t>& src_summands, const std::vector<std::size_t>& tgt_summands) const;
  ChainMap restricted(const std::vector<std::size_t>& src_summands, const std::vector<std::size_t>& tgt_summands,
                      ComplexPtr src_sub, ComplexPtr tgt_sub) const;

 private:
  ChainMap(ComplexPtr src, ComplexPtr tgt, std::vector<Elem> flat, bool check);
  ComplexPtr src_, tgt_;
  std::vector<Elem> flat_;
};

// s^i: X^i -> Y^{i-1}.
class Homotopy {
 public:
  Homotopy(ComplexPtr src, ComplexPtr tgt, std::vector<Elem> flat);
  const std::vector<Elem>& flat() const { return flat_; }
  RepMap component(int i) const;
  // f^i = s^i d_Y^{i-1} + d_X^i s^{i+1}.
  ChainMap boundary() const;

 private:
  ComplexPtr src_, tgt_;
  std::vector<Elem> flat_;
};

// True iff f - g = boundary(s).
bool witnesses(const Homotopy& s, const ChainMap& f, const ChainMap& g);

struct Cone {
  ComplexPtr cone;
  ChainMap inclusion;   // target(u) -> cone
  ChainMap projection;  // cone -> shift(source(u), 1)
};

// Builds cones of many maps between a fixed pair of complexes.  Positions
// are X^{i+1} + Y^i, with differential rows [-d_X^{i+1}, u^{i+1}] and
// [0, d_Y^i].
class ConeBuilder {
 public:
  ConeBuilder(ComplexPtr src, ComplexPtr tgt);
  CycleComplex build(std::span<const Elem> u) const;
  const BlockLayout& layout() const { return lay_; }

 private:
  ComplexPtr src_, tgt_;
  BlockLayout lay_;
  std::array<Rep, kPeriod> positions_;
  std::array<std::vector<MatrixFp>, kPeriod> templates_;  // [i][v] with u block zero
};

Cone mapping_cone(const ChainMap& u);

std::string to_string(const CycleComplex& c);

}  // namespace perihall::cyclecat
