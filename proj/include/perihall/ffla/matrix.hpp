#pragma once

// Dense matrices over a prime field F_p.
//
// Row-vector convention (used everywhere in the library): a linear map
// V -> W is stored as a (dim V) x (dim W) matrix M acting by v |-> v * M.
// Composition "f then g" is therefore the product F * G.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace perihall::ffla {

using Elem = std::uint32_t;

class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxPrime = 1u << 15;

  explicit FieldSpec(std::uint32_t p = 2);

  std::uint32_t p() const { return p_; }
  std::uint32_t q() const { return p_; }

  Elem reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem inv(Elem a) const;  // throws ContractViolation on 0

  bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

class MatrixFp {
 public:
  MatrixFp() = default;
  MatrixFp(FieldSpec f, std::size_t rows, std::size_t cols);

  static MatrixFp identity(FieldSpec f, std::size_t n);
  static MatrixFp from_rows(FieldSpec f, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static MatrixFp from_rows(FieldSpec f, const std::vector<std::vector<std::int64_t>>& rows,
                            std::size_t cols_if_empty = 0);
  static MatrixFp from_flat(FieldSpec f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = v % field_.p(); }
  Elem* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
  const Elem* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
  std::span<const Elem> row(std::size_t r) const { return {row_ptr(r), cols_}; }
  const std::vector<Elem>& entries() const { return data_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  MatrixFp transpose() const;
  MatrixFp block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const MatrixFp& b);
  // Adds s * b into the block at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const MatrixFp& b, Elem s = 1);
  MatrixFp select_rows(std::span<const std::size_t> idx) const;

  MatrixFp operator*(const MatrixFp& o) const;
  MatrixFp operator+(const MatrixFp& o) const;
  MatrixFp operator-(const MatrixFp& o) const;
  MatrixFp operator-() const;
  MatrixFp scaled(Elem s) const;
  std::vector<Elem> apply_row(std::span<const Elem> v) const;  // v * M

  bool operator==(const MatrixFp& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  FieldSpec field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

MatrixFp hstack(const MatrixFp& a, const MatrixFp& b);
MatrixFp vstack(const MatrixFp& a, const MatrixFp& b);
// Block diagonal matrix diag(a, b).
MatrixFp diag(const MatrixFp& a, const MatrixFp& b);
MatrixFp power(const MatrixFp& m, std::uint64_t e);

std::ostream& operator<<(std::ostream& os, const MatrixFp& m);

struct RrefResult {
  MatrixFp matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const MatrixFp& m);
std::size_t rank(const MatrixFp& m);
bool is_invertible(const MatrixFp& m);
std::optional<MatrixFp> inverse(const MatrixFp& m);

// Rows span {v : v * m = 0}; linearly independent, in rref order.
MatrixFp kernel_basis(const MatrixFp& m);
// Rows span {x : m * x^T = 0}, i.e. the column-convention null space.
MatrixFp nullspace_columns(const MatrixFp& m);

struct Solution {
  std::vector<Elem> particular;
  MatrixFp kernel;  // rows span {x : a * x = 0}
};

// Solves a * x = b with x and b column vectors.
std::optional<Solution> solve(const MatrixFp& a, std::span<const Elem> b);

// Incrementally maintained reduced echelon basis of a row space.  Used for
// membership tests, reduction modulo a subspace and coordinate extraction.
class RowSpace {
 public:
  RowSpace(FieldSpec f, std::size_t ambient);
  explicit RowSpace(const MatrixFp& generators);

  FieldSpec field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }

  // Returns true if v enlarged the space.
  bool add(std::span<const Elem> v);
  // v minus its component in the space along the non-pivot complement.
  std::vector<Elem> reduce(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  // Coordinates with respect to the echelon basis; nullopt if v is outside.
  std::optional<std::vector<Elem>> coordinates(std::span<const Elem> v) const;

  const std::vector<std::vector<Elem>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Unit vectors at non-pivot columns: a complement of the space.
  std::vector<std::size_t> free_columns() const;
  MatrixFp basis_matrix() const;

 private:
  FieldSpec field_;
  std::size_t n_;
  std::vector<std::vector<Elem>> rows_;  // fully reduced, sorted by pivot
  std::vector<std::size_t> pivots_;
};

// Enumerates every k-dimensional subspace of F_q^n as an rref basis matrix.
// The callback returns false to stop early.  Returns the number visited.
template <class F>
std::uint64_t for_each_subspace(FieldSpec f, std::size_t n, std::size_t k, F&& fn);

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

}  // namespace perihall::ffla

#include "perihall/ffla/subspaces.ipp"
