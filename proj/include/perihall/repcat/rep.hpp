#pragma once

// Representations of an acyclic quiver over F_p and their morphisms.
//
// Conventions follow ffla: the map of arrow a: s -> t is a dim_s x dim_t
// matrix, and a morphism phi: X -> Y has one dim X_v x dim Y_v component per
// vertex.  The intertwiner condition reads X_a * phi_t = phi_s * Y_a.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "perihall/ffla/matrix.hpp"
#include "perihall/repcat/quiver.hpp"

namespace perihall::repcat {

using ffla::Elem;
using ffla::FieldSpec;
using ffla::MatrixFp;
using DimVector = std::vector<std::size_t>;

// Immutable value type with shared storage; copies are cheap.
class Rep {
 public:
  Rep(QuiverPtr quiver, FieldSpec field, DimVector dims, std::vector<MatrixFp> maps);

  static Rep zero(QuiverPtr quiver, FieldSpec field);
  static Rep simple(QuiverPtr quiver, FieldSpec field, std::size_t v);
  // Basis of (P_v)_w: paths v ~> w in Quiver::paths_from order.
  static Rep projective(QuiverPtr quiver, FieldSpec field, std::size_t v);
  // Basis of (I_v)_w: paths w ~> v.
  static Rep injective(QuiverPtr quiver, FieldSpec field, std::size_t v);

  const QuiverPtr& quiver_ptr() const { return d_->quiver; }
  const Quiver& quiver() const { return *d_->quiver; }
  FieldSpec field() const { return d_->field; }
  const DimVector& dims() const { return d_->dims; }
  std::size_t dim(std::size_t v) const { return d_->dims[v]; }
  std::size_t total_dim() const { return d_->total; }
  bool is_zero() const { return d_->total == 0; }
  const MatrixFp& map(std::size_t a) const { return d_->maps[a]; }
  const std::vector<MatrixFp>& maps() const { return d_->maps; }

  // Exact serialization of dims and matrices; equal keys iff equal reps.
  const std::string& key() const { return d_->key; }
  bool operator==(const Rep& o) const { return d_ == o.d_ || d_->key == o.d_->key; }
  bool same_category(const Rep& o) const;

 private:
  struct Data {
    QuiverPtr quiver;
    FieldSpec field;
    DimVector dims;
    std::vector<MatrixFp> maps;
    std::size_t total = 0;
    std::string key;
  };
  std::shared_ptr<const Data> d_;
};

class RepMap {
 public:
  // Validates shapes and the intertwiner condition.
  RepMap(Rep source, Rep target, std::vector<MatrixFp> components);
  // Shapes checked, intertwining assumed; for internal constructions.
  static RepMap trusted(Rep source, Rep target, std::vector<MatrixFp> components);

  static RepMap zero(const Rep& x, const Rep& y);
  static RepMap identity(const Rep& x);
  // Components read from a flat vector laid out vertex by vertex, row-major.
  static RepMap from_flat(const Rep& x, const Rep& y, std::span<const Elem> flat);

  const Rep& source() const { return src_; }
  const Rep& target() const { return tgt_; }
  const MatrixFp& component(std::size_t v) const { return comps_[v]; }
  const std::vector<MatrixFp>& components() const { return comps_; }

  std::vector<Elem> flat() const;
  bool is_zero() const;
  bool is_iso() const;
  bool is_intertwiner() const;

  RepMap operator+(const RepMap& o) const;
  RepMap operator-(const RepMap& o) const;
  RepMap operator-() const;
  RepMap scaled(Elem s) const;
  // "this then g" (row convention: componentwise product this * g).
  RepMap operator*(const RepMap& g) const;
  bool operator==(const RepMap& o) const { return src_ == o.src_ && tgt_ == o.tgt_ && comps_ == o.comps_; }

 private:
  RepMap(Rep s, Rep t, std::vector<MatrixFp> c, bool check);
  Rep src_, tgt_;
  std::vector<MatrixFp> comps_;
};

std::size_t flat_size(const Rep& x, const Rep& y);

Rep direct_sum(const Rep& x, const Rep& y);
Rep direct_sum(const std::vector<Rep>& parts);
// Block diagonal map x1 + x2 -> y1 + y2.
RepMap direct_sum(const RepMap& f, const RepMap& g);

std::vector<RepMap> hom_basis(const Rep& x, const Rep& y);
std::size_t hom_dim(const Rep& x, const Rep& y);
// Euler form <dim x, dim y> = sum_v x_v y_v - sum_{a: s->t} x_s y_t.
long euler_form(const Rep& x, const Rep& y);

// Coefficients c with sum c_i basis_i = target, if any.
std::optional<std::vector<Elem>> combination_of(const std::vector<RepMap>& basis, const RepMap& target);
RepMap linear_combination(const Rep& x, const Rep& y, const std::vector<RepMap>& basis, std::span<const Elem> c);

// A subrepresentation given by echelon bases of its vertex spaces.
struct SubRep {
  Rep rep;
  RepMap inclusion;
  std::vector<ffla::RowSpace> spaces;
};
// Throws ContractViolation if the subspaces are not arrow-stable.
SubRep subrep(const Rep& x, const std::vector<MatrixFp>& generators);

struct Quotient {
  Rep rep;
  RepMap projection;
  std::vector<MatrixFp> section;  // linear (not module) sections, per vertex
};
// Quotient of y by the arrow-stable subspaces; basis = non-pivot unit vectors.
Quotient quotient(const Rep& y, const std::vector<ffla::RowSpace>& spaces);

struct Factorization {
  SubRep kernel;
  SubRep image;
  RepMap onto_image;  // x -> image
  Quotient cokernel;
};
Factorization factorize(const RepMap& f);
SubRep kernel(const RepMap& f);
SubRep image(const RepMap& f);
Quotient cokernel(const RepMap& f);
// f: A -> Y with Im f inside sub; returns the unique f': A -> sub.rep.
RepMap corestrict(const RepMap& f, const SubRep& sub);
// Finds X with X * a = b (rows of b in the row space of a); a need not be injective.
std::optional<MatrixFp> left_solve(const MatrixFp& a, const MatrixFp& b);

std::string to_string(const Rep& x);

}  // namespace perihall::repcat
