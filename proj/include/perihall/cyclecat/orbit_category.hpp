#pragma once

// The 3-periodic orbit category of a hereditary category of representations,
// realized on wrapped projective resolutions.
//
// A module M with minimal resolution 0 -> P1 -> P0 -> M -> 0 wraps to the
// complex with P0 at position 0, 0 at position 1 and P1 at position 2, the
// differential d_2 being the inclusion P1 -> P0.  M[n] wraps to the n-fold
// shift of that complex.  Normalization reads off
//   H = ker d_1 / im d_0              at shift 2,
//   ker f, coker f                    at shifts 1 and 0,
// where f: coker d_1 -> ker d_0 is induced by d_2.  Positions 0, 1, 2 thus
// carry shifts 0, 2, 1 for stalk complexes.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "perihall/cyclecat/complex.hpp"
#include "perihall/cyclecat/homspace.hpp"
#include "perihall/cyclecat/periodic.hpp"
#include "perihall/repcat/catalog.hpp"

namespace perihall::cyclecat {

using ConeHistogram = std::map<PeriodicObject, std::uint64_t>;

class OrbitCategory {
 public:
  explicit OrbitCategory(std::shared_ptr<repcat::Catalog> catalog);

  static constexpr int period() { return kPeriod; }
  repcat::Catalog& catalog() const { return *catalog_; }
  FieldSpec field() const { return catalog_->field(); }
  const repcat::QuiverPtr& quiver() const { return catalog_->quiver(); }
  const Budget& budget() const { return catalog_->budget(); }

  PeriodicObject object(const std::vector<ClassId>& shift0, const std::vector<ClassId>& shift1 = {},
                        const std::vector<ClassId>& shift2 = {}) const;

  // Cached; the layout lists the summands of x in order.
  ComplexPtr wrap(const PeriodicObject& x);
  // shift(wrap(x), n), cached.  Isomorphic to, but not equal to, wrap(x[n]).
  ComplexPtr shifted_wrap(const PeriodicObject& x, int n);
  PeriodicObject normalize(const CycleComplex& c);

  // Cached by complex identity.
  std::shared_ptr<const HomSpace> hom(const ComplexPtr& a, const ComplexPtr& b);
  std::shared_ptr<const HomSpace> hom(const PeriodicObject& x, const PeriodicObject& y) {
    return hom(wrap(x), wrap(y));
  }

  std::size_t module_hom_dim(ClassId a, ClassId b);
  std::size_t module_ext_dim(ClassId a, ClassId b);
  // Sum over summands X[i] of x and Y[j] of y: dim Hom(X,Y) for j-i = 0,
  // dim Ext^1(X,Y) for j-i = 1, nothing for j-i = 2 (mod 3).
  std::size_t hom_dim_covering(const PeriodicObject& x, const PeriodicObject& y);

  PeriodicObject cone_class(const ChainMap& u);
  bool is_iso(const ChainMap& u) { return cone_class(u).is_zero(); }
  // Number of morphisms wrap(x) -> wrap(l) by the class of their cone.
  const ConeHistogram& cone_histogram(const PeriodicObject& x, const PeriodicObject& l);
  std::uint64_t aut_order(const PeriodicObject& x);
  // u must run between complexes with layouts (e.g. wraps).  True iff no
  // component between equal stalks is an isomorphism.
  bool is_radical(const ChainMap& u);
  // restrict_complex, cached by (complex, summands).
  ComplexPtr restricted(const ComplexPtr& c, const std::vector<std::size_t>& summands);

  // All objects whose shift-n part has dim vector <= bound for each n, ordered
  // by the shift-0 module, then shift 1, then shift 2 (outermost first).
  std::vector<PeriodicObject> enumerate(const repcat::DimVector& bound);

  // "0", or summands joined by "+", each "Name" or "Name[n]".
  std::string name(const PeriodicObject& x) const;
  PeriodicObject parse(const std::string& text) const;

  // Alternating dim vector sum of the parts, reduced mod 2.
  repcat::DimVector k0_mod2(const PeriodicObject& x) const;

 private:
  ComplexPtr base_wrap(ClassId cls);

  std::shared_ptr<repcat::Catalog> catalog_;
  std::recursive_mutex mutex_;
  std::map<ClassId, ComplexPtr> base_;
  std::map<PeriodicObject, ComplexPtr> wraps_;
  std::map<std::pair<PeriodicObject, int>, ComplexPtr> shifted_;
  struct HomEntry {
    ComplexPtr a, b;
    std::shared_ptr<const HomSpace> space;
  };
  std::map<std::pair<const CycleComplex*, const CycleComplex*>, HomEntry> homs_;
  std::map<std::pair<PeriodicObject, PeriodicObject>, ConeHistogram> hist_;
  std::map<std::pair<ClassId, ClassId>, std::size_t> mhom_, mext_;
  struct RestrictEntry {
    ComplexPtr source, sub;
  };
  std::map<std::pair<const CycleComplex*, std::vector<std::size_t>>, RestrictEntry> restricted_;
};

}  // namespace perihall::cyclecat
