#pragma once

// Registry of isomorphism classes of indecomposable representations.
//
// Identity of classes is always decided by isomorphism tests, never by
// matrix equality.  Ids are handed out in discovery order, so they are stable
// for a fixed quiver, field, seeding bound and sequence of queries.

#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "perihall/error.hpp"
#include "perihall/repcat/rep.hpp"

namespace perihall::repcat {

using ClassId = std::uint32_t;

// A module up to isomorphism: sorted ids of its indecomposable summands.
struct ModuleClass {
  std::vector<ClassId> summands;
  DimVector dims;
  bool operator==(const ModuleClass&) const = default;
};

class Catalog {
 public:
  Catalog(QuiverPtr quiver, FieldSpec field, Budget budget = {});

  const QuiverPtr& quiver() const { return quiver_; }
  FieldSpec field() const { return field_; }
  const Budget& budget() const { return budget_; }

  // Id of the indecomposable x; registers a new class when needed.
  ClassId classify_indecomposable(const Rep& x);
  // Sorted ids of the indecomposable summands of x, with repetition.
  std::vector<ClassId> classify(const Rep& x);
  std::optional<ClassId> find(const Rep& indecomposable) const;
  std::optional<ClassId> by_name(const std::string& name) const;

  std::size_t size() const;
  Rep representative(ClassId id) const;
  std::string name(ClassId id) const;
  DimVector dims(ClassId id) const;
  Rep module(const std::vector<ClassId>& summands) const;
  DimVector module_dims(const std::vector<ClassId>& summands) const;

  // Registers every indecomposable with dim vector <= bound by brute force
  // over all arrow matrices.  Returns their ids ordered by total dimension,
  // then dim vector, then id.
  std::vector<ClassId> enumerate_indecomposables(const DimVector& bound);
  // All module classes with dim vector <= bound (including 0), ordered by
  // total dimension, dim vector, then summand list.
  std::vector<ModuleClass> enumerate_modules(const DimVector& bound);

 private:
  struct Entry {
    Rep rep;
    std::string name;
  };
  std::string make_name(const Rep& x, ClassId id) const;
  ClassId lookup_or_insert_locked(const Rep& x);

  QuiverPtr quiver_;
  FieldSpec field_;
  Budget budget_;
  mutable std::mutex mutex_;
  std::deque<Entry> entries_;
  std::map<DimVector, std::vector<ClassId>> by_dims_;
  std::unordered_map<std::string, std::vector<ClassId>> memo_;
};

// One representative module per class with dim vector <= bound.
std::vector<Rep> enumerate_reps(Catalog& catalog, const DimVector& bound);

// Number of subrepresentations U of l with U ~ x and l/U ~ y.
std::uint64_t classical_hall_g(const Rep& x, const Rep& y, const Rep& l, const Budget& budget = {});

}  // namespace perihall::repcat
