#pragma once

// Versioned structure-constant catalogs (JSON, see docs/formats.md).
// Exporting, importing and exporting again gives the same bytes.

#include <cstdint>
#include <string>
#include <vector>

#include "perihall/hall/algebra.hpp"
#include "perihall/repcat/catalog.hpp"

namespace perihall::cli {

inline constexpr int kCatalogVersion = 1;
inline constexpr const char* kToolVersion = "perihall 0.1.0";

struct ClassRecord {
  std::string name;
  repcat::DimVector dims;
  std::vector<std::vector<std::vector<std::int64_t>>> maps;  // [arrow][row][col]
};

// An object as (class id, shift) pairs, in normal-form order.
using StalkList = std::vector<std::pair<std::uint32_t, int>>;

struct ConstantRecord {
  StalkList x, y, l;
  hall::Rational a, b;
};

struct CatalogFile {
  int version = kCatalogVersion;
  std::string tool = kToolVersion;
  std::string quiver_hash;
  std::string quiver_text;
  std::uint32_t q = 2;
  repcat::DimVector bound;
  std::vector<ClassRecord> classes;
  std::vector<ConstantRecord> constants;
};

// Every registered class and every structure constant computed so far.
CatalogFile snapshot(const repcat::Catalog& catalog, hall::HallAlgebra& alg, const repcat::DimVector& bound);

std::string to_json(const CatalogFile& c);
// Throws ParseError on malformed input and ContractViolation on a schema
// version other than kCatalogVersion.
CatalogFile from_json(const std::string& text, const std::string& source);

StalkList stalks_of(const cyclecat::PeriodicObject& x);
cyclecat::PeriodicObject object_of(const StalkList& s);

// Registers the file's classes into an empty catalog over the same quiver
// and field, checking that ids come out equal.
void seed(repcat::Catalog& catalog, const CatalogFile& c);

}  // namespace perihall::cli
