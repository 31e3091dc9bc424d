#pragma once

// Verification harnesses: every check is an exact equality.

#include <cstdint>
#include <string>
#include <vector>

#include "perihall/hall/algebra.hpp"
#include "perihall/hall/pbw.hpp"

namespace perihall::hall {

struct Check {
  std::string label;
  bool ok = true;
  std::string detail;
  // Informational checks are reported but do not decide pass/fail.
  bool informational = false;
};

struct Report {
  std::string property;
  std::vector<Check> checks;

  void add(std::string label, bool ok, std::string detail = {}, bool informational = false);
  bool passed() const;
  std::size_t count() const;  // decisive checks
  std::size_t failures() const;
  const Check* first_failure() const;
  std::string text() const;
};

using ffla::Elem;
using ObjectTriple = std::array<PeriodicObject, 3>;

// Every (a, b, c) in objects^3 in lexicographic order.
std::vector<ObjectTriple> all_triples(const std::vector<PeriodicObject>& objects);
// n triples spread evenly (deterministically) over objects^3.
std::vector<ObjectTriple> sample_triples(const std::vector<PeriodicObject>& objects, std::size_t n);

// u_0 * u_X = u_X * u_0 = u_X.
Report verify_unit(HallAlgebra& alg, const std::vector<PeriodicObject>& objects);
// For (X, Y, Z): u_Z * (u_X * u_Y) = (u_Z * u_X) * u_Y.
Report verify_assoc(HallAlgebra& alg, const std::vector<ObjectTriple>& triples);
// Both expressions of F agree for the given (X, Y, L); the first is
// source_value, so an injected fault shows up here.
Report verify_symmetry(HallAlgebra& alg, const std::vector<Triple>& triples);
// F_{XY}^L > 0 iff L is a cone of some Y[-1] -> X; every F a monomial.
Report verify_support(HallAlgebra& alg, const std::vector<Triple>& triples);

// The remaining harnesses need the orbit category backend.

// Decorated symmetry over Hom(M + X, L) and Hom(L', M + X) for the
// given (X, Y, Z, M); stops after max_instances nonzero (L, L') pairs.
Report verify_symmetry_decorated(HallAlgebra& alg, const std::vector<std::array<PeriodicObject, 4>>& quads,
                                 std::size_t max_instances);
// Stable-space counts |n Hom(Z[1], L)| and |Hom(Z[1], L) n| on standard cone
// triangles Z -> M -> L -> Z[1] for the given (Z, M); at most max_triangles.
Report verify_lemma(HallAlgebra& alg, const std::vector<std::pair<PeriodicObject, PeriodicObject>>& pairs,
                    std::size_t max_triangles);

// A distinguished triangle Z -l-> M -m-> L -n-> Z[1] as homotopy-class
// coordinates, with the id of its Aut Z x Aut L orbit.
struct TriangleWitness {
  std::vector<Elem> l, m, n;
  std::size_t orbit = 0;
  auto operator<=>(const TriangleWitness&) const = default;
};

struct OrbitData {
  std::vector<TriangleWitness> triangles;  // all of W(Z, L; M)
  std::size_t orbits = 0;
};

// W(Z, L; M) partitioned into orbits.
OrbitData triangle_orbits(HallAlgebra& alg, const PeriodicObject& z, const PeriodicObject& l,
                          const PeriodicObject& m);
// Representative form and both orbit-sum identities for each (Z, L, M).
Report verify_orbit(HallAlgebra& alg, const std::vector<ObjectTriple>& instances);

// Relations (1)-(3) for all pairs of the given modules, literally and with
// the q^(-<K,C>/2) twist (informational), plus ordered-product round trips
// for the given objects.
Report verify_presentation(HallAlgebra& alg, const std::vector<std::vector<ClassId>>& modules,
                           const std::vector<PeriodicObject>& objects);

// F_{XY}^L = g^L_{XY} q^((<X,X> - <X,L>)/2) for module triples.
Report classical_comparison(HallAlgebra& alg, const std::vector<ObjectTriple>& triples);

}  // namespace perihall::hall
