#pragma once

#include <cstdint>
#include <vector>

#include "perihall/error.hpp"
#include "perihall/repcat/rep.hpp"

namespace perihall::repcat {

// Indecomposable summands of x (with repetition).  Splitting uses Fitting
// decompositions of endomorphisms; a piece is declared indecomposable once
// its endomorphism algebra is certified local.
std::vector<Rep> decompose(const Rep& x, const Budget& budget = {});

struct Summand {
  Rep rep;
  std::size_t multiplicity;
};
// decompose() with isomorphic pieces grouped, in first-occurrence order.
std::vector<Summand> decompose_grouped(const Rep& x, const Budget& budget = {});

bool is_indecomposable(const Rep& x, const Budget& budget = {});

// For indecomposable x and y: isomorphic iff phi*psi is invertible for some
// pair of basis elements phi of Hom(x,y), psi of Hom(y,x).
bool isomorphic_indecomposables(const Rep& x, const Rep& y);

bool is_isomorphic(const Rep& x, const Rep& y, const Budget& budget = {});

// Exact |Aut x| by enumeration of End x.
std::uint64_t aut_order(const Rep& x, const Budget& budget = {});

// Minimal polynomial of a square block-diagonal operator, monic, coefficients
// from degree 0 upwards.
std::vector<Elem> minimal_polynomial(const RepMap& endo);

}  // namespace perihall::repcat
