#pragma once

#include <string>
#include <vector>

#include "ifix/qpoly.hpp"

namespace ifix {

// Dimension data for one involution class of an ambient simple algebraic
// group Gbar acting on the coset variety Omega = Gbar/Hbar.
//
// dim_class is the dimension of the conjugacy class of the involution in
// Gbar; dim_class_in_h is the dimension of the intersection of that class
// with Hbar.  Both are supplied as data: the class dimension follows from
// the centralizer type, the intersection dimension is tabular.
struct DimRecord {
  std::string ambient;    // e.g. "E8"
  std::string subgroup;   // e.g. "B2"
  std::string cls;        // involution class label, e.g. "t1"
  std::string condition;  // characteristic restriction, free text
  int dim_g = 0;
  int dim_h = 0;
  int dim_class = 0;
  int dim_class_in_h = 0;
};

// Dimension of the fixed-point subvariety of the involution on Omega:
//   dim C_Omega(t) = dim Omega - dim t^Gbar + dim(t^Gbar cap Hbar).
// Throws std::invalid_argument on inconsistent records (negative result,
// intersection exceeding either ambient quantity, dim_h >= dim_g).
int fixed_dim(const DimRecord& r);

// fixed_dim / dim Omega as an exact rational.
Rat gamma(const DimRecord& r);

// Largest gamma over the class records supplied for one (Gbar, Hbar) pair.
Rat gamma_max(const std::vector<DimRecord>& rows);

// Dimension of the centralizer of the toral involution attached to the
// longest Weyl element: (dim Gbar - rank)/2.  Throws on parity violation.
int torus_involution_dim(int dim_g, int rank);

}  // namespace ifix
