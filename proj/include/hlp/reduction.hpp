#pragma once

// Reduction towards the cusp at infinity and the heights y_j(z), n(T, z), n(z).

#include <utility>

#include "hlp/geometry.hpp"

namespace hlp {

// Standard translate/invert loop into {|x| <= 1/2, |z| >= 1}; returns the
// reduced point and g with g z = z*. Throws IterationCap after 10^4 steps.
std::pair<Point, GroupElement> reduce_sl2z(const Point& z);

struct HeightReport {
  MultiPoint reduced;
  Reals height{1.0, 1.0};  // max(1, Im of the reduced point) per coordinate
  double n = 1.0;          // prod_j height_j
  bool converged = true;
  int iterations = 0;
};

// Degree 1: exact reduction. Degree 2: approximate reduction at the single
// cusp, alternating translation by the nearest ring element, balancing of
// log(y_1 / y_2) by the square of the fundamental unit and inversion
// z -> -1/z while prod |z_j|^2 < 1; at most 100 rounds.
HeightReport height_components(const MultiPoint& z, const FieldSpec& field);

// prod_j max(1, height_j / T_j)
double n_of(const Reals& T, const HeightReport& h, int d);

}  // namespace hlp
