#pragma once

// Upper half-plane geometry per factor of H^d and the unimodular matrices
// acting on it.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>

#include "hlp/field.hpp"

namespace hlp {

using Complex = std::complex<double>;

struct Point {
  double x = 0.0;
  double y = 1.0;

  Complex as_complex() const { return {x, y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

class MultiPoint {
 public:
  MultiPoint() = default;
  // Throws InvalidArgument for an empty list, more than kMaxDegree points or y <= 0.
  MultiPoint(std::initializer_list<Point> pts);
  static MultiPoint of(const Point* pts, int degree);
  // The point (i, ..., i).
  static MultiPoint base(int degree);

  int degree() const { return degree_; }
  const Point& operator[](int j) const { return pts_[static_cast<std::size_t>(j)]; }
  Point& operator[](int j) { return pts_[static_cast<std::size_t>(j)]; }

  friend bool operator==(const MultiPoint& a, const MultiPoint& b) {
    if (a.degree_ != b.degree_) return false;
    for (int j = 0; j < a.degree_; ++j)
      if (!(a[j] == b[j])) return false;
    return true;
  }

 private:
  int degree_ = 1;
  std::array<Point, kMaxDegree> pts_{};
};

// Class of (a b; c d) in PSL2 with a*d - b*c = 1, stored in the representative
// whose first nonzero entry among (c, d, a) has positive first embedding.
class GroupElement {
 public:
  // Throws InvalidArgument when the determinant is not exactly 1.
  static GroupElement make(const RingElement& a, const RingElement& b, const RingElement& c,
                           const RingElement& d, const FieldSpec& field);
  static GroupElement identity();

  const RingElement& a() const { return a_; }
  const RingElement& b() const { return b_; }
  const RingElement& c() const { return c_; }
  const RingElement& d() const { return d_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  GroupElement(const RingElement& a, const RingElement& b, const RingElement& c, const RingElement& d)
      : a_(a), b_(b), c_(c), d_(d) {}

  RingElement a_, b_, c_, d_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    RingElementHash h;
    std::size_t s = h(g.a());
    for (const auto* x : {&g.b(), &g.c(), &g.d()}) s = s * 1000003u ^ h(*x);
    return s;
  }
};

// Lexicographic order on coefficients; only for stable sorting of outputs.
bool operator<(const GroupElement& g, const GroupElement& h);

GroupElement compose(const GroupElement& g, const GroupElement& h, const FieldSpec& field);
GroupElement inverse(const GroupElement& g, const FieldSpec& field);
std::string to_string(const GroupElement& g, const FieldSpec& field);

Point mobius(double a, double b, double c, double d, const Point& z);
MultiPoint mobius_apply(const GroupElement& g, const MultiPoint& z, const FieldSpec& field);

double u_invariant(const Point& z, const Point& w);
double dist_from_u(double u);
double u_from_dist(double t);

// u((g z)_j, z_j) for every embedding, from the closed form
// |-c z^2 + (a - d) z + b|^2 / (4 y^2), which avoids the division by |cz + d|^2.
Reals u_vector(const GroupElement& g, const MultiPoint& z, const FieldSpec& field);

// Necessary condition for the bottom row (c, d0) of some g with u_j <= V_j.
bool cd_admissible(const RingElement& c, const RingElement& d0, const MultiPoint& z, const Reals& V,
                   const FieldSpec& field);

// {t real : |w0 + t*zeta| <= R}, or nullopt when empty.
std::optional<std::pair<double, double>> t_interval(Complex w0, Complex zeta, double R);

struct EntryBound {
  // every entry x of a g with u_j <= V_j satisfies |sigma_j(x)| <= per_embedding_j
  Reals per_embedding{0.0, 0.0};
  // and its basis coefficients satisfy |p|, |q| <= coefficient
  double coefficient = 0.0;
};

// From 4u(g z, z) + 2 = ||h^-1 g h||_F^2 where h i = z.
EntryBound implied_entry_bound(const MultiPoint& z, const Reals& V, const FieldSpec& field);

}  // namespace hlp
