#pragma once

// Smooth approximations of the characteristic function of [U, V) with edge
// width Y, from the e^{-1/s} smooth step.

#include <vector>

namespace hlp {

enum class BumpSide { Inner, Outer };

// Outer: 1 on [U, V], 0 outside [U - Y, V + Y].
// Inner: 1 on [U + Y, V - Y], 0 outside [U, V].
// With U = 0 there is no rising edge: outer is 1 on [0, V], inner on [0, V - Y].
struct BumpSpec {
  double U = 0.0;
  double V = 1.0;
  double Y = 0.1;
  BumpSide side = BumpSide::Outer;
};

// 0 for s <= 0, 1 for s >= 1, C-infinity in between.
double smooth_step(double s);

class Bump {
 public:
  // Throws InvalidBump unless 0 <= U < V, Y > 0 and Y <= (V - U)/2 (U > 0) or
  // Y <= V/2 (U = 0).
  explicit Bump(const BumpSpec& spec);

  double operator()(double u) const;

  const BumpSpec& spec() const { return spec_; }
  double support_end() const { return fall_end_; }
  // Points where the piecewise formula changes, inside [0, support_end].
  const std::vector<double>& knots() const { return knots_; }
  // Integral of k over [0, inf). The smooth step satisfies S(s) + S(1 - s) = 1,
  // so each full edge contributes half its width.
  double integral() const;

 private:
  BumpSpec spec_;
  bool has_rise_ = false;
  double rise_begin_ = 0.0, rise_end_ = 0.0;
  double fall_begin_ = 0.0, fall_end_ = 0.0;
  std::vector<double> knots_;
};

}  // namespace hlp
