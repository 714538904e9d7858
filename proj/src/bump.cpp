#include "hlp/bump.hpp"

#include <algorithm>
#include <cmath>

#include "hlp/errors.hpp"
#include "hlp/quadrature.hpp"

namespace hlp {

namespace {

double mollifier(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

}  // namespace

double smooth_step(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double f = mollifier(s);
  return f / (f + mollifier(1.0 - s));
}

Bump::Bump(const BumpSpec& spec) : spec_(spec) {
  const double U = spec.U, V = spec.V, Y = spec.Y;
  if (!(U >= 0.0) || !(V > U) || !std::isfinite(V)) throw Error(ErrorCode::InvalidBump, "bump needs 0 <= U < V");
  if (!(Y > 0.0)) throw Error(ErrorCode::InvalidBump, "edge width must be positive");
  const double limit = U > 0.0 ? 0.5 * (V - U) : 0.5 * V;
  if (Y > limit) throw Error(ErrorCode::InvalidBump, "edge width too large for [U, V]");

  has_rise_ = U > 0.0;
  if (spec.side == BumpSide::Outer) {
    rise_begin_ = U - Y;
    rise_end_ = U;
    fall_begin_ = V;
    fall_end_ = V + Y;
  } else {
    rise_begin_ = U;
    rise_end_ = U + Y;
    fall_begin_ = V - Y;
    fall_end_ = V;
  }
  if (has_rise_) {
    for (double p : {rise_begin_, rise_end_})
      if (p > 0.0) knots_.push_back(p);
  }
  knots_.push_back(fall_begin_);
  knots_.push_back(fall_end_);
}

double Bump::operator()(double u) const {
  if (u >= fall_end_) return 0.0;
  if (u > fall_begin_) return smooth_step((fall_end_ - u) / spec_.Y);
  if (!has_rise_) return 1.0;
  if (u <= rise_begin_) return 0.0;
  if (u < rise_end_) return smooth_step((u - rise_begin_) / spec_.Y);
  return 1.0;
}

double Bump::integral() const {
  const double top = 0.5 * (fall_begin_ + fall_end_);
  if (!has_rise_) return top;
  const double bottom = 0.5 * (rise_begin_ + rise_end_);
  if (rise_begin_ >= 0.0) return top - bottom;
  // outer bump with U < Y: the rising edge starts below 0, drop that part
  const double below =
      integrate([this](double u) { return smooth_step((u - rise_begin_) / spec_.Y); }, rise_begin_, 0.0).value;
  return top - bottom - below;
}

}  // namespace hlp
