#include "hlp/reduction.hpp"

#include <cmath>

namespace hlp {

namespace {

const FieldSpec kZ = FieldSpec::integers();

// Nearest ring element to (x_1, x_2) in the embedding coordinates.
RingElement nearest_translation(const MultiPoint& z, const FieldSpec& f) {
  const double q = std::round((z[0].x - z[1].x) / f.omega_gap());
  const double p = std::round(z[0].x - q * f.omega(0));
  return {static_cast<Int>(p), static_cast<Int>(q)};
}

}  // namespace

std::pair<Point, GroupElement> reduce_sl2z(const Point& z0) {
  if (!(z0.y > 0.0)) throw Error(ErrorCode::InvalidArgument, "point must have y > 0");
  Point z = z0;
  GroupElement g = GroupElement::identity();
  for (int step = 0; step < 10000; ++step) {
    const double n = std::round(z.x);
    if (n != 0.0) {
      const auto t = static_cast<Int>(n);
      z.x -= n;
      g = compose(GroupElement::make(1, -t, 0, 1, kZ), g, kZ);
    }
    const double r2 = z.x * z.x + z.y * z.y;
    if (r2 >= 1.0) return {z, g};
    z = {-z.x / r2, z.y / r2};
    g = compose(GroupElement::make(0, -1, 1, 0, kZ), g, kZ);
  }
  throw Error(ErrorCode::IterationCap, "reduction did not terminate");
}

HeightReport height_components(const MultiPoint& z, const FieldSpec& field) {
  HeightReport out;
  if (z.degree() != field.degree()) throw Error(ErrorCode::InvalidArgument, "point degree does not match field");
  if (field.degree() == 1) {
    const auto [r, g] = reduce_sl2z(z[0]);
    out.reduced = MultiPoint{r};
    out.height = {std::max(1.0, r.y), 1.0};
    out.n = out.height[0];
    return out;
  }

  const Reals eps = embed(field.fundamental_unit(), field);
  // acting by diag(eps, 1/eps) multiplies z_j by sigma_j(eps)^2
  const Reals scale{eps[0] * eps[0], eps[1] * eps[1]};
  const double period = std::abs(std::log(scale[0] / scale[1]));
  MultiPoint w = z;
  out.converged = false;
  for (int it = 0; it < 100; ++it) {
    out.iterations = it + 1;
    bool changed = false;
    const RingElement t = nearest_translation(w, field);
    if (!t.is_zero()) {
      const Reals tr = embed(t, field);
      w[0].x -= tr[0];
      w[1].x -= tr[1];
      changed = true;
    }
    const double ratio = std::log(w[0].y / w[1].y);
    const double k = std::round(-ratio / std::log(scale[0] / scale[1]));
    if (k != 0.0 && period > 0.0) {
      for (int j = 0; j < 2; ++j) {
        const double s = std::pow(scale[static_cast<std::size_t>(j)], k);
        w[j].x *= s;
        w[j].y *= s;
      }
      changed = true;
    }
    const double r0 = w[0].x * w[0].x + w[0].y * w[0].y;
    const double r1 = w[1].x * w[1].x + w[1].y * w[1].y;
    if (r0 * r1 < 1.0) {
      w[0] = {-w[0].x / r0, w[0].y / r0};
      w[1] = {-w[1].x / r1, w[1].y / r1};
      changed = true;
    }
    if (!changed) {
      out.converged = true;
      break;
    }
  }
  out.reduced = w;
  out.height = {std::max(1.0, w[0].y), std::max(1.0, w[1].y)};
  out.n = out.height[0] * out.height[1];
  return out;
}

double n_of(const Reals& T, const HeightReport& h, int d) {
  double n = 1.0;
  for (int j = 0; j < d; ++j) {
    const auto k = static_cast<std::size_t>(j);
    n *= std::max(1.0, h.height[k] / T[k]);
  }
  return n;
}

}  // namespace hlp
