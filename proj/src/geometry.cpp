#include "hlp/geometry.hpp"

#include <cmath>
#include <tuple>

namespace hlp {

namespace {

void check_point(const Point& p) {
  if (!(p.y > 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y))
    throw Error(ErrorCode::InvalidArgument, "point must have finite x and y > 0");
}

auto coefficients(const GroupElement& g) {
  return std::tuple(g.a().p, g.a().q, g.b().p, g.b().q, g.c().p, g.c().q, g.d().p, g.d().q);
}

}  // namespace

MultiPoint::MultiPoint(std::initializer_list<Point> pts) {
  if (pts.size() == 0 || pts.size() > static_cast<std::size_t>(kMaxDegree))
    throw Error(ErrorCode::InvalidArgument, "multipoint needs 1 or 2 coordinates");
  degree_ = static_cast<int>(pts.size());
  std::size_t j = 0;
  for (const auto& p : pts) {
    check_point(p);
    pts_[j++] = p;
  }
}

MultiPoint MultiPoint::of(const Point* pts, int degree) {
  if (degree == 1) return MultiPoint{pts[0]};
  if (degree == 2) return MultiPoint{pts[0], pts[1]};
  throw Error(ErrorCode::InvalidArgument, "multipoint needs 1 or 2 coordinates");
}

MultiPoint MultiPoint::base(int degree) {
  const Point i{0.0, 1.0};
  return degree == 1 ? MultiPoint{i} : MultiPoint{i, i};
}

GroupElement GroupElement::make(const RingElement& a, const RingElement& b, const RingElement& c,
                                const RingElement& d, const FieldSpec& field) {
  if (mul(a, d, field) - mul(b, c, field) != RingElement{1})
    throw Error(ErrorCode::InvalidArgument, "determinant is not 1");
  int s = 0;
  for (const auto* x : {&c, &d, &a}) {
    s = embedding_sign(*x, 0, field);
    if (s != 0) break;
  }
  if (s < 0) return GroupElement(-a, -b, -c, -d);
  return GroupElement(a, b, c, d);
}

GroupElement GroupElement::identity() { return GroupElement(RingElement{1}, {}, {}, RingElement{1}); }

bool operator<(const GroupElement& g, const GroupElement& h) { return coefficients(g) < coefficients(h); }

GroupElement compose(const GroupElement& g, const GroupElement& h, const FieldSpec& f) {
  return GroupElement::make(mul(g.a(), h.a(), f) + mul(g.b(), h.c(), f), mul(g.a(), h.b(), f) + mul(g.b(), h.d(), f),
                            mul(g.c(), h.a(), f) + mul(g.d(), h.c(), f), mul(g.c(), h.b(), f) + mul(g.d(), h.d(), f),
                            f);
}

GroupElement inverse(const GroupElement& g, const FieldSpec& field) {
  return GroupElement::make(g.d(), -g.b(), -g.c(), g.a(), field);
}

std::string to_string(const GroupElement& g, const FieldSpec& field) {
  return "[" + to_string(g.a(), field) + ", " + to_string(g.b(), field) + "; " + to_string(g.c(), field) + ", " +
         to_string(g.d(), field) + "]";
}

Point mobius(double a, double b, double c, double d, const Point& z) {
  const double re = c * z.x + d;
  const double im = c * z.y;
  const double den = re * re + im * im;
  return {((a * z.x + b) * re + a * c * z.y * z.y) / den, z.y / den};
}

MultiPoint mobius_apply(const GroupElement& g, const MultiPoint& z, const FieldSpec& field) {
  std::array<Point, kMaxDegree> out{};
  for (int j = 0; j < z.degree(); ++j)
    out[static_cast<std::size_t>(j)] =
        mobius(embed(g.a(), j, field), embed(g.b(), j, field), embed(g.c(), j, field), embed(g.d(), j, field), z[j]);
  return MultiPoint::of(out.data(), z.degree());
}

double u_invariant(const Point& z, const Point& w) {
  const double dx = z.x - w.x;
  const double dy = z.y - w.y;
  return (dx * dx + dy * dy) / (4.0 * z.y * w.y);
}

double dist_from_u(double u) { return 2.0 * std::asinh(std::sqrt(u)); }

double u_from_dist(double t) {
  const double s = std::sinh(0.5 * t);
  return s * s;
}

Reals u_vector(const GroupElement& g, const MultiPoint& z, const FieldSpec& field) {
  const RingElement e = g.a() - g.d();
  Reals u{0.0, 0.0};
  for (int j = 0; j < z.degree(); ++j) {
    const auto [x, y] = z[j];
    const double c = embed(g.c(), j, field);
    const double ej = embed(e, j, field);
    const double re = -c * (x - y) * (x + y) + ej * x + embed(g.b(), j, field);
    const double im = (-2.0 * c * x + ej) * y;
    u[static_cast<std::size_t>(j)] = (re * re + im * im) / (4.0 * y * y);
  }
  return u;
}

bool cd_admissible(const RingElement& c, const RingElement& d0, const MultiPoint& z, const Reals& V,
                   const FieldSpec& field) {
  for (int j = 0; j < z.degree(); ++j) {
    const double v = V[static_cast<std::size_t>(j)];
    const double r = std::sqrt(v) + std::sqrt(v + 1.0);
    const double cj = embed(c, j, field);
    const double re = cj * z[j].x + embed(d0, j, field);
    const double im = cj * z[j].y;
    if (re * re + im * im > r * r * (1.0 + 1e-9)) return false;
  }
  return true;
}

std::optional<std::pair<double, double>> t_interval(Complex w0, Complex zeta, double R) {
  const double len = std::abs(zeta);
  if (!(len >= 1e-300)) throw Error(ErrorCode::DegenerateDirection, "direction vanishes");
  const Complex prod = w0 * std::conj(zeta);
  const double perp = std::abs(prod.imag()) / len;
  if (perp > R) return std::nullopt;
  const double centre = -prod.real() / (len * len);
  const double half = std::sqrt((R - perp) * (R + perp)) / len;
  return std::pair{centre - half, centre + half};
}

EntryBound implied_entry_bound(const MultiPoint& z, const Reals& V, const FieldSpec& field) {
  EntryBound out;
  for (int j = 0; j < z.degree(); ++j) {
    const auto [x, y] = z[j];
    const double f2 = y + (x * x + 1.0) / y;
    // largest squared singular value of (sqrt y, x/sqrt y; 0, 1/sqrt y)
    const double smax2 = 0.5 * (f2 + std::sqrt(std::max(0.0, f2 * f2 - 4.0)));
    out.per_embedding[static_cast<std::size_t>(j)] = smax2 * std::sqrt(4.0 * V[static_cast<std::size_t>(j)] + 2.0);
  }
  if (field.degree() == 1) {
    out.coefficient = out.per_embedding[0];
  } else {
    const double e1 = out.per_embedding[0];
    const double e2 = out.per_embedding[1];
    const double gap = field.omega_gap();
    const double q = (e1 + e2) / gap;
    const double p = (std::abs(field.omega(1)) * e1 + std::abs(field.omega(0)) * e2) / gap;
    out.coefficient = std::max(p, q);
  }
  return out;
}

}  // namespace hlp
