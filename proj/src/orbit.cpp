#include "hlp/orbit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_set>

namespace hlp {

namespace {

constexpr double kSlack = 1e-9;

// Interval widening for floating bounds on coefficient searches; extra
// candidates are rejected later by the u test.
void widen(double& lo, double& hi) {
  const double pad = 1e-9 * (1.0 + std::abs(lo) + std::abs(hi));
  lo -= pad;
  hi += pad;
}

Reals apply_embeddings(const RingElement& x, const FieldSpec& f) { return embed(x, f); }

void check_degree(const MultiPoint& z, const FieldSpec& field) {
  if (z.degree() != field.degree())
    throw Error(ErrorCode::InvalidArgument, "point has " + std::to_string(z.degree()) +
                                                " coordinates, field degree is " + std::to_string(field.degree()));
}

}  // namespace

OrbitEnumerator::OrbitEnumerator(const FieldSpec& field, const MultiPoint& z, const Reals& V,
                                 const OrbitOptions& options)
    : field_(field), z_(z), V_(V), cap_(options.bound_cap) {
  check_degree(z, field);
  const int d = field.degree();
  Reals c_lo{0.0, 0.0};
  Reals c_hi{0.0, 0.0};
  Reals unit_bound{0.0, 0.0};
  for (int j = 0; j < d; ++j) {
    const auto k = static_cast<std::size_t>(j);
    if (!(V[k] >= 0.0) || !std::isfinite(V[k])) throw Error(ErrorCode::InvalidBox, "radius must be finite and >= 0");
    row_radius_[k] = std::sqrt(V[k]) + std::sqrt(V[k] + 1.0);
    w_radius_[k] = 2.0 * std::sqrt(V[k]) * z[j].y;
    // |c z + d| >= |sigma_j(c)| y_j
    c_hi[k] = row_radius_[k] / z[j].y;
    c_lo[k] = -c_hi[k];
    widen(c_lo[k], c_hi[k]);
    guard(c_hi[k]);
    unit_bound[k] = row_radius_[k] * (1.0 + kSlack);
  }
  for_each_in_box(c_lo, c_hi, field_, [&](const RingElement& c) {
    if (embedding_sign(c, 0, field_) > 0) cs_.push_back(c);
  });
  for (const auto& u : units_in_box(unit_bound, field_))
    if (embedding_sign(u, 0, field_) > 0) units_.push_back(u);
}

void OrbitEnumerator::guard(double value) const {
  if (!(std::abs(value) <= cap_))
    throw Error(ErrorCode::OverflowGuard, "search bound " + std::to_string(value) + " exceeds cap");
}

bool OrbitEnumerator::within_slack(const Reals& u) const {
  for (int j = 0; j < field_.degree(); ++j) {
    const auto k = static_cast<std::size_t>(j);
    if (u[k] > V_[k] + kSlack * (1.0 + V_[k])) return false;
  }
  return true;
}

std::uint64_t OrbitEnumerator::visit_block(std::size_t i, const Visitor& visit) const {
  if (i == 0) return visit_c_zero(visit);
  return visit_c(cs_.at(i - 1), visit);
}

// c = 0 forces d to be a unit and a = d^-1; b is free.
std::uint64_t OrbitEnumerator::visit_c_zero(const Visitor& visit) const {
  std::uint64_t candidates = 0;
  const int deg = field_.degree();
  for (const auto& d : units_) {
    const RingElement a = unit_inverse(d, field_);
    const Reals e = apply_embeddings(a - d, field_);
    Reals lo{0.0, 0.0};
    Reals hi{0.0, 0.0};
    bool empty = false;
    for (int j = 0; j < deg && !empty; ++j) {
      const auto k = static_cast<std::size_t>(j);
      const auto iv = t_interval(e[k] * z_[j].as_complex(), Complex{1.0, 0.0}, w_radius_[k] * (1.0 + kSlack));
      if (!iv) {
        empty = true;
        break;
      }
      lo[k] = iv->first;
      hi[k] = iv->second;
      widen(lo[k], hi[k]);
      guard(lo[k]);
      guard(hi[k]);
    }
    if (empty) continue;
    for_each_in_box(lo, hi, field_, [&](const RingElement& b) {
      ++candidates;
      const GroupElement g = GroupElement::make(a, b, RingElement{}, d, field_);
      const Reals u = u_vector(g, z_, field_);
      if (within_slack(u)) visit(g, u);
    });
  }
  return candidates;
}

std::uint64_t OrbitEnumerator::visit_c(const RingElement& c, const Visitor& visit) const {
  std::uint64_t candidates = 0;
  const int deg = field_.degree();
  const Reals sc = apply_embeddings(c, field_);
  Reals d_lo{0.0, 0.0};
  Reals d_hi{0.0, 0.0};
  for (int j = 0; j < deg; ++j) {
    const auto k = static_cast<std::size_t>(j);
    const double r = row_radius_[k] * (1.0 + kSlack);
    const double im = sc[k] * z_[j].y;
    if (std::abs(im) > r) return 0;
    const double half = std::sqrt((r - im) * (r + im));
    d_lo[k] = -sc[k] * z_[j].x - half;
    d_hi[k] = -sc[k] * z_[j].x + half;
    widen(d_lo[k], d_hi[k]);
    guard(d_lo[k]);
    guard(d_hi[k]);
  }

  for_each_in_box(d_lo, d_hi, field_, [&](const RingElement& d0) {
    if (!cd_admissible(c, d0, z_, V_, field_)) return;
    const auto pair = bezout(c, d0, field_);
    if (!pair) return;
    // reduce a0 modulo c so the floating centre of the t-range stays small
    const RingElement shift = euclid_divide(pair->a, c, field_).quotient;
    const RingElement a0 = pair->a - mul(shift, c, field_);
    const RingElement b0 = pair->b - mul(shift, d0, field_);
    const Reals e = apply_embeddings(a0 - d0, field_);
    const Reals sb = apply_embeddings(b0, field_);
    const Reals sd = apply_embeddings(d0, field_);

    Reals lo{0.0, 0.0};
    Reals hi{0.0, 0.0};
    for (int j = 0; j < deg; ++j) {
      const auto k = static_cast<std::size_t>(j);
      const Complex zj = z_[j].as_complex();
      const Complex w0 = -sc[k] * zj * zj + e[k] * zj + sb[k];
      const Complex zeta = sc[k] * zj + sd[k];
      const auto iv = t_interval(w0, zeta, w_radius_[k] * (1.0 + kSlack));
      if (!iv) return;
      lo[k] = iv->first;
      hi[k] = iv->second;
      widen(lo[k], hi[k]);
      guard(lo[k]);
      guard(hi[k]);
    }
    for_each_in_box(lo, hi, field_, [&](const RingElement& t) {
      ++candidates;
      const GroupElement g =
          GroupElement::make(a0 + mul(t, c, field_), b0 + mul(t, d0, field_), c, d0, field_);
      const Reals u = u_vector(g, z_, field_);
      if (within_slack(u)) visit(g, u);
    });
  });
  return candidates;
}

std::vector<OrbitPoint> enumerate_box_orbit(const MultiPoint& z, const Reals& V, const FieldSpec& field,
                                            const OrbitOptions& options) {
  const OrbitEnumerator en(field, z, V, options);
  std::vector<std::vector<OrbitPoint>> parts(en.num_blocks());
  for_each_block(en.num_blocks(), options.threads, [&](std::size_t i) {
    en.visit_block(i, [&](const GroupElement& g, const Reals& u) {
      for (int j = 0; j < field.degree(); ++j)
        if (u[static_cast<std::size_t>(j)] > V[static_cast<std::size_t>(j)]) return;
      parts[i].push_back({g, u});
    });
  });
  std::vector<OrbitPoint> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<OrbitPoint> naive_oracle(const MultiPoint& z, const Reals& V, int entry_bound, const FieldSpec& field) {
  check_degree(z, field);
  if (entry_bound < 0 || entry_bound > 12)
    throw Error(ErrorCode::CostGuard, "oracle entry bound must lie in [0, 12]");
  const int deg = field.degree();
  std::vector<RingElement> elems;
  const Int B = entry_bound;
  for (Int q = deg == 2 ? -B : 0; q <= (deg == 2 ? B : 0); ++q)
    for (Int p = -B; p <= B; ++p) elems.push_back({p, q});
  const double n = static_cast<double>(elems.size());
  if (n * n * n > 1e9) throw Error(ErrorCode::CostGuard, "oracle scan exceeds 1e9 candidates");

  auto small = [B](const RingElement& x) { return std::abs(x.p) <= B && std::abs(x.q) <= B; };
  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::vector<OrbitPoint> out;
  auto consider = [&](const RingElement& a, const RingElement& b, const RingElement& c, const RingElement& d) {
    const GroupElement g = GroupElement::make(a, b, c, d, field);
    if (seen.count(g) != 0) return;
    const MultiPoint gz = mobius_apply(g, z, field);
    Reals u{0.0, 0.0};
    for (int j = 0; j < deg; ++j) {
      const auto k = static_cast<std::size_t>(j);
      u[k] = u_invariant(gz[j], z[j]);
      if (u[k] > V[k]) return;
    }
    seen.insert(g);
    out.push_back({g, u});
  };

  for (const auto& a : elems) {
    for (const auto& b : elems) {
      for (const auto& c : elems) {
        const RingElement bc = mul(b, c, field);
        if (!a.is_zero()) {
          const auto d = exact_quotient(RingElement{1} + bc, a, field);
          if (d && small(*d)) consider(a, b, c, *d);
        } else if (bc == RingElement{-1}) {
          for (const auto& d : elems) consider(a, b, c, d);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const OrbitPoint& x, const OrbitPoint& y) { return x.g < y.g; });
  return out;
}

void validate_box(const BoxSpec& box, int degree) {
  for (int j = 0; j < degree; ++j) {
    const auto k = static_cast<std::size_t>(j);
    if (!(box.U[k] >= 0.0) || !(box.U[k] < box.V[k]) || !std::isfinite(box.V[k]))
      throw Error(ErrorCode::InvalidBox, "box needs 0 <= U_j < V_j in every coordinate");
  }
}

bool in_strip_set(const StripSpec& strip, int j) {
  return std::find(strip.E.begin(), strip.E.end(), j) != strip.E.end();
}

void validate_strip(const StripSpec& strip, int degree) {
  if (strip.E.empty()) throw Error(ErrorCode::InvalidStrip, "E must be nonempty");
  for (int j : strip.E)
    if (j < 0 || j >= degree) throw Error(ErrorCode::InvalidStrip, "E contains coordinate out of range");
  auto sorted = strip.E;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::InvalidStrip, "E contains a repeated coordinate");
  if (static_cast<int>(sorted.size()) >= degree) throw Error(ErrorCode::InvalidStrip, "complement Q must be nonempty");
  if (!(strip.T >= 0.0) || !std::isfinite(strip.T)) throw Error(ErrorCode::InvalidStrip, "T must be finite and >= 0");
  for (int j : strip.E) {
    const auto k = static_cast<std::size_t>(j);
    if (!(strip.A[k] >= 0.0) || !(strip.A[k] < strip.B[k]) || !std::isfinite(strip.B[k]))
      throw Error(ErrorCode::InvalidStrip, "strip needs 0 <= A_j < B_j");
  }
}

Region strip_region(const StripSpec& strip, int degree) {
  validate_strip(strip, degree);
  Region r;
  for (int j = 0; j < degree; ++j) {
    const auto k = static_cast<std::size_t>(j);
    if (in_strip_set(strip, j)) {
      r.U[k] = u_from_dist(strip.A[k]);
      r.V[k] = u_from_dist(strip.B[k]);
      r.closed_upper[k] = false;
    } else {
      r.U[k] = 0.0;
      r.V[k] = u_from_dist(strip.T);
      r.closed_upper[k] = true;
    }
  }
  return r;
}

CountResult count_region(const MultiPoint& z, const Region& region, const FieldSpec& field,
                         const OrbitOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int deg = field.degree();
  const OrbitEnumerator en(field, z, region.V, options);
  std::vector<CountResult> parts(en.num_blocks());
  for_each_block(en.num_blocks(), options.threads, [&](std::size_t i) {
    CountResult& part = parts[i];
    part.candidates = en.visit_block(i, [&](const GroupElement&, const Reals& u) {
      bool inside = true;
      bool near = false;
      for (int j = 0; j < deg; ++j) {
        const auto k = static_cast<std::size_t>(j);
        const double tol = kBoundaryTolerance * (1.0 + u[k]);
        // u >= 0 always, and only the identity sits at 0, so a zero lower
        // bound is not a boundary
        if (region.U[k] > 0.0 && std::abs(u[k] - region.U[k]) <= tol) near = true;
        if (std::abs(u[k] - region.V[k]) <= tol) near = true;
        if (u[k] < region.U[k]) inside = false;
        if (region.closed_upper[k] ? u[k] > region.V[k] : u[k] >= region.V[k]) inside = false;
      }
      if (inside) ++part.count;
      if (near) ++part.near_boundary;
    });
  });
  CountResult total;
  for (const auto& p : parts) {
    total.count += p.count;
    total.candidates += p.candidates;
    total.near_boundary += p.near_boundary;
  }
  total.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

CountResult count_box(const MultiPoint& z, const BoxSpec& box, const FieldSpec& field, const OrbitOptions& options) {
  validate_box(box, field.degree());
  return count_region(z, Region{box.U, box.V, {false, false}}, field, options);
}

CountResult count_hypercube(const MultiPoint& z, double T, const FieldSpec& field, const OrbitOptions& options) {
  if (!(T >= 0.0) || !std::isfinite(T)) throw Error(ErrorCode::InvalidBox, "T must be finite and >= 0");
  const double v = u_from_dist(T);
  return count_region(z, Region{{0.0, 0.0}, {v, v}, {true, true}}, field, options);
}

CountResult count_strip(const MultiPoint& z, const StripSpec& strip, const FieldSpec& field,
                        const OrbitOptions& options) {
  return count_region(z, strip_region(strip, field.degree()), field, options);
}

}  // namespace hlp
