#pragma once

// Exact arithmetic in Z and in the ring of integers of Q(sqrt m) for the
// norm-Euclidean fields m = 2, 3, 5, 13.
//
// An element is stored as p + q*w in the integral basis (1, w), where
// w = sqrt(m) for m = 2, 3 (mod 4) and w = (1 + sqrt m)/2 for m = 1 (mod 4).
// In both cases w^2 = s*w + n with small integers s, n.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hlp/errors.hpp"

namespace hlp {

using Int = std::int64_t;

inline constexpr int kMaxDegree = 2;

// One value per real embedding; entries past the field degree are unused.
using Reals = std::array<double, kMaxDegree>;

struct RingElement {
  Int p = 0;
  Int q = 0;

  constexpr RingElement() = default;
  constexpr RingElement(Int p_, Int q_ = 0) : p(p_), q(q_) {}

  constexpr bool is_zero() const { return p == 0 && q == 0; }
  friend constexpr bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement operator+(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x);

struct RingElementHash {
  std::size_t operator()(const RingElement& x) const noexcept {
    std::size_t h = std::hash<Int>{}(x.p);
    return h ^ (std::hash<Int>{}(x.q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

class FieldSpec {
 public:
  // The rational integers (degree 1).
  static FieldSpec integers();
  // Ring of integers of Q(sqrt m); throws UnsupportedField unless m is one of
  // supported_m().
  static FieldSpec real_quadratic(Int m);
  static const std::vector<Int>& supported_m();

  int degree() const { return degree_; }
  Int m() const { return m_; }
  Int omega_trace() const { return s_; }
  Int omega_constant() const { return n_; }
  // Field discriminant; 1 for Z.
  Int discriminant() const;

  double omega(int j) const { return omega_[static_cast<std::size_t>(j)]; }
  // sigma_1(w) - sigma_2(w) > 0.
  double omega_gap() const { return omega_[0] - omega_[1]; }

  // Fundamental unit with |sigma_1| > 1; -1 for Z (which has no free units).
  const RingElement& fundamental_unit() const { return unit_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.degree_ == b.degree_ && a.m_ == b.m_;
  }

 private:
  FieldSpec() = default;

  int degree_ = 1;
  Int m_ = 0;
  Int s_ = 0;
  Int n_ = 0;
  Reals omega_{0.0, 0.0};
  RingElement unit_{-1, 0};
};

RingElement mul(const RingElement& x, const RingElement& y, const FieldSpec& field);
RingElement conj(const RingElement& x, const FieldSpec& field);
// Field norm; for Z this is the integer itself.
Int norm(const RingElement& x, const FieldSpec& field);
bool is_unit(const RingElement& x, const FieldSpec& field);
RingElement unit_inverse(const RingElement& u, const FieldSpec& field);
// x / y when the quotient lies in the ring.
std::optional<RingElement> exact_quotient(const RingElement& x, const RingElement& y,
                                          const FieldSpec& field);

inline double embed(const RingElement& x, int j, const FieldSpec& field) {
  return static_cast<double>(x.p) + static_cast<double>(x.q) * field.omega(j);
}
Reals embed(const RingElement& x, const FieldSpec& field);

// Exact sign of sigma_j(x) - c.
int compare_embedding(const RingElement& x, int j, double c, const FieldSpec& field);
// Exact sign of sigma_j(x).
int embedding_sign(const RingElement& x, int j, const FieldSpec& field);
// Exact test lo_j <= sigma_j(x) <= hi_j for every embedding.
bool embeddings_within(const RingElement& x, const Reals& lo, const Reals& hi,
                       const FieldSpec& field);

struct DivMod {
  RingElement quotient;
  RingElement remainder;
};

// Norm-Euclidean division: |N(remainder)| < |N(divisor)|. Throws DivisionStuck
// if no quotient candidate reduces the norm.
DivMod euclid_divide(const RingElement& x, const RingElement& y, const FieldSpec& field);

struct BezoutPair {
  RingElement a;
  RingElement b;
};

// (a, b) with a*d0 - b*c = 1, or nullopt when (c, d0) is not the unit ideal.
std::optional<BezoutPair> bezout(const RingElement& c, const RingElement& d0,
                                 const FieldSpec& field);

// Calls visit(x) for every x with lo_j <= sigma_j(x) <= hi_j, each exactly once.
// Coefficient ranges are derived in floating point, widened, and every
// candidate near an edge is decided by compare_embedding.
template <class Visit>
void for_each_in_box(const Reals& lo, const Reals& hi, const FieldSpec& field, Visit&& visit);

// Elements with |sigma_j(x)| <= bounds_j.
template <class Visit>
void enumerate_ring_box(const Reals& bounds, const FieldSpec& field, Visit&& visit) {
  for_each_in_box(Reals{-bounds[0], -bounds[1]}, bounds, field, std::forward<Visit>(visit));
}

std::vector<RingElement> ring_box_elements(const Reals& bounds, const FieldSpec& field);

// All units +-eps^k with |sigma_j| <= bounds_j, ordered by k then sign.
std::vector<RingElement> units_in_box(const Reals& bounds, const FieldSpec& field);

std::string to_string(const RingElement& x, const FieldSpec& field);

namespace detail {

[[noreturn]] void throw_box_guard(double value);

inline void check_box_range(double lo, double hi) {
  constexpr double kLimit = 1e15;
  if (!(std::abs(lo) < kLimit) || !(std::abs(hi) < kLimit)) throw_box_guard(std::max(std::abs(lo), std::abs(hi)));
}

}  // namespace detail

template <class Visit>
void for_each_in_box(const Reals& lo, const Reals& hi, const FieldSpec& field, Visit&& visit) {
  if (field.degree() == 1) {
    if (lo[0] > hi[0]) return;
    detail::check_box_range(lo[0], hi[0]);
    const auto first = static_cast<Int>(std::ceil(lo[0]));
    const auto last = static_cast<Int>(std::floor(hi[0]));
    for (Int p = first; p <= last; ++p) visit(RingElement{p, 0});
    return;
  }

  if (lo[0] > hi[0] || lo[1] > hi[1]) return;
  detail::check_box_range(lo[0], hi[0]);
  detail::check_box_range(lo[1], hi[1]);

  const double w1 = field.omega(0);
  const double w2 = field.omega(1);
  const double gap = field.omega_gap();
  // sigma_1 - sigma_2 = q * gap
  const auto q_first = static_cast<Int>(std::floor((lo[0] - hi[1]) / gap)) - 1;
  const auto q_last = static_cast<Int>(std::ceil((hi[0] - lo[1]) / gap)) + 1;
  for (Int q = q_first; q <= q_last; ++q) {
    const double dq = static_cast<double>(q);
    const double p_lo = std::max(lo[0] - dq * w1, lo[1] - dq * w2);
    const double p_hi = std::min(hi[0] - dq * w1, hi[1] - dq * w2);
    const double margin = 1e-9 * (1.0 + std::abs(p_lo) + std::abs(p_hi) + std::abs(dq));
    if (p_lo - margin > p_hi + margin) continue;
    const auto p_first = static_cast<Int>(std::ceil(p_lo - margin));
    const auto p_last = static_cast<Int>(std::floor(p_hi + margin));
    for (Int p = p_first; p <= p_last; ++p) {
      const double dp = static_cast<double>(p);
      const RingElement x{p, q};
      if (dp - p_lo > margin && p_hi - dp > margin) {
        visit(x);
      } else if (embeddings_within(x, lo, hi, field)) {
        visit(x);
      }
    }
  }
}

}  // namespace hlp
