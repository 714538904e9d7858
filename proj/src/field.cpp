#include "hlp/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <sstream>

namespace hlp {

namespace {

using Wide = __int128;
using Big = boost::multiprecision::cpp_int;

Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    throw Error(ErrorCode::Overflow, "ring coefficient exceeds 64 bits");
  }
  return static_cast<Int>(v);
}

// Nearest integer to num/den, den != 0; ties round up.
Wide round_div(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide t = 2 * num + den;
  Wide d2 = 2 * den;
  Wide q = t / d2;
  if (t % d2 != 0 && t < 0) --q;
  return q;
}

// Twice the embedding, X + sign*Y*sqrt(m), as exact integers.
void doubled_embedding(const RingElement& x, const FieldSpec& field, Wide& X, Wide& Y) {
  if (field.omega_trace() == 1) {
    X = 2 * static_cast<Wide>(x.p) + x.q;
    Y = x.q;
  } else {
    X = 2 * static_cast<Wide>(x.p);
    Y = 2 * static_cast<Wide>(x.q);
  }
}

// sign(P + Q*sqrt(m)) for integers P, Q and non-square m > 0.
template <class N>
int sign_with_root(const N& P, const N& Q, Int m) {
  if (P >= 0 && Q >= 0) return (P > 0 || Q > 0) ? 1 : 0;
  if (P <= 0 && Q <= 0) return (P < 0 || Q < 0) ? -1 : 0;
  const N lhs = P * P;
  const N rhs = Q * Q * m;
  if (P > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

Big to_big(Wide v) {
  const bool negative = v < 0;
  const auto mag = static_cast<unsigned __int128>(negative ? -v : v);
  Big out = Big(static_cast<std::uint64_t>(mag >> 64));
  out <<= 64;
  out += Big(static_cast<std::uint64_t>(mag));
  return negative ? Big(-out) : out;
}

int compare_exact(const RingElement& x, int j, double c, const FieldSpec& field) {
  Wide Xw = 0;
  Wide Yw = 0;
  doubled_embedding(x, field, Xw, Yw);
  if (j == 1) Yw = -Yw;
  // 2c = M * 2^k exactly
  int e = 0;
  const double f = std::frexp(c, &e);
  const auto M = static_cast<std::int64_t>(std::ldexp(f, 53));
  const int k = e - 52;
  Big X = to_big(Xw);
  Big Y = to_big(Yw);
  Big P;
  if (k >= 0) {
    P = X - Big(M) * (Big(1) << k);
  } else {
    P = (X << -k) - Big(M);
    Y <<= -k;
  }
  return sign_with_root(P, Y, field.m());
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::InvalidStrip: return "InvalidStrip";
    case ErrorCode::InvalidBox: return "InvalidBox";
    case ErrorCode::InvalidBump: return "InvalidBump";
    case ErrorCode::InvalidTau: return "InvalidTau";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::OverflowGuard: return "OverflowGuard";
    case ErrorCode::CostGuard: return "CostGuard";
    case ErrorCode::DivisionStuck: return "DivisionStuck";
    case ErrorCode::QuadratureFail: return "QuadratureFail";
    case ErrorCode::SeriesDiverged: return "SeriesDiverged";
    case ErrorCode::IterationCap: return "IterationCap";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
  }
  return "Error";
}

bool is_numeric(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow:
    case ErrorCode::OverflowGuard:
    case ErrorCode::CostGuard:
    case ErrorCode::DivisionStuck:
    case ErrorCode::QuadratureFail:
    case ErrorCode::SeriesDiverged:
    case ErrorCode::IterationCap:
    case ErrorCode::DegenerateFit:
      return true;
    default:
      return false;
  }
}

RingElement operator+(const RingElement& x, const RingElement& y) {
  return {narrow(static_cast<Wide>(x.p) + y.p), narrow(static_cast<Wide>(x.q) + y.q)};
}

RingElement operator-(const RingElement& x, const RingElement& y) {
  return {narrow(static_cast<Wide>(x.p) - y.p), narrow(static_cast<Wide>(x.q) - y.q)};
}

RingElement operator-(const RingElement& x) {
  return {narrow(-static_cast<Wide>(x.p)), narrow(-static_cast<Wide>(x.q))};
}

FieldSpec FieldSpec::integers() { return FieldSpec{}; }

const std::vector<Int>& FieldSpec::supported_m() {
  static const std::vector<Int> kSupported{2, 3, 5, 13};
  return kSupported;
}

FieldSpec FieldSpec::real_quadratic(Int m) {
  FieldSpec f;
  f.degree_ = 2;
  f.m_ = m;
  const double root = std::sqrt(static_cast<double>(m));
  switch (m) {
    case 2:
      f.unit_ = {1, 1};
      break;
    case 3:
      f.unit_ = {2, 1};
      break;
    case 5:
      f.unit_ = {0, 1};
      break;
    case 13:
      f.unit_ = {1, 1};
      break;
    default:
      throw Error(ErrorCode::UnsupportedField,
                  "m = " + std::to_string(m) + " is not one of the norm-Euclidean fields 2, 3, 5, 13");
  }
  if (m % 4 == 1) {
    f.s_ = 1;
    f.n_ = (m - 1) / 4;
    f.omega_ = {(1.0 + root) / 2.0, (1.0 - root) / 2.0};
  } else {
    f.s_ = 0;
    f.n_ = m;
    f.omega_ = {root, -root};
  }
  return f;
}

Int FieldSpec::discriminant() const {
  if (degree_ == 1) return 1;
  return m_ % 4 == 1 ? m_ : 4 * m_;
}

RingElement mul(const RingElement& x, const RingElement& y, const FieldSpec& field) {
  if (field.degree() == 1) return {narrow(static_cast<Wide>(x.p) * y.p), 0};
  const Wide qq = static_cast<Wide>(x.q) * y.q;
  const Wide p = static_cast<Wide>(x.p) * y.p + qq * field.omega_constant();
  const Wide q = static_cast<Wide>(x.p) * y.q + static_cast<Wide>(x.q) * y.p + qq * field.omega_trace();
  return {narrow(p), narrow(q)};
}

RingElement conj(const RingElement& x, const FieldSpec& field) {
  if (field.degree() == 1) return x;
  return {narrow(static_cast<Wide>(x.p) + static_cast<Wide>(x.q) * field.omega_trace()), narrow(-static_cast<Wide>(x.q))};
}

Int norm(const RingElement& x, const FieldSpec& field) {
  if (field.degree() == 1) return x.p;
  const Wide p = x.p;
  const Wide q = x.q;
  return narrow(p * p + field.omega_trace() * p * q - field.omega_constant() * q * q);
}

bool is_unit(const RingElement& x, const FieldSpec& field) {
  const Int n = norm(x, field);
  return n == 1 || n == -1;
}

RingElement unit_inverse(const RingElement& u, const FieldSpec& field) {
  const Int n = norm(u, field);
  if (n != 1 && n != -1) throw Error(ErrorCode::InvalidArgument, "not a unit: " + to_string(u, field));
  if (field.degree() == 1) return u;
  const RingElement c = conj(u, field);
  return n == 1 ? c : -c;
}

std::optional<RingElement> exact_quotient(const RingElement& x, const RingElement& y,
                                          const FieldSpec& field) {
  if (y.is_zero()) return std::nullopt;
  if (field.degree() == 1) {
    if (x.p % y.p != 0) return std::nullopt;
    return RingElement{x.p / y.p, 0};
  }
  const RingElement num = mul(x, conj(y, field), field);
  const Int n = norm(y, field);
  if (num.p % n != 0 || num.q % n != 0) return std::nullopt;
  return RingElement{num.p / n, num.q / n};
}

Reals embed(const RingElement& x, const FieldSpec& field) {
  Reals out{0.0, 0.0};
  for (int j = 0; j < field.degree(); ++j) out[static_cast<std::size_t>(j)] = embed(x, j, field);
  return out;
}

int compare_embedding(const RingElement& x, int j, double c, const FieldSpec& field) {
  if (field.degree() == 1 || x.q == 0) {
    const double v = static_cast<double>(x.p);
    if (std::abs(x.p) < (Int{1} << 53)) return v < c ? -1 : (v > c ? 1 : 0);
    if (field.degree() == 1) return compare_exact(x, 0, c, field);
  }
  const double v = embed(x, j, field);
  const double scale = std::abs(static_cast<double>(x.p)) +
                       std::abs(static_cast<double>(x.q) * field.omega(j)) + std::abs(c);
  const double margin = 1e-13 * scale + std::numeric_limits<double>::denorm_min();
  if (v - c > margin) return 1;
  if (c - v > margin) return -1;
  return compare_exact(x, j, c, field);
}

int embedding_sign(const RingElement& x, int j, const FieldSpec& field) {
  if (field.degree() == 1) return (x.p > 0) - (x.p < 0);
  Wide X = 0;
  Wide Y = 0;
  doubled_embedding(x, field, X, Y);
  if (j == 1) Y = -Y;
  return sign_with_root<Wide>(X, Y, field.m());
}

bool embeddings_within(const RingElement& x, const Reals& lo, const Reals& hi,
                       const FieldSpec& field) {
  for (int j = 0; j < field.degree(); ++j) {
    const auto k = static_cast<std::size_t>(j);
    if (compare_embedding(x, j, lo[k], field) < 0) return false;
    if (compare_embedding(x, j, hi[k], field) > 0) return false;
  }
  return true;
}

DivMod euclid_divide(const RingElement& x, const RingElement& y, const FieldSpec& field) {
  if (y.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  const Int ny = norm(y, field);
  const Wide target = ny < 0 ? -static_cast<Wide>(ny) : static_cast<Wide>(ny);

  if (field.degree() == 1) {
    const RingElement q0{narrow(round_div(x.p, y.p)), 0};
    DivMod best{q0, x - mul(q0, y, field)};
    for (Int off : {-1, 1}) {
      const RingElement q{q0.p + off, 0};
      const RingElement r = x - mul(q, y, field);
      if (std::abs(r.p) < std::abs(best.remainder.p)) best = {q, r};
    }
    return best;
  }

  const RingElement num = mul(x, conj(y, field), field);
  const RingElement q0{narrow(round_div(num.p, ny)), narrow(round_div(num.q, ny))};
  static constexpr std::array<std::array<Int, 2>, 9> kOffsets{{
      {0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  std::optional<DivMod> best;
  Wide best_norm = 0;
  for (const auto& off : kOffsets) {
    const RingElement q{q0.p + off[0], q0.q + off[1]};
    const RingElement r = x - mul(q, y, field);
    const Int nr = norm(r, field);
    const Wide a = nr < 0 ? -static_cast<Wide>(nr) : static_cast<Wide>(nr);
    if (a < target && (!best || a < best_norm)) {
      best = DivMod{q, r};
      best_norm = a;
    }
  }
  if (!best) {
    throw Error(ErrorCode::DivisionStuck,
                "no quotient candidate reduces the norm for " + to_string(x, field) + " / " + to_string(y, field));
  }
  return *best;
}

std::optional<BezoutPair> bezout(const RingElement& c, const RingElement& d0, const FieldSpec& field) {
  if (c.is_zero() && d0.is_zero()) throw Error(ErrorCode::InvalidArgument, "bezout of (0, 0)");
  // r = s*d0 + t*c throughout
  RingElement r0 = d0, s0{1}, t0{0};
  RingElement r1 = c, s1{0}, t1{1};
  while (!r1.is_zero()) {
    const DivMod dm = euclid_divide(r0, r1, field);
    RingElement r2 = dm.remainder;
    RingElement s2 = s0 - mul(dm.quotient, s1, field);
    RingElement t2 = t0 - mul(dm.quotient, t1, field);
    r0 = r1;
    s0 = s1;
    t0 = t1;
    r1 = r2;
    s1 = s2;
    t1 = t2;
  }
  if (!is_unit(r0, field)) return std::nullopt;
  const RingElement ginv = unit_inverse(r0, field);
  return BezoutPair{mul(s0, ginv, field), -mul(t0, ginv, field)};
}

std::vector<RingElement> ring_box_elements(const Reals& bounds, const FieldSpec& field) {
  std::vector<RingElement> out;
  enumerate_ring_box(bounds, field, [&](const RingElement& x) { out.push_back(x); });
  return out;
}

std::vector<RingElement> units_in_box(const Reals& bounds, const FieldSpec& field) {
  if (field.degree() == 1) return {RingElement{1}, RingElement{-1}};

  const Reals lo{-bounds[0], -bounds[1]};
  const auto inside = [&](const RingElement& u) { return embeddings_within(u, lo, bounds, field); };
  const RingElement eps = field.fundamental_unit();
  const RingElement eps_inv = unit_inverse(eps, field);

  // |sigma_1(eps^k)| grows with k and |sigma_2(eps^k)| shrinks.
  std::vector<RingElement> down;
  for (RingElement u = eps_inv; compare_embedding(u, 1, bounds[1], field) <= 0 &&
                                compare_embedding(u, 1, -bounds[1], field) >= 0;
       u = mul(u, eps_inv, field)) {
    if (inside(u)) down.push_back(u);
  }
  std::vector<RingElement> out;
  for (auto it = down.rbegin(); it != down.rend(); ++it) {
    out.push_back(*it);
    out.push_back(-*it);
  }
  for (RingElement u{1}; compare_embedding(u, 0, bounds[0], field) <= 0 &&
                         compare_embedding(u, 0, -bounds[0], field) >= 0;
       u = mul(u, eps, field)) {
    if (inside(u)) {
      out.push_back(u);
      out.push_back(-u);
    }
  }
  return out;
}

std::string to_string(const RingElement& x, const FieldSpec& field) {
  std::ostringstream os;
  if (field.degree() == 1 || x.q == 0) {
    os << x.p;
  } else {
    os << x.p << (x.q < 0 ? "-" : "+") << std::abs(x.q) << "w";
  }
  return os.str();
}

namespace detail {

void throw_box_guard(double value) {
  throw Error(ErrorCode::OverflowGuard, "ring box bound " + std::to_string(value) + " is out of range");
}

}  // namespace detail

}  // namespace hlp
