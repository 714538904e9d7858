#include "hlp/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hlp/errors.hpp"

namespace hlp {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

cplx power_series(cplx a, cplx b, cplx c, double x) {
  cplx term = 1.0;
  cplx sum = 1.0;
  int small = 0;
  for (int n = 0; n < 10000; ++n) {
    const double dn = n;
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
    sum += term;
    if (term == 0.0) return sum;
    small = std::abs(term) <= 1e-17 * std::abs(sum) ? small + 1 : 0;
    if (small >= 2) return sum;
  }
  throw Error(ErrorCode::SeriesDiverged, "2F1 series did not converge at x = " + std::to_string(x));
}

cplx polynomial(cplx a, cplx b, cplx c, double x) {
  const double stop = nonpositive_integer(a) ? -a.real() : -b.real();
  cplx term = 1.0;
  cplx sum = 1.0;
  for (int n = 0; n < static_cast<int>(stop); ++n) {
    const double dn = n;
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
    sum += term;
  }
  return sum;
}

// Both terms of the 1/(1 - x) connection formula; requires a - b not an integer.
cplx connection(cplx a, cplx b, cplx c, double x) {
  const double w = 1.0 / (1.0 - x);
  const double one_minus_x = 1.0 - x;
  const cplx first = gamma(b - a) * rgamma(b) * rgamma(c - a) * std::pow(cplx(one_minus_x), -a) *
                     power_series(a, c - b, a - b + 1.0, w);
  const cplx second = gamma(a - b) * rgamma(a) * rgamma(c - b) * std::pow(cplx(one_minus_x), -b) *
                      power_series(b, c - a, b - a + 1.0, w);
  return gamma(c) * (first + second);
}

}  // namespace

cplx log_gamma(cplx z) {
  using std::numbers::pi;
  if (z.real() < 0.5) return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx gamma(cplx z) {
  if (nonpositive_integer(z)) throw Error(ErrorCode::InvalidArgument, "Gamma pole");
  return std::exp(log_gamma(z));
}

cplx rgamma(cplx z) {
  if (nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

cplx gauss_2f1(cplx a, cplx b, cplx c, double x) {
  if (nonpositive_integer(c)) throw Error(ErrorCode::InvalidArgument, "2F1 with c a nonpositive integer");
  if (!(x < 0.9)) throw Error(ErrorCode::InvalidArgument, "2F1 evaluated only for x < 0.9");
  if (nonpositive_integer(a) || nonpositive_integer(b)) return polynomial(a, b, c, x);
  if (std::abs(x) < 0.9) return power_series(a, b, c, x);
  if (x >= -3.0) return std::pow(cplx(1.0 - x), -a) * power_series(a, c - b, c, x / (x - 1.0));

  const cplx diff = a - b;
  if (std::abs(diff - std::round(diff.real())) > 1e-5) return connection(a, b, c, x);
  // a - b (nearly) an integer: the two terms have cancelling poles. The value
  // is analytic in b, so the symmetric average over b +- h is even in h; two
  // Richardson steps on h, 2h, 4h leave O((h log(1 - x))^6), and the
  // cancellation costs about log10(1/h) digits.
  constexpr double h = 1e-3;
  const auto avg = [&](double s) { return 0.5 * (connection(a, b + s, c, x) + connection(a, b - s, c, x)); };
  const cplx f1 = avg(h), f2 = avg(2.0 * h), f4 = avg(4.0 * h);
  const cplx r1 = (4.0 * f1 - f2) / 3.0, r2 = (4.0 * f2 - f4) / 3.0;
  return (16.0 * r1 - r2) / 15.0;
}

}  // namespace hlp
