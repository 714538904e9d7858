#pragma once

#include <complex>

namespace hlp {

using cplx = std::complex<double>;

// log Gamma by the Lanczos approximation (g = 7, 9 terms), with reflection for
// Re z < 1/2. The imaginary part is only defined modulo 2 pi.
cplx log_gamma(cplx z);
cplx gamma(cplx z);
// 1 / Gamma(z); exactly zero at the poles.
cplx rgamma(cplx z);

// Gauss hypergeometric 2F1(a, b; c; x) for real x < 0.9:
//   |x| < 0.9         power series
//   -3 <= x <= -0.9   Pfaff: (1 - x)^-a 2F1(a, c - b; c; x / (x - 1))
//   x < -3            connection formulas at 1 / (1 - x)
// A nonpositive integer a or b gives a polynomial, summed directly for any x.
// Throws InvalidArgument for c in {0, -1, ...} or x >= 0.9 and SeriesDiverged
// if a series fails to converge in 10^4 terms.
cplx gauss_2f1(cplx a, cplx b, cplx c, double x);

}  // namespace hlp
