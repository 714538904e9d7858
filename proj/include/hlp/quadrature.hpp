#pragma once

// Globally adaptive integration on top of a fixed 15-point Gauss-Kronrod panel.

#include <complex>
#include <functional>
#include <vector>

namespace hlp {

struct QuadOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-11;
  int max_panels = 4000;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

// Integrates f over [a, b]. Interior breakpoints (points where f is not smooth)
// seed the initial partition; those outside (a, b) are ignored. Throws
// QuadratureFail if the error target is missed after max_panels panels.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const std::vector<double>& breakpoints = {}, const QuadOptions& options = {});

struct ComplexQuadResult {
  std::complex<double> value;
  double error = 0.0;
};

ComplexQuadResult integrate_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                                    const std::vector<double>& breakpoints = {}, const QuadOptions& options = {});

}  // namespace hlp
