#pragma once

// Selberg transforms of radial profiles, the transform eta(U, V; tau) of the
// characteristic function of [U, V), kernel sums over the orbit, and the
// main-term predictors for the counting functions.

#include <functional>
#include <vector>

#include "hlp/bump.hpp"
#include "hlp/orbit.hpp"
#include "hlp/quadrature.hpp"
#include "hlp/special.hpp"

namespace hlp {

// A function of u >= 0 vanishing beyond support_end; knots mark points where
// it is not smooth (or changes formula), which quadrature uses as breakpoints.
struct Profile {
  std::function<double(double)> k;
  double support_end = 0.0;
  std::vector<double> knots;
};

Profile profile_of(const Bump& bump);

struct TransformResult {
  cplx tau;
  cplx h;
  double error = 0.0;
};

// Three steps: q(p) = int k(p + s^2) 2 ds, g(r) = 2 q(sinh^2(r/2)),
// h(tau) = 2 int_0^R cosh(r tau) g(r) dr. Requires |Re tau| <= 1/2.
TransformResult selberg_transform(const Profile& k, cplx tau);
TransformResult selberg_transform(const Bump& bump, cplx tau);

// Inner integral 2 x^{1/2 - tau} int_0^1 (1 + y(x^2 - 1))^{tau - 1/2} (y(1 - y))^{-1/2} dy
// at x = x(u) = 1 + 2u + 2 sqrt(u + u^2), computed with y = sin^2(theta).
cplx inner_integral(double u, cplx tau);
// The same through 2 pi x^{1/2 - tau} 2F1(1/2 - tau, 1/2; 1; 1 - x^2).
cplx inner_integral_2f1(double u, cplx tau);

// eta(U, V; tau) = 2 int_U^V inner(u) du, integrated in s = sqrt(u).
cplx eta_charfun(double U, double V, cplx tau);
cplx eta_charfun_2f1(double U, double V, cplx tau);

// sqrt(pi) 2^{2 tau + 1} Gamma(tau) / Gamma(3/2 + tau) (V^{tau + 1/2} - U^{tau + 1/2}).
double eta_main_term(double U, double V, double tau);

// sum over the orbit of prod_j k_j(u_j(g)), with one bump per coordinate.
double kernel_sum(const MultiPoint& z, const std::vector<Bump>& bumps, const FieldSpec& field,
                  const OrbitOptions& options = {});

// (4 pi)^d / vol * prod (V_j - U_j)
double main_term_box(const BoxSpec& box, double vol, int d);
// pi^d / vol * e^{d T}
double main_term_hypercube(double T, double vol, int d);
// pi^d 2^e / vol * e^{q T} * prod_{j in E} (cosh B_j - cosh A_j)
double main_term_strip(const StripSpec& strip, double vol, int d);

struct SpectralTerm {
  double weight = 0.0;  // |psi(z)|^2
  Reals tau{0.5, 0.5};
};

// sum_l weight_l prod_j eta_main_term(U_j, V_j, tau_lj); InvalidTau unless
// every tau lies in (0, 1/2].
double exceptional_term(const std::vector<SpectralTerm>& terms, const BoxSpec& box, int d);

}  // namespace hlp
