#include "hlp/selberg.hpp"

#include <cmath>
#include <numbers>

namespace hlp {

namespace {

using std::numbers::pi;

const QuadOptions kInner{1e-13, 1e-12, 4000};
const QuadOptions kOuter{1e-11, 1e-11, 4000};

double x_of_u(double u) { return 1.0 + 2.0 * u + 2.0 * std::sqrt(u + u * u); }

void check_tau(cplx tau) {
  if (!(std::abs(tau.real()) <= 0.5) || !std::isfinite(tau.imag()))
    throw Error(ErrorCode::InvalidTau, "transform needs |Re tau| <= 1/2");
}

// q(p) = int_p^inf k(u) (u - p)^{-1/2} du with u = p + s^2.
double q_transform(const Profile& k, double p) {
  if (p >= k.support_end) return 0.0;
  std::vector<double> breaks;
  for (double b : k.knots)
    if (b > p) breaks.push_back(std::sqrt(b - p));
  return integrate([&](double s) { return 2.0 * k.k(p + s * s); }, 0.0, std::sqrt(k.support_end - p), breaks, kInner)
      .value;
}

// 2F1 route and quadrature route share this outer integral in s = sqrt(u).
template <class Inner>
cplx eta_outer(double U, double V, cplx tau, Inner inner) {
  if (!(U >= 0.0) || !(V > U)) throw Error(ErrorCode::InvalidBox, "eta needs 0 <= U < V");
  check_tau(tau);
  auto f = [&](double s) { return 2.0 * inner(s * s, tau) * 2.0 * s; };
  const double a = std::sqrt(U), b = std::sqrt(V);
  if (tau.imag() == 0.0) return integrate([&](double s) { return f(s).real(); }, a, b, {}, kOuter).value;
  return integrate_complex(f, a, b, {}, kOuter).value;
}

}  // namespace

Profile profile_of(const Bump& bump) {
  return {[bump](double u) { return bump(u); }, bump.support_end(), bump.knots()};
}

TransformResult selberg_transform(const Profile& k, cplx tau) {
  check_tau(tau);
  TransformResult out{tau, 0.0, 0.0};
  if (!(k.support_end > 0.0)) return out;
  const double R = 2.0 * std::asinh(std::sqrt(k.support_end));
  std::vector<double> breaks;
  for (double b : k.knots)
    if (b > 0.0) breaks.push_back(2.0 * std::asinh(std::sqrt(b)));
  auto g = [&](double r) {
    const double s = std::sinh(0.5 * r);
    return 2.0 * q_transform(k, s * s);
  };
  // per-point error of q is below the inner tolerance; it enters h with weight <= 4 R cosh(R/2)
  const double inner_err = 4.0 * R * std::cosh(0.5 * R) * kInner.abs_tol;
  if (tau.imag() == 0.0) {
    const auto r = integrate([&](double x) { return 2.0 * std::cosh(x * tau.real()) * g(x); }, 0.0, R, breaks, kOuter);
    out.h = r.value;
    out.error = r.error + inner_err;
  } else if (tau.real() == 0.0) {
    const auto r = integrate([&](double x) { return 2.0 * std::cos(x * tau.imag()) * g(x); }, 0.0, R, breaks, kOuter);
    out.h = r.value;
    out.error = r.error + inner_err;
  } else {
    const auto r =
        integrate_complex([&](double x) { return 2.0 * std::cosh(x * tau) * g(x); }, 0.0, R, breaks, kOuter);
    out.h = r.value;
    out.error = r.error + inner_err;
  }
  return out;
}

TransformResult selberg_transform(const Bump& bump, cplx tau) { return selberg_transform(profile_of(bump), tau); }

cplx inner_integral(double u, cplx tau) {
  const double x = x_of_u(u);
  const double x2m1 = (x - 1.0) * (x + 1.0);
  const cplx e = tau - 0.5;
  // the integrand peaks in a layer of width ~1/x at theta = 0
  std::vector<double> breaks;
  for (double k : {1.0, 10.0, 100.0}) {
    const double t = std::asin(std::min(1.0, k / x));
    if (t < 0.5 * pi) breaks.push_back(t);
  }
  auto f = [&](double theta) {
    const double s = std::sin(theta);
    return std::pow(cplx(1.0 + s * s * x2m1), e);
  };
  cplx integral;
  if (tau.imag() == 0.0) {
    integral = integrate([&](double t) { return f(t).real(); }, 0.0, 0.5 * pi, breaks, kInner).value;
  } else {
    integral = integrate_complex(f, 0.0, 0.5 * pi, breaks, kInner).value;
  }
  return 2.0 * std::pow(cplx(x), -e) * 2.0 * integral;
}

cplx inner_integral_2f1(double u, cplx tau) {
  const double x = x_of_u(u);
  return 2.0 * pi * std::pow(cplx(x), 0.5 - tau) * gauss_2f1(0.5 - tau, 0.5, 1.0, (1.0 - x) * (1.0 + x));
}

cplx eta_charfun(double U, double V, cplx tau) { return eta_outer(U, V, tau, inner_integral); }

cplx eta_charfun_2f1(double U, double V, cplx tau) { return eta_outer(U, V, tau, inner_integral_2f1); }

double eta_main_term(double U, double V, double tau) {
  if (!(tau > 0.0 && tau <= 0.5)) throw Error(ErrorCode::InvalidTau, "main term needs 0 < tau <= 1/2");
  const double c = std::sqrt(pi) * std::exp2(2.0 * tau + 1.0) * std::exp(std::lgamma(tau) - std::lgamma(1.5 + tau));
  return c * (std::pow(V, tau + 0.5) - std::pow(U, tau + 0.5));
}

double kernel_sum(const MultiPoint& z, const std::vector<Bump>& bumps, const FieldSpec& field,
                  const OrbitOptions& options) {
  const int d = field.degree();
  if (static_cast<int>(bumps.size()) != d) throw Error(ErrorCode::InvalidArgument, "need one bump per coordinate");
  Reals V{0.0, 0.0};
  for (int j = 0; j < d; ++j) V[static_cast<std::size_t>(j)] = bumps[static_cast<std::size_t>(j)].support_end();
  const OrbitEnumerator en(field, z, V, options);
  std::vector<double> parts(en.num_blocks(), 0.0);
  for_each_block(en.num_blocks(), options.threads, [&](std::size_t i) {
    en.visit_block(i, [&](const GroupElement&, const Reals& u) {
      double w = 1.0;
      for (int j = 0; j < d; ++j) w *= bumps[static_cast<std::size_t>(j)](u[static_cast<std::size_t>(j)]);
      parts[i] += w;
    });
  });
  double total = 0.0;
  for (double p : parts) total += p;
  return total;
}

double main_term_box(const BoxSpec& box, double vol, int d) {
  double prod = std::pow(4.0 * pi, d) / vol;
  for (int j = 0; j < d; ++j) prod *= box.V[static_cast<std::size_t>(j)] - box.U[static_cast<std::size_t>(j)];
  return prod;
}

double main_term_hypercube(double T, double vol, int d) { return std::pow(pi, d) / vol * std::exp(d * T); }

double main_term_strip(const StripSpec& strip, double vol, int d) {
  // the formula is also meaningful for an empty interval A_j = B_j, which the
  // strip type itself rejects
  StripSpec check = strip;
  for (int j : strip.E) {
    const auto k = static_cast<std::size_t>(j);
    if (j >= 0 && j < d && check.A[k] == check.B[k]) check.B[k] += 1.0;
  }
  validate_strip(check, d);
  const int e = static_cast<int>(strip.E.size());
  const int q = d - e;
  double prod = std::pow(pi, d) * std::exp2(e) / vol * std::exp(q * strip.T);
  for (int j : strip.E) {
    const auto k = static_cast<std::size_t>(j);
    prod *= std::cosh(strip.B[k]) - std::cosh(strip.A[k]);
  }
  return prod;
}

double exceptional_term(const std::vector<SpectralTerm>& terms, const BoxSpec& box, int d) {
  double total = 0.0;
  for (const auto& t : terms) {
    double prod = t.weight;
    for (int j = 0; j < d; ++j) {
      const auto k = static_cast<std::size_t>(j);
      prod *= eta_main_term(box.U[k], box.V[k], t.tau[k]);
    }
    total += prod;
  }
  return total;
}

}  // namespace hlp
