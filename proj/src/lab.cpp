#include "hlp/lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hlp/reduction.hpp"
#include "hlp/selberg.hpp"

namespace hlp {

namespace {

using std::numbers::pi;

// Kronecker symbol (a / n) for n > 0.
int kronecker(Int a, Int n) {
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    const Int r = ((a % 8) + 8) % 8;
    if (r == 0 || r == 2 || r == 4 || r == 6) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  a = ((a % n) + n) % n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const Int r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::string format(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

}  // namespace

FieldSpec field_of(const ExperimentConfig& cfg) {
  return cfg.group == GroupKind::Modular ? FieldSpec::integers() : FieldSpec::real_quadratic(cfg.m);
}

MultiPoint point_of(const ExperimentConfig& cfg) {
  if (cfg.z.empty() || cfg.z.size() > static_cast<std::size_t>(kMaxDegree))
    throw Error(ErrorCode::InvalidArgument, "base point needs 1 or 2 coordinates");
  return MultiPoint::of(cfg.z.data(), static_cast<int>(cfg.z.size()));
}

StripSpec strip_of(const ExperimentConfig& cfg, double T) {
  if (cfg.strip_A.size() != cfg.strip_E.size() || cfg.strip_B.size() != cfg.strip_E.size())
    throw Error(ErrorCode::InvalidStrip, "strip.A and strip.B need one entry per element of strip.E");
  StripSpec s;
  s.E = cfg.strip_E;
  s.T = T;
  for (std::size_t i = 0; i < cfg.strip_E.size(); ++i) {
    const int j = cfg.strip_E[i];
    if (j < 0 || j >= kMaxDegree) throw Error(ErrorCode::InvalidStrip, "strip.E out of range");
    s.A[static_cast<std::size_t>(j)] = cfg.strip_A[i];
    s.B[static_cast<std::size_t>(j)] = cfg.strip_B[i];
  }
  return s;
}

std::vector<double> grid_values(const ExperimentConfig& cfg) {
  if (!(cfg.grid_step > 0.0) || !(cfg.grid_min <= cfg.grid_max) || !std::isfinite(cfg.grid_max))
    throw Error(ErrorCode::EmptyGrid, "grid needs step > 0 and min <= max");
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor((cfg.grid_max - cfg.grid_min) / cfg.grid_step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(cfg.grid_min + static_cast<double>(i) * cfg.grid_step);
  return out;
}

void validate(const ExperimentConfig& cfg) {
  const FieldSpec field = field_of(cfg);
  if (static_cast<int>(cfg.z.size()) != field.degree())
    throw Error(ErrorCode::InvalidArgument, "base point has " + std::to_string(cfg.z.size()) +
                                                " coordinates, group needs " + std::to_string(field.degree()));
  point_of(cfg);
  if (cfg.threads < 0) throw Error(ErrorCode::InvalidArgument, "threads must be >= 0");
  if (!(cfg.tauhat >= 0.0 && cfg.tauhat <= 0.5)) throw Error(ErrorCode::InvalidTau, "params.tauhat must lie in [0, 1/2]");
  if (cfg.kind == ExperimentKind::TransformSuite) return;
  const auto grid = grid_values(cfg);
  if (grid.front() < 0.0) throw Error(ErrorCode::EmptyGrid, "grid values must be >= 0");
  if (cfg.kind == ExperimentKind::Strip) validate_strip(strip_of(cfg, grid.front()), field.degree());
  const ExperimentSummary s = summarize(cfg);
  if (s.qhat < s.q) throw Error(ErrorCode::InvalidArgument, "params.qhat must be >= #Q");
}

double covolume(const FieldSpec& field) {
  if (field.degree() == 1) return pi / 3.0;
  const Int D = field.discriminant();
  // 6 D B_{2,chi} = sum_{a=1}^{D} chi(a) (6a^2 - 6aD + D^2)
  Int sum = 0;
  for (Int a = 1; a <= D; ++a) sum += kronecker(D, a) * (6 * a * a - 6 * a * D + D * D);
  const double bernoulli = static_cast<double>(sum) / static_cast<double>(6 * D);
  return 8.0 * pi * pi * bernoulli / 24.0;
}

ExperimentSummary summarize(const ExperimentConfig& cfg) {
  ExperimentSummary s;
  const int d = static_cast<int>(cfg.z.size());
  s.tauhat = cfg.tauhat;
  s.box_mode = cfg.box_mode == BoxMode::Zero ? "zero" : "half";
  if (cfg.kind == ExperimentKind::Strip) {
    s.e = static_cast<int>(cfg.strip_E.size());
    s.q = d - s.e;
  } else {
    s.e = 0;
    s.q = d;
  }
  s.qhat = cfg.qhat.value_or(static_cast<double>(s.q));
  if (cfg.kind == ExperimentKind::TransformSuite || s.q <= 0) return s;
  const double qh = s.qhat, tau = s.tauhat, e = s.e, q = s.q;
  if (s.e == 0) {
    s.large_gap = tau <= qh / (2.0 * (qh + 2.0));
    s.predicted_exponent = s.large_gap ? q * (qh + 1.0) / (qh + 2.0)
                                       : q * (2.0 / 3.0 * (tau + 1.0) - 2.0 * tau / (3.0 * qh));
  } else {
    s.large_gap = tau <= qh / (2.0 * (qh + 2.0 + e));
    s.predicted_exponent = s.large_gap ? q * (qh + 1.0 + e) / (qh + 2.0 + e) : q * (1.0 + 2.0 * tau + e) / (2.0 + e);
  }
  return s;
}

std::vector<CountReport> run_count_experiment(const ExperimentConfig& cfg,
                                              const std::function<void(const CountReport&)>& sink) {
  validate(cfg);
  if (cfg.kind == ExperimentKind::TransformSuite)
    throw Error(ErrorCode::InvalidArgument, "transform-suite is not a counting experiment");
  const FieldSpec field = field_of(cfg);
  const MultiPoint z = point_of(cfg);
  const int d = field.degree();
  const double vol = covolume(field);
  const double n_z = height_components(z, field).n;
  const OrbitOptions options{1e9, cfg.threads};

  std::vector<CountReport> out;
  for (double T : grid_values(cfg)) {
    CountReport row;
    row.T = T;
    row.n_of_z = n_z;
    CountResult r;
    switch (cfg.kind) {
      case ExperimentKind::Hypercube:
        r = count_hypercube(z, T, field, options);
        row.main_term = main_term_hypercube(T, vol, d);
        break;
      case ExperimentKind::Box: {
        const double v = u_from_dist(T);
        const double u = cfg.box_mode == BoxMode::Zero ? 0.0 : 0.5 * v;
        const BoxSpec box{{u, u}, {v, v}};
        r = count_box(z, box, field, options);
        row.main_term = main_term_box(box, vol, d);
        break;
      }
      case ExperimentKind::Strip: {
        const StripSpec s = strip_of(cfg, T);
        r = count_strip(z, s, field, options);
        row.main_term = main_term_strip(s, vol, d);
        break;
      }
      case ExperimentKind::TransformSuite:
        break;
    }
    row.count = r.count;
    row.near_boundary = r.near_boundary;
    row.wall_s = r.wall_s;
    row.excess = static_cast<double>(r.count) - row.main_term;
    row.ratio = static_cast<double>(r.count) / row.main_term;
    if (sink) sink(row);
    out.push_back(row);
  }
  return out;
}

FitResult fit_error_exponent(const std::vector<CountReport>& reports) {
  std::vector<double> xs, ys;
  int sign = 0;
  FitResult fit;
  for (const auto& r : reports) {
    if (r.excess == 0.0) continue;
    const int s = r.excess > 0 ? 1 : -1;
    if (sign != 0 && s != sign) fit.sign_changes = true;
    sign = s;
    xs.push_back(r.T);
    ys.push_back(std::log(std::abs(r.excess)));
  }
  if (xs.size() < 4) throw Error(ErrorCode::DegenerateFit, "need at least 4 rows with nonzero excess");
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw Error(ErrorCode::DegenerateFit, "all rows share one T");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0.0 ? 1.0 : sxy * sxy / (sxx * syy);
  fit.rows = static_cast<int>(xs.size());
  return fit;
}

std::vector<SuiteCheck> run_transform_suite() {
  std::vector<SuiteCheck> out;
  const std::vector<BumpSpec> bumps{{0.0, 1.0, 1e-3, BumpSide::Outer},
                                    {0.0, 1.0, 1e-3, BumpSide::Inner},
                                    {1.0, 3.0, 0.1, BumpSide::Inner},
                                    {2.0, 5.0, 0.5, BumpSide::Outer}};

  {
    double worst = 0.0;
    for (const auto& b : bumps) {
      const Bump k(b);
      const double h = selberg_transform(k, 0.5).h.real();
      worst = std::max(worst, std::abs(h / (4.0 * pi * k.integral()) - 1.0));
    }
    out.push_back({"h(1/2) = 4 pi int k", worst <= 1e-7, "max rel err " + format(worst)});
  }
  {
    bool ok = true;
    double margin = 1e300;
    for (const auto& b : bumps) {
      const auto h = selberg_transform(Bump(b), 0.5);
      const double lo = 4.0 * pi * (b.V - b.U - 2.0 * b.Y);
      const double hi = 4.0 * pi * (b.V - b.U + 2.0 * b.Y);
      ok = ok && h.h.real() >= lo - h.error && h.h.real() <= hi + h.error;
      margin = std::min({margin, h.h.real() - lo, hi - h.h.real()});
    }
    out.push_back({"4 pi (V - U - 2Y) <= h(1/2) <= 4 pi (V - U + 2Y)", ok, "min margin " + format(margin)});
  }
  {
    bool ok = true;
    double worst = 0.0;
    for (const auto& b : bumps) {
      const Bump k(b);
      const auto h0 = selberg_transform(k, 0.0);
      for (double t : {0.3, 1.0, 3.0, 10.0}) {
        const auto ht = selberg_transform(k, cplx(0.0, t));
        ok = ok && std::abs(ht.h) <= h0.h.real() + h0.error + ht.error;
        worst = std::max(worst, std::abs(ht.h) / h0.h.real());
      }
    }
    out.push_back({"|h(it)| <= h(0)", ok, "max |h(it)|/h(0) " + format(worst)});
  }
  {
    bool ok = true;
    for (const auto& b : bumps) {
      const Bump k(b);
      double prev = -1e300, prev_err = 0.0;
      for (double tau = 0.0; tau <= 0.5 + 1e-12; tau += 0.1) {
        const auto h = selberg_transform(k, tau);
        ok = ok && h.h.real() >= prev - h.error - prev_err;
        prev = h.h.real();
        prev_err = h.error;
      }
    }
    out.push_back({"h increasing on [0, 1/2]", ok, "tau in {0, 0.1, ..., 0.5}"});
  }
  {
    const Bump k({1.0, 2.0, 0.25, BumpSide::Outer});
    std::vector<CountReport> rows;
    double floor = 1e300;
    for (int i = 0; i < 16; ++i) {
      const double t = 10.0 * std::pow(20.0, i / 15.0);
      const auto h = selberg_transform(k, cplx(0.0, t));
      floor = std::min(floor, std::abs(h.h) / std::max(h.error, 1e-300));
      CountReport r;
      // log|h| against log t through the exponent fit
      r.T = std::log(t);
      r.excess = std::abs(h.h);
      rows.push_back(r);
    }
    const FitResult fit = fit_error_exponent(rows);
    out.push_back({"log-log slope of |h(it)| on [10, 200] <= -1.2", fit.slope <= -1.2 && floor > 10.0,
                   "slope " + format(fit.slope) + ", min |h|/error " + format(floor)});
  }
  {
    double worst = 0.0;
    for (auto [U, V] : {std::pair{0.0, 0.5}, {0.0, 1.0}, {0.0, 5.0}, {0.0, 20.0}, {2.0, 5.0}}) {
      worst = std::max(worst, std::abs(eta_charfun(U, V, 0.5).real() / (4.0 * pi * (V - U)) - 1.0));
    }
    out.push_back({"eta(U, V; 1/2) = 4 pi (V - U)", worst <= 1e-8, "max rel err " + format(worst)});
  }
  {
    bool ok = true;
    double worst = 0.0;
    const double e0 = eta_charfun(0.0, 1.0, 0.0).real();
    for (double t : {0.5, 1.0, 5.0}) {
      const double et = std::abs(eta_charfun(0.0, 1.0, cplx(0.0, t)));
      ok = ok && et <= e0 * (1.0 + 1e-10);
      worst = std::max(worst, et / e0);
    }
    out.push_back({"|eta(0, 1; it)| <= eta(0, 1; 0)", ok, "max ratio " + format(worst)});
  }
  {
    double worst = 0.0;
    for (double U : {0.0, 1.0, 4.0})
      for (double V : {1.0, 5.0, 20.0})
        for (double tau : {0.1, 0.3, 0.5}) {
          if (V <= U) continue;
          const cplx a = eta_charfun(U, V, tau);
          const cplx b = eta_charfun_2f1(U, V, tau);
          worst = std::max(worst, std::abs(a - b) / std::abs(a));
        }
    out.push_back({"eta quadrature = eta via 2F1", worst <= 1e-7, "max rel diff " + format(worst)});
  }
  return out;
}

}  // namespace hlp
