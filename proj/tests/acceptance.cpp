// Acceptance run: one PASS/FAIL line per criterion. Criterion 9 is advisory
// and prints WARN instead of FAIL. Exit status is nonzero on any hard failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hlp/bump.hpp"
#include "hlp/lab.hpp"
#include "hlp/orbit.hpp"
#include "hlp/selberg.hpp"

using namespace hlp;
using std::numbers::pi;

namespace {

int hard_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, bool ok, const std::string& what, const std::string& detail, bool soft = false) {
  const char* tag = ok ? "PASS" : soft ? "WARN" : "FAIL";
  std::printf("%s criterion %d: %s (%s)\n", tag, id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok && !soft) ++hard_failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void run(int id, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, what, std::string("exception: ") + e.what());
  }
}

std::vector<GroupElement> in_box(const std::vector<OrbitPoint>& pts, const Reals& U, const Reals& V, int d) {
  std::vector<GroupElement> out;
  for (const auto& p : pts) {
    bool ok = true;
    for (int j = 0; j < d; ++j) {
      const auto k = static_cast<std::size_t>(j);
      ok = ok && p.u[k] >= U[k] && p.u[k] < V[k];
    }
    if (ok) out.push_back(p.g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// largest t * dir with implied coefficient bound <= 5
Reals largest_box(const MultiPoint& z, const Reals& dir, const FieldSpec& F) {
  double lo = 0.0, hi = 1e4;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (implied_entry_bound(z, {mid * dir[0], mid * dir[1]}, F).coefficient <= 5.0) lo = mid;
    else hi = mid;
  }
  return {lo * dir[0], lo * dir[1]};
}

void criterion_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  const FieldSpec Z = FieldSpec::integers(), Q5 = FieldSpec::real_quadratic(5);
  struct Case {
    MultiPoint z;
    FieldSpec F;
    std::vector<Reals> dirs;
  };
  const std::vector<Case> cases{
      {MultiPoint{{0.0, 1.0}}, Z, {{1, 0}}},
      {MultiPoint{{0.0, 2.0}}, Z, {{1, 0}}},
      {MultiPoint{{0.5, 1.0}}, Z, {{1, 0}}},
      {MultiPoint{{0.0, 1.0}, {0.0, 1.0}}, Q5, {{1, 1}, {1, 0.3}, {0.3, 1}}},
  };
  // fractions of the largest admissible box, nudged off the lattice of exact u-values
  const std::vector<double> fr{0.05, 0.17, 0.3, 0.45, 0.6, 0.75, 0.9, 1.0};
  long boxes = 0, mismatches = 0;
  for (const auto& c : cases) {
    const int d = c.F.degree();
    for (const auto& dir : c.dirs) {
      const Reals top = largest_box(c.z, dir, c.F);
      const auto slow = naive_oracle(c.z, top, 5, c.F);
      for (double fv : fr)
        for (double fu : {0.0, 0.2, 0.5, 0.8}) {
          Reals U{0, 0}, V{0, 0};
          for (int j = 0; j < d; ++j) {
            const auto k = static_cast<std::size_t>(j);
            V[k] = top[k] * fv * (1.0 - 1e-7 * std::numbers::sqrt2);
            U[k] = V[k] * fu * (1.0 - 1e-7 * std::numbers::sqrt3);
          }
          const auto fast = enumerate_box_orbit(c.z, V, c.F);
          ++boxes;
          if (in_box(fast, U, V, d) != in_box(slow, U, V, d)) ++mismatches;
        }
    }
  }
  const double secs = seconds_since(t0);
  report(1, mismatches == 0 && secs < 60, "fast enumeration equals the exhaustive oracle",
         fmt("%ld boxes, %ld mismatches, %.1f s", boxes, mismatches, secs));
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

void criterion_circle() {
  const auto t0 = std::chrono::steady_clock::now();
  const FieldSpec Z = FieldSpec::integers();
  const MultiPoint i{{0.0, 1.0}};
  const double vol = covolume(Z);
  std::vector<double> early, late;
  std::string detail;
  bool within = true;
  for (double T : {8.0, 8.5, 9.0, 12.0, 12.5, 13.0}) {
    const double r = static_cast<double>(count_hypercube(i, T, Z).count) / main_term_hypercube(T, vol, 1);
    (T < 10 ? early : late).push_back(std::abs(r - 1));
    if (T > 10) within = within && std::abs(r - 1) <= 0.05;
    detail += fmt("T=%.1f ratio=%.5f; ", T, r);
  }
  const double secs = seconds_since(t0);
  const bool ok = within && median(late) < median(early) && secs < 120;
  report(2, ok, "hyperbolic circle problem at z = i against 3 e^T",
         detail + fmt("median |r-1| %.2e -> %.2e, %.1f s", median(early), median(late), secs));
}

void criterion_hypercube() {
  const auto t0 = std::chrono::steady_clock::now();
  const FieldSpec F = FieldSpec::real_quadratic(5);
  const auto r = count_hypercube(MultiPoint{{0.0, 1.0}, {0.0, 1.0}}, 6.0, F, {1e9, 0});
  const double main = main_term_hypercube(6.0, covolume(F), 2);
  const double ratio = static_cast<double>(r.count) / main;
  const double secs = seconds_since(t0);
  report(3, std::abs(ratio - 1) <= 0.10 && secs < 600, "Hilbert modular hypercube, m = 5, z = (i, i), T = 6",
         fmt("count=%llu main=%.1f ratio=%.5f, %.1f s", static_cast<unsigned long long>(r.count), main, ratio, secs));
}

void criterion_strip() {
  const auto t0 = std::chrono::steady_clock::now();
  const FieldSpec F = FieldSpec::real_quadratic(5);
  const MultiPoint z{{0.0, 1.0}, {0.0, 1.0}};
  StripSpec s;
  s.E = {1};
  s.A = {0.0, 0.0};
  s.B = {0.0, 1.0};
  double r8 = 0, r11 = 0;
  for (double T : {8.0, 11.0}) {
    s.T = T;
    const double r =
        static_cast<double>(count_strip(z, s, F, {1e9, 0}).count) / main_term_strip(s, covolume(F), 2);
    (T < 10 ? r8 : r11) = r;
  }
  const double secs = seconds_since(t0);
  const bool ok = std::abs(r11 - 1) <= 0.15 && std::abs(r11 - 1) < std::abs(r8 - 1) && secs < 600;
  report(4, ok, "strip count, E = {2}, [A, B) = [0, 1), against 7.5 (cosh 1 - 1) e^T",
         fmt("ratio T=8 %.5f, T=11 %.5f, %.1f s", r8, r11, secs));
}

void criterion_eta() {
  double worst = 0.0;
  for (double V : {0.5, 1.0, 5.0, 20.0})
    worst = std::max(worst, std::abs(eta_charfun(0, V, 0.5).real() / (4 * pi * V) - 1));
  std::string detail = fmt("max rel err at 1/2 %.2e; ", worst);
  bool bounded = true;
  for (double tau : {0.2, 0.35, 0.49}) {
    double lo = 1e300, hi = 0;
    for (double V : {1e2, 1e3, 1e4}) {
      const double r = std::abs(eta_charfun(0, V, tau).real() - eta_main_term(0, V, tau)) * std::pow(V, tau - 0.5);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    bounded = bounded && hi <= 3 * lo;
    detail += fmt("tau=%.2f r in [%.3f, %.3f]; ", tau, lo, hi);
  }
  detail.resize(detail.size() - 2);
  report(5, worst <= 1e-8 && bounded, "eta at 1/2 and the main-term remainder", detail);
}

void criterion_suite() {
  int failed = 0;
  std::string detail;
  const auto checks = run_transform_suite();
  for (const auto& c : checks)
    if (!c.passed) {
      ++failed;
      detail += c.name + ": " + c.detail + "; ";
    }
  report(6, failed == 0, "transform property suite",
         failed == 0 ? fmt("%zu checks", checks.size()) : detail);
}

void criterion_sandwich() {
  const FieldSpec Z = FieldSpec::integers();
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> xs(-0.5, 0.5), ys(0.6, 2.5), us(0.0, 1.0);
  int ok = 0;
  std::string bad;
  for (int n = 0; n < 20; ++n) {
    const MultiPoint z{{xs(rng), ys(rng)}};
    const double V = 1.0 + 199.0 * us(rng);
    const double U = us(rng) < 0.25 ? 0.0 : V * 0.9 * us(rng);
    const double Y = 1e-3 * (V - U);
    const auto cnt = static_cast<double>(count_box(z, {{U, 0}, {V, 0}}, Z).count);
    const double lo = kernel_sum(z, {Bump({U, V, Y, BumpSide::Inner})}, Z);
    const double hi = kernel_sum(z, {Bump({U, V, Y, BumpSide::Outer})}, Z);
    if (lo <= cnt && cnt <= hi) ++ok;
    else bad += fmt("[U=%g V=%g: %g <= %g <= %g] ", U, V, lo, cnt, hi);
  }
  report(7, ok == 20, "K- <= cnt <= K+ on random boxes with Y = 1e-3 (V - U)", fmt("%d/20 boxes ", ok) + bad);
}

void criterion_box_bound() {
  const FieldSpec Z = FieldSpec::integers();
  const MultiPoint i{{0.0, 1.0}};
  std::vector<double> u;
  for (const auto& p : enumerate_box_orbit(i, {1000.0, 0}, Z))
    if (p.u[0] <= 1000.0) u.push_back(p.u[0]);
  std::sort(u.begin(), u.end());
  const auto cnt = [&](double U, double V) {
    return static_cast<double>(std::lower_bound(u.begin(), u.end(), V) - std::lower_bound(u.begin(), u.end(), U));
  };
  // C fitted on boxes inside [0, 10], widths down to 0.01
  double C = 0.0;
  for (double w : {0.01, 0.1, 0.5, 1.0, 3.0, 10.0})
    for (double U = 0.0; U + w <= 10.0 + 1e-12; U += 0.005) C = std::max(C, cnt(U, U + w) / (w + 1));
  // the U = 0 and U = V/2 boxes up to V = 10^3
  double worst = 0.0, worst_V = 0.0;
  for (double V = 10.0; V <= 1000.0; V *= 1.002)
    for (double U : {0.0, V / 2}) {
      const double r = cnt(U, V) / (C * (V - U + 1));
      if (r > worst) worst = r, worst_V = V;
    }
  report(8, worst <= 1.0, "cnt(U, V; i) <= C (V - U + 1) for U = 0 and U = V/2 up to V = 10^3",
         fmt("C=%.3f from boxes in [0, 10], worst margin %.3f at V=%.2f", C, worst, worst_V));
  // thin shells are not covered: the multiplicity of a single u-value grows
  double shell = 0.0, shell_U = 0.0;
  for (std::size_t k = 0; k < u.size();) {
    std::size_t m = k;
    while (m < u.size() && u[m] - u[k] <= 1e-9 * (1 + u[k])) ++m;
    const double r = static_cast<double>(m - k) / (C * 1.01);
    if (r > shell) shell = r, shell_U = u[k];
    k = m;
  }
  std::printf("INFO criterion 8: thin boxes of width 0.01 reach cnt / (C (w + 1)) = %.2f at u = %.2f\n", shell,
              shell_U);
}

void criterion_exponent() {
  ExperimentConfig cfg;
  cfg.grid_min = 9.0;
  cfg.grid_max = 13.0;
  cfg.grid_step = 0.25;
  const auto rows = run_count_experiment(cfg);
  const auto fit = fit_error_exponent(rows);
  report(9, fit.slope <= 0.85, "fitted excess exponent for d = 1 over T in [9, 13]",
         fmt("slope %.3f, r2 %.3f, %d rows%s", fit.slope, fit.r2, fit.rows, fit.sign_changes ? ", sign changes" : ""),
         true);
}

}  // namespace

int main() {
  run(1, "fast enumeration equals the exhaustive oracle", criterion_oracle);
  run(2, "hyperbolic circle problem", criterion_circle);
  run(3, "Hilbert modular hypercube", criterion_hypercube);
  run(4, "strip count", criterion_strip);
  run(5, "eta identities", criterion_eta);
  run(6, "transform property suite", criterion_suite);
  run(7, "kernel sandwich", criterion_sandwich);
  run(8, "box bound", criterion_box_bound);
  run(9, "excess exponent", criterion_exponent);
  std::printf("%s: %d hard failure(s)\n", hard_failures == 0 ? "ACCEPTED" : "REJECTED", hard_failures);
  return hard_failures == 0 ? 0 : 1;
}
