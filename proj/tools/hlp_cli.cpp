// hlp: count lattice points of PSL2(Z) and Hilbert modular groups in
// hyperbolic boxes, hypercubes and strips, and run the numerical checks.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "hlp/config.hpp"
#include "hlp/lab.hpp"
#include "hlp/reduction.hpp"
#include "hlp/selberg.hpp"

using namespace hlp;

namespace {

struct GroupFlags {
  std::string kind = "modular";
  Int m = 5;
  double x0 = 0.0, y0 = 1.0, x1 = 0.0, y1 = 1.0;
  int threads = 1;

  void attach(CLI::App* app) {
    app->add_option("--group.kind", kind, "modular or hilbert")->check(CLI::IsMember({"modular", "hilbert"}));
    app->add_option("--group.m", m, "m for Q(sqrt m): 2, 3, 5 or 13");
    app->add_option("--z.0.x", x0, "first coordinate, real part");
    app->add_option("--z.0.y", y0, "first coordinate, imaginary part");
    app->add_option("--z.1.x", x1, "second coordinate, real part");
    app->add_option("--z.1.y", y1, "second coordinate, imaginary part");
    app->add_option("--threads", threads, "worker threads, 0 for all cores");
  }

  FieldSpec field() const { return kind == "modular" ? FieldSpec::integers() : FieldSpec::real_quadratic(m); }

  MultiPoint point() const {
    return kind == "modular" ? MultiPoint{{x0, y0}} : MultiPoint{{x0, y0}, {x1, y1}};
  }
};

Reals to_reals(const std::vector<double>& v, int d, const char* name) {
  if (static_cast<int>(v.size()) != d)
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " needs " + std::to_string(d) + " values");
  Reals out{0.0, 0.0};
  for (int j = 0; j < d; ++j) out[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)];
  return out;
}

void print_result(const CountResult& r, double main_term) {
  std::printf("count=%llu\nmain_term=%.10g\nratio=%.10g\nnear_boundary=%llu\ncandidates=%llu\nwall_s=%.3f\n",
              static_cast<unsigned long long>(r.count), main_term, static_cast<double>(r.count) / main_term,
              static_cast<unsigned long long>(r.near_boundary), static_cast<unsigned long long>(r.candidates),
              r.wall_s);
}

int run_suite() {
  bool ok = true;
  for (const auto& c : run_transform_suite()) {
    std::printf("%s  %s  (%s)\n", c.passed ? "ok  " : "FAIL", c.name.c_str(), c.detail.c_str());
    ok = ok && c.passed;
  }
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice point counting on products of hyperbolic planes"};
  app.require_subcommand(1);

  GroupFlags count_flags;
  double count_T = -1.0;
  std::vector<double> box_U, box_V;
  auto* count = app.add_subcommand("count", "N(z;T) with --T, or cnt(U,V;z) with --U/--V");
  count_flags.attach(count);
  count->add_option("--T", count_T, "hypercube radius in distance");
  count->add_option("--U", box_U, "box lower u-bounds, one per coordinate")->delimiter(',');
  count->add_option("--V", box_V, "box upper u-bounds, one per coordinate")->delimiter(',');

  GroupFlags strip_flags;
  strip_flags.kind = "hilbert";
  double strip_T = 0.0;
  std::vector<int> strip_E;
  std::vector<double> strip_A, strip_B;
  auto* strip = app.add_subcommand("strip", "N_E(z;T): distances in [A_j,B_j) on E, <= T elsewhere");
  strip_flags.attach(strip);
  strip->add_option("--T", strip_T, "radius on the complement of E")->required();
  strip->add_option("--strip.E", strip_E, "coordinates in E, 1-based")->delimiter(',')->required();
  strip->add_option("--strip.A", strip_A, "lower distances on E")->delimiter(',')->required();
  strip->add_option("--strip.B", strip_B, "upper distances on E")->delimiter(',')->required();

  auto* suite = app.add_subcommand("transform-suite", "numerical properties of the Selberg transform");

  std::string config_path, out_override;
  int threads_override = -1;
  auto* experiment = app.add_subcommand("experiment", "run a configured sweep and write CSV");
  experiment->add_option("--config", config_path, "key=value configuration file")->required();
  experiment->add_option("--out.path", out_override, "CSV output path (overrides the file)");
  experiment->add_option("--threads", threads_override, "worker threads (overrides the file)");

  GroupFlags oracle_flags;
  std::vector<double> oracle_V;
  int oracle_bound = -1;
  auto* oracle = app.add_subcommand("oracle-check", "compare the enumerator with the exhaustive scan");
  oracle_flags.attach(oracle);
  oracle->add_option("--V", oracle_V, "u-bounds, one per coordinate")->delimiter(',')->required();
  oracle->add_option("--bound", oracle_bound, "coefficient bound for the scan (default: implied bound)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) {
      const FieldSpec field = count_flags.field();
      const MultiPoint z = count_flags.point();
      const int d = field.degree();
      const OrbitOptions options{1e9, count_flags.threads};
      const bool box = !box_V.empty();
      if (box == (count_T >= 0.0))
        throw Error(ErrorCode::InvalidArgument, "give either --T or --V (with optional --U)");
      if (box) {
        BoxSpec spec{{0.0, 0.0}, to_reals(box_V, d, "--V")};
        if (!box_U.empty()) spec.U = to_reals(box_U, d, "--U");
        const auto r = count_box(z, spec, field, options);
        print_result(r, main_term_box(spec, covolume(field), d));
      } else {
        const auto r = count_hypercube(z, count_T, field, options);
        print_result(r, main_term_hypercube(count_T, covolume(field), d));
      }
      std::printf("n_of_z=%.10g\n", height_components(z, field).n);
      return 0;
    }
    if (strip->parsed()) {
      const FieldSpec field = strip_flags.field();
      const MultiPoint z = strip_flags.point();
      if (strip_A.size() != strip_E.size() || strip_B.size() != strip_E.size())
        throw Error(ErrorCode::InvalidStrip, "--strip.A and --strip.B need one value per element of --strip.E");
      StripSpec s;
      s.T = strip_T;
      for (std::size_t i = 0; i < strip_E.size(); ++i) {
        const int j = strip_E[i] - 1;
        if (j < 0 || j >= field.degree()) throw Error(ErrorCode::InvalidStrip, "--strip.E entries are 1-based coordinates");
        s.E.push_back(j);
        s.A[static_cast<std::size_t>(j)] = strip_A[i];
        s.B[static_cast<std::size_t>(j)] = strip_B[i];
      }
      const auto r = count_strip(z, s, field, OrbitOptions{1e9, strip_flags.threads});
      print_result(r, main_term_strip(s, covolume(field), field.degree()));
      return 0;
    }
    if (suite->parsed()) return run_suite();
    if (experiment->parsed()) {
      ExperimentConfig cfg = parse_config(config_path);
      if (!out_override.empty()) cfg.out_path = out_override;
      if (threads_override >= 0) cfg.threads = threads_override;
      if (cfg.kind == ExperimentKind::TransformSuite) return run_suite();
      validate(cfg);
      const ExperimentSummary s = summarize(cfg);
      std::fprintf(stderr, "# e=%d q=%d qhat=%g tauhat=%g %s gap, predicted excess exponent %.6g, box.mode=%s\n", s.e,
                   s.q, s.qhat, s.tauhat, s.large_gap ? "large" : "small", s.predicted_exponent, s.box_mode.c_str());
      std::vector<CountReport> rows;
      if (cfg.out_path.empty()) {
        std::printf("%s\n", kCsvHeader);
        rows = run_count_experiment(cfg, [](const CountReport& r) {
          std::printf("%s\n", csv_row(r).c_str());
          std::fflush(stdout);
        });
      } else {
        CsvWriter writer(cfg.out_path);
        rows = run_count_experiment(cfg, [&writer](const CountReport& r) { writer.write(r); });
      }
      try {
        const FitResult fit = fit_error_exponent(rows);
        std::fprintf(stderr, "# fitted exponent %.6g (intercept %.6g, r2 %.4f, %d rows%s)\n", fit.slope, fit.intercept,
                     fit.r2, fit.rows, fit.sign_changes ? ", excess changes sign" : "");
      } catch (const Error& e) {
        std::fprintf(stderr, "# no exponent fit: %s\n", e.what());
      }
      return 0;
    }
    if (oracle->parsed()) {
      const FieldSpec field = oracle_flags.field();
      const MultiPoint z = oracle_flags.point();
      const Reals V = to_reals(oracle_V, field.degree(), "--V");
      const int bound = oracle_bound >= 0 ? oracle_bound
                                          : static_cast<int>(std::ceil(implied_entry_bound(z, V, field).coefficient));
      const auto fast = enumerate_box_orbit(z, V, field, OrbitOptions{1e9, oracle_flags.threads});
      const auto slow = naive_oracle(z, V, bound, field);
      // points within rounding of the boundary are decided differently by the two u formulas
      const auto interior = [&](const std::vector<OrbitPoint>& pts, std::size_t& edge) {
        std::vector<GroupElement> out;
        for (const auto& p : pts) {
          bool inside = true, near = false;
          for (int j = 0; j < field.degree(); ++j) {
            const double u = p.u[static_cast<std::size_t>(j)], v = V[static_cast<std::size_t>(j)];
            near = near || std::abs(u - v) <= kBoundaryTolerance * (1.0 + v);
            inside = inside && u <= v;
          }
          if (near) ++edge;
          else if (inside) out.push_back(p.g);
        }
        std::sort(out.begin(), out.end());
        return out;
      };
      std::size_t edge_fast = 0, edge_slow = 0;
      const auto a = interior(fast, edge_fast);
      const auto b = interior(slow, edge_slow);
      const bool same = a == b;
      std::printf("enumerated=%zu oracle=%zu on_boundary=%zu/%zu bound=%d %s\n", a.size(), b.size(), edge_fast,
                  edge_slow, bound, same ? "match" : "MISMATCH");
      return same ? 0 : 3;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.numeric() ? 3 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
