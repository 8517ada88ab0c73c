// Batch driver for the verification campaigns.  Every subcommand prints a
// versioned JSON report (and CSV tables where applicable) and exits with:
//   0  all checks passed
//   2  a check failed
//   3  quadrature did not converge
//   4  trial-set hypotheses violated
//   64 usage error

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "srs3/calibration.hpp"
#include "srs3/isoperim.hpp"
#include "srs3/pansu.hpp"
#include "srs3/plateau.hpp"
#include "srs3/report.hpp"
#include "srs3/surfaces.hpp"

namespace {

using namespace srs3;

struct Options {
  std::string grid = "0:2:0.5";
  double lambda = 1.0;
  int samples = 1000;
  double h = 1e-4;
  std::uint64_t seed = 0;
  std::string out;
  double tol = 1e-4;
  int quad_panels = 1;
  bool timing = false;
  std::string preset = "identity";
  std::vector<std::string> presets;
  int winding = 1;
  std::string knots;
  bool optimize = false;
};

std::vector<double> parse_grid(const std::string& grid) {
  std::vector<double> values;
  std::stringstream ss(grid);
  std::string part;
  std::vector<double> fields;
  while (std::getline(ss, part, ':'))
    if (!part.empty()) fields.push_back(std::stod(part));
  if (fields.size() == 1) {
    values.push_back(fields[0]);
  } else if (fields.size() == 3 && fields[2] > 0.0) {
    for (double x = fields[0]; x <= fields[1] + 1e-12; x += fields[2])
      values.push_back(x);
  }
  return values;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  return parts;
}

QuadratureSpec quad_spec(const Options& opt) {
  QuadratureSpec spec;
  spec.panels = std::max(1, opt.quad_panels);
  return spec;
}

int count_singular_loci(double lambda) {
  const ParamSurface S = sphere_surface(lambda);
  const int n = 2000;
  int clusters = 0;
  bool in_cluster = false;
  for (int i = 0; i <= n; ++i) {
    const double s = S.v0 + (S.v1 - S.v0) * i / n;
    bool singular;
    try {
      singular = horizontal_norm(S, 1.234, s) < 1e-8;
    } catch (const DegenerateParametrization&) {
      singular = true;  // parametrization collapses exactly at the poles
    }
    if (singular && !in_cluster) ++clusters;
    in_cluster = singular;
  }
  return clusters;
}

Report run_sphere(const Options& opt) {
  Report rep;
  rep.campaign = "sphere";
  rep.seed = opt.seed;
  const std::vector<double> grid = parse_grid(opt.grid);
  if (grid.empty()) throw CLI::ValidationError("--grid", "empty grid");
  rep.parameters = {{"grid", opt.grid}, {"quad_panels", opt.quad_panels}};

  std::string csv = "lambda,area,area_error,volume,volume_error\n";
  bool decreasing = true;
  double prev_volume = 0.0;
  bool have_prev = false;
  for (double lambda : grid) {
    const SphereSpec s = make_sphere_spec(lambda, quad_spec(opt));
    csv += csv_line({csv_cell(lambda), csv_cell(s.area), csv_cell(s.area_error),
                     csv_cell(s.volume), csv_cell(s.volume_error)});
    if (lambda > 0.0) {
      if (have_prev && s.volume >= prev_volume) decreasing = false;
      prev_volume = s.volume;
      have_prev = true;
    }
    rep.checks.push_back(
        {"singular_loci(lambda=" + csv_cell(lambda) + ")", 2.0,
         static_cast<double>(count_singular_loci(lambda)), 0.0,
         count_singular_loci(lambda) == 2});
    if (lambda == 0.0)
      rep.checks.push_back(
          make_check("area(lambda=0)", pi * pi, s.area, 1e-6));
  }
  rep.checks.push_back({"volume_profile_decreasing", 1.0,
                        decreasing ? 1.0 : 0.0, 0.0, decreasing});
  rep.tables["csv"] = csv;
  return rep;
}

Report run_calibrate(const Options& opt) {
  Report rep;
  rep.campaign = "calibrate";
  rep.seed = opt.seed;
  rep.parameters = {{"lambda", opt.lambda},
                    {"samples", opt.samples},
                    {"h", opt.h}};
  const CampaignCollars collars = pointwise_collars(opt.h, opt.tol);
  for (Side side : {Side::plus, Side::minus}) {
    const FoliationSide f{opt.lambda, side};
    const char* tag = side == Side::plus ? "plus" : "minus";
    // Thin 10h collar for the mean; measured-law collars for the
    // pointwise bound and the h-contraction.
    const DivergenceStats thin =
        divergence_campaign(f, opt.samples, opt.h, opt.seed, 10.0 * opt.h);
    const DivergenceStats at_h = divergence_campaign(
        f, opt.samples, opt.h, opt.seed, collars.axis, collars.wall);
    const DivergenceStats at_half = divergence_campaign(
        f, opt.samples, 0.5 * opt.h, opt.seed, collars.axis, collars.wall);
    rep.tables[std::string("divergence_") + tag] = {
        {"lambda", at_h.lambda},
        {"h", at_h.h},
        {"samples", at_h.samples},
        {"mean_thin_collar", thin.mean},
        {"max_abs_dev_thin_collar", thin.max_abs_dev},
        {"mean", at_h.mean},
        {"max_abs_dev", at_h.max_abs_dev},
        {"max_abs_dev_half_h", at_half.max_abs_dev},
        {"axis_collar", at_h.axis_collar},
        {"wall_collar", at_h.wall_collar}};
    rep.checks.push_back(make_check(std::string("mean_divergence_") + tag,
                                    -2.0 * opt.lambda, thin.mean, opt.tol));
    rep.checks.push_back(make_check(std::string("max_deviation_") + tag, 0.0,
                                    at_h.max_abs_dev, opt.tol));
    const double contraction =
        at_half.max_abs_dev > 0.0 ? at_h.max_abs_dev / at_half.max_abs_dev
                                  : 4.0;
    rep.checks.push_back({std::string("contraction_at_half_h_") + tag, 3.5,
                          contraction, 0.0,
                          contraction >= 3.5 || at_half.max_abs_dev < 1e-10});
  }
  return rep;
}

AngleFunction make_angle(const Options& opt) {
  if (!opt.knots.empty()) {
    std::vector<double> sigma;
    for (const std::string& field : split(opt.knots, ','))
      sigma.push_back(std::stod(field));
    return AngleFunction::from_sigma_samples(sigma, opt.winding);
  }
  const std::vector<std::string> parts = split(opt.preset, ':');
  if (parts[0] == "identity") return AngleFunction::identity();
  if (parts[0] == "slope" && parts.size() >= 2)
    return AngleFunction::constant_slope(std::stod(parts[1]));
  if (parts[0] == "sine" && parts.size() >= 3)
    return AngleFunction::sinusoidal(std::stod(parts[1]), std::stoi(parts[2]));
  throw CLI::ValidationError("--preset", "unknown preset " + opt.preset);
}

Report run_plateau(const Options& opt) {
  Report rep;
  rep.campaign = "plateau";
  rep.seed = opt.seed;
  rep.parameters = {{"preset", opt.preset},
                    {"winding", opt.winding},
                    {"optimize", opt.optimize}};

  const AngleFunction a = make_angle(opt);
  double min_slope = 1e300;
  for (int i = 0; i < 512; ++i)
    min_slope = std::min(min_slope, a.slope(2.0 * pi * i / 512));
  const QuadResult half = plateau_area(a, 0.0, 0.5 * pi, quad_spec(opt));
  rep.tables["angle"] = {{"winding", a.winding()},
                         {"min_slope", min_slope},
                         {"half_range_area", half.value},
                         {"half_range_area_error", half.error}};
  if (a.closed()) {
    const QuadResult full = plateau_area(a, 0.0, pi, quad_spec(opt));
    rep.tables["angle"]["full_range_area"] = full.value;
  }
  if (min_slope >= 1.0 - 1e-12 && a.closed()) {
    const double bound = a.winding() * 0.5 * pi * pi;
    rep.checks.push_back({"half_range_area_at_least_k_pi2_over_2", bound,
                          half.value, 1e-8, half.value >= bound - 1e-8});
  }
  if (opt.preset == "identity" && opt.knots.empty())
    rep.checks.push_back(
        make_check("identity_half_range_area", 0.5 * pi * pi, half.value,
                   1e-6));

  if (opt.optimize) {
    MinimizeOptions mo;
    mo.seed = opt.seed + 1;
    const MinimizeResult res = minimize_sigma(opt.winding, 64, mo);
    std::string csv = "iteration,area\n";
    for (std::size_t i = 0; i < res.trace.size(); ++i)
      csv += csv_line({csv_cell(static_cast<double>(i)),
                       csv_cell(res.trace[i])});
    rep.tables["optimizer_trace_csv"] = csv;
    rep.checks.push_back(make_check("optimized_area",
                                    opt.winding * 0.5 * pi * pi, res.area,
                                    1e-6));
    if (opt.winding == 1) {
      double dev = 0.0;
      for (int i = 0; i < 512; ++i)
        dev = std::max(dev,
                       std::abs(res.sigma.slope(2.0 * pi * i / 512) - 1.0));
      rep.checks.push_back(
          make_check("optimized_max_slope_deviation", 0.0, dev, 1e-4));
    }
  }
  return rep;
}

TrialSet make_trial(const std::string& preset) {
  const std::vector<std::string> parts = split(preset, ':');
  const auto arg = [&parts](std::size_t i, double fallback) {
    return parts.size() > i ? std::stod(parts[i]) : fallback;
  };
  if (parts[0] == "pansu-ball") return trial_pansu_ball(arg(1, 1.0));
  if (parts[0] == "truncated-tube")
    return trial_truncated_tube(arg(1, 1.0), arg(2, 0.3));
  if (parts[0] == "bump")
    return trial_bump(arg(1, 1.0), arg(2, 0.25), arg(3, 0.0),
                      static_cast<int>(arg(4, 1.0)));
  if (parts[0] == "bad-disk") return trial_bad_disk(arg(1, 1.0));
  throw CLI::ValidationError("--preset", "unknown trial set " + preset);
}

Report run_isoperim(const Options& opt) {
  Report rep;
  rep.campaign = "isoperim";
  rep.seed = opt.seed;
  std::vector<std::string> presets = opt.presets;
  if (presets.empty()) presets = {"pansu-ball:1"};
  rep.parameters["presets"] = presets;

  std::string csv = "set,volume,area,mu,sphere_area_mu,slack\n";
  nlohmann::json results = nlohmann::json::array();
  for (const std::string& preset : presets) {
    const TrialSet set = make_trial(preset);
    const CompareReport r = compare(set, quad_spec(opt));
    results.push_back({{"id", r.id},
                       {"lambda_tube", r.lambda_tube},
                       {"volume", r.volume},
                       {"volume_error", r.volume_error},
                       {"area", r.area},
                       {"area_error", r.area_error},
                       {"mu", r.mu},
                       {"sphere_area_mu", r.sphere_area_mu},
                       {"slack", r.slack},
                       {"penalized_slack", r.penalized_slack}});
    csv += csv_line({preset, csv_cell(r.volume), csv_cell(r.area),
                     csv_cell(r.mu), csv_cell(r.sphere_area_mu),
                     csv_cell(r.slack)});
    const double err =
        10.0 * std::max(r.area_error + r.sphere_area_mu_error, 1e-9);
    if (set.id == "pansu-ball") {
      rep.checks.push_back(make_check("slack(" + preset + ")", 0.0, r.slack,
                                      std::max(err, opt.tol)));
      rep.checks.push_back(make_check("mu_matches(" + preset + ")",
                                      set.lambda_tube, r.mu, 1e-6));
    } else {
      rep.checks.push_back({"positive_slack(" + preset + ")", 0.0, r.slack,
                            0.0, r.slack > 0.0});
    }
  }
  rep.tables["reports"] = results;
  rep.tables["csv"] = csv;
  return rep;
}

int emit(Report rep, const Options& opt,
         std::chrono::steady_clock::time_point start) {
  rep.include_timing = opt.timing;
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  const std::string body = rep.to_json().dump(2) + "\n";
  if (!opt.out.empty()) {
    std::ofstream file(opt.out, std::ios::binary);
    file << body;
    if (rep.tables.contains("csv")) {
      std::ofstream csv(opt.out + ".csv", std::ios::binary);
      csv << rep.tables["csv"].get<std::string>();
    }
  } else {
    std::cout << body;
  }
  return rep.pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sub-Riemannian S^3 verification campaigns"};
  app.require_subcommand(1);
  Options opt;

  app.set_help_flag("--help", "print help");
  const auto add_common = [&opt](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--seed", opt.seed, "RNG seed");
    cmd->add_option("--out", opt.out, "write the JSON report to this path");
    cmd->add_option("--tol", opt.tol, "check tolerance");
    cmd->add_option("--quad-panels", opt.quad_panels,
                    "starting quadrature panels per axis");
    cmd->add_flag("--timing", opt.timing, "include wall-clock in the JSON");
  };

  CLI::App* sphere = app.add_subcommand("sphere", "area/volume table");
  sphere->add_option("--grid", opt.grid, "lambda grid start:end:step or value");
  add_common(sphere);

  CLI::App* calibrate =
      app.add_subcommand("calibrate", "divergence of the calibration field");
  calibrate->add_option("--lambda", opt.lambda, "tube curvature");
  calibrate->add_option("--samples", opt.samples, "random sample count");
  calibrate->add_option("--h", opt.h, "finite-difference step");
  add_common(calibrate);

  CLI::App* plateau = app.add_subcommand("plateau", "ruled competitor areas");
  plateau->add_option("--preset", opt.preset,
                      "identity | slope:c | sine:amplitude:mode");
  plateau->add_option("--knots", opt.knots, "comma-separated sigma knot values");
  plateau->add_option("--winding", opt.winding, "winding of the knot profile");
  plateau->add_flag("--optimize", opt.optimize, "run the slope optimizer");
  add_common(plateau);

  CLI::App* isoperim = app.add_subcommand("isoperim", "area comparisons");
  isoperim->add_option("--preset", opt.presets,
                       "pansu-ball:l | truncated-tube:l:c | bump:l:c:skew:shape"
                       " | bad-disk:l");
  add_common(isoperim);

  CLI::App* all = app.add_subcommand("all", "default campaign suite");
  add_common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (sphere->parsed()) return emit(run_sphere(opt), opt, start);
    if (calibrate->parsed()) return emit(run_calibrate(opt), opt, start);
    if (plateau->parsed()) return emit(run_plateau(opt), opt, start);
    if (isoperim->parsed()) return emit(run_isoperim(opt), opt, start);
    // all: aggregate a default suite into one report.
    Report rep;
    rep.campaign = "all";
    rep.seed = opt.seed;
    Options o = opt;
    o.grid = "0:2:0.5";
    for (Report sub :
         {run_sphere(o), run_calibrate(o), run_plateau(o), run_isoperim(o)}) {
      for (CheckRecord& c : sub.checks) {
        c.name = sub.campaign + "/" + c.name;
        rep.checks.push_back(c);
      }
      rep.tables[sub.campaign] = sub.tables;
    }
    return emit(rep, opt, start);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 4;
  } catch (const NoConvergence& e) {
    std::cerr << "quadrature failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
