#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <thread>

#include <fmt/format.h>

#include "zkkr/countmodels.hpp"
#include "zkkr/error.hpp"
#include "zkkr/kronig_penney.hpp"
#include "zkkr/scatter.hpp"
#include "zkkr/specfun.hpp"
#include "zkkr/zeroscan.hpp"

namespace zkkr::cli {

namespace {

using std::numbers::pi;

constexpr const char* kZerosEnv = "ZETA_KKR_ZEROS";

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Options of a subcommand as given (or defaulted), for the JSON meta block.
nlohmann::ordered_json collect_params(const CLI::App& sub) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "config") continue;
    if (opt->count() > 0) {
      params[name] = fmt::format("{}", fmt::join(opt->results(), ","));
    } else if (!opt->get_default_str().empty()) {
      params[name] = opt->get_default_str();
    }
  }
  return params;
}

void emit_for(const GlobalOptions& g, const CLI::App& sub, const Table& table) {
  nlohmann::ordered_json params = collect_params(sub);
  params["format"] = g.format;
  emit(table, g.format == "json" ? Format::json : Format::csv, g.output, sub.get_name(), params);
}

void common_options(CLI::App* sub) {
  sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sub->fallthrough();
}

/// Catalog from --zeros-file (or the environment), else a scan of [0, 100].
ZeroCatalog obtain_catalog(const std::string& path) {
  if (!path.empty()) {
    summary("catalog", std::string_view(path));
    return load_catalog(path);
  }
  summary("catalog", std::string_view("builtin-scan-0-100"));
  ScanConfig config;
  config.t_max = 100.0;
  return find_zeros_parallel(config, resolve_threads(0));
}

const std::vector<std::string> kModelFlags = {"rs-smooth", "polya", "leclair", "sierra",
                                              "kkr-gamma"};

ModelId model_from_flag(const std::string& flag) {
  if (flag == "rs-smooth") return ModelId::riemann_siegel_smooth;
  if (flag == "polya") return ModelId::polya;
  if (flag == "leclair") return ModelId::leclair_mussardo;
  if (flag == "sierra") return ModelId::sierra;
  return ModelId::kkr_gamma;
}

CountingModel build_model(const std::string& flag, const std::optional<double>& theta,
                          bool asymptotic) {
  CountingModel model = CountingModel::make(model_from_flag(flag));
  if (theta) {
    if (model.id == ModelId::riemann_siegel_smooth || model.id == ModelId::polya) {
      throw DomainError("--theta does not apply to method " + flag);
    }
    model.theta_param = *theta;
  }
  if (asymptotic) {
    if (model.id != ModelId::kkr_gamma) {
      throw DomainError("--asymptotic applies only to method kkr-gamma");
    }
    model.uses_exact_gamma = false;
  }
  return model;
}

// ---------------------------------------------------------------- zeros

Command make_zeros(CLI::App& app, const GlobalOptions& g) {
  struct Opts {
    ScanConfig scan;
    unsigned threads = 0;
    bool check = false;
    std::string save;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("zeros", "Scan Hardy's Z for zeros on the critical line");
  common_options(sub);
  sub->add_option("--t-min", o->scan.t_min, "Lower end of the scan")->capture_default_str();
  sub->add_option("--t-max", o->scan.t_max, "Upper end of the scan")->capture_default_str();
  sub->add_option("--step", o->scan.grid_step, "Grid step")->capture_default_str();
  sub->add_option("--tol", o->scan.refine_tolerance, "Bisection tolerance")->capture_default_str();
  sub->add_option("--max-refinements", o->scan.max_refinements, "Bisection step limit")
      ->capture_default_str();
  sub->add_option("--threads", o->threads, "Worker threads (0: all cores)")->capture_default_str();
  sub->add_flag("--check-refinement", o->check, "Repeat the scan at half the step");
  sub->add_option("--save", o->save, "Also write a reloadable catalog file");

  return {sub, [o, sub, &g] {
            const ZeroCatalog catalog = find_zeros_parallel(o->scan, resolve_threads(o->threads));
            Table t{{"n", "t"}, {}, {fmt::format("max_height_scanned={:.9f}",
                                                 catalog.max_height_scanned())}};
            for (std::size_t i = 0; i < catalog.size(); ++i) {
              t.rows.push_back({static_cast<long long>(i + 1), catalog[i]});
            }
            emit_for(g, *sub, t);
            if (!o->save.empty()) save_catalog(catalog, o->save);
            summary("zeros", static_cast<long long>(catalog.size()));
            summary("max_height_scanned", catalog.max_height_scanned());
            if (o->check) {
              const RefinementCheck rc = check_refinement_stability(o->scan);
              summary("count_half_step", static_cast<long long>(rc.count_half_step));
              summary("refinement_stable", std::string_view(rc.stable() ? "true" : "false"));
              if (!rc.stable()) return 2;
            }
            return 0;
          }};
}

// ---------------------------------------------------------------- count

Command make_count(CLI::App& app, const GlobalOptions& g) {
  struct Opts {
    std::string method;
    double e = 0.0;
    std::optional<double> theta;
    bool asymptotic = false;
    std::string zeros_file;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("count", "Evaluate a zero-counting function at E");
  common_options(sub);
  std::vector<std::string> methods = {"exact"};
  methods.insert(methods.end(), kModelFlags.begin(), kModelFlags.end());
  sub->add_option("--method", o->method, "Counting function")
      ->required()
      ->check(CLI::IsMember(methods));
  sub->add_option("--e", o->e, "Height E")->required();
  sub->add_option("--theta", o->theta, "Free phase for leclair, sierra, kkr-gamma");
  sub->add_flag("--asymptotic", o->asymptotic, "kkr-gamma with the large-E phase");
  sub->add_option("--zeros-file", o->zeros_file, "Zero catalog for method exact")
      ->envname(kZerosEnv);

  return {sub, [o, sub, &g] {
            Table t{{"method", "E", "count"}, {}, {}};
            if (o->method == "exact") {
              const ZeroCatalog catalog = obtain_catalog(o->zeros_file);
              const auto n = static_cast<long long>(exact_count(catalog, o->e));
              t.rows.push_back({o->method, o->e, n});
              summary("count", n);
              if (o->e >= 10.0) summary("s_function", s_function(catalog, o->e));
            } else {
              const CountingModel model = build_model(o->method, o->theta, o->asymptotic);
              const double value = smooth_count(model, o->e);
              t.rows.push_back({o->method, o->e, value});
              summary("count", value);
            }
            emit_for(g, *sub, t);
            return 0;
          }};
}

// ---------------------------------------------------------------- predict

Command make_predict(CLI::App& app, const GlobalOptions& g) {
  struct Opts {
    std::string method;
    int n_max = 0;
    std::optional<double> theta;
    bool asymptotic = false;
    std::string zeros_file;
    unsigned threads = 0;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub =
      app.add_subcommand("predict", "Estimate zeros from a smooth count and compare to a catalog");
  sub->alias("compare");
  common_options(sub);
  sub->add_option("--method", o->method, "Counting model")
      ->required()
      ->check(CLI::IsMember(kModelFlags));
  sub->add_option("--n-max", o->n_max, "Compare zeros 1..n-max")->required();
  sub->add_option("--theta", o->theta, "Free phase for leclair, sierra, kkr-gamma");
  sub->add_flag("--asymptotic", o->asymptotic, "kkr-gamma with the large-E phase");
  sub->add_option("--zeros-file", o->zeros_file, "Zero catalog")->envname(kZerosEnv);
  sub->add_option("--threads", o->threads, "Worker threads (0: all cores)")->capture_default_str();

  return {sub, [o, sub, &g] {
            const CountingModel model = build_model(o->method, o->theta, o->asymptotic);
            const ZeroCatalog catalog = obtain_catalog(o->zeros_file);
            const ComparisonReport r =
                compare_catalog(model, catalog, o->n_max, resolve_threads(o->threads));
            Table t{{"n", "actual", "estimate", "error"}, {}, {}};
            for (const auto& e : r.entries) {
              t.rows.push_back({static_cast<long long>(e.n), e.actual, e.estimate, e.error});
            }
            emit_for(g, *sub, t);
            summary("mae", r.mae);
            summary("mean_spacing_actual", r.mean_spacing_actual);
            summary("mean_spacing_estimate", r.mean_spacing_estimate);
            summary("unreachable", std::string_view(r.unreachable.empty()
                                                        ? std::string("none")
                                                        : fmt::format("{}", fmt::join(r.unreachable, ","))));
            return 0;
          }};
}

// ---------------------------------------------------------------- ratio

Command make_ratio(CLI::App& app, const GlobalOptions& g) {
  auto energies = std::make_shared<std::vector<double>>();
  for (int d = 2; d <= 12; ++d) energies->push_back(std::pow(10.0, d));
  CLI::App* sub = app.add_subcommand("ratio", "kkr-gamma count over the smooth Riemann count");
  common_options(sub);
  sub->add_option("--e", *energies, "Comma-separated heights (default 1e2..1e12 by decades)")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  return {sub, [energies, sub, &g] {
            const auto points = ratio_scan(*energies);
            Table t{{"E", "ratio"}, {}, {}};
            for (const auto& p : points) t.rows.push_back({p.E, p.ratio});
            emit_for(g, *sub, t);
            summary("points", static_cast<long long>(points.size()));
            return 0;
          }};
}

// ---------------------------------------------------------------- kp

Command make_kp(CLI::App& app, const GlobalOptions& g) {
  struct Opts {
    double strength = 0.0;
    double a = 1.0;
    std::size_t k_points = 64;
    int bands = 3;
    std::optional<double> dos;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("kp", "Kronig-Penney bands from the KKR determinant");
  common_options(sub);
  sub->add_option("--strength", o->strength, "Delta strength P >= 0")->required();
  sub->add_option("--a", o->a, "Lattice spacing")->capture_default_str();
  sub->add_option("--k-points", o->k_points, "Points on [0, pi/a]")->capture_default_str();
  sub->add_option("--bands", o->bands, "Bands to list")->capture_default_str();
  sub->add_option("--dos", o->dos, "Compare Lloyd and band-counting DOS at this energy");

  return {sub, [o, sub, &g] {
            KronigPenneyParams params{o->a, o->strength, brillouin_grid(o->a, o->k_points)};
            params.validate();
            int computed = o->bands;
            if (o->dos) {
              if (!(*o->dos > 0.0)) throw DomainError("--dos energy must be positive");
              // Every band that can start below E must be present for counting.
              computed = std::max(computed,
                                  static_cast<int>(std::floor(o->a * std::sqrt(*o->dos) / pi)) + 2);
            }
            const BandStructure bs = kp_bands(params, computed);

            Table t{{"k", "band_index", "E"}, {}, {}};
            double deviation = 0.0;
            for (const auto& p : bs.bands) {
              if (p.band_index > o->bands) continue;
              t.rows.push_back({p.k, static_cast<long long>(p.band_index), p.E});
              deviation = std::max(
                  deviation, std::abs(p.E - transfer_band_energy(p.k, p.band_index, params)));
            }
            emit_for(g, *sub, t);
            summary("max_deviation", std::string_view(fmt::format("{:.3e}", deviation)));
            if (o->dos) {
              const double lloyd = lloyd_integrated_dos(params, *o->dos);
              const double counted = band_counting_dos(bs, *o->dos);
              const double tol = 2.0 / static_cast<double>(o->k_points);
              summary("dos_lloyd", lloyd);
              summary("dos_band_count", counted);
              summary("dos_gap", std::abs(lloyd - counted));
              summary("dos_tolerance", tol);
              summary("dos_within_tolerance",
                      std::string_view(std::abs(lloyd - counted) <= tol ? "true" : "false"));
            }
            return 0;
          }};
}

// ---------------------------------------------------------------- scatter

Command make_scatter(CLI::App& app, const GlobalOptions& g) {
  struct Opts {
    double e_hat = 0.0;
    double xi_max = 30.0;
    std::string ic = "w";
    std::optional<double> window_lo, window_hi;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub =
      app.add_subcommand("scatter", "Inverted-oscillator scattering and its asymptotic fit");
  common_options(sub);
  sub->add_option("--e-hat", o->e_hat, "Scaled energy")->required();
  sub->add_option("--xi-max", o->xi_max, "Integration end point")->capture_default_str();
  sub->add_option("--ic", o->ic, "Initial condition")
      ->check(CLI::IsMember({"even", "odd", "w"}))
      ->capture_default_str();
  sub->add_option("--window-lo", o->window_lo, "Fit window start (default max(20, xi-max - 10))");
  sub->add_option("--window-hi", o->window_hi, "Fit window end (default xi-max)");

  return {sub, [o, sub, &g] {
            const FitWindow window{o->window_lo.value_or(std::max(20.0, o->xi_max - 10.0)),
                                   o->window_hi.value_or(o->xi_max)};
            Table t{{"e_hat", "ic", "c1_re", "c1_im", "c2_re", "c2_im", "residual_rms",
                     "gram_condition"},
                    {},
                    {}};
            std::vector<Cell> row;
            AsymptoticFit fit;
            std::optional<WPhaseReport> report;
            if (o->ic == "w") {
              report = verify_w_phase(o->e_hat, o->xi_max, window);
              fit = report->fit;
            } else {
              const InitialCondition ic =
                  o->ic == "even" ? InitialCondition::even : InitialCondition::odd;
              const IHOSolution sol = integrate_iho(o->e_hat, o->xi_max, ic);
              summary("ode_residual", ode_residual(sol));
              fit = fit_asymptotic(sol, window);
            }
            row = {o->e_hat,       o->ic,           fit.c1.real(),     fit.c1.imag(),
                   fit.c2.real(),  fit.c2.imag(),   fit.residual_rms,  fit.gram_condition};
            if (report) {
              t.columns.insert(t.columns.end(), {"measured_offset", "predicted_offset", "gap"});
              row.insert(row.end(),
                         {report->measured_offset, report->predicted_offset, report->gap});
            } else {
              t.columns.push_back("implied_theta");
              row.push_back(implied_theta(fit, o->e_hat));
            }
            t.rows.push_back(std::move(row));
            emit_for(g, *sub, t);
            summary("window", std::string_view(fmt::format("[{},{}]", window.lo, window.hi)));
            summary("residual_rms", fit.residual_rms);
            summary("conjugate_gap", std::abs(fit.c2 - std::conj(fit.c1)));
            if (report) summary("phase_gap", report->gap);
            return 0;
          }};
}

// ---------------------------------------------------------------- kkr

Command make_kkr(CLI::App& app, const GlobalOptions& g) {
  struct Opts {
    double theta = 1.5 * pi;
    double e_max = 50.0;
    bool quantize = false;
    int m = 1;
    std::optional<int> n_min, n_max;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("kkr", "Roots of the 1x1 KKR determinant or Krein quantization");
  common_options(sub);
  sub->add_option("--theta", o->theta, "Phase parameter")->capture_default_str();
  sub->add_option("--e-max", o->e_max, "Upper end of the energy range")->capture_default_str();
  sub->add_flag("--quantize", o->quantize, "Solve m(theta + pi/4 + phase) = 2 pi n instead");
  sub->add_option("--m", o->m, "Quantization multiplicity")->capture_default_str();
  sub->add_option("--n-min", o->n_min, "First quantum number");
  sub->add_option("--n-max", o->n_max, "Last quantum number");

  return {sub, [o, sub, &g] {
            Table t{{"n", "e_hat"}, {}, {}};
            const auto phase = [](double e) { return gamma_phase_ratio(e, 0.5); };
            if (!o->quantize) {
              for (double e : kkr_det_roots(o->e_max, o->theta)) {
                const auto n = std::llround((o->theta + pi / 4 + phase(e)) / (2 * pi));
                t.rows.push_back({static_cast<long long>(n), e});
              }
              emit_for(g, *sub, t);
              summary("roots", static_cast<long long>(t.rows.size()));
              return 0;
            }

            QuantizationProblem problem{o->m, o->theta, 0, 0};
            const bool derived = !o->n_min || !o->n_max;
            if (derived) {
              const double e_star = phase_monotone_cutoff();
              if (!(o->e_max > e_star)) {
                throw DomainError("--e-max must exceed E* = " + std::to_string(e_star));
              }
              const auto level = [&](double e) {
                return static_cast<int>(
                    std::floor(o->m * (o->theta + pi / 4 + phase(e)) / (2 * pi)));
              };
              problem.n_min = o->n_min.value_or(level(e_star) + 1);
              problem.n_max = o->n_max.value_or(level(o->e_max));
            } else {
              problem.n_min = *o->n_min;
              problem.n_max = *o->n_max;
            }
            if (problem.n_min <= problem.n_max) {
              const QuantizationResult r = krein_quantization(problem);
              double worst = 0.0;
              for (const auto& root : r.roots) {
                if (derived && root.e_hat > o->e_max) continue;
                t.rows.push_back({static_cast<long long>(root.n), root.e_hat});
                worst = std::max(worst, root.residual);
              }
              summary("max_residual", worst);
              summary("no_root", std::string_view(r.no_root.empty()
                                                      ? std::string("none")
                                                      : fmt::format("{}", fmt::join(r.no_root, ","))));
            }
            emit_for(g, *sub, t);
            summary("roots", static_cast<long long>(t.rows.size()));
            return 0;
          }};
}

}  // namespace

std::vector<Command> register_commands(CLI::App& app, const GlobalOptions& g) {
  return {make_zeros(app, g),   make_count(app, g),   make_predict(app, g), make_ratio(app, g),
          make_kp(app, g),      make_scatter(app, g), make_kkr(app, g)};
}

}  // namespace zkkr::cli
