#include "ixdelay/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ixdelay/analytic.hpp"
#include "ixdelay/ensemble.hpp"
#include "ixdelay/error.hpp"
#include "ixdelay/histogram.hpp"
#include "ixdelay/io.hpp"
#include "ixdelay/steady_state.hpp"
#include "ixdelay/step_map.hpp"
#include "ixdelay/validation.hpp"

namespace ixdelay::cli {
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string spec;
  std::string policy = "fifo";
  std::size_t particles = 10000;
  std::size_t iterations = 8;
  double tol = 0.05;
  std::uint64_t seed = 1;
  std::string out;
  double bin_width = 0.1;
  unsigned threads = 1;

  std::string grid_lambda;
  std::string grid_delta_d;
  std::string grid_delta_s;
  std::string grid_load = "0.1:5:0.1";
  double lambda = 1.0;
  double delta_d = 1.5;
  std::size_t events = 200;
  std::size_t trials = 100;
  std::size_t measure_iterations = 10;
  std::size_t cdf_points = 11;
  std::string check = "all";
  double x = 1.0;
  double t_max = 0.0;
  double step = 0.05;
};

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

fs::path output_dir(const Options& o, const char* command) {
  if (!o.out.empty()) return o.out;
  if (const char* root = std::getenv(kOutRootVariable); root != nullptr && *root != '\0') {
    return fs::path(root) / command;
  }
  return fs::path("ixdelay-out") / command;
}

std::vector<double> grid_or(const std::string& text, std::vector<double> fallback) {
  return text.empty() ? fallback : parse_grid(text);
}

// ---------------------------------------------------------------- simulate

int simulate(const Options& o, std::ostream& out) {
  const Intersection spec = load_spec(o.spec);
  const Policy policy = parse_policy(o.policy);
  const fs::path dir = output_dir(o, "simulate");
  if (o.iterations == 0) throw std::invalid_argument("--iterations must be at least 1");

  ParticleEnsemble ensemble = init_ensemble(o.particles, spec, policy, o.seed);
  Histogram previous = histogram(ensemble, o.bin_width);
  auto hist_name = [](std::size_t it) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "hist_iter_%03zu.csv", it);
    return std::string(buf);
  };
  write_text(dir / hist_name(1), histogram_to_csv(previous));

  std::vector<std::vector<double>> log{{1.0, std::nan(""), mean_total_delay(ensemble), mean_max_delay(ensemble), 0.0}};
  std::vector<DelaySample> trace;
  std::size_t streak = 0;
  std::size_t converged_at = 0;
  for (std::size_t it = 2; it <= o.iterations; ++it) {
    std::vector<DelaySample> samples;
    propagate(ensemble, 1, {o.threads, &samples});
    trace.insert(trace.end(), samples.begin(), samples.end());
    Histogram next = histogram(ensemble, o.bin_width);
    const double l1 = l1_distance(previous, next);
    write_text(dir / hist_name(it), histogram_to_csv(next));
    previous = std::move(next);
    streak = l1 < o.tol ? streak + 1 : 0;
    if (streak >= 3 && converged_at == 0) converged_at = it;
    log.push_back({static_cast<double>(it), l1, mean_total_delay(ensemble), mean_max_delay(ensemble),
                   l1 < o.tol ? 1.0 : 0.0});
  }

  const std::vector<std::string> log_header{"iteration", "l1", "mean_total_delay", "mean_max_delay", "below_tol"};
  write_text(dir / "convergence.csv", table_to_csv(log_header, log));
  write_text(dir / "samples.csv", samples_to_csv(trace));

  std::map<std::int64_t, std::vector<double>> marg;
  for (std::size_t k = 0; k < spec.lane_count(); ++k) {
    for (const auto& [bin, mass] : previous.marginal(k)) {
      auto& row = marg[bin];
      row.resize(spec.lane_count(), 0.0);
      row[k] = mass;
    }
  }
  std::vector<std::string> marg_header{"bin_lower"};
  for (std::size_t k = 0; k < spec.lane_count(); ++k) marg_header.push_back("lane_" + std::to_string(k + 1));
  std::vector<std::vector<double>> marg_rows;
  for (const auto& [bin, masses] : marg) {
    std::vector<double> row{previous.lower_edge(bin)};
    row.insert(row.end(), masses.begin(), masses.end());
    marg_rows.push_back(std::move(row));
  }
  write_text(dir / "marginals.csv", table_to_csv(marg_header, marg_rows));

  Manifest manifest{"simulate", spec, std::string(to_string(policy)), o.seed, o.particles, o.iterations,
                    {{"bin_width", g(o.bin_width)},
                     {"tol", g(o.tol)},
                     {"threads", std::to_string(o.threads)},
                     {"converged_at", converged_at ? std::to_string(converged_at) : "none"},
                     {"fallback_steps", std::to_string(ensemble.fallback_count())}}};
  write_text(dir / "manifest.json", manifest_to_json(manifest));

  out << "simulate: " << o.iterations << " iterations, N=" << o.particles << ", policy " << to_string(policy)
      << ", final mean T-sum " << g(mean_total_delay(ensemble)) << "\n"
      << "wrote " << dir.string() << "\n";
  return kOk;
}

// ---------------------------------------------------------------- analyze

int analyze(const Options& o, std::ostream& out) {
  const fs::path dir = output_dir(o, "analyze");
  const std::vector<double> loads = parse_grid(o.grid_load);
  const std::vector<double> deltas = grid_or(o.grid_delta_d, {1, 2, 3, 4});
  const std::vector<double> lambdas = grid_or(o.grid_lambda, parse_grid("0.1:4:0.1"));
  if (o.cdf_points < 2) throw std::invalid_argument("--cdf-points must be at least 2");

  std::vector<std::vector<double>> rows;
  for (const auto& r : point_mass_curves(loads)) rows.push_back({r.load, r.zero, r.delta_d});
  write_text(dir / "point_masses.csv", table_to_csv(std::vector<std::string>{"lambda_delta_d", "p_zero", "p_delta_d"}, rows));

  for (double dd : deltas) {
    const SteadyStateSolution s = solve_steady_state(o.lambda, dd);
    rows.clear();
    for (std::size_t i = 0; i < o.cdf_points; ++i) {
      const double t = i + 1 == o.cdf_points ? dd : dd * static_cast<double>(i) / static_cast<double>(o.cdf_points - 1);
      rows.push_back({t, delay_cdf(s, t)});
    }
    write_text(dir / ("cdf_delta_d_" + g(dd) + ".csv"), table_to_csv(std::vector<std::string>{"t", "cdf"}, rows));
  }

  rows.clear();
  for (double l : lambdas) rows.push_back({l, expected_delay(l, o.delta_d), low_flow_approx(l, o.delta_d)});
  write_text(dir / "expected_delay.csv",
             table_to_csv(std::vector<std::string>{"lambda", "expected_delay", "low_flow"}, rows));

  Manifest manifest{"analyze", two_lane_intersection(o.lambda / 2, o.lambda / 2, o.delta_d, 0.0), "fo", 0, 0, 0,
                    {{"grid_load", o.grid_load},
                     {"grid_delta_d", o.grid_delta_d.empty() ? "1,2,3,4" : o.grid_delta_d},
                     {"grid_lambda", o.grid_lambda.empty() ? "0.1:4:0.1" : o.grid_lambda},
                     {"cdf_lambda", g(o.lambda)},
                     {"expected_delay_delta_d", g(o.delta_d)}}};
  write_text(dir / "manifest.json", manifest_to_json(manifest));
  out << "analyze: " << loads.size() << " loads, " << deltas.size() << " CDF curves, " << lambdas.size()
      << " expected-delay points\nwrote " << dir.string() << "\n";
  return kOk;
}

// ---------------------------------------------------------------- validate

int validate(const Options& o, std::ostream& out) {
  const fs::path dir = output_dir(o, "validate");
  const std::set<std::string> known{"all", "mapping", "eds", "policies"};
  if (!known.contains(o.check)) throw std::invalid_argument("unknown --check '" + o.check + "'");
  const bool all = o.check == "all";
  if ((all || o.check != "eds") && o.spec.empty()) {
    throw std::invalid_argument("--spec is required for the mapping and policies checks");
  }

  std::vector<ValidationReport> reports;
  if (all || o.check == "mapping") {
    const Intersection spec = load_spec(o.spec);
    reports.push_back(compare_mapping_vs_oracle(spec, parse_policy(o.policy), {o.events, o.trials, o.seed, 1e-9}));
  }
  if (all || o.check == "eds") {
    EdsCheckOptions eds;
    eds.particles = o.particles;
    eds.seed = o.seed;
    eds.tol = o.tol;
    eds.bin_width = o.bin_width;
    eds.measure_iterations = o.measure_iterations;
    eds.threads = o.threads;
    reports.push_back(compare_eds_vs_analytic(o.lambda, o.delta_d, eds));
  }
  if (all || o.check == "policies") {
    const Intersection spec = load_spec(o.spec);
    reports.push_back(compare_policies(spec, o.particles, o.iterations, o.seed, o.threads));
  }

  bool ok = true;
  for (const auto& r : reports) {
    write_text(dir / ("report_" + r.scenario + ".json"), report_to_json(r));
    write_text(dir / ("report_" + r.scenario + ".txt"), report_to_text(r));
    out << report_to_text(r);
    ok = ok && r.passed();
  }
  return ok ? kOk : kValidationFailed;
}

// ---------------------------------------------------------------- sweep

struct Cell {
  double lambda = 0.0;
  double delta_d = 0.0;
  double delta_s = 0.0;
  Policy policy = Policy::fo;
  MeanEstimate delay;
  bool converged = false;
  std::size_t iterations = 0;
  std::string error;
};

Intersection cell_spec(const Intersection* base, double lambda, double dd, double ds) {
  if (base == nullptr) return two_lane_intersection(lambda / 2, lambda / 2, dd, ds);
  std::vector<double> rates(base->rates().begin(), base->rates().end());
  for (double& r : rates) r *= lambda / base->total_rate();
  return base->with_rates(std::move(rates)).with_gaps(dd, ds);
}

int sweep(const Options& o, std::ostream& out) {
  const fs::path dir = output_dir(o, "sweep");
  std::optional<Intersection> base;
  if (!o.spec.empty()) base = load_spec(o.spec);
  const std::vector<double> lambdas = grid_or(o.grid_lambda, parse_grid("0.2:1.2:0.2"));
  const std::vector<double> dds = grid_or(o.grid_delta_d, {1.5});
  const std::vector<double> dss = grid_or(o.grid_delta_s, {0.0});
  std::vector<Policy> policies;
  if (o.policy == "both") {
    policies = {Policy::fifo, Policy::fo};
  } else {
    policies = {parse_policy(o.policy)};
  }
  if (lambdas.empty() || dds.empty() || dss.empty()) throw std::invalid_argument("sweep grids must be nonempty");

  std::vector<Cell> cells;
  for (Policy p : policies)
    for (double dd : dds)
      for (double ds : dss)
        for (double l : lambdas) cells.push_back({l, dd, ds, p, {}, false, 0, {}});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      Cell& c = cells[i];
      try {
        const Intersection spec = cell_spec(base ? &*base : nullptr, c.lambda, c.delta_d, c.delta_s);
        SteadyStateOptions so;
        so.particles = o.particles;
        so.tol = o.tol;
        so.max_iterations = o.iterations;
        so.seed = RandomStream::derive(o.seed, i).state();
        so.bin_width = o.bin_width;
        SteadyStateRun run = run_to_steady_state(spec, c.policy, so);
        c.converged = run.converged;
        c.iterations = run.iterations_used;
        c.delay = mean_delay(sample_steady_state(run.ensemble, o.measure_iterations), o.particles);
      } catch (const std::exception& e) {
        c.error = e.what();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(o.threads, static_cast<unsigned>(cells.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }

  std::ostringstream csv;
  csv.precision(17);
  csv << "lambda,delta_d,delta_s,policy,mean_delay,standard_error,converged,iterations,error\n";
  for (const auto& c : cells) {
    csv << c.lambda << "," << c.delta_d << "," << c.delta_s << "," << to_string(c.policy) << ",";
    if (c.error.empty()) {
      csv << c.delay.mean << "," << c.delay.standard_error << "," << (c.converged ? 1 : 0) << "," << c.iterations
          << ",\n";
    } else {
      std::string msg = c.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      csv << ",,0,0," << msg << "\n";
    }
  }
  write_text(dir / "sweep.csv", csv.str());

  std::ostringstream best;
  best.precision(17);
  best << "lambda,policy,delta_d,delta_s,mean_delay\n";
  std::ostringstream mono;
  mono << "delta_d,delta_s,policy,non_decreasing\n";
  std::size_t failures = 0;
  for (Policy p : policies) {
    for (double l : lambdas) {
      const Cell* arg = nullptr;
      for (const auto& c : cells) {
        if (c.policy != p || c.lambda != l || !c.error.empty()) continue;
        if (arg == nullptr || c.delay.mean < arg->delay.mean) arg = &c;
      }
      if (arg != nullptr) {
        best << l << "," << to_string(p) << "," << arg->delta_d << "," << arg->delta_s << "," << arg->delay.mean << "\n";
      }
    }
    for (double dd : dds) {
      for (double ds : dss) {
        bool monotone = true;
        const Cell* prev = nullptr;
        for (const auto& c : cells) {
          if (c.policy != p || c.delta_d != dd || c.delta_s != ds || !c.error.empty()) continue;
          if (prev != nullptr) {
            const double slack = 3.0 * std::hypot(prev->delay.standard_error, c.delay.standard_error);
            if (c.delay.mean < prev->delay.mean - slack) monotone = false;
          }
          prev = &c;
        }
        mono << dd << "," << ds << "," << to_string(p) << "," << (monotone ? 1 : 0) << "\n";
      }
    }
  }
  for (const auto& c : cells) failures += c.error.empty() ? 0 : 1;
  write_text(dir / "argmin.csv", best.str());
  write_text(dir / "monotonicity.csv", mono.str());

  Manifest manifest{"sweep",
                    cell_spec(base ? &*base : nullptr, lambdas.front(), dds.front(), dss.front()),
                    o.policy,
                    o.seed,
                    o.particles,
                    o.iterations,
                    {{"grid_lambda", o.grid_lambda.empty() ? "0.2:1.2:0.2" : o.grid_lambda},
                     {"grid_delta_d", o.grid_delta_d.empty() ? "1.5" : o.grid_delta_d},
                     {"grid_delta_s", o.grid_delta_s.empty() ? "0" : o.grid_delta_s},
                     {"tol", g(o.tol)},
                     {"bin_width", g(o.bin_width)},
                     {"measure_iterations", std::to_string(o.measure_iterations)},
                     {"cell_seed", "RandomStream::derive(seed, cell index)"}}};
  write_text(dir / "manifest.json", manifest_to_json(manifest));
  out << "sweep: " << cells.size() << " cells, " << failures << " failed\nwrote " << dir.string() << "\n";
  return kOk;
}

// ---------------------------------------------------------------- regions

int regions(const Options& o, std::ostream& out) {
  const Intersection spec = load_spec(o.spec);
  if (spec.lane_count() != 2) throw std::invalid_argument("regions needs a two-lane spec");
  if (!(o.step > 0.0)) throw std::invalid_argument("--step must be positive");
  const fs::path dir = output_dir(o, "regions");
  const double dd = spec.delta_d();
  const double hi = o.t_max > 0.0 ? o.t_max : o.x + 2.0 * (dd + spec.delta_s()) + dd;
  const auto n = static_cast<std::size_t>(std::floor((hi + dd) / o.step + 1e-9)) + 1;

  for (Policy policy : {Policy::fifo, Policy::fo}) {
    std::ostringstream csv;
    csv.precision(10);
    csv << "t1,t2,region\n";
    std::set<int> labels;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double t1 = -dd + static_cast<double>(i) * o.step;
        const double t2 = -dd + static_cast<double>(j) * o.step;
        int id = -1;
        try {
          id = classify_region(DelayVector{t1, t2}, o.x, Lane::from_number(1), spec, policy).id;
        } catch (const ConsistencyError&) {
        }
        labels.insert(id);
        csv << t1 << "," << t2 << "," << id << "\n";
      }
    }
    write_text(dir / ("regions_" + std::string(to_string(policy)) + ".csv"), csv.str());
    out << to_string(policy) << " labels:";
    for (int id : labels) out << " " << id;
    out << "\n";
  }
  Manifest manifest{"regions", spec, "fifo,fo", 0, 0, 0, {{"x", g(o.x)}, {"step", g(o.step)}, {"t_max", g(hi)}}};
  write_text(dir / "manifest.json", manifest_to_json(manifest));
  out << "wrote " << dir.string() << "\n";
  return kOk;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
      throw std::invalid_argument("bad grid value '" + s + "' in '" + text + "'");
    }
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw std::invalid_argument("range grid must be start:stop:step, got '" + text + "'");
    const double start = number(parts[0]);
    const double stop = number(parts[1]);
    const double step = number(parts[2]);
    if (!(step > 0.0) || stop < start) throw std::invalid_argument("empty range grid '" + text + "'");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return out;
  }
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(number(p));
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Event-driven delay model for unmanaged intersections"};
  app.name(args.empty() ? "ixdelay" : args.front());
  app.require_subcommand(1);
  app.footer(std::string("Environment: ") + kOutRootVariable +
             " sets the default output root (default ./ixdelay-out).\n"
             "Exit codes: 0 ok, 2 configuration error, 3 validation failure, 4 I/O error.");
  Options o;

  auto common = [&](CLI::App* sub, bool spec_required) {
    auto* spec = sub->add_option("--spec", o.spec, "Intersection JSON file")->check(CLI::ExistingFile);
    if (spec_required) spec->required();
    sub->add_option("--policy", o.policy, "fifo or fo");
    sub->add_option("--seed", o.seed, "Master seed");
    sub->add_option("--out", o.out, "Output directory");
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  auto ensemble_opts = [&](CLI::App* sub) {
    sub->add_option("--particles", o.particles, "Particles N")->check(CLI::PositiveNumber);
    sub->add_option("--bin-width", o.bin_width, "Histogram bin width [s]")->check(CLI::PositiveNumber);
    sub->add_option("--tol", o.tol, "L1 tolerance between successive histograms")->check(CLI::PositiveNumber);
  };

  auto* sim = app.add_subcommand("simulate", "Propagate an ensemble and write per-iteration histograms");
  common(sim, true);
  ensemble_opts(sim);
  sim->add_option("--iterations", o.iterations, "Last iteration to reach (iteration 1 is the initial state)");

  auto* ana = app.add_subcommand("analyze", "Closed-form FO steady state curves (two symmetric lanes, no same-lane gap)");
  ana->add_option("--out", o.out, "Output directory");
  ana->add_option("--grid-load", o.grid_load, "lambda*delta_d grid for point masses");
  ana->add_option("--grid-delta-d", o.grid_delta_d, "delta_d values for CDF curves (default 1,2,3,4)");
  ana->add_option("--grid-lambda", o.grid_lambda, "lambda grid for expected delay (default 0.1:4:0.1)");
  ana->add_option("--lambda", o.lambda, "Total rate for CDF curves");
  ana->add_option("--delta-d", o.delta_d, "delta_d for the expected-delay curve");
  ana->add_option("--cdf-points", o.cdf_points, "Points per CDF curve");

  auto* val = app.add_subcommand("validate", "Closed form vs oracle, EDS vs analytic, FO vs FIFO");
  common(val, false);
  ensemble_opts(val);
  val->add_option("--check", o.check, "all, mapping, eds or policies");
  val->add_option("--events", o.events, "Events per oracle stream");
  val->add_option("--trials", o.trials, "Oracle streams");
  val->add_option("--lambda", o.lambda, "Total rate for the EDS check");
  val->add_option("--delta-d", o.delta_d, "delta_d for the EDS check");
  val->add_option("--iterations", o.iterations, "Iteration compared in the policies check");
  val->add_option("--measure-iterations", o.measure_iterations, "Iterations sampled after convergence");

  auto* swp = app.add_subcommand("sweep", "Steady-state mean delay over a parameter grid");
  common(swp, false);
  ensemble_opts(swp);
  swp->add_option("--grid-lambda", o.grid_lambda, "Total rates (default 0.2:1.2:0.2)");
  swp->add_option("--grid-delta-d", o.grid_delta_d, "delta_d values (default 1.5)");
  swp->add_option("--grid-delta-s", o.grid_delta_s, "delta_s values (default 0)");
  swp->add_option("--iterations", o.iterations, "Maximum iterations per cell");
  swp->add_option("--measure-iterations", o.measure_iterations, "Iterations sampled after convergence");

  auto* reg = app.add_subcommand("regions", "Region id grid over (T1, T2) for a lane-1 event");
  common(reg, true);
  reg->add_option("--x", o.x, "Inter-arrival gap");
  reg->add_option("--t-max", o.t_max, "Upper grid edge");
  reg->add_option("--step", o.step, "Grid step");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }
  if (swp->parsed()) {
    if (o.policy.empty()) o.policy = "fo";
    if (swp->count("--tol") == 0) o.tol = 0.1;
    if (swp->count("--iterations") == 0) o.iterations = 300;
    if (swp->count("--policy") == 0) o.policy = "fo";
  }
  if (val->parsed()) {
    if (val->count("--tol") == 0) o.tol = 0.1;
    if (val->count("--delta-d") == 0) o.delta_d = 1.0;
  }

  try {
    if (sim->parsed()) return simulate(o, out);
    if (ana->parsed()) return analyze(o, out);
    if (val->parsed()) return validate(o, out);
    if (swp->parsed()) return sweep(o, out);
    if (reg->parsed()) return regions(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::out_of_range& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::domain_error& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::range_error& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailed;
  }
  return kConfigError;
}

}  // namespace ixdelay::cli
