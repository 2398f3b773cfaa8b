#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>

#include "zcross/cli.hpp"
#include "zcross/closed_forms.hpp"
#include "zcross/error.hpp"
#include "zcross/kernels.hpp"
#include "zcross/montecarlo.hpp"
#include "zcross/quadrature.hpp"

namespace zcross::cli {
namespace {

using json = nlohmann::ordered_json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::InsufficientRecurrence:
    case Errc::InvalidVerblunsky:
      return kUsage;
    case Errc::BudgetExceeded:
      return kBudget;
    default:
      return kDomain;
  }
}

struct Common {
  std::string family = "monomial";
  int degree = 10;
  std::string level = "0,0";
  std::string rect = "-2,2,-2,2";
  std::string grid = "256x256";
  std::string out;
  int threads = -1;  // unset
};

int worker_count(int flag) {
  if (flag >= 0) return resolve_threads(flag);
  if (const char* env = std::getenv("ZCROSS_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw Error(Errc::InvalidArgument, "ZCROSS_THREADS must be >= 0");
    return resolve_threads(static_cast<int>(v));
  }
  return resolve_threads(0);
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
  return f;
}

void write_manifest(const std::string& path, const std::string& subcommand,
                    const std::vector<std::string>& args, const json& parameters,
                    const json& seed) {
  json m;
  m["subcommand"] = subcommand;
  m["args"] = args;
  m["parameters"] = parameters;
  m["seed"] = seed;
  m["version"] = kVersion;
  m["timestamp"] = utc_timestamp();
  auto f = open_out(path);
  f << m.dump(2) << '\n';
}

json common_json(const Common& c) {
  return json{{"family", c.family}, {"degree", c.degree}, {"level", c.level},
              {"rect", c.rect},     {"grid", c.grid},     {"out", c.out}};
}

int cmd_density(const Common& c, bool log_scale, const std::vector<std::string>& args,
                std::ostream& out) {
  const BasisFamily family = parse_family(c.family, c.degree);
  const Level level = parse_level(c.level);
  const Rect rect = parse_rect(c.rect);
  const auto [nx, ny] = parse_grid(c.grid);
  const DensityGrid g = density_grid_for(family, c.degree, level, rect, nx, ny,
                                         worker_count(c.threads));
  {
    auto f = open_out(c.out + ".csv");
    write_grid_csv(f, g);
  }
  {
    auto f = open_out(c.out + ".pgm", true);
    write_pgm(f, g, log_scale);
  }
  json params = common_json(c);
  params["log_scale"] = log_scale;
  write_manifest(c.out + ".manifest.json", "density", args, params, nullptr);
  out << "wrote " << c.out << ".csv, " << c.out << ".pgm\n";
  return kOk;
}

int cmd_simulate(const Common& c, std::int64_t trials, std::uint64_t seed,
                 const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  TrialConfig cfg;
  cfg.family = parse_family(c.family, c.degree);
  cfg.n = c.degree;
  cfg.level = parse_level(c.level);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.domain = parse_rect(c.rect);
  std::tie(cfg.nx, cfg.ny) = parse_grid(c.grid);
  cfg.threads = worker_count(c.threads);
  const SimulationResult res = run_simulation(cfg);
  {
    auto f = open_out(c.out + ".zeros.csv");
    write_zero_records_csv(f, res.records);
  }
  if (res.histogram.trials > 0) {
    auto f = open_out(c.out + ".hist.csv");
    write_grid_csv(f, empirical_density(res.histogram));
  }
  json params = common_json(c);
  params["trials"] = trials;
  params["failures"] = res.failures;
  params["zeros"] = res.records.size();
  write_manifest(c.out + ".manifest.json", "simulate", args, params, seed);
  out << "zeros=" << res.records.size() << " failures=" << res.failures << '\n';
  if (res.failures * 1000 >= trials) {
    err << "error: failure rate " << static_cast<double>(res.failures) / trials
        << " is at or above 0.1%\n";
    return kDomain;
  }
  return kOk;
}

int cmd_count(const Common& c, double tol, std::int64_t max_evals, std::ostream& out) {
  const BasisFamily family = parse_family(c.family, c.degree);
  const Level level = parse_level(c.level);
  const Rect rect = parse_rect(c.rect);
  const int n = c.degree;
  const CountResult r = expected_count(
      [&](ComplexPoint z) { return density_at(family, n, level, z); }, rect, tol, max_evals);
  if (r.budget_exceeded) {
    out << "value,err_estimate,evaluations,flag\n"
        << fmt17(r.value) << ',' << fmt17(r.err_estimate) << ',' << r.evaluations
        << ",budget_exceeded\n";
    return kBudget;
  }
  out << "value,err_estimate,evaluations\n"
      << fmt17(r.value) << ',' << fmt17(r.err_estimate) << ',' << r.evaluations << '\n';
  return kOk;
}

struct AsymptoticGrid {
  std::string degrees;
  std::string radii;
  int angles = 0;
  std::string levels;
};

AsymptoticGrid default_grid(int theorem) {
  switch (theorem) {
    case 4: return {"100", "0,0.1,0.25,0.5", 8, "0,0;1,2"};
    case 5: return {"100", "1.5,2", 8, "0,0;10,10"};
    case 6: return {"1,2,5,10,25,50", "1", 2, "0,0;1,2;10,10"};
    case 7: return {"60", "0.5,1,2", 8, "0,0"};
    case 8: return {"100", "0.5,1.5", 8, "0,0"};
    default: return {};
  }
}

int cmd_verify(int theorem, AsymptoticGrid grid, std::ostream& out, std::ostream& err) {
  if (theorem < 4 || theorem > 8) throw Error(Errc::InvalidArgument, "theorem must be 4..8");
  const AsymptoticGrid defaults = default_grid(theorem);
  if (grid.degrees.empty()) grid.degrees = defaults.degrees;
  if (grid.radii.empty()) grid.radii = defaults.radii;
  if (grid.angles <= 0) grid.angles = defaults.angles;
  if (grid.levels.empty()) grid.levels = defaults.levels;

  std::vector<Level> levels;
  std::istringstream ls(grid.levels);
  for (std::string item; std::getline(ls, item, ';');) levels.push_back(parse_level(item));
  std::vector<int> degrees;
  for (double d : parse_list(grid.degrees)) {
    if (d != std::floor(d) || d < 0) throw Error(Errc::InvalidArgument, "degrees must be integers");
    degrees.push_back(static_cast<int>(d));
  }
  std::vector<ComplexPoint> zs;
  if (theorem == 6) {
    zs = {ComplexPoint{1.0, 0.0}, ComplexPoint{-1.0, 0.0}};
  } else {
    for (double r : parse_list(grid.radii)) {
      if (r == 0.0) {
        zs.emplace_back(0.0, 0.0);
        continue;
      }
      for (int k = 0; k < grid.angles; ++k) {
        const double t = 2.0 * std::numbers::pi * k / grid.angles;
        zs.emplace_back(r * std::cos(t), r * std::sin(t));
      }
    }
  }
  std::vector<AsymptoticPoint> points;
  for (int n : degrees) {
    for (const Level& k : levels) {
      for (const ComplexPoint& z : zs) points.push_back({n, z, k});
    }
  }
  const auto cmp = compare_asymptotics(static_cast<Theorem>(theorem), points);
  out << "theorem,n,z_re,z_im,k1,k2,exact,printed,rel_gap,sign_mismatch\n";
  for (const AsymptoticReport& r : cmp.reports) {
    out << theorem << ',' << r.n << ',' << fmt17(r.z.re) << ',' << fmt17(r.z.im) << ','
        << fmt17(r.level.k1) << ',' << fmt17(r.level.k2) << ',' << fmt17(r.exact) << ','
        << fmt17(r.printed_asymptotic) << ',' << fmt17(r.rel_gap) << ','
        << (r.sign_mismatch ? "true" : "false") << '\n';
  }
  for (const SkippedPoint& s : cmp.skipped) {
    err << "skipped n=" << s.point.n << " z=(" << s.point.z.re << ", " << s.point.z.im
        << "): " << s.reason << '\n';
  }
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool grid) {
  sub->add_option("--family", c.family,
                  "monomial|weyl|rootbinomial|fouriercos|fouriersincos|op-real:SRC|op-circle:FILE");
  sub->add_option("--degree", c.degree, "Degree N")->check(CLI::NonNegativeNumber);
  sub->add_option("--level", c.level, "Level K1,K2");
  sub->add_option("--rect", c.rect, "Region x0,x1,y0,y1");
  if (grid) {
    sub->add_option("--grid", c.grid, "Grid NXxNY");
    sub->add_option("--out", c.out, "Output prefix")->required();
    sub->add_option("--threads", c.threads, "Worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber);
  }
}

int replay(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  json m;
  try {
    m = json::parse(f);
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!m.contains("args") || !m["args"].is_array()) {
    throw Error(Errc::InvalidArgument, "manifest has no args array");
  }
  return run(m["args"].get<std::vector<std::string>>(), out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expected densities of complex level crossings of random Gaussian sums"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common c;
  bool log_scale = false;
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  double tol = 1e-6;
  std::int64_t max_evals = kDefaultEvaluationBudget;
  int theorem = 0;
  AsymptoticGrid agrid;
  std::string manifest;

  auto* density = app.add_subcommand("density", "Tabulate the density on a grid (CSV + PGM)");
  add_common(density, c, true);
  density->add_flag("--log-scale", log_scale, "Logarithmic grey levels");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo zeros and empirical density");
  add_common(simulate, c, true);
  simulate->add_option("--trials", trials, "Number of random sums")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "RNG seed");

  auto* count = app.add_subcommand("count", "Expected number of crossings in a rectangle");
  add_common(count, c, false);
  count->add_option("--tol", tol, "Relative tolerance")->check(CLI::Range(1e-12, 1e-2));
  count->add_option("--max-evals", max_evals, "Evaluation budget")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-asymptotics",
                                    "Compare limit and large-N forms with exact densities");
  verify->add_option("--theorem", theorem, "4, 5, 6, 7 or 8")->required()->check(CLI::Range(4, 8));
  verify->add_option("--degrees", agrid.degrees, "Degrees, comma separated");
  verify->add_option("--radii", agrid.radii, "Radii |z|, comma separated");
  verify->add_option("--angles", agrid.angles, "Equally spaced angles per radius");
  verify->add_option("--levels", agrid.levels, "Levels K1,K2;K1,K2;...");

  auto* replay_cmd = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay_cmd->add_option("manifest", manifest, "PREFIX.manifest.json")->required();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("zcross");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*density) return cmd_density(c, log_scale, args, out);
    if (*simulate) return cmd_simulate(c, trials, seed, args, out, err);
    if (*count) return cmd_count(c, tol, max_evals, out);
    if (*verify) return cmd_verify(theorem, agrid, out, err);
    if (*replay_cmd) return replay(manifest, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.where()) err << " at z = (" << fmt17(e.where()->re) << ", " << fmt17(e.where()->im) << ")";
    err << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace zcross::cli
