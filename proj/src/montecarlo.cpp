#include "zcross/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <ostream>
#include <thread>

#include "zcross/error.hpp"

namespace zcross {
namespace {

// Roots whose residual exceeds this multiple of the rounding scale fail the trial.
constexpr double kResidualBound = 1e-10;

void check_eta(std::span<const cplx> eta) {
  if (eta.empty()) throw Error(Errc::InvalidArgument, "need at least one coefficient");
}

void check_residuals(std::span<const cplx> eta, const BasisFamily& family, Level level,
                     const std::vector<ComplexPoint>& roots) {
  for (const ComplexPoint& z : roots) {
    const Residual r = level_residual(eta, family, level, z);
    if (!(r.value <= kResidualBound * r.scale)) {
      throw Error(Errc::NonConvergence, "root residual above bound", z);
    }
  }
}

}  // namespace

std::vector<ComplexPoint> solve_level_polynomial(std::span<const cplx> eta,
                                                 const BasisFamily& family, Level level) {
  check_eta(eta);
  const int n = static_cast<int>(eta.size()) - 1;
  const std::vector<double> w = monomial_weights(family, n);
  std::vector<cplx> c(eta.size());
  for (std::size_t j = 0; j < eta.size(); ++j) c[j] = eta[j] * w[j];
  c[0] -= level.value();
  std::vector<ComplexPoint> out;
  for (const cplx& r : polynomial_roots(c)) out.emplace_back(r);
  check_residuals(eta, family, level, out);
  return out;
}

std::vector<ComplexPoint> solve_level_trig(std::span<const cplx> eta, const BasisFamily& family,
                                           Level level) {
  check_eta(eta);
  const int n = static_cast<int>(eta.size()) - 1;
  const bool sincos = std::holds_alternative<FourierSinCos>(family);
  if (!sincos && !std::holds_alternative<FourierCos>(family)) {
    throw Error(Errc::InvalidArgument, "solve_level_trig needs a trigonometric family");
  }
  const int m_max = max_frequency(family, n);
  // Coefficient of w^{m + M} after multiplying through by w^M.
  std::vector<cplx> c(2 * static_cast<std::size_t>(m_max) + 1, cplx{});
  const cplx half_over_i{0.0, -0.5};
  for (int j = 0; j <= n; ++j) {
    const bool is_sin = sincos && (j % 2 == 1);
    const int m = sincos ? (is_sin ? (j + 1) / 2 : j / 2) : j;
    if (m == 0) {
      c[m_max] += eta[j];
    } else if (is_sin) {
      c[m_max + m] += eta[j] * half_over_i;
      c[m_max - m] -= eta[j] * half_over_i;
    } else {
      c[m_max + m] += 0.5 * eta[j];
      c[m_max - m] += 0.5 * eta[j];
    }
  }
  c[m_max] -= level.value();
  std::vector<ComplexPoint> out;
  for (const cplx& w : polynomial_roots(c)) {
    if (w == cplx{}) continue;
    double re = std::arg(w);
    if (re <= -std::numbers::pi) re += 2.0 * std::numbers::pi;
    out.emplace_back(re, -std::log(std::abs(w)));
  }
  check_residuals(eta, family, level, out);
  return out;
}

Residual level_residual(std::span<const cplx> eta, const BasisFamily& family, Level level,
                        ComplexPoint z) {
  check_eta(eta);
  const BasisEval e = eval_basis(family, static_cast<int>(eta.size()) - 1, z);
  cplx s = -level.value();
  double scale = std::abs(level.value());
  for (std::size_t j = 0; j < eta.size(); ++j) {
    const cplx term = eta[j] * e.values[j];
    s += term;
    scale += std::abs(term);
  }
  return {std::abs(s), scale};
}

Histogram2D::Histogram2D(Rect r, int nx_, int ny_)
    : rect(r), nx(nx_), ny(ny_), counts(static_cast<std::size_t>(nx_) * ny_, 0) {
  if (nx < 1 || ny < 1) throw Error(Errc::InvalidArgument, "histogram needs positive dimensions");
  if (!rect.well_ordered()) throw Error(Errc::InvalidArgument, "rect is not well ordered");
}

bool Histogram2D::add(ComplexPoint z) {
  if (!rect.contains(z)) return false;
  int j = static_cast<int>(std::floor((z.re - rect.x_lo) / rect.width() * nx));
  int i = static_cast<int>(std::floor((z.im - rect.y_lo) / rect.height() * ny));
  j = std::clamp(j, 0, nx - 1);
  i = std::clamp(i, 0, ny - 1);
  ++counts[static_cast<std::size_t>(i) * nx + j];
  return true;
}

void Histogram2D::merge(const Histogram2D& other) {
  if (other.nx != nx || other.ny != ny) {
    throw Error(Errc::InvalidArgument, "histogram shapes differ");
  }
  for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += other.counts[k];
  trials += other.trials;
}

std::int64_t Histogram2D::total() const {
  std::int64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

int resolve_threads(int requested) {
  if (requested < 0) throw Error(Errc::InvalidArgument, "thread count must be >= 0");
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

SimulationResult run_simulation(const TrialConfig& config) {
  if (config.trials < 1) throw Error(Errc::InvalidArgument, "trials must be >= 1");
  if (config.n < 1) throw Error(Errc::InvalidArgument, "degree must be >= 1");
  const bool trig = std::holds_alternative<FourierCos>(config.family) ||
                    std::holds_alternative<FourierSinCos>(config.family);
  if (!trig && !is_weighted_monomial(config.family)) {
    throw Error(Errc::InvalidArgument,
                "simulation supports monomial, weyl, rootbinomial and the Fourier families");
  }
  if (!trig) monomial_weights(config.family, config.n);  // validates the degree

  SimulationResult result;
  result.histogram = Histogram2D(config.domain, config.nx, config.ny);

  struct TrialOutcome {
    bool failed = false;
    std::vector<ZeroRecord> records;
  };
  auto run_trial = [&](std::int64_t t) {
    TrialOutcome o;
    const auto eta = sample_coefficients(config.n, config.seed, t);
    try {
      const auto roots = trig ? solve_level_trig(eta, config.family, config.level)
                              : solve_level_polynomial(eta, config.family, config.level);
      o.records.reserve(roots.size());
      for (const ComplexPoint& z : roots) {
        o.records.push_back({t, z, level_residual(eta, config.family, config.level, z).value});
      }
    } catch (const Error& e) {
      if (e.code() != Errc::NonConvergence && e.code() != Errc::OverflowDomain) throw;
      o.failed = true;
      o.records.clear();
    }
    return o;
  };

  const int workers = static_cast<int>(
      std::min<std::int64_t>(resolve_threads(config.threads), config.trials));
  constexpr std::int64_t kBatch = 4096;
  std::vector<TrialOutcome> batch;
  for (std::int64_t start = 0; start < config.trials; start += kBatch) {
    const std::int64_t count = std::min(kBatch, config.trials - start);
    batch.assign(static_cast<std::size_t>(count), TrialOutcome{});
    if (workers <= 1) {
      for (std::int64_t k = 0; k < count; ++k) batch[k] = run_trial(start + k);
    } else {
      std::atomic<std::int64_t> next{0};
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::int64_t k; (k = next.fetch_add(1)) < count;) batch[k] = run_trial(start + k);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (std::int64_t k = 0; k < count; ++k) {
      TrialOutcome& o = batch[k];
      if (o.failed) {
        ++result.failures;
        result.failed_trials.push_back(start + k);
        continue;
      }
      for (const ZeroRecord& r : o.records) {
        result.histogram.add(r.z);
        result.records.push_back(r);
      }
    }
  }
  result.histogram.trials = config.trials - result.failures;
  return result;
}

DensityGrid empirical_density(const Histogram2D& h) {
  if (h.trials <= 0) throw Error(Errc::InvalidArgument, "histogram has no trials");
  DensityGrid g{h.rect, h.nx, h.ny, std::vector<double>(h.counts.size())};
  const double norm = static_cast<double>(h.trials) * g.dx() * g.dy();
  for (std::size_t k = 0; k < h.counts.size(); ++k) {
    g.values[k] = static_cast<double>(h.counts[k]) / norm;
  }
  return g;
}

void write_zero_records_csv(std::ostream& os, std::span<const ZeroRecord> records) {
  os << "trial,re,im,residual\n";
  char buf[128];
  for (const ZeroRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g,%.17g\n", static_cast<long long>(r.trial),
                  r.z.re, r.z.im, r.residual);
    os << buf;
  }
}

}  // namespace zcross
