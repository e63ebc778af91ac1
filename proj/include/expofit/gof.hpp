#ifndef EXPOFIT_GOF_HPP
#define EXPOFIT_GOF_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "expofit/dataset.hpp"
#include "expofit/dist.hpp"
#include "expofit/error.hpp"
#include "expofit/fit.hpp"
#include "expofit/random.hpp"

namespace expofit {

struct GofConfig {
  std::size_t replicates = 10000;
  std::uint64_t seed = 0;
  double significance = 0.05;
  /// Worker threads for the replicate loop; 0 picks hardware_concurrency().
  /// Has no effect on any result value.
  unsigned threads = 0;

  void validate() const {
    if (replicates < 1) {
      throw DomainError("replicates must be >= 1");
    }
    if (!(significance >= 0.0 && significance <= 1.0)) {
      throw DomainError("significance must lie in [0, 1]");
    }
  }
};

struct GofResult {
  double ks_empirical;
  double p_value;
  std::size_t exceed_count;
  std::size_t replicates;
  std::uint64_t seed;
  double significance;
  bool reject;
  /// Fit of the observed data that the replicates are drawn from.
  FitResult fit;
  /// Replicates whose refit hit max_iterations (still scored).
  std::size_t nonconverged;
  /// KS statistic of replicate b at index b.
  std::vector<double> replicate_ks;
};

/// max_i |f_i - F(x_i)| over the data points, F as in the least-squares
/// objective (closed form, extended below theta).
inline double ks_statistic(const EcdfDataset& ds, const ExpModel& model) {
  double d = 0.0;
  for (const auto& p : ds.points()) {
    d = std::max(d, std::abs(p.f - cdf_extended(model, p.x)));
  }
  return d;
}

/// KS statistic of one synthetic replicate: n draws from `fitted` on the
/// stream keyed by (seed, index), refit with `cfg`, KS against the refit.
inline double replicate_ks(const ExpModel& fitted, std::size_t n, const FitConfig& cfg,
                           std::uint64_t seed, std::uint64_t index, bool* converged = nullptr) {
  auto gen = replicate_stream(seed, index);
  const auto synthetic = from_samples(sample(fitted, n, gen), "replicate");
  const auto refit = fit(synthetic, cfg);
  if (converged != nullptr) {
    *converged = refit.converged;
  }
  return ks_statistic(synthetic, refit.model);
}

namespace detail {

inline unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, jobs));
}

}  // namespace detail

/// Parametric bootstrap KS test of `fitted` (a fit of `ds` with `fit_cfg`).
/// p = #{b : KS_b > KS_observed} / B. Every replicate owns its stream, so the
/// result does not depend on thread count or scheduling.
inline GofResult bootstrap_test(const EcdfDataset& ds, const FitResult& fitted,
                                const FitConfig& fit_cfg, const GofConfig& gof_cfg) {
  fit_cfg.validate();
  gof_cfg.validate();
  if (fitted.model.kind() != fit_cfg.model_kind) {
    throw DomainError("fitted model kind does not match the fit configuration");
  }
  const std::size_t n = ds.size();
  const std::size_t B = gof_cfg.replicates;

  GofResult result{ks_statistic(ds, fitted.model), 0.0, 0, B, gof_cfg.seed,
                   gof_cfg.significance, false, fitted, 0, std::vector<double>(B, 0.0)};

  std::vector<char> converged(B, 1);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t b = next.fetch_add(1); b < B; b = next.fetch_add(1)) {
      try {
        bool ok = true;
        result.replicate_ks[b] = replicate_ks(fitted.model, n, fit_cfg, gof_cfg.seed, b, &ok);
        converged[b] = ok ? 1 : 0;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next.store(B);
      }
    }
  };

  const unsigned workers = detail::worker_count(gof_cfg.threads, B);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  result.exceed_count = static_cast<std::size_t>(
      std::count_if(result.replicate_ks.begin(), result.replicate_ks.end(),
                    [&](double ks) { return ks > result.ks_empirical; }));
  result.nonconverged = static_cast<std::size_t>(std::count(converged.begin(), converged.end(), 0));
  result.p_value = static_cast<double>(result.exceed_count) / static_cast<double>(B);
  result.reject = result.p_value <= gof_cfg.significance;
  return result;
}

/// Fits `ds` with the given kind, then runs the bootstrap against that fit.
inline GofResult bootstrap_test(const EcdfDataset& ds, ModelKind kind, FitConfig fit_cfg,
                                const GofConfig& gof_cfg) {
  fit_cfg.model_kind = kind;
  return bootstrap_test(ds, fit(ds, fit_cfg), fit_cfg, gof_cfg);
}

}  // namespace expofit

#endif  // EXPOFIT_GOF_HPP
