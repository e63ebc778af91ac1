#ifndef EXPOFIT_FIT_HPP
#define EXPOFIT_FIT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>

#include "expofit/dataset.hpp"
#include "expofit/dist.hpp"
#include "expofit/error.hpp"
#include "expofit/nelder_mead.hpp"

namespace expofit {

struct FitConfig {
  ModelKind model_kind = ModelKind::OneParam;
  std::size_t max_iterations = 2000;
  /// Applies to both the simplex diameter (transformed coordinates) and the
  /// spread of objective values.
  double tolerance = 1e-10;

  void validate() const {
    if (max_iterations < 1) {
      throw DomainError("max_iterations must be >= 1");
    }
    if (!(tolerance > 0.0)) {
      throw DomainError("tolerance must be > 0");
    }
  }
};

struct FitResult {
  ExpModel model;
  double sse;
  std::size_t iterations;
  bool converged;
  ExpModel initial;
};

/// Sum over points of (f_i - F(x_i))^2, with F the closed-form curve
/// extended below theta (see cdf_extended).
inline double objective(const EcdfDataset& ds, const ExpModel& model) {
  double sse = 0.0;
  for (const auto& p : ds.points()) {
    const double r = p.f - cdf_extended(model, p.x);
    sse += r * r;
  }
  return sse;
}

/// Maximum-likelihood starting point: theta0 = 0 (one-parameter) or x_min
/// (two-parameter), sigma0 = mean of (x_i - theta0).
inline ExpModel initial_guess(const EcdfDataset& ds, ModelKind kind) {
  if (kind == ModelKind::OneParam) {
    return ExpModel::one_param(ds.mean_x());
  }
  const double theta0 = ds.x_min();
  const double sigma0 = ds.mean_x() - theta0;
  if (!(sigma0 > 0.0)) {
    throw DegenerateDataError("all incomes equal: cannot seed a two-parameter fit");
  }
  return ExpModel::two_param(sigma0, theta0);
}

namespace detail {

// Search coordinates: sigma = exp(s); theta = x_min * t^2 (theta >= 0).
// Both maps commute with rescaling the data, so a scaled dataset traces the
// same path shifted by log(c) in s.
inline std::optional<ExpModel> decode(ModelKind kind, double x_min, double s, double t) {
  const double sigma = std::exp(s);
  const double theta = kind == ModelKind::OneParam ? 0.0 : x_min * t * t;
  if (!(std::isfinite(sigma) && sigma > 0.0 && std::isfinite(theta))) {
    return std::nullopt;
  }
  return ExpModel::make(kind, sigma, theta);
}

// Gauss-Newton refinement of a Nelder-Mead estimate in coordinates
// (log sigma, theta / x_min). The simplex stops where SSE differences drop
// into rounding noise, which leaves the argmin uncertain at ~1e-8 relative;
// the normal equations pin the stationary point far tighter. A step is taken
// only while it does not raise the SSE beyond rounding level.
inline ExpModel polish(const EcdfDataset& ds, const ExpModel& start) {
  constexpr int kMaxSteps = 50;
  const bool two = start.kind() == ModelKind::TwoParam;
  const double xm = ds.x_min();
  ExpModel best = start;
  double best_sse = objective(ds, best);

  for (int step = 0; step < kMaxSteps; ++step) {
    const double sigma = best.sigma();
    const double theta = best.theta();
    // J^T J and J^T r for residuals r_i = f_i - (1 - E_i), E_i = exp(-(x_i - theta)/sigma).
    double a11 = 0, a12 = 0, a22 = 0, g1 = 0, g2 = 0;
    for (const auto& p : ds.points()) {
      const double z = (p.x - theta) / sigma;
      const double e = std::exp(-z);
      const double r = p.f - 1.0 + e;
      const double js = e * z;              // dr / d(log sigma)
      const double ju = e * xm / sigma;    // dr / d(theta / x_min)
      a11 += js * js;
      g1 += js * r;
      if (two) {
        a12 += js * ju;
        a22 += ju * ju;
        g2 += ju * r;
      }
    }
    double ds_ = 0.0, du = 0.0;
    if (two) {
      const double det = a11 * a22 - a12 * a12;
      if (!(det > 0.0)) {
        break;
      }
      ds_ = -(a22 * g1 - a12 * g2) / det;
      du = -(a11 * g2 - a12 * g1) / det;
    } else {
      if (!(a11 > 0.0)) {
        break;
      }
      ds_ = -g1 / a11;
    }

    bool moved = false;
    for (double scale = 1.0; scale > 1e-6; scale *= 0.5) {
      const double s_new = std::log(sigma) + scale * ds_;
      const double t_new = two ? theta + scale * du * xm : 0.0;
      if (!(t_new >= 0.0)) {
        continue;
      }
      const auto trial = decode(start.kind(), 1.0, s_new, std::sqrt(t_new));
      if (!trial || *trial == best) {
        continue;
      }
      const double sse = objective(ds, *trial);
      if (sse <= best_sse * (1.0 + 64 * std::numeric_limits<double>::epsilon())) {
        best = *trial;
        best_sse = std::min(best_sse, sse);
        moved = true;
        break;
      }
    }
    const double size = std::max(std::abs(ds_), std::abs(du));
    if (!moved || size < 4 * std::numeric_limits<double>::epsilon()) {
      break;
    }
  }
  return best;
}

}  // namespace detail

/// Least-squares fit started from `start` (which must be of cfg.model_kind).
inline FitResult fit(const EcdfDataset& ds, const FitConfig& cfg, const ExpModel& start) {
  cfg.validate();
  if (start.kind() != cfg.model_kind) {
    throw DomainError("start model kind does not match the configured kind");
  }
  const ModelKind kind = cfg.model_kind;
  const double xm = ds.x_min();
  const NelderMeadOptions opts{cfg.max_iterations, cfg.tolerance, 0.05};
  constexpr double kInf = std::numeric_limits<double>::infinity();

  FitResult result{start, 0.0, 0, false, start};
  if (kind == ModelKind::OneParam) {
    auto f = [&](const std::array<double, 1>& v) {
      const auto m = detail::decode(kind, xm, v[0], 0.0);
      return m ? objective(ds, *m) : kInf;
    };
    const auto nm = nelder_mead<1>(f, {std::log(start.sigma())}, opts);
    result.model = detail::decode(kind, xm, nm.x[0], 0.0).value();
    result.iterations = nm.iterations;
    result.converged = nm.converged;
  } else {
    auto f = [&](const std::array<double, 2>& v) {
      const auto m = detail::decode(kind, xm, v[0], v[1]);
      return m ? objective(ds, *m) : kInf;
    };
    const std::array<double, 2> x0{std::log(start.sigma()), std::sqrt(start.theta() / xm)};
    const auto nm = nelder_mead<2>(f, x0, opts);
    result.model = detail::decode(kind, xm, nm.x[0], nm.x[1]).value();
    result.iterations = nm.iterations;
    result.converged = nm.converged;
  }

  result.model = detail::polish(ds, result.model);
  result.sse = objective(ds, result.model);
  // exp(log(sigma)) can drift by an ulp from the start; never report worse
  // than the starting point itself.
  const double start_sse = objective(ds, start);
  if (start_sse < result.sse) {
    result.model = start;
    result.sse = start_sse;
  }
  return result;
}

/// Least-squares fit from the maximum-likelihood initializer.
inline FitResult fit(const EcdfDataset& ds, const FitConfig& cfg) {
  return fit(ds, cfg, initial_guess(ds, cfg.model_kind));
}

}  // namespace expofit

#endif  // EXPOFIT_FIT_HPP
