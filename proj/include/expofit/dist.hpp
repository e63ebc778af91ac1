#ifndef EXPOFIT_DIST_HPP
#define EXPOFIT_DIST_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "expofit/error.hpp"
#include "expofit/random.hpp"

namespace expofit {

enum class ModelKind { OneParam, TwoParam };

/// CLI / report label: "exp1" or "exp2".
inline std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::OneParam ? "exp1" : "exp2";
}

/// Exponential income model with scale sigma and location (truncation point)
/// theta. The one-parameter variant pins theta to 0.
///
/// Instances are always valid: sigma > 0 and finite, theta >= 0 and finite,
/// theta == 0 whenever kind() == OneParam.
class ExpModel {
 public:
  static ExpModel one_param(double sigma) { return ExpModel(ModelKind::OneParam, sigma, 0.0); }

  static ExpModel two_param(double sigma, double theta) {
    return ExpModel(ModelKind::TwoParam, sigma, theta);
  }

  static ExpModel make(ModelKind kind, double sigma, double theta) {
    if (kind == ModelKind::OneParam && theta != 0.0) {
      throw DomainError("one-parameter model requires theta == 0");
    }
    return ExpModel(kind, sigma, theta);
  }

  ModelKind kind() const noexcept { return kind_; }
  double sigma() const noexcept { return sigma_; }
  double theta() const noexcept { return theta_; }

  friend bool operator==(const ExpModel&, const ExpModel&) = default;

 private:
  ExpModel(ModelKind kind, double sigma, double theta) : kind_(kind), sigma_(sigma), theta_(theta) {
    if (!(std::isfinite(sigma) && sigma > 0.0)) {
      throw DomainError("sigma must be finite and > 0");
    }
    if (!(std::isfinite(theta) && theta >= 0.0)) {
      throw DomainError("theta must be finite and >= 0");
    }
  }

  ModelKind kind_;
  double sigma_;
  double theta_;
};

namespace detail {
inline void require_finite(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("income value must be finite");
  }
}
}  // namespace detail

/// Closed-form expression 1 - exp(-(x - theta)/sigma) evaluated for every x,
/// including x < theta where it is negative. The least-squares objective and
/// the KS statistic compare the empirical CDF against this curve.
inline double cdf_extended(const ExpModel& model, double x) {
  detail::require_finite(x);
  return -std::expm1(-(x - model.theta()) / model.sigma());
}

/// Distribution function: 0 for x <= theta, 1 - exp(-(x - theta)/sigma) above.
inline double cdf(const ExpModel& model, double x) {
  detail::require_finite(x);
  if (x <= model.theta()) {
    return 0.0;
  }
  return -std::expm1(-(x - model.theta()) / model.sigma());
}

/// Pr(X > x). For the two-parameter model this is the conditional survival
/// Pr(Y > x | Y > theta) of an untruncated exponential Y with the same sigma.
inline double survival(const ExpModel& model, double x) {
  detail::require_finite(x);
  if (x <= model.theta()) {
    return 1.0;
  }
  return std::exp(-(x - model.theta()) / model.sigma());
}

inline double quantile(const ExpModel& model, double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw DomainError("quantile requires 0 <= p < 1");
  }
  return model.theta() - model.sigma() * std::log1p(-p);
}

inline double mean(const ExpModel& model) noexcept { return model.theta() + model.sigma(); }

/// n inverse-transform draws, quantile(model, u) with u from uniform_open01.
template <class Gen>
std::vector<double> sample(const ExpModel& model, std::size_t n, Gen& gen) {
  if (n == 0) {
    throw DomainError("sample size must be >= 1");
  }
  std::vector<double> draws;
  draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    draws.push_back(quantile(model, uniform_open01(gen)));
  }
  return draws;
}

}  // namespace expofit

#endif  // EXPOFIT_DIST_HPP
