#ifndef EXPOFIT_INEQUALITY_HPP
#define EXPOFIT_INEQUALITY_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "expofit/dist.hpp"
#include "expofit/error.hpp"

namespace expofit {

struct LorenzPoint {
  double p;
  double L;

  friend bool operator==(const LorenzPoint&, const LorenzPoint&) = default;
};

struct InequalityReport {
  double gini;
  std::vector<LorenzPoint> lorenz_points;
  ExpModel model;
};

/// Lorenz curve L(p) = p + (1 + theta/sigma)^-1 (1 - p) log(1 - p).
/// L(1) is the limit value 1.
inline double lorenz(const ExpModel& model, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("lorenz requires 0 <= p <= 1");
  }
  if (p == 0.0) {
    return 0.0;
  }
  if (p == 1.0) {
    return 1.0;
  }
  const double share = model.sigma() / (model.sigma() + model.theta());
  return p + share * (1.0 - p) * std::log1p(-p);
}

/// sigma / (2 (sigma + theta)).
inline double gini(const ExpModel& model) noexcept {
  return model.sigma() / (2.0 * (model.sigma() + model.theta()));
}

/// 2 * integral_0^1 (p - L(p)) dp by composite Simpson on [0, 1 - eps],
/// eps = 1e-9, plus the exact integral of the tail piece on [1 - eps, 1].
/// An odd `subdivisions` is rounded up to the next even count.
inline double gini_numeric(const ExpModel& model, std::size_t subdivisions) {
  if (subdivisions < 100) {
    throw DomainError("gini_numeric requires at least 100 subdivisions");
  }
  if (subdivisions % 2 != 0) {
    ++subdivisions;
  }
  constexpr double eps = 1e-9;
  const double upper = 1.0 - eps;
  const double h = upper / static_cast<double>(subdivisions);
  auto gap = [&](double p) { return p - lorenz(model, p); };

  double sum = gap(0.0) + gap(upper);
  for (std::size_t i = 1; i < subdivisions; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * gap(static_cast<double>(i) * h);
  }
  const double body = sum * h / 3.0;

  // p - L(p) = -c q log q with q = 1 - p; integral over q in [0, eps].
  const double c = model.sigma() / (model.sigma() + model.theta());
  const double tail = c * eps * eps * (0.25 - 0.5 * std::log(eps));
  return 2.0 * (body + tail);
}

/// Gini plus `points` Lorenz samples on a uniform grid over [0, 1].
inline InequalityReport inequality_report(const ExpModel& model, std::size_t points = 101) {
  if (points < 2) {
    throw DomainError("a Lorenz grid needs at least 2 points");
  }
  InequalityReport report{gini(model), {}, model};
  report.lorenz_points.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double p =
        i + 1 == points ? 1.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    report.lorenz_points.push_back({p, lorenz(model, p)});
  }
  return report;
}

}  // namespace expofit

#endif  // EXPOFIT_INEQUALITY_HPP
