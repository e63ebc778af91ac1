#ifndef EXPOFIT_NELDER_MEAD_HPP
#define EXPOFIT_NELDER_MEAD_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

namespace expofit {

struct NelderMeadOptions {
  std::size_t max_iterations = 2000;
  double tolerance = 1e-10;
  double initial_step = 0.05;
};

template <std::size_t N>
struct NelderMeadResult {
  std::array<double, N> x;
  double value;
  std::size_t iterations;
  bool converged;
};

/// Derivative-free minimisation of `f` over R^N.
///
/// Standard coefficients (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2). The start simplex is `start` plus `start + step * e_j` for
/// each coordinate j. Vertices are ordered by value, then lexicographically by
/// coordinates, so equal values never leave the ordering to the sort.
/// Converged when the largest coordinate distance from the best vertex and the
/// spread of vertex values are both below `tolerance`. Non-finite values
/// compare as +inf.
template <std::size_t N, class F>
NelderMeadResult<N> nelder_mead(F&& f, const std::array<double, N>& start,
                                const NelderMeadOptions& opts = {}) {
  static_assert(N >= 1);
  using Point = std::array<double, N>;
  struct Vertex {
    Point x;
    double value;
  };

  auto eval = [&](const Point& x) {
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  auto before = [](const Vertex& a, const Vertex& b) {
    if (a.value != b.value) {
      return a.value < b.value;
    }
    return a.x < b.x;
  };
  // a + t * (b - a)
  auto along = [](const Point& a, const Point& b, double t) {
    Point r{};
    for (std::size_t j = 0; j < N; ++j) {
      r[j] = a[j] + t * (b[j] - a[j]);
    }
    return r;
  };

  std::array<Vertex, N + 1> simplex;
  simplex[0] = {start, eval(start)};
  for (std::size_t j = 0; j < N; ++j) {
    Point x = start;
    x[j] += opts.initial_step;
    simplex[j + 1] = {x, eval(x)};
  }

  std::size_t iter = 0;
  for (;; ++iter) {
    std::sort(simplex.begin(), simplex.end(), before);
    const Vertex& best = simplex.front();
    const Vertex& worst = simplex.back();

    double diameter = 0.0;
    for (std::size_t i = 1; i <= N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        diameter = std::max(diameter, std::abs(simplex[i].x[j] - best.x[j]));
      }
    }
    const double spread = worst.value - best.value;
    if (diameter < opts.tolerance && spread < opts.tolerance) {
      return {best.x, best.value, iter, true};
    }
    if (iter >= opts.max_iterations) {
      return {best.x, best.value, iter, false};
    }

    Point centroid{};
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        centroid[j] += simplex[i].x[j];
      }
    }
    for (auto& c : centroid) {
      c /= static_cast<double>(N);
    }

    const Point xr = along(centroid, worst.x, -1.0);
    const double fr = eval(xr);
    if (fr < best.value) {
      const Point xe = along(centroid, worst.x, -2.0);
      const double fe = eval(xe);
      simplex.back() = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr < simplex[N - 1].value) {
      simplex.back() = {xr, fr};
      continue;
    }
    if (fr < worst.value) {
      const Point xc = along(centroid, xr, 0.5);
      const double fc = eval(xc);
      if (fc <= fr) {
        simplex.back() = {xc, fc};
        continue;
      }
    } else {
      const Point xc = along(centroid, worst.x, 0.5);
      const double fc = eval(xc);
      if (fc < worst.value) {
        simplex.back() = {xc, fc};
        continue;
      }
    }
    for (std::size_t i = 1; i <= N; ++i) {
      simplex[i].x = along(simplex[0].x, simplex[i].x, 0.5);
      simplex[i].value = eval(simplex[i].x);
    }
  }
}

}  // namespace expofit

#endif  // EXPOFIT_NELDER_MEAD_HPP
