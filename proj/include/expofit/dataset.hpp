#ifndef EXPOFIT_DATASET_HPP
#define EXPOFIT_DATASET_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "expofit/error.hpp"

namespace expofit {

/// One (income, empirical CDF) pair.
struct EcdfPoint {
  double x;
  double f;

  friend bool operator==(const EcdfPoint&, const EcdfPoint&) = default;
};

class EcdfDataset;
EcdfDataset from_samples(std::vector<double> draws, std::string name);

/// Immutable, validated empirical CDF: x > 0 non-decreasing (ties allowed),
/// f strictly increasing inside (0, 1), at least 3 points.
class EcdfDataset {
 public:
  static constexpr std::size_t kMinPoints = 3;

  static EcdfDataset create(std::string name, std::string currency, std::vector<EcdfPoint> points) {
    validate(points, kMinPoints);
    return EcdfDataset(std::move(name), std::move(currency), std::move(points));
  }

  const std::string& name() const noexcept { return name_; }
  const std::string& currency() const noexcept { return currency_; }
  std::span<const EcdfPoint> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  double x_min() const noexcept {
    return std::min_element(points_.begin(), points_.end(),
                            [](const EcdfPoint& a, const EcdfPoint& b) { return a.x < b.x; })
        ->x;
  }

  double x_max() const noexcept {
    return std::max_element(points_.begin(), points_.end(),
                            [](const EcdfPoint& a, const EcdfPoint& b) { return a.x < b.x; })
        ->x;
  }

  double mean_x() const noexcept {
    const double total = std::accumulate(points_.begin(), points_.end(), 0.0,
                                         [](double acc, const EcdfPoint& p) { return acc + p.x; });
    return total / static_cast<double>(points_.size());
  }

  friend bool operator==(const EcdfDataset&, const EcdfDataset&) = default;

  /// Throws ValidationError(InvariantViolation) naming the offending 1-based row.
  static void validate(std::span<const EcdfPoint> points, std::size_t min_points) {
    using K = ValidationError::Kind;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto row = i + 1;
      const auto& p = points[i];
      if (!(std::isfinite(p.x) && p.x > 0.0)) {
        throw ValidationError(K::InvariantViolation, row, "x must be finite and > 0");
      }
      if (!(p.f > 0.0 && p.f < 1.0)) {
        throw ValidationError(K::InvariantViolation, row, "F must lie strictly inside (0, 1)");
      }
      if (i > 0 && p.x < points[i - 1].x) {
        throw ValidationError(K::InvariantViolation, row, "x decreasing");
      }
      if (i > 0 && !(p.f > points[i - 1].f)) {
        throw ValidationError(K::InvariantViolation, row, "F not strictly increasing");
      }
    }
    if (points.size() < min_points) {
      throw ValidationError(K::InvariantViolation, 0,
                            "dataset needs at least " + std::to_string(min_points) +
                                " points, got " + std::to_string(points.size()));
    }
  }

 private:
  EcdfDataset(std::string name, std::string currency, std::vector<EcdfPoint> points)
      : name_(std::move(name)), currency_(std::move(currency)), points_(std::move(points)) {}

  friend EcdfDataset from_samples(std::vector<double> draws, std::string name);

  std::string name_;
  std::string currency_;
  std::vector<EcdfPoint> points_;
};

inline double x_min(const EcdfDataset& ds) noexcept { return ds.x_min(); }
inline double mean_x(const EcdfDataset& ds) noexcept { return ds.mean_x(); }

/// Synthetic ECDF from raw draws: sorted ascending, the i-th (1-based) order
/// statistic gets plotting position i / (n + 1). Accepts n >= 1, unlike the
/// public constructor, so bootstrap code can use any sample size.
inline EcdfDataset from_samples(std::vector<double> draws, std::string name) {
  if (draws.empty()) {
    throw DomainError("from_samples needs at least one draw");
  }
  std::sort(draws.begin(), draws.end());
  const double denom = static_cast<double>(draws.size() + 1);
  std::vector<EcdfPoint> points;
  points.reserve(draws.size());
  for (std::size_t i = 0; i < draws.size(); ++i) {
    points.push_back({draws[i], static_cast<double>(i + 1) / denom});
  }
  EcdfDataset::validate(points, 1);
  return EcdfDataset(std::move(name), std::string{}, std::move(points));
}

namespace detail {

inline double parse_field(std::string_view field, std::size_t row) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  // from_chars accepts "inf"/"nan" and a leading '-'; the CSV grammar only
  // allows plain decimals.
  const bool plain = !field.empty() && std::all_of(field.begin(), field.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E';
  });
  auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (!plain || ec != std::errc{} || ptr != last) {
    throw ValidationError(ValidationError::Kind::NonNumeric, row,
                          "non-numeric field '" + std::string(field) + "'");
  }
  return value;
}

inline std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace detail

/// Reads the `x,F` CSV format. LF or CRLF line endings; a final newline is
/// optional. Blank lines are rejected except at end of input.
inline EcdfDataset parse(std::istream& in, std::string name = {}, std::string currency = {}) {
  using K = ValidationError::Kind;
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && lines.back().empty()) {
    lines.pop_back();
  }
  if (lines.empty()) {
    throw ValidationError(K::EmptyInput, 0, "empty input");
  }
  if (lines.front() != "x,F") {
    throw ValidationError(K::BadHeader, 0, "header must be exactly 'x,F'");
  }

  std::vector<EcdfPoint> points;
  points.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ValidationError(K::MalformedRow, i, "expected exactly two comma-separated fields");
    }
    points.push_back({detail::parse_field(line.substr(0, comma), i),
                      detail::parse_field(line.substr(comma + 1), i)});
  }
  return EcdfDataset::create(std::move(name), std::move(currency), std::move(points));
}

/// Parses a CSV file; the dataset name defaults to the file stem.
inline EcdfDataset parse_file(const std::filesystem::path& path, std::string currency = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError(ValidationError::Kind::Unreadable, 0,
                          "cannot open '" + path.string() + "'");
  }
  return parse(in, path.stem().string(), std::move(currency));
}

/// Writes the `x,F` CSV format with LF endings and shortest round-trip numbers.
inline void serialize(const EcdfDataset& ds, std::ostream& out) {
  out << "x,F\n";
  for (const auto& p : ds.points()) {
    out << detail::format_number(p.x) << ',' << detail::format_number(p.f) << '\n';
  }
}

}  // namespace expofit

#endif  // EXPOFIT_DATASET_HPP
