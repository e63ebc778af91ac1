#ifndef EXPOFIT_REPORT_HPP
#define EXPOFIT_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "expofit/dist.hpp"
#include "expofit/error.hpp"
#include "expofit/fit.hpp"
#include "expofit/gof.hpp"
#include "expofit/inequality.hpp"

namespace expofit {

inline constexpr std::string_view kToolVersion = "1.0.0";

inline ModelKind parse_model_kind(std::string_view label) {
  if (label == "exp1") {
    return ModelKind::OneParam;
  }
  if (label == "exp2") {
    return ModelKind::TwoParam;
  }
  throw DomainError("unknown model kind '" + std::string(label) + "'");
}

struct FitSection {
  double sigma = 0.0;
  double theta = 0.0;
  double sse = 0.0;
  std::size_t iterations = 0;
  bool converged = false;

  static FitSection from(const FitResult& r) {
    return {r.model.sigma(), r.model.theta(), r.sse, r.iterations, r.converged};
  }
  friend bool operator==(const FitSection&, const FitSection&) = default;
};

struct GofSection {
  double ks = 0.0;
  double p_value = 0.0;
  std::size_t replicates = 0;
  std::size_t exceed_count = 0;
  std::uint64_t seed = 0;
  bool reject = false;

  static GofSection from(const GofResult& r) {
    return {r.ks_empirical, r.p_value, r.replicates, r.exceed_count, r.seed, r.reject};
  }
  friend bool operator==(const GofSection&, const GofSection&) = default;
};

struct InequalitySection {
  double gini = 0.0;
  std::vector<LorenzPoint> lorenz;

  static InequalitySection from(const InequalityReport& r) { return {r.gini, r.lorenz_points}; }
  friend bool operator==(const InequalitySection&, const InequalitySection&) = default;
};

/// One machine-readable row of results: the fit, optionally the bootstrap
/// test and the inequality measures of the fitted model.
struct RunReport {
  std::string dataset_name;
  ModelKind model_kind = ModelKind::OneParam;
  FitSection fit;
  std::optional<GofSection> gof;
  std::optional<InequalitySection> inequality;
  std::string tool_version{kToolVersion};
  std::string timestamp;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline void to_json(nlohmann::json& j, const LorenzPoint& p) { j = {{"p", p.p}, {"L", p.L}}; }
inline void from_json(const nlohmann::json& j, LorenzPoint& p) {
  j.at("p").get_to(p.p);
  j.at("L").get_to(p.L);
}

inline void to_json(nlohmann::json& j, const FitSection& s) {
  j = {{"sigma", s.sigma},
       {"theta", s.theta},
       {"sse", s.sse},
       {"iterations", s.iterations},
       {"converged", s.converged}};
}
inline void from_json(const nlohmann::json& j, FitSection& s) {
  j.at("sigma").get_to(s.sigma);
  j.at("theta").get_to(s.theta);
  j.at("sse").get_to(s.sse);
  j.at("iterations").get_to(s.iterations);
  j.at("converged").get_to(s.converged);
}

inline void to_json(nlohmann::json& j, const GofSection& s) {
  j = {{"ks", s.ks},
       {"p_value", s.p_value},
       {"replicates", s.replicates},
       {"exceed_count", s.exceed_count},
       {"seed", s.seed},
       {"reject", s.reject}};
}
inline void from_json(const nlohmann::json& j, GofSection& s) {
  j.at("ks").get_to(s.ks);
  j.at("p_value").get_to(s.p_value);
  j.at("replicates").get_to(s.replicates);
  j.at("exceed_count").get_to(s.exceed_count);
  j.at("seed").get_to(s.seed);
  j.at("reject").get_to(s.reject);
}

inline void to_json(nlohmann::json& j, const InequalitySection& s) {
  j = {{"gini", s.gini}, {"lorenz", s.lorenz}};
}
inline void from_json(const nlohmann::json& j, InequalitySection& s) {
  j.at("gini").get_to(s.gini);
  j.at("lorenz").get_to(s.lorenz);
}

inline void to_json(nlohmann::json& j, const RunReport& r) {
  j = nlohmann::json::object();
  j["dataset_name"] = r.dataset_name;
  j["model_kind"] = std::string(to_string(r.model_kind));
  j["fit"] = r.fit;
  if (r.gof) {
    j["gof"] = *r.gof;
  }
  if (r.inequality) {
    j["inequality"] = *r.inequality;
  }
  j["tool_version"] = r.tool_version;
  j["timestamp"] = r.timestamp;
}

inline void from_json(const nlohmann::json& j, RunReport& r) {
  j.at("dataset_name").get_to(r.dataset_name);
  r.model_kind = parse_model_kind(j.at("model_kind").get<std::string>());
  j.at("fit").get_to(r.fit);
  r.gof.reset();
  r.inequality.reset();
  if (j.contains("gof")) {
    r.gof = j.at("gof").get<GofSection>();
  }
  if (j.contains("inequality")) {
    r.inequality = j.at("inequality").get<InequalitySection>();
  }
  j.at("tool_version").get_to(r.tool_version);
  j.at("timestamp").get_to(r.timestamp);
}

}  // namespace expofit

#endif  // EXPOFIT_REPORT_HPP
