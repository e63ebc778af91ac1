// Acceptance suite: reproduces the published estimates, KS statistics and
// bootstrap p-values for the bundled US 2012 and UK 2011-12 datasets, plus the
// property and ingestion checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "expofit/expofit.hpp"

using namespace expofit;

namespace {

struct Criterion {
  Criterion(std::string id_, std::string title_) : id(std::move(id_)), title(std::move(title_)) {}

  std::string id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

FitConfig config(ModelKind kind) {
  FitConfig cfg;
  cfg.model_kind = kind;
  return cfg;
}

EcdfDataset load(const std::string& file) {
  return parse_file(std::string(EXPOFIT_DATA_DIR) + "/" + file);
}

struct FitCell {
  const char* label;
  EcdfDataset ds;
  ModelKind kind;
  double sigma;
  double theta;
  double ks;
};

void check_fit(Criterion& c, const FitCell& cell, double param_tol, double ks_tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = fit(cell.ds, config(cell.kind));
  const double ks = ks_statistic(cell.ds, r.model);
  const double t = seconds_since(t0);
  c.check(r.converged, fmt("%s converged (%zu iterations)", cell.label, r.iterations));
  c.check(rel(r.model.sigma(), cell.sigma) <= param_tol,
          fmt("%s sigma %.2f vs %.2f (rel %.2e <= %.1e)", cell.label, r.model.sigma(), cell.sigma,
              rel(r.model.sigma(), cell.sigma), param_tol));
  if (cell.kind == ModelKind::TwoParam) {
    c.check(rel(r.model.theta(), cell.theta) <= param_tol,
            fmt("%s theta %.2f vs %.2f (rel %.2e <= %.1e)", cell.label, r.model.theta(),
                cell.theta, rel(r.model.theta(), cell.theta), param_tol));
  }
  c.check(std::abs(ks - cell.ks) <= ks_tol,
          fmt("%s KS %.7f vs %.7f (|d| %.1e <= %.0e)", cell.label, ks, cell.ks,
              std::abs(ks - cell.ks), ks_tol));
  c.check(t < 1.0, fmt("%s runtime %.3fs < 1s", cell.label, t));
}

}  // namespace

int main() {
  const auto us = load("us_2012.csv");
  const auto uk = load("uk_2011_12.csv");
  std::vector<Criterion> results;

  // 1-3: least-squares fits against the published estimates.
  {
    Criterion c{"AC1", "one-parameter fit, US"};
    check_fit(c, {"US/exp1", us, ModelKind::OneParam, 38065.8, 0.0, 0.0463115}, 0.005, 1e-3);
    results.push_back(c);
  }
  {
    Criterion c{"AC2", "one-parameter fit, UK"};
    check_fit(c, {"UK/exp1", uk, ModelKind::OneParam, 30678.0, 0.0, 0.2129867}, 0.005, 2e-3);
    results.push_back(c);
  }
  {
    Criterion c{"AC3", "two-parameter fits, US and UK"};
    check_fit(c, {"US/exp2", us, ModelKind::TwoParam, 36059.8, 1854.97, 0.0400717}, 0.01, 2e-3);
    check_fit(c, {"UK/exp2", uk, ModelKind::TwoParam, 17506.5, 8260.56, 0.0401815}, 0.01, 2e-3);
    results.push_back(c);
  }

  // 4: KS at the published parameters, no fitting involved.
  {
    Criterion c{"AC4", "KS at published parameters"};
    const struct {
      const char* label;
      const EcdfDataset& ds;
      ExpModel model;
      double ks;
    } cells[] = {
        {"US/exp1", us, ExpModel::one_param(38065.8), 0.0463115},
        {"UK/exp1", uk, ExpModel::one_param(30678.0), 0.2129867},
        {"US/exp2", us, ExpModel::two_param(36059.8, 1854.97), 0.0400717},
        {"UK/exp2", uk, ExpModel::two_param(17506.5, 8260.56), 0.0401815},
    };
    for (const auto& cell : cells) {
      const double ks = ks_statistic(cell.ds, cell.model);
      c.check(std::abs(ks - cell.ks) <= 1e-5,
              fmt("%s KS %.7f vs %.7f (|d| %.1e <= 1e-5)", cell.label, ks, cell.ks,
                  std::abs(ks - cell.ks)));
    }
    results.push_back(c);
  }

  // 5: bootstrap p-values, B = 10000, seeds 0..2.
  {
    Criterion c{"AC5", "bootstrap p-values (B=10000, seeds 0,1,2)"};
    const struct {
      const char* label;
      const EcdfDataset& ds;
      ModelKind kind;
      double lo;
      double hi;
      bool reject;
    } cells[] = {
        {"US/exp1", us, ModelKind::OneParam, 0.95, 1.0, false},
        {"UK/exp1", uk, ModelKind::OneParam, 0.0, 0.001, true},
        {"US/exp2", us, ModelKind::TwoParam, 0.95, 1.0, false},
        {"UK/exp2", uk, ModelKind::TwoParam, 0.75, 0.90, false},
    };
    for (const auto& cell : cells) {
      for (std::uint64_t seed : {0u, 1u, 2u}) {
        GofConfig gcfg;
        gcfg.replicates = 10000;
        gcfg.seed = seed;
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = bootstrap_test(cell.ds, cell.kind, {}, gcfg);
        const double t = seconds_since(t0);
        c.check(r.p_value >= cell.lo && r.p_value <= cell.hi && r.reject == cell.reject &&
                    t < 60.0,
                fmt("%s seed %llu: p=%.4f in [%.3f, %.3f], reject=%s, %.1fs < 60s", cell.label,
                    static_cast<unsigned long long>(seed), r.p_value, cell.lo, cell.hi,
                    r.reject ? "yes" : "no", t));
      }
    }
    GofConfig gcfg;
    gcfg.replicates = 10000;
    const auto a = bootstrap_test(uk, ModelKind::TwoParam, {}, gcfg);
    gcfg.threads = 1;
    const auto b = bootstrap_test(uk, ModelKind::TwoParam, {}, gcfg);
    c.check(a.replicate_ks == b.replicate_ks && a.p_value == b.p_value,
            "UK/exp2 seed 0 rerun is bit-identical");
    results.push_back(c);
  }

  // 6: properties.
  {
    Criterion c{"AC6", "property suite"};
    const std::pair<double, double> grid9[] = {
        {0.5, 0.0},     {0.5, 1.0},          {1.0, 0.0},     {1.0, 1.0},         {17506.5, 0.0},
        {17506.5, 1.0}, {17506.5, 8260.56}, {30678.0, 0.0}, {36059.8, 1854.97},
    };
    double round_trip = 0.0;
    double truncation = 0.0;
    for (const auto& [s, t] : grid9) {
      const auto m = ExpModel::two_param(s, t);
      const auto parent = ExpModel::one_param(s);
      for (int k = 1; k <= 99; ++k) {
        const double p = k / 100.0;
        round_trip = std::max(round_trip, std::abs(cdf(m, quantile(m, p)) - p));
        const double x = quantile(m, p);
        const double direct = survival(m, x);
        truncation = std::max(
            truncation, std::abs(direct - survival(parent, x) / survival(parent, t)) / direct);
      }
    }
    c.check(round_trip < 1e-12, fmt("quantile/cdf round trip max %.1e < 1e-12", round_trip));
    c.check(truncation < 1e-12, fmt("truncation identity max rel %.1e < 1e-12", truncation));

    double gini_gap = 0.0;
    double convexity = 0.0;
    for (double s : {0.5, 1.0, 17506.5}) {
      for (double t : {0.0, 1.0, 8260.56}) {
        const auto m = ExpModel::two_param(s, t);
        gini_gap = std::max(gini_gap, std::abs(gini(m) - gini_numeric(m, 100000)));
        std::vector<double> L(1001);
        for (int i = 0; i <= 1000; ++i) {
          L[i] = lorenz(m, i == 1000 ? 1.0 : i / 1000.0);
        }
        for (int i = 1; i < 1000; ++i) {
          convexity = std::min(convexity, L[i + 1] - 2 * L[i] + L[i - 1]);
        }
      }
    }
    c.check(gini_gap < 1e-6, fmt("Gini closed form vs quadrature max %.1e < 1e-6", gini_gap));
    c.check(convexity >= -1e-12, fmt("Lorenz second differences min %.1e >= -1e-12", convexity));

    const auto truth = ExpModel::two_param(5.0, 2.0);
    std::vector<EcdfPoint> pts;
    for (int x = 3; x <= 20; ++x) {
      pts.push_back({double(x), cdf(truth, x)});
    }
    const auto exact = fit(EcdfDataset::create("exact", "", pts), config(ModelKind::TwoParam));
    const double recovery =
        std::max(rel(exact.model.sigma(), 5.0), rel(exact.model.theta(), 2.0));
    c.check(recovery < 1e-6, fmt("exact-data recovery rel %.1e < 1e-6", recovery));

    double equivariance = 0.0;
    double ks_shift = 0.0;
    for (auto kind : {ModelKind::OneParam, ModelKind::TwoParam}) {
      const auto cfg = config(kind);
      for (const auto* ds : {&us, &uk}) {
        const auto base = fit(*ds, cfg);
        for (double k : {1e-3, 0.37, 8.0, 1000.0}) {
          std::vector<EcdfPoint> sp(ds->points().begin(), ds->points().end());
          for (auto& p : sp) {
            p.x *= k;
          }
          const auto sds = EcdfDataset::create("scaled", "", sp);
          const auto r = fit(sds, cfg);
          equivariance = std::max(equivariance, rel(r.model.sigma(), k * base.model.sigma()));
          if (kind == ModelKind::TwoParam) {
            equivariance = std::max(equivariance, rel(r.model.theta(), k * base.model.theta()));
          }
          ks_shift = std::max(ks_shift, std::abs(ks_statistic(sds, r.model) -
                                                 ks_statistic(*ds, base.model)));
        }
      }
    }
    c.check(equivariance < 10 * FitConfig{}.tolerance,
            fmt("fit scale equivariance rel %.1e < %.0e", equivariance,
                10 * FitConfig{}.tolerance));
    c.check(ks_shift < 1e-9, fmt("KS after rescale and refit moves %.1e < 1e-9", ks_shift));

    // Exact KS scale invariance: power-of-two scaling at fixed parameters.
    bool ks_exact = true;
    const auto m = ExpModel::two_param(17506.5, 8260.56);
    for (double k : {0.25, 4.0, 2048.0}) {
      std::vector<EcdfPoint> sp(uk.points().begin(), uk.points().end());
      for (auto& p : sp) {
        p.x *= k;
      }
      ks_exact = ks_exact && ks_statistic(EcdfDataset::create("s", "", sp),
                                          ExpModel::two_param(k * m.sigma(), k * m.theta())) ==
                                 ks_statistic(uk, m);
    }
    c.check(ks_exact, "KS exactly invariant under joint power-of-two scaling");

    GofConfig gcfg;
    gcfg.replicates = 300;
    gcfg.seed = 77;
    gcfg.threads = 1;
    const auto one = bootstrap_test(us, ModelKind::TwoParam, {}, gcfg);
    gcfg.threads = 4;
    const auto four = bootstrap_test(us, ModelKind::TwoParam, {}, gcfg);
    c.check(one.replicate_ks == four.replicate_ks && one.p_value == four.p_value &&
                one.exceed_count == four.exceed_count,
            "bootstrap bit-identical with 1 and 4 threads");
    results.push_back(c);
  }

  // 7: ingestion.
  {
    Criterion c{"AC7", "ingestion"};
    c.check(us.size() == 43 && us.x_min() == 2500.0,
            fmt("US: %zu points, x_min %.0f", us.size(), us.x_min()));
    c.check(uk.size() == 99 && uk.x_min() == 7740.0,
            fmt("UK: %zu points, x_min %.0f", uk.size(), uk.x_min()));
    bool round_trip = true;
    for (const auto* ds : {&us, &uk}) {
      std::ostringstream out;
      serialize(*ds, out);
      std::istringstream in(out.str());
      round_trip = round_trip && parse(in, ds->name(), ds->currency()) == *ds;
    }
    c.check(round_trip, "CSV serialize/parse round trip is exact");
    c.check(uk.points()[35] == EcdfPoint{16300.0, 0.36} && uk.points()[36] == EcdfPoint{16300.0, 0.37},
            "UK duplicate x=16300 accepted at F=0.36 and 0.37");
    results.push_back(c);
  }

  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %s %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str());
    for (const auto& n : r.notes) {
      std::printf("       %s\n", n.c_str());
    }
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "all acceptance criteria passed" : "acceptance criteria FAILED");
  return all ? 0 : 1;
}
