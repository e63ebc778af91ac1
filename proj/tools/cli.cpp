#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "expofit/expofit.hpp"

namespace expofit::cli {

namespace {

struct Options {
  std::string input;
  std::string model;
  std::size_t replicates = 10000;
  std::uint64_t seed = 0;
  double significance = 0.05;
  std::string curve = "cdf";
  std::size_t grid = 200;
  std::string output;
  std::size_t max_iterations = FitConfig{}.max_iterations;
};

void add_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--input", o.input, "ECDF dataset (CSV with header x,F)")->required();
  cmd.add_option("--model", o.model, "exp1 (sigma) or exp2 (sigma, theta)")
      ->required()
      ->check(CLI::IsMember({"exp1", "exp2"}));
  cmd.add_option("--replicates", o.replicates, "bootstrap replicates B")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  cmd.add_option("--seed", o.seed, "master seed");
  cmd.add_option("--significance", o.significance, "rejection level for the p-value")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--curve", o.curve, "plotdata curve")->check(CLI::IsMember({"cdf", "lorenz"}));
  cmd.add_option("--grid", o.grid, "plotdata grid points")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  cmd.add_option("--output", o.output, "write to this file instead of stdout");
  cmd.add_option("--max-iterations", o.max_iterations, "optimizer iteration cap per fit")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
}

std::string fmt(double v) { return detail::format_number(v); }

void write_cdf_rows(const EcdfDataset& ds, const ExpModel& model, std::size_t grid,
                    std::ostream& out) {
  struct Row {
    double x;
    bool observed;
    double f;
  };
  std::vector<Row> rows;
  rows.reserve(grid + ds.size());
  const double lo = std::max(model.theta(), 0.5 * ds.x_min());
  const double hi = 1.05 * ds.x_max();
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = i + 1 == grid
                         ? hi
                         : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
    rows.push_back({x, false, 0.0});
  }
  for (const auto& p : ds.points()) {
    rows.push_back({p.x, true, p.f});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.x < b.x; });

  out << "x,F_model,F_empirical\n";
  for (const auto& r : rows) {
    out << fmt(r.x) << ',' << fmt(cdf(model, r.x)) << ',';
    if (r.observed) {
      out << fmt(r.f);
    }
    out << '\n';
  }
}

void write_lorenz_rows(const ExpModel& model, std::size_t grid, std::ostream& out) {
  out << "p,L\n";
  for (const auto& pt : inequality_report(model, grid).lorenz_points) {
    out << fmt(pt.p) << ',' << fmt(pt.L) << '\n';
  }
}

int execute(const std::string& command, const Options& o, std::ostream& out, std::ostream& err,
            const Environment& env) {
  const ModelKind kind = parse_model_kind(o.model);
  const EcdfDataset ds = parse_file(o.input);

  FitConfig fit_cfg;
  fit_cfg.model_kind = kind;
  fit_cfg.max_iterations = o.max_iterations;
  const FitResult fitted = fit(ds, fit_cfg);
  if (!fitted.converged) {
    err << "warning: fit did not converge within " << fit_cfg.max_iterations << " iterations\n";
  }

  std::ostringstream body;
  if (command == "plotdata") {
    if (o.curve == "lorenz") {
      write_lorenz_rows(fitted.model, o.grid, body);
    } else {
      write_cdf_rows(ds, fitted.model, o.grid, body);
    }
  } else {
    RunReport report;
    report.dataset_name = ds.name();
    report.model_kind = kind;
    report.fit = FitSection::from(fitted);
    if (command == "gof" || command == "report") {
      GofConfig gof_cfg;
      gof_cfg.replicates = o.replicates;
      gof_cfg.seed = o.seed;
      gof_cfg.significance = o.significance;
      gof_cfg.threads = env.threads;
      const GofResult gof = bootstrap_test(ds, fitted, fit_cfg, gof_cfg);
      if (gof.nonconverged > 0) {
        err << "note: " << gof.nonconverged << " of " << gof.replicates
            << " replicate fits hit the iteration limit\n";
      }
      report.gof = GofSection::from(gof);
    }
    if (command == "report") {
      report.inequality = InequalitySection::from(inequality_report(fitted.model));
    }
    report.timestamp = env.timestamp ? env.timestamp() : utc_timestamp();
    body << nlohmann::json(report).dump(2) << '\n';
  }

  if (o.output.empty()) {
    out << body.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!(file << body.str())) {
      err << "error: cannot write '" << o.output << "'\n";
      return kUsage;
    }
  }
  return fitted.converged ? kOk : kNoConvergence;
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Environment environment_from_process() {
  Environment env;
  if (const char* raw = std::getenv("EXPOFIT_THREADS")) {
    const std::string_view s(raw);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && ptr == s.data() + s.size()) {
      env.threads = value;
    }
  }
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Fit exponential income models to empirical CDF data", "expofit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Options opts;
  for (const auto& [name, about] : {
           std::pair{"fit", "least-squares fit, JSON report"},
           std::pair{"gof", "fit plus parametric-bootstrap KS test"},
           std::pair{"plotdata", "model vs observed CDF, or Lorenz curve, as CSV"},
           std::pair{"report", "fit, bootstrap test and Gini/Lorenz"},
       }) {
    add_options(*app.add_subcommand(name, about), opts);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, opts, out, err, env);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kDataValidation;
  } catch (const DegenerateDataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataValidation;
  }
}

}  // namespace expofit::cli
