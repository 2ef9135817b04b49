// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "symspace/bench/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symspace/bench/convergence.hpp"

namespace symspace::bench {

namespace {

struct Options {
  std::string metric = "schwarzschild";
  double radius = 1.0;
  std::vector<int> ns;
  std::vector<int> degrees;
  std::string scheme = "symspace";
  int quad = 0;  // 0: subcommand default
  std::string out_path;
  double tol = 1e-12;
  int max_iter = 100;
};

const std::map<std::string, Scheme> kSchemes = {{"symspace", Scheme::Symspace},
                                                {"componentwise", Scheme::Componentwise},
                                                {"karcher", Scheme::Karcher}};

void add_common(CLI::App& cmd, Options& opt) {
  cmd.add_option("--metric", opt.metric, "Metric field")
      ->check(CLI::IsMember({"schwarzschild", "sin2"}))
      ->capture_default_str();
  cmd.add_option("--radius", opt.radius, "Schwarzschild radius R")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--n", opt.ns, "Subdivisions per axis, comma separated")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  cmd.add_option("--degree", opt.degrees, "Lagrange degrees, comma separated")
      ->delimiter(',')
      ->check(CLI::Range(1, 2));
  cmd.add_option("--scheme", opt.scheme, "Interpolation scheme")
      ->check(CLI::IsMember({"symspace", "componentwise", "karcher"}))
      ->capture_default_str();
  cmd.add_option("--quad", opt.quad, "Gauss points per axis (default 4, census 2)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--out", opt.out_path, "Output file; .json selects JSON, otherwise CSV");
  cmd.add_option("--tol", opt.tol, "Karcher residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--max-iter", opt.max_iter, "Karcher iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

MetricField make_metric(const Options& opt) {
  return opt.metric == "sin2" ? MetricField::sin2() : MetricField::schwarzschild(opt.radius);
}

bool wants_json(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

// Writes through `write` to --out, or to `out` when no path was given.
bool emit(const Options& opt, std::ostream& out, std::ostream& err,
          const std::function<void(std::ostream&, bool)>& write) {
  if (opt.out_path.empty()) {
    write(out, false);
    return true;
  }
  std::ofstream file(opt.out_path);
  if (!file) {
    err << "cannot open " << opt.out_path << " for writing\n";
    return false;
  }
  write(file, wants_json(opt.out_path));
  return static_cast<bool>(file);
}

int run_convergence_cmd(const Options& opt, std::ostream& out, std::ostream& err) {
  ConvergenceStudy study;
  if (!opt.ns.empty()) study.ns = opt.ns;
  if (!opt.degrees.empty()) study.degrees = opt.degrees;
  study.scheme = kSchemes.at(opt.scheme);
  study.quad = opt.quad > 0 ? opt.quad : 4;
  study.karcher.tol = opt.tol;
  study.karcher.max_iter = opt.max_iter;

  const ConvergenceReport report = run_convergence(study, make_metric(opt));
  const bool ok = emit(opt, out, err, [&](std::ostream& os, bool json) {
    json ? write_convergence_json(os, report) : write_convergence_csv(os, report);
  });
  if (!ok) return 1;
  if (report.failed_elements() > 0) {
    err << report.failed_elements() << " element(s) failed; see diagnostics\n";
    return 1;
  }
  return 0;
}

int run_census_cmd(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::vector<int> ns = opt.ns.empty() ? std::vector<int>{2} : opt.ns;
  const std::vector<int> degrees = opt.degrees.empty() ? std::vector<int>{1} : opt.degrees;
  const MetricField metric = make_metric(opt);
  std::vector<CensusTable> tables;
  for (int k : degrees) {
    for (int n : ns) {
      GridSpec spec;
      spec.n = n;
      spec.degree = k;
      spec.scheme = kSchemes.at(opt.scheme);
      spec.quad = opt.quad > 0 ? opt.quad : 2;
      spec.karcher.tol = opt.tol;
      spec.karcher.max_iter = opt.max_iter;
      tables.push_back(run_signature_census(spec, metric));
    }
  }
  const bool ok = emit(opt, out, err, [&](std::ostream& os, bool json) {
    json ? write_census_json(os, tables) : write_census_csv(os, tables);
  });
  return ok ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure-preserving metric interpolation benchmarks", "symspace-bench"};
  app.require_subcommand(1);
  Options opt;
  CLI::App* convergence =
      app.add_subcommand("convergence", "L2/H1 interpolation errors and dyadic orders");
  CLI::App* census = app.add_subcommand("census", "Signature counts at quadrature points");
  add_common(*convergence, opt);
  add_common(*census, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (convergence->parsed() && opt.quad > 0) {
    for (int k : opt.degrees.empty() ? std::vector<int>{1, 2} : opt.degrees) {
      if (opt.quad < k + 1) {
        err << "--quad must be at least degree + 1 for error integrals\n\n" << convergence->help();
        return 2;
      }
    }
  }

  try {
    if (convergence->parsed()) return run_convergence_cmd(opt, out, err);
    return run_census_cmd(opt, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace symspace::bench
