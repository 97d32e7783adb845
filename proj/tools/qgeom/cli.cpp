// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "qgeom/error.hpp"
#include "qgeom/qgeom.hpp"

namespace qgeom::cli {
namespace {

using Command = std::function<Report(RunConfig&)>;

void add_shared_options(CLI::App& sub, RunConfig& cfg, std::string& format) {
  sub.add_option("--b", cfg.params.b, "Field strength b");
  sub.add_option("--c", cfg.c_text, "Couplings c1,c2,c3");
  sub.add_option("--beta", cfg.params.beta, "Perturbation strength");
  sub.add_option("--eta", cfg.eta_text,
                 "Initial coefficients: four of re, re+imj, imj or mag@phase");
  sub.add_option("--case", cfg.case_text, "Case C1..C7 (defaults eta; must match --eta)");
  sub.add_option("--gamma", cfg.gamma, "Metric scale gamma");
  sub.add_option("--point", cfg.point_text, "Comma-separated coordinates");
  sub.add_option("--grid", cfg.grid_text, "Grid axes name=a:b:n, comma-separated");
  sub.add_option("--h-metric", cfg.h_metric, "Finite-difference step for the metric");
  sub.add_option("--h-curv", cfg.h_curv, "Finite-difference step for curvature");
  sub.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("--out", cfg.out, "Output file (default stdout)");
  sub.add_option("--seed", cfg.seed, "Random seed");
}

void emit(const Report& r, const RunConfig& cfg, std::ostream& os) {
  if (cfg.format == Format::Csv) {
    write_csv(os, r.table);
  } else {
    write_report_json(os, r, kVersion);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "json";
  CLI::App app{"Quantum geometry of a two-qubit Hamiltonian family", "qgeom"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  const std::map<std::string, std::pair<std::string, Command>> commands = {
      {"spectrum", {"Analytic vs numeric eigensystem", cmd_spectrum}},
      {"classify", {"Classify eta into a case", cmd_classify}},
      {"evolve", {"Evolved state amplitudes", cmd_evolve}},
      {"metric", {"Fubini-Study metric", cmd_metric}},
      {"curvature", {"Ricci and scalar curvature", cmd_curvature}},
      {"perturb", {"First-order perturbed metric", cmd_perturb}},
      {"concurrence", {"Concurrence scan over a grid", cmd_concurrence}},
      {"verify", {"Built-in verification suites", cmd_verify}},
  };
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    add_shared_options(*sub, cfg, format);
    if (name == "verify") {
      sub->add_option("--suite", cfg.suite, "spectrum|periodicity|metric|gauge|tables|all");
    }
    if (name == "concurrence" || name == "perturb") {
      sub->add_option("--variant", cfg.variant, "Closed form to compare against")
          ->check(CLI::IsMember({"printed", "corrected"}));
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  }

  for (const auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    cfg.h_metric_given = sub->count("--h-metric") > 0;
  }
  cfg.format = format == "csv" ? Format::Csv : Format::Json;

  Report report;
  try {
    resolve_params(cfg);
    report = commands.at(cfg.command).second(cfg);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return is_numerical(e.kind()) ? kExitNumerical : kExitInvalidConfig;
  }

  for (const auto& w : cfg.warnings) err << "warning: " << w << "\n";
  if (cfg.out.empty()) {
    emit(report, cfg, out);
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << cfg.out << "' for writing\n";
      return kExitInvalidConfig;
    }
    emit(report, cfg, file);
  }
  for (const auto& c : report.checks) {
    if (c.hard && !c.passed) err << "check failed: " << c.name << "\n";
  }
  return report.hard_failure() ? kExitCheckFailed : kExitOk;
}

}  // namespace qgeom::cli
