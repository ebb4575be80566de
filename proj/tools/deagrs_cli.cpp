// deagrs: slack-based DEA scoring, global reference sets and returns to scale
// from the command line.
//
// Exit codes: 0 success, 1 data/usage error, 2 solver error.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deagrs/analysis.hpp"
#include "deagrs/errors.hpp"

namespace {

struct Options {
  std::string data_path;
  deagrs::WeightScheme scheme = deagrs::WeightScheme::ram;
  deagrs::Regime regime = deagrs::Regime::vrs;
  deagrs::OutputFormat format = deagrs::OutputFormat::table;
  std::vector<std::string> dmus;
  deagrs::Tolerances tol;
  std::size_t max_iterations = 0;
};

void add_common_options(CLI::App* cmd, Options& opts) {
  const std::map<std::string, deagrs::WeightScheme> schemes{
      {"ram", deagrs::WeightScheme::ram}, {"additive", deagrs::WeightScheme::additive},
      {"bam", deagrs::WeightScheme::bam}};
  const std::map<std::string, deagrs::Regime> regimes{{"vrs", deagrs::Regime::vrs}, {"crs", deagrs::Regime::crs}};
  const std::map<std::string, deagrs::OutputFormat> formats{
      {"json", deagrs::OutputFormat::json}, {"csv", deagrs::OutputFormat::csv},
      {"table", deagrs::OutputFormat::table}};

  cmd->add_option("--data", opts.data_path, "CSV file with dmu, in:<label> and out:<label> columns")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--scheme", opts.scheme, "Slack weighting: ram, additive or bam")
      ->transform(CLI::CheckedTransformer(schemes, CLI::ignore_case))
      ->option_text("ram|additive|bam");
  cmd->add_option("--regime", opts.regime, "Returns-to-scale regime: vrs or crs")
      ->transform(CLI::CheckedTransformer(regimes, CLI::ignore_case))
      ->option_text("vrs|crs");
  cmd->add_option("--format", opts.format, "Output format: json, csv or table")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("json|csv|table");
  cmd->add_option("--dmu", opts.dmus, "Restrict the report to these units (repeatable)");
  cmd->add_option("--tol-feas", opts.tol.solver.feas_tol, "LP feasibility tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--tol-opt", opts.tol.solver.opt_tol, "LP optimality tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--tol-eff", opts.tol.efficiency, "Slack total at or below which a unit is efficient")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-support", opts.tol.support, "Weight above which a unit joins the reference set")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-rts", opts.tol.rts, "Zero tolerance for the intercept test")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iterations", opts.max_iterations, "Simplex iteration cap per LP (default 50 x size)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slack-based DEA: efficiency, global reference sets and returns to scale"};
  app.require_subcommand(1);

  Options opts;
  struct Stage {
    const char* name;
    const char* help;
    bool grs;
    bool rts;
  };
  const Stage stages[] = {
      {"efficiency", "Score every unit with the slack model", false, false},
      {"grs", "Identify each unit's global reference set and interior projection", true, false},
      {"rts", "Classify returns to scale at the interior projection", true, true},
      {"report", "Run the full pipeline", true, true},
  };
  std::map<CLI::App*, const Stage*> commands;
  for (const auto& stage : stages) {
    CLI::App* cmd = app.add_subcommand(stage.name, stage.help);
    add_common_options(cmd, opts);
    commands[cmd] = &stage;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const Stage* stage = nullptr;
  for (const auto& [cmd, s] : commands) {
    if (cmd->parsed()) stage = s;
  }

  try {
    const deagrs::Dataset data = deagrs::load_dataset(opts.data_path);
    deagrs::AnalysisConfig config;
    config.scheme = opts.scheme;
    config.regime = opts.regime;
    config.tol = opts.tol;
    if (opts.max_iterations > 0) config.tol.solver.max_iterations = opts.max_iterations;
    config.output_format = opts.format;
    config.dmu_filter = opts.dmus;
    config.run_grs = stage->grs;
    config.run_rts = stage->rts;
    if (stage->rts && config.regime == deagrs::Regime::crs) {
      std::cerr << "note: returns to scale are not classified under the crs regime\n";
    }

    const auto reports = deagrs::run_analysis(config, data);
    for (const auto& r : reports) {
      if (r.rts_unavailable) std::cerr << "note: " << r.name << ": " << *r.rts_unavailable << '\n';
    }
    std::cout << deagrs::render_report(reports, config.output_format);
  } catch (const deagrs::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 2;
  } catch (const deagrs::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
