// Copyright 2026 The qmix Authors
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


#include "qmix/commands.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

namespace {

int finish(const qmix::CommandOutput& out, const std::string& out_path) {
  for (const auto& [path, content] : out.files) qmix::write_file_atomic(path, content);
  if (out_path.empty())
    std::cout << out.text;
  else
    qmix::write_file_atomic(out_path, out.text);
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixing analysis of quantum channels and Lindblad generators"};
  app.set_version_flag("--version", qmix::kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("-o,--out", out_path, "Write the JSON report here instead of stdout");

  std::function<qmix::CommandOutput()> run;

  std::string inspect_channel;
  auto* inspect = app.add_subcommand("inspect", "Validate a channel and report its spectral data");
  inspect->add_option("channel", inspect_channel, "Channel file or built-in name")->required();
  inspect->callback([&] { run = [&] { return qmix::cmd_inspect(inspect_channel); }; });

  qmix::MixOptions mix_opts;
  double eps = 0.0;
  std::string csv_path;
  auto* mix = app.add_subcommand("mix", "Discrete mixing bound and trajectory");
  mix->add_option("channel", mix_opts.channel)->required();
  mix->add_option("--k", mix_opts.k, "k-function, e.g. bures or mean-alpha:0.5")->capture_default_str();
  mix->add_option("--rho0", mix_opts.rho0, "maxmixed, pure0, fixed or a state file")->capture_default_str();
  mix->add_option("--n", mix_opts.n, "Number of steps")->capture_default_str()->check(CLI::NonNegativeNumber);
  auto* eps_opt = mix->add_option("--eps", eps, "Target trace distance")->check(CLI::PositiveNumber);
  auto* mix_csv = mix->add_option("--csv", csv_path, "Also write the table as CSV");
  mix->callback([&] {
    if (*eps_opt) mix_opts.eps = eps;
    if (*mix_csv) mix_opts.csv = csv_path;
    run = [&] { return qmix::cmd_mix(mix_opts); };
  });

  qmix::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", verify_opts.suite, "metric, mixing, contraction, balance, geometry or all")
      ->capture_default_str();
  verify->add_option("--trials", verify_opts.trials)->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_opts.seed)->capture_default_str();
  verify->add_option("--inject-fault", verify_opts.fault)->group("");
  verify->callback([&] { run = [&] { return qmix::cmd_verify(verify_opts); }; });

  qmix::DbOptions db_opts;
  auto* db = app.add_subcommand("db-check", "k-detailed balance residuals");
  db->alias("db");
  db->add_option("channel", db_opts.channel)->required();
  db->add_option("--sigma", db_opts.sigma, "fixed, maxmixed or a state file")->capture_default_str();
  db->add_option("--k", db_opts.ks, "k-functions (repeatable); default: all standard ones");
  db->add_flag("--matrix", db_opts.include_matrix, "Include the residual matrices");
  db->add_option("--tol", db_opts.tol)->capture_default_str();
  db->callback([&] { run = [&] { return qmix::cmd_db(db_opts); }; });

  std::string sym_channel, sym_sigma = "fixed";
  auto* sym = app.add_subcommand("symmetrize", "Write the mean-alpha(1/2) symmetrization as a channel file");
  sym->add_option("channel", sym_channel)->required();
  sym->add_option("--sigma", sym_sigma)->capture_default_str();
  sym->callback([&] { run = [&] { return qmix::cmd_symmetrize(sym_channel, sym_sigma); }; });

  std::string cheeger_channel;
  bool use_map = false;
  auto* cheeger = app.add_subcommand("cheeger", "Cheeger constant of a unital channel");
  cheeger->add_option("channel", cheeger_channel)->required();
  cheeger->add_flag("--use-map", use_map, "Use S = T (detailed balanced maps) instead of T* T");
  cheeger->callback([&] { run = [&] { return qmix::cmd_cheeger(cheeger_channel, use_map); }; });

  qmix::ContractionOptions con_opts;
  auto* con = app.add_subcommand("contraction", "Sampled contraction coefficients");
  con->add_option("channel", con_opts.channel)->required();
  con->add_option("--trials", con_opts.trials)->capture_default_str()->check(CLI::PositiveNumber);
  con->add_option("--seed", con_opts.seed)->capture_default_str();
  con->add_option("--alpha", con_opts.alpha)->capture_default_str();
  con->callback([&] { run = [&] { return qmix::cmd_contraction(con_opts); }; });

  qmix::ContinuousOptions cont_opts;
  std::string cont_csv;
  auto* cont = app.add_subcommand("continuous", "Continuous-time bound for a Lindblad generator");
  cont->add_option("generator", cont_opts.generator, "Generator file or damped-qubit:gamma:kappa")->required();
  cont->add_option("--k", cont_opts.k)->capture_default_str();
  cont->add_option("--rho0", cont_opts.rho0)->capture_default_str();
  cont->add_option("--t-max", cont_opts.t_max)->capture_default_str();
  cont->add_option("--dt", cont_opts.dt)->capture_default_str();
  auto* cont_csv_opt = cont->add_option("--csv", cont_csv);
  cont->callback([&] {
    if (*cont_csv_opt) cont_opts.csv = cont_csv;
    run = [&] { return qmix::cmd_continuous(cont_opts); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? qmix::kExitOk : qmix::kExitValidation;
  }

  try {
    return finish(run(), out_path);
  } catch (const qmix::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qmix::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return qmix::kExitInternal;
  }
}
