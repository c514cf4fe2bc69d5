// Copyright 2026 The auctionlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line driver for the repeated-auction and equilibrium experiments.
//
//   auctionlab complete   --config configs/complete_info.json --preset ci
//   auctionlab incomplete --config configs/bandits_three_bidders.json --out results/bandits
//   auctionlab soda       --config configs/soda_closed_forms.json --seed 7
//   auctionlab revenue    --config configs/revenue_matrix.json

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "auctionlab/config.hpp"
#include "auctionlab/experiments.hpp"

namespace {

struct Options {
  std::string config;
  std::string out;
  std::string preset;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = -1;
  bool quiet = false;
};

auctionlab::ExperimentConfig Load(const Options& o, auctionlab::ExperimentKind kind) {
  std::ifstream is(o.config);
  if (!is) throw auctionlab::ValidationError("cannot open config " + o.config);
  auctionlab::Json j = auctionlab::Json::parse(is);
  const std::string name = auctionlab::ToString(kind);
  if (!j.contains("experiment")) j["experiment"] = name;
  if (j.at("experiment").get<std::string>() != name) {
    throw auctionlab::ValidationError("config " + o.config + " describes a '" +
                                      j.at("experiment").get<std::string>() +
                                      "' experiment, not '" + name + "'");
  }
  auctionlab::ExperimentConfig c = auctionlab::ConfigFromJson(j);
  if (!o.preset.empty()) c.scale = auctionlab::ScaleConfig::Preset(kind, o.preset);
  if (o.seed_set) c.seed = o.seed;
  if (o.threads >= 0) c.threads = o.threads;
  auctionlab::Validate(c);
  return c;
}

void AddCommand(CLI::App& app, auctionlab::ExperimentKind kind,
                const std::string& help, Options& o) {
  CLI::App* sub = app.add_subcommand(auctionlab::ToString(kind), help);
  sub->add_option("--config", o.config, "experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--out", o.out, "output directory (default: out/<name>)");
  sub->add_option("--preset", o.preset, "replace run lengths and sample sizes")
      ->check(CLI::IsMember({"paper", "ci"}));
  sub->add_option_function<std::uint64_t>(
      "--seed", [&o](const std::uint64_t& s) { o.seed = s; o.seed_set = true; },
      "base seed (overrides the config)");
  sub->add_option("--threads", o.threads, "worker threads (0: all cores)");
  sub->add_flag("--quiet", o.quiet, "no progress messages");
  sub->callback([kind, &o] {
    const auctionlab::ExperimentConfig c = Load(o, kind);
    const std::filesystem::path out = o.out.empty() ? "out/" + c.name : o.out;
    auctionlab::RunExperiment(c, out, o.quiet ? nullptr : &std::clog);
    if (!o.quiet) std::clog << "wrote " << out.string() << '\n';
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learning agents and equilibrium computation in repeated auctions"};
  app.require_subcommand(1);
  Options o;
  using auctionlab::ExperimentKind;
  AddCommand(app, ExperimentKind::kComplete,
             "repeated auction with a known common value", o);
  AddCommand(app, ExperimentKind::kIncomplete,
             "population learners with private values", o);
  AddCommand(app, ExperimentKind::kSoda, "equilibria of the discretized game", o);
  AddCommand(app, ExperimentKind::kRevenue,
             "first- vs second-price revenue per utility pair", o);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
