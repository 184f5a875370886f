// Copyright 2026 The plstar Authors
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


// plstar: sampling, family learning and order experiments for product lines.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using plstar::cli::Options;

void add_inputs(CLI::App* cmd, Options& o, bool with_sample) {
  cmd->add_option("--model", o.model, "Feature model JSON");
  auto* fts = cmd->add_option("--fts", o.fts, "Featured transition system JSON");
  auto* comp = cmd->add_option("--components", o.components, "Directory of <Feature>.fsm machines")
;
  fts->excludes(comp);
  if (with_sample)
    cmd->add_option("--sample", o.sample, "Sample JSON (default: computed with --t)")
        ;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Adaptive learning of product-line families"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--seed", o.seed, "Seed for every random draw")->capture_default_str();
  app.add_option("--out", o.out, "Output directory")->capture_default_str();
  app.add_option("--oracle", o.oracle, "Equivalence oracle")
      ->check(CLI::IsMember({"wp", "perfect"}))
      ->capture_default_str();
  app.add_option("--wp-depth", o.wp_depth, "auto, auto+<k> or <n>")->capture_default_str();
  app.add_option("--t", o.t, "Interaction strength for sampling")->check(CLI::Range(1, 64))->capture_default_str();
  app.add_option("--orders", o.orders, "Number of random orders")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--reps", o.reps, "Repetitions per order")->capture_default_str();
  app.add_option("--randomize", o.randomize, "alphabet,prefixes,suffixes subset, or none")
      ->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("--verify", o.verify, "Check every learned model against its product");

  auto* sample = app.add_subcommand("sample", "Compute a t-wise sample and report product sizes");
  add_inputs(sample, o, false);
  sample->callback([&] { plstar::cli::cmd_sample(o, std::cout); });

  auto* learn = app.add_subcommand("learn", "Learn products in a given order");
  add_inputs(learn, o, true);
  learn->add_option("--product", o.products, "Product ids to learn, in order (e.g. p3 p1)");
  learn->add_option("--order", o.order_file, "Order JSON file");
  learn->add_option("--repository", o.repository, "Repository JSON to resume from")
      ;
  learn->add_flag("--non-adaptive", o.non_adaptive, "Classic initialization for every product");
  learn->callback([&] { plstar::cli::cmd_learn(o, std::cout); });

  auto* compare = app.add_subcommand("compare", "PL* vs non-adaptive learning over random orders");
  add_inputs(compare, o, true);
  compare->callback([&] { plstar::cli::cmd_compare(o, std::cout); });

  auto* effect = app.add_subcommand("order-effect", "Repeat PL* on a best and a worst order");
  add_inputs(effect, o, true);
  effect->add_option("--best", o.best_file, "Order JSON");
  effect->add_option("--worst", o.worst_file, "Order JSON");
  effect->add_option("--ranking", o.ranking, "compare.csv to take the extreme orders from")
      ;
  effect->callback([&] { plstar::cli::cmd_order_effect(o, std::cout); });

  auto* corr = app.add_subcommand("correlate", "Correlate D with PL* cost in a compare.csv");
  corr->add_option("csv", o.csv, "Comparison CSV")->required();
  corr->callback([&] { plstar::cli::cmd_correlate(o, std::cout); });

  auto* score = app.add_subcommand("score-order", "Print F_i and D for an order");
  score->add_option("--model", o.model, "Feature model JSON")->required();
  score->add_option("--sample", o.sample, "Sample JSON (default: computed with --t)")
      ;
  score->add_option("--order", o.order_file, "Order JSON file");
  score->add_option("--product", o.products, "Product ids in order");
  score->callback([&] { plstar::cli::cmd_score_order(o, std::cout); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const plstar::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const plstar::Error& e) {
    std::cerr << "error: " << plstar::errc_name(e.code()) << ": " << e.what() << '\n';
    return plstar::cli::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
