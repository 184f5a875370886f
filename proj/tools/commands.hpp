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


#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "plstar/error.hpp"

namespace plstar::cli {

struct Options {
  // inputs
  std::string model;
  std::string fts;
  std::string components;
  std::string sample;
  // experiment
  std::uint64_t seed = 1;
  std::filesystem::path out = ".";
  std::string oracle = "wp";
  std::string wp_depth = "auto";
  std::size_t t = 3;
  std::size_t orders = 20;
  std::size_t reps = 10;
  std::string randomize = "alphabet,prefixes,suffixes";
  std::size_t jobs = 0;
  bool verify = false;

  // learn
  std::vector<std::string> products;
  std::string order_file;
  std::string repository;
  bool non_adaptive = false;

  // order-effect
  std::string best_file;
  std::string worst_file;
  std::string ranking;

  // correlate
  std::string csv;
};

// Each command writes its files under `out` and a short report to `log`.
// Library errors propagate as plstar::Error.
void cmd_sample(const Options& o, std::ostream& log);
void cmd_learn(const Options& o, std::ostream& log);
void cmd_compare(const Options& o, std::ostream& log);
void cmd_order_effect(const Options& o, std::ostream& log);
void cmd_correlate(const Options& o, std::ostream& log);
void cmd_score_order(const Options& o, std::ostream& log);

/// Process exit code for a library error: 3 for broken invariants, 2 for
/// bad input.
int exit_code_for(const Error& e);

/// Bad flag combinations detected after parsing (exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace plstar::cli
