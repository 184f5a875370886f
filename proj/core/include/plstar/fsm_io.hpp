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

#include <filesystem>
#include <string>
#include <string_view>

#include "plstar/mealy.hpp"

namespace plstar {

// `.fsm` text format, one statement per line, '#' starts a comment:
//
//   inputs a b c
//   initial q0
//   q0 a / 0 -> q1

MealyMachine read_fsm(std::string_view text);
MealyMachine read_fsm_file(const std::filesystem::path& path);

/// Canonical text: states renamed q0.. in breadth-first order, inputs in
/// declared order.
std::string write_fsm(const MealyMachine& m);

/// Graphviz rendering, one edge per transition labelled `in/out`.
std::string to_dot(const MealyMachine& m, std::string_view graph_name = "fsm");

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace plstar
