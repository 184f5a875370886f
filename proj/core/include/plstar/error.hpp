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

#include <stdexcept>
#include <string>
#include <string_view>

namespace plstar {

enum class Errc {
  // mealy-core
  unknown_input_symbol,
  alphabet_mismatch,
  overlapping_alphabets,
  parse_error,
  validation_error,
  // spl-model
  too_many_features,
  unknown_feature,
  nondeterministic_projection,
  // learn-core
  row_not_present,
  table_not_closed,
  table_not_consistent,
  not_a_counterexample,
  round_limit_exceeded,
  // adaptive-plstar
  too_many_orders_requested,
  // stats
  empty_series,
  singleton_series,
  length_mismatch,
  zero_variance_differences,
  zero_variance,
  division_by_zero,
  malformed_csv,
  // general
  io_error,
  invalid_argument,
  invariant_violation,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. `code()` identifies the failure kind;
/// `what()` carries a human readable message (with file/line context where
/// the failure came from a parser).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace plstar
