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

#include "doctest.h"
#include "plstar/error.hpp"

// Checks that `expr` throws plstar::Error with the given code.
#define CHECK_ERRC(expr, errc)                                              \
  do {                                                                      \
    try {                                                                   \
      (void)(expr);                                                         \
      FAIL_CHECK("expected " << ::plstar::errc_name(errc) << ", no throw"); \
    } catch (const ::plstar::Error& plstar_err_) {                          \
      CHECK_MESSAGE(plstar_err_.code() == (errc), plstar_err_.what());      \
    }                                                                       \
  } while (0)
