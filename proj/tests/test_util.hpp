// Copyright 2026 The sroom Authors.
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

#ifndef SROOM_TESTS_TEST_UTIL_HPP_
#define SROOM_TESTS_TEST_UTIL_HPP_


#include "doctest.h"
#include "sroom/error.hpp"

// Runs f and checks it throws sroom::Error with the given code.
#define CHECK_THROWS_CODE(expr, expected_code)                      \
  do {                                                              \
    bool sroom_threw_ = false;                                      \
    try {                                                           \
      (void)(expr);                                                 \
    } catch (const sroom::Error& sroom_e_) {                        \
      sroom_threw_ = true;                                          \
      CHECK_MESSAGE(sroom_e_.code() == (expected_code),             \
                    "got " << sroom::error_code_name(sroom_e_.code())); \
    }                                                               \
    CHECK_MESSAGE(sroom_threw_, "expected " #expected_code);        \
  } while (false)

#endif  // SROOM_TESTS_TEST_UTIL_HPP_
