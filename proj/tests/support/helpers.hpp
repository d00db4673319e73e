// Copyright 2026 The cycletrace Authors
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

#ifndef CYCLETRACE_TESTS_HELPERS_HPP
#define CYCLETRACE_TESTS_HELPERS_HPP

#include <string_view>

#include "cycletrace/error.hpp"
#include "cycletrace/fixtures.hpp"
#include "cycletrace/text_format.hpp"
#include "gtest/gtest.h"

namespace cycletrace::testing {

/// Runs `fn` and returns the kind of the cycletrace::Error it throws.
template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a cycletrace::Error";
  return ErrorKind::InvalidArgument;
}

inline Multigraph fixture(std::string_view name) { return parse_graph(*fixtures::by_name(name)); }

}  // namespace cycletrace::testing

#endif  // CYCLETRACE_TESTS_HELPERS_HPP
