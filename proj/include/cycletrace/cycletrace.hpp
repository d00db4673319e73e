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

#ifndef CYCLETRACE_CYCLETRACE_HPP
#define CYCLETRACE_CYCLETRACE_HPP

#include "cycletrace/eden12.hpp"
#include "cycletrace/error.hpp"
#include "cycletrace/fixtures.hpp"
#include "cycletrace/genus_search.hpp"
#include "cycletrace/graph.hpp"
#include "cycletrace/identity.hpp"
#include "cycletrace/ordering.hpp"
#include "cycletrace/permutation.hpp"
#include "cycletrace/rotation.hpp"
#include "cycletrace/spanning_tree.hpp"
#include "cycletrace/text_format.hpp"

#endif  // CYCLETRACE_CYCLETRACE_HPP
