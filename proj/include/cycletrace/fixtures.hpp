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

#ifndef CYCLETRACE_FIXTURES_HPP
#define CYCLETRACE_FIXTURES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Built-in copies of the graphs shipped under fixtures/.

namespace cycletrace::fixtures {

inline constexpr std::string_view kButterfly = R"(# Butterfly: two triangles sharing vertex 3.
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
edge e1 1 2
edge e2 2 3
edge e3 3 4
edge e4 4 5
edge e5 1 3
edge e6 3 5
)";

inline constexpr std::string_view kDumbbell = R"(# Dumbbell: triangles 1-2-3 and 4-5-6 joined by the bridge e4.
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
vertex 6
edge e1 3 1
edge e2 1 2
edge e3 2 3
edge e4 3 4
edge e5 4 5
edge e6 5 6
edge e7 6 4
)";

inline constexpr std::string_view kDipole = R"(# Dipole with two parallel edges.
vertex 1
vertex 2
edge e1 1 2
edge e2 1 2
)";

inline constexpr std::string_view kK4 = R"(# Complete graph on four vertices; (e1, ..., e6) is an identity ordering.
vertex 1
vertex 2
vertex 3
vertex 4
edge e1 1 2
edge e2 3 4
edge e3 1 3
edge e4 2 4
edge e5 1 4
edge e6 2 3
)";

inline constexpr std::string_view kEden12 = R"(# Twelve vertices, twenty edges: satisfies the closed-trail conditions for
# identity orderings but has none (20 < 2 * 12 - 2).
vertex v1
vertex v2
vertex v3
vertex v4
vertex v5
vertex v6
vertex v7
vertex v8
vertex v9
vertex v10
vertex v11
vertex v12
edge v2_v9 v2 v9
edge v9_v10 v9 v10
edge v10_v2 v10 v2
edge v2_v1 v2 v1
edge v1_v10 v1 v10
edge v10_v3 v10 v3
edge v3_v4 v3 v4
edge v4_v10 v4 v10
edge v10_v11 v10 v11
edge v11_v4 v11 v4
edge v6_v5 v6 v5
edge v5_v12 v5 v12
edge v12_v6 v12 v6
edge v6_v9 v6 v9
edge v9_v12 v9 v12
edge v12_v11 v12 v11
edge v11_v8 v11 v8
edge v8_v12 v8 v12
edge v12_v7 v12 v7
edge v7_v8 v7 v8
)";

inline constexpr std::string_view kPath3 = R"(# Path on three vertices.
vertex 1
vertex 2
vertex 3
edge e1 1 2
edge e2 2 3
)";

inline std::optional<std::string_view> by_name(std::string_view name) {
  if (name == "butterfly") return kButterfly;
  if (name == "dumbbell") return kDumbbell;
  if (name == "dipole") return kDipole;
  if (name == "k4") return kK4;
  if (name == "eden12") return kEden12;
  if (name == "path3") return kPath3;
  return std::nullopt;
}

inline std::vector<std::string_view> names() { return {"butterfly", "dumbbell", "dipole", "k4", "eden12", "path3"}; }

/// The closed trail assigned to each vertex of eden12, as a vertex walk that
/// returns to its start.
inline std::vector<std::pair<std::string, std::vector<std::string>>> eden12_trails() {
  return {
      {"v1", {"v1", "v2", "v10", "v1"}},
      {"v2", {"v2", "v9", "v10", "v2"}},
      {"v3", {"v3", "v10", "v4", "v3"}},
      {"v4", {"v4", "v10", "v11", "v4"}},
      {"v5", {"v5", "v6", "v12", "v5"}},
      {"v6", {"v6", "v9", "v12", "v6"}},
      {"v7", {"v7", "v8", "v12", "v7"}},
      {"v8", {"v8", "v11", "v12", "v8"}},
      {"v9", {"v9", "v2", "v1", "v10", "v9"}},
      {"v10", {"v10", "v3", "v4", "v11", "v10"}},
      {"v11", {"v11", "v8", "v7", "v12", "v11"}},
      {"v12", {"v12", "v5", "v6", "v9", "v12"}},
  };
}

}  // namespace cycletrace::fixtures

#endif  // CYCLETRACE_FIXTURES_HPP
