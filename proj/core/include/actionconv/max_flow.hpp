// Copyright 2026 The actionconv Authors
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

#ifndef ACTIONCONV_MAX_FLOW_HPP_
#define ACTIONCONV_MAX_FLOW_HPP_

#include <cstdint>
#include <vector>

namespace actionconv {

// Dinic's algorithm on integer capacities. Exact as long as the total
// capacity out of the source fits in int64.
//
// Solve() augments from the current flow, so arcs may be added between calls
// and the flow value only grows.
class MaxFlow {
 public:
  using Capacity = std::int64_t;

  explicit MaxFlow(int num_nodes);

  int num_nodes() const { return static_cast<int>(first_arc_.size()); }
  int num_arcs() const { return static_cast<int>(head_.size() / 2); }

  // Returns the arc id. Capacities must be nonnegative.
  int AddArc(int tail, int head, Capacity capacity);

  // Max flow from source to sink; total value including earlier calls.
  Capacity Solve(int source, int sink);

  Capacity Flow(int arc) const { return residual_[2 * arc + 1]; }

 private:
  bool BuildLevels(int source, int sink);
  Capacity Push(int node, int sink, Capacity limit);

  // Arc 2i is forward, 2i+1 its reverse.
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<Capacity> residual_;
  std::vector<int> first_arc_;
  std::vector<int> level_;
  std::vector<int> current_;
  std::vector<int> queue_;
  Capacity total_ = 0;
};

}  // namespace actionconv

#endif  // ACTIONCONV_MAX_FLOW_HPP_
