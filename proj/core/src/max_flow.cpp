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

#include "actionconv/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace actionconv {

MaxFlow::MaxFlow(int num_nodes) {
  if (num_nodes < 0) throw std::invalid_argument("MaxFlow: negative size");
  first_arc_.assign(num_nodes, -1);
}

int MaxFlow::AddArc(int tail, int head, Capacity capacity) {
  if (tail < 0 || head < 0 || tail >= num_nodes() || head >= num_nodes()) {
    throw std::out_of_range("MaxFlow::AddArc: node out of range");
  }
  if (capacity < 0) {
    throw std::invalid_argument("MaxFlow::AddArc: negative capacity");
  }
  const int id = static_cast<int>(head_.size() / 2);
  head_.push_back(head);
  residual_.push_back(capacity);
  next_.push_back(first_arc_[tail]);
  first_arc_[tail] = 2 * id;
  head_.push_back(tail);
  residual_.push_back(0);
  next_.push_back(first_arc_[head]);
  first_arc_[head] = 2 * id + 1;
  return id;
}

bool MaxFlow::BuildLevels(int source, int sink) {
  level_.assign(first_arc_.size(), -1);
  queue_.clear();
  level_[source] = 0;
  queue_.push_back(source);
  for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
    const int u = queue_[qi];
    for (int a = first_arc_[u]; a != -1; a = next_[a]) {
      const int v = head_[a];
      if (residual_[a] > 0 && level_[v] < 0) {
        level_[v] = level_[u] + 1;
        if (v == sink) return true;
        queue_.push_back(v);
      }
    }
  }
  return level_[sink] >= 0;
}

MaxFlow::Capacity MaxFlow::Push(int node, int sink, Capacity limit) {
  if (node == sink) return limit;
  for (int& a = current_[node]; a != -1; a = next_[a]) {
    const int v = head_[a];
    if (residual_[a] <= 0 || level_[v] != level_[node] + 1) continue;
    const Capacity pushed = Push(v, sink, std::min(limit, residual_[a]));
    if (pushed > 0) {
      residual_[a] -= pushed;
      residual_[a ^ 1] += pushed;
      return pushed;
    }
  }
  level_[node] = -1;
  return 0;
}

MaxFlow::Capacity MaxFlow::Solve(int source, int sink) {
  if (source < 0 || sink < 0 || source >= num_nodes() ||
      sink >= num_nodes() || source == sink) {
    throw std::invalid_argument("MaxFlow::Solve: bad source/sink");
  }
  while (BuildLevels(source, sink)) {
    current_ = first_arc_;
    while (const Capacity pushed =
               Push(source, sink, std::numeric_limits<Capacity>::max())) {
      total_ += pushed;
    }
  }
  return total_;
}

}  // namespace actionconv
