// Copyright 2026 The Authors.
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

#include "exactbasis/cut_minimizers.h"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <queue>

#include "absl/status/status.h"
#include "exactbasis/base_polytope.h"

namespace exactbasis {
namespace {

// Indices sorted by descending x, ties by ascending index.
std::vector<int> DescendingOrder(absl::Span<const mpq_class> x,
                                 absl::Span<const int> indices) {
  std::vector<int> order(indices.begin(), indices.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] > x[b]; });
  return order;
}

// Best prefix of `members` (by descending x) against a cardinality cap.
// Returns the violation and writes the chosen prefix into `out`.
mpq_class BestPrefix(absl::Span<const mpq_class> x,
                     absl::Span<const int> members, int cap, SubsetMask& out) {
  const std::vector<int> order = DescendingOrder(x, members);
  mpq_class prefix = 0;
  mpq_class best = 0;
  int best_len = 0;
  for (size_t k = 0; k < order.size(); ++k) {
    prefix += x[order[k]];
    mpq_class v = prefix - std::min<int>(static_cast<int>(k) + 1, cap);
    if (v > best) {
      best = v;
      best_len = static_cast<int>(k) + 1;
    }
  }
  for (int k = 0; k < best_len; ++k) out.Insert(order[k]);
  return best;
}

class UniformMinimizer : public RankCutMinimizer {
 public:
  explicit UniformMinimizer(int rank) : rank_(rank) {}
  absl::StatusOr<std::optional<SubsetMask>> FindViolatedCut(
      const Matroid& matroid, absl::Span<const mpq_class> x) const override {
    std::vector<int> all(matroid.ground_size());
    std::iota(all.begin(), all.end(), 0);
    SubsetMask s(matroid.ground_size());
    if (BestPrefix(x, all, rank_, s) > 0) return s;
    return std::nullopt;
  }

 private:
  int rank_;
};

class PartitionMinimizer : public RankCutMinimizer {
 public:
  PartitionMinimizer(std::vector<int> block_of, std::vector<int> capacities)
      : capacities_(std::move(capacities)), members_(capacities_.size()) {
    for (size_t e = 0; e < block_of.size(); ++e) {
      members_[block_of[e]].push_back(static_cast<int>(e));
    }
  }
  absl::StatusOr<std::optional<SubsetMask>> FindViolatedCut(
      const Matroid& matroid, absl::Span<const mpq_class> x) const override {
    SubsetMask s(matroid.ground_size());
    bool any = false;
    for (size_t b = 0; b < members_.size(); ++b) {
      if (BestPrefix(x, members_[b], capacities_[b], s) > 0) any = true;
    }
    if (any) return s;
    return std::nullopt;
  }

 private:
  std::vector<int> capacities_;
  std::vector<std::vector<int>> members_;
};

// Dinic max-flow, generic over the capacity type.
template <typename T>
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

  void AddArc(int u, int v, const T& cap) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], T(0)});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  T Run(int s, int t) {
    T total = 0;
    while (Bfs(s, t)) {
      for (size_t i = 0; i < head_.size(); ++i) it_[i] = head_[i];
      while (true) {
        T pushed = Dfs(s, t, T(-1));
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  // Nodes reachable from s in the residual graph after Run().
  std::vector<char> SourceSide(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    T cap;
  };

  bool Bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  // `limit` < 0 means unlimited.
  T Dfs(int u, int t, const T& limit) {
    if (u == t) return limit;
    for (int& a = it_[u]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      T room = (limit < 0 || arc.cap < limit) ? arc.cap : limit;
      T pushed = Dfs(arc.to, t, room);
      if (pushed > 0) {
        arc.cap -= pushed;
        arcs_[a ^ 1].cap += pushed;
        return pushed;
      }
    }
    return T(0);
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> it_;
};

// Maximizes x(E(U)) - |U| + 1 over vertex sets U. Writing d(v) for the
// weighted degree and l(v) for the loop weight at v,
//
//   |U| - x(E(U)) = sum_{v in U} (1 - d(v)/2 - l(v)) + x(delta(U))/2,
//
// which is a cut function once one vertex is forced into U. Each candidate
// vertex is forced in turn, and vertices already tried are forced out.
class GraphicMinimizer : public RankCutMinimizer {
 public:
  GraphicMinimizer(int vertex_count, std::vector<std::pair<int, int>> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {}

  absl::StatusOr<std::optional<SubsetMask>> FindViolatedCut(
      const Matroid& matroid, absl::Span<const mpq_class> x) const override {
    const int n = matroid.ground_size();
    mpz_class den = 1;
    for (const mpq_class& v : x) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
    // Everything below is scaled by 2 * den.
    std::vector<mpz_class> edge_cap(n);
    std::vector<mpz_class> vertex_cost(vertex_count_, 2 * den);
    mpz_class magnitude = 0;
    for (int e = 0; e < n; ++e) {
      mpq_class scaled = x[e] * den;
      edge_cap[e] = scaled.get_num();
      const auto [u, v] = edges_[e];
      if (u == v) {
        vertex_cost[u] -= 2 * edge_cap[e];
      } else {
        vertex_cost[u] -= edge_cap[e];
        vertex_cost[v] -= edge_cap[e];
      }
      magnitude += 4 * edge_cap[e];
    }
    magnitude += 2 * den * vertex_count_;
    if (magnitude < mpz_class(1) << 60) {
      return Search<int64_t>(n, den, edge_cap, vertex_cost, magnitude);
    }
    return Search<mpz_class>(n, den, edge_cap, vertex_cost, magnitude);
  }

 private:
  static int64_t Convert(const mpz_class& v, int64_t*) { return v.get_si(); }
  static mpz_class Convert(const mpz_class& v, mpz_class*) { return v; }

  template <typename T>
  std::optional<SubsetMask> Search(int n, const mpz_class& den,
                                   const std::vector<mpz_class>& edge_cap,
                                   const std::vector<mpz_class>& vertex_cost,
                                   const mpz_class& magnitude) const {
    T* tag = nullptr;
    std::vector<char> active(vertex_count_, 0);
    for (int e = 0; e < n; ++e) {
      if (edge_cap[e] > 0) {
        active[edges_[e].first] = 1;
        active[edges_[e].second] = 1;
      }
    }
    const T infinity = Convert(magnitude + 1, tag);
    const T full = Convert(2 * den, tag);
    T best_violation = 0;
    std::vector<char> best_side;
    const int s = vertex_count_;
    const int t = vertex_count_ + 1;
    for (int v0 = 0; v0 < vertex_count_; ++v0) {
      if (!active[v0]) continue;
      MaxFlow<T> flow(vertex_count_ + 2);
      T constant = 0;
      for (int u = 0; u < vertex_count_; ++u) {
        if (!active[u]) continue;
        const T a = Convert(vertex_cost[u], tag);
        if (u < v0) {
          flow.AddArc(u, t, infinity);
        } else if (u == v0) {
          flow.AddArc(s, u, infinity);
        }
        if (a >= 0) {
          flow.AddArc(u, t, a);
        } else {
          constant += a;
          flow.AddArc(s, u, -a);
        }
      }
      for (int e = 0; e < n; ++e) {
        const auto [a, b] = edges_[e];
        if (a == b || edge_cap[e] == 0) continue;
        const T c = Convert(edge_cap[e], tag);
        flow.AddArc(a, b, c);
        flow.AddArc(b, a, c);
      }
      const T cut = flow.Run(s, t);
      const T violation = full - (constant + cut);
      if (violation > best_violation) {
        best_violation = violation;
        best_side = flow.SourceSide(s);
      }
    }
    if (best_side.empty()) return std::nullopt;
    SubsetMask out(n);
    for (int e = 0; e < n; ++e) {
      if (best_side[edges_[e].first] && best_side[edges_[e].second]) {
        out.Insert(e);
      }
    }
    return out;
  }

  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

class DirectSumMinimizer : public RankCutMinimizer {
 public:
  explicit DirectSumMinimizer(std::vector<Matroid> parts)
      : parts_(std::move(parts)) {
    for (const Matroid& p : parts_) separators_.emplace_back(p);
  }

  absl::StatusOr<std::optional<SubsetMask>> FindViolatedCut(
      const Matroid& matroid, absl::Span<const mpq_class> x) const override {
    SubsetMask out(matroid.ground_size());
    bool any = false;
    int offset = 0;
    // Separators cache rank tables, so calls are serialized.
    std::lock_guard<std::mutex> lock(mu_);
    for (size_t i = 0; i < parts_.size(); ++i) {
      const int size = parts_[i].ground_size();
      absl::StatusOr<std::optional<RankCut>> cut =
          separators_[i].Find(x.subspan(offset, size));
      if (!cut.ok()) return cut.status();
      if (cut->has_value()) {
        any = true;
        (*cut)->subset.ForEach([&](ElementId e) { out.Insert(offset + e); });
      }
      offset += size;
    }
    if (any) return out;
    return std::nullopt;
  }

 private:
  std::vector<Matroid> parts_;
  mutable std::mutex mu_;
  mutable std::vector<Separator> separators_;
};

}  // namespace

std::shared_ptr<const RankCutMinimizer> MakeUniformMinimizer(int rank) {
  return std::make_shared<UniformMinimizer>(rank);
}

std::shared_ptr<const RankCutMinimizer> MakePartitionMinimizer(
    std::vector<int> block_of, std::vector<int> capacities) {
  return std::make_shared<PartitionMinimizer>(std::move(block_of),
                                              std::move(capacities));
}

std::shared_ptr<const RankCutMinimizer> MakeGraphicMinimizer(
    int vertex_count, std::vector<std::pair<int, int>> edges) {
  return std::make_shared<GraphicMinimizer>(vertex_count, std::move(edges));
}

std::shared_ptr<const RankCutMinimizer> MakeDirectSumMinimizer(
    std::vector<Matroid> parts) {
  return std::make_shared<DirectSumMinimizer>(std::move(parts));
}

}  // namespace exactbasis
