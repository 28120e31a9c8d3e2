// Copyright 2026 The ccv Authors.
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

// Independent constructions and brute-force checks used as test oracles.
// Nothing here calls the isomorphism engine or the cover machinery.

#ifndef CCV_TESTS_ORACLES_HPP_
#define CCV_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ccv/dartgraph.hpp"
#include "ccv/voltage.hpp"

namespace oracle {

using Adjacency = std::vector<std::set<int>>;

inline ccv::DartGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  ccv::GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_link(u, v);
  return b.build();
}

inline Adjacency adjacency(const ccv::DartGraph& g) {
  Adjacency adj(g.num_vertices());
  for (ccv::Dart x = 0; x < g.num_darts(); ++x) adj[g.beg(x)].insert(g.beg(g.inv(x)));
  return adj;
}

// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
inline ccv::DartGraph kneser_petersen() {
  std::vector<std::pair<int, int>> sets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) sets.emplace_back(a, b);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = sets[i];
      auto [c, d] = sets[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  return from_edges(10, edges);
}

// Point-line incidence graph of the Fano plane (lines {i, i+1, i+3} mod 7).
inline ccv::DartGraph fano_heawood() {
  std::vector<std::pair<int, int>> edges;
  for (int l = 0; l < 7; ++l)
    for (int d : {0, 1, 3}) edges.emplace_back((l + d) % 7, 7 + l);
  return from_edges(14, edges);
}

// Incidence graph of GQ(2,2): duads of {0..5} against synthemes.
inline ccv::DartGraph gq22_tutte_coxeter() {
  std::vector<std::pair<int, int>> duads;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) duads.emplace_back(a, b);
  std::vector<std::vector<int>> synthemes;  // three disjoint duads
  for (int i = 0; i < 15; ++i)
    for (int j = i + 1; j < 15; ++j)
      for (int k = j + 1; k < 15; ++k) {
        std::set<int> pts{duads[i].first, duads[i].second, duads[j].first, duads[j].second,
                          duads[k].first, duads[k].second};
        if (pts.size() == 6) synthemes.push_back({i, j, k});
      }
  std::vector<std::pair<int, int>> edges;
  for (int s = 0; s < static_cast<int>(synthemes.size()); ++s)
    for (int d : synthemes[s]) edges.emplace_back(d, 15 + s);
  return from_edges(15 + static_cast<int>(synthemes.size()), edges);
}

// Cay(Z_n; S) for a symmetric connection set S (an involution n/2 gives one edge).
inline ccv::DartGraph circulant(int n, const std::vector<int>& connection) {
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int c : connection) {
      int j = ((i + c) % n + n) % n;
      edges.emplace(std::min(i, j), std::max(i, j));
    }
  return from_edges(n, {edges.begin(), edges.end()});
}

inline bool bfs_connected(const ccv::DartGraph& g) {
  if (g.num_vertices() == 0) return true;
  Adjacency adj = adjacency(g);
  std::vector<char> seen(g.num_vertices(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == g.num_vertices();
}

// No semi-edges, no loops, no two darts with the same ends.
inline bool directly_simple(const ccv::DartGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (ccv::Dart x = 0; x < g.num_darts(); ++x) {
    int u = g.beg(x), v = g.beg(g.inv(x));
    if (g.inv(x) == x || u == v) return false;
    if (!seen.emplace(u, v).second) return false;
  }
  return true;
}

// Number of vertex permutations preserving adjacency (simple graphs only).
inline std::uint64_t count_automorphisms(const ccv::DartGraph& g) {
  const int n = g.num_vertices();
  Adjacency adj = adjacency(g);
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  std::function<void(int)> place = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || adj[v].size() != adj[w].size()) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = (adj[v].count(u) > 0) == (adj[w].count(image[u]) > 0);
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      place(v + 1);
      used[w] = 0;
    }
  };
  place(0);
  return count;
}

// Shortest cycle by checking, for each edge, the distance between its ends
// with the edge removed.
inline int girth_by_edge_removal(const ccv::DartGraph& g) {
  Adjacency adj = adjacency(g);
  int best = 0;
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int v : adj[u]) {
      if (v < u) continue;
      std::vector<int> dist(g.num_vertices(), -1);
      std::queue<int> q;
      dist[u] = 0;
      q.push(u);
      while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : adj[a]) {
          if ((a == u && b == v) || (a == v && b == u)) continue;
          if (dist[b] < 0) {
            dist[b] = dist[a] + 1;
            q.push(b);
          }
        }
      }
      if (dist[v] > 0 && (best == 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
  return best;
}

// Every cycle of length c as a sorted vertex list plus its edge set; cycles
// are listed once by starting at their least vertex.
inline std::map<std::pair<int, int>, std::int64_t> cycles_per_edge(const ccv::DartGraph& g, int c) {
  Adjacency adj = adjacency(g);
  std::map<std::pair<int, int>, std::int64_t> count;
  std::vector<int> path;
  std::vector<char> on(g.num_vertices(), 0);
  std::function<void(int)> walk = [&](int v) {
    if (static_cast<int>(path.size()) == c) {
      if (adj[v].count(path[0]) && path[1] < path.back()) {
        for (int k = 0; k < c; ++k) {
          int a = path[k], b = path[(k + 1) % c];
          ++count[{std::min(a, b), std::max(a, b)}];
        }
      }
      return;
    }
    for (int w : adj[v])
      if (!on[w] && w > path[0]) {
        on[w] = 1;
        path.push_back(w);
        walk(w);
        path.pop_back();
        on[w] = 0;
      }
  };
  for (int s = 0; s < g.num_vertices(); ++s) {
    path = {s};
    on[s] = 1;
    walk(s);
    on[s] = 0;
  }
  return count;
}

// A random cyclic generalised voltage graph: 1-4 base vertices, random
// semi-edges, loops and links with labels in 1..3, the minimal index scaled
// by a random factor, and random voltages. Cover order is kept at most
// max_order. Empty when the draw is not extendable or too large.
inline std::optional<ccv::CyclicVoltageGraph> random_cvg(std::mt19937_64& rng, int max_order) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = pick(1, 4);
  ccv::GraphBuilder b(n);
  std::vector<int> lambda;
  // A spanning path keeps the base graph connected.
  for (int v = 1; v < n; ++v) {
    b.add_link(pick(0, v - 1), v);
    lambda.push_back(pick(1, 3));
    lambda.push_back(pick(1, 3));
  }
  const int extra = pick(0, 3);
  for (int k = 0; k < extra; ++k) {
    int kind = pick(0, 2);
    int u = pick(0, n - 1);
    if (kind == 0) {
      b.add_semi_edge(u);
      lambda.push_back(pick(1, 2));
    } else if (kind == 1) {
      b.add_loop(u);
      int l = pick(1, 2);
      lambda.push_back(l);
      lambda.push_back(l);
    } else {
      b.add_link(u, pick(0, n - 1));
      lambda.push_back(pick(1, 3));
      lambda.push_back(pick(1, 3));
    }
  }
  ccv::DartGraph g = b.build();
  // Loops need equal labels at both darts; a link built as u-u is a loop.
  for (ccv::Dart x = 0; x < g.num_darts(); ++x)
    if (ccv::classify_edge(g, x) == ccv::EdgeKind::kLoop) lambda[g.inv(x)] = lambda[x];
  ccv::LabelledGraph lg(g, lambda);
  ccv::Extension e = ccv::extend(lg);
  if (!e.extendable) return std::nullopt;
  const int c = pick(1, 4);
  std::vector<ccv::Int> iota = e.iota;
  ccv::Int order = 0;
  for (auto& i : iota) order += i *= c;
  if (order > max_order) return std::nullopt;
  std::vector<ccv::Int> zeta(g.num_darts(), 0);
  for (ccv::Dart x = 0; x < g.num_darts(); ++x) {
    if (ccv::carrier(g, x) != x) continue;
    ccv::Int fib = lambda[x] * iota[g.beg(x)];
    if (g.inv(x) == x) {
      zeta[x] = (fib % 2 == 0 && pick(0, 1)) ? fib / 2 : 0;
    } else {
      zeta[x] = std::uniform_int_distribution<ccv::Int>(0, 3 * fib)(rng) - fib;
    }
  }
  return ccv::CyclicVoltageGraph::from_carriers(lg, iota, zeta);
}

}  // namespace oracle

#endif  // CCV_TESTS_ORACLES_HPP_
