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

#include "ccv/dartgraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "ccv/error.hpp"

namespace ccv {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<std::vector<int>> group_classes(UnionFind& uf, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

void require_automorphisms(const DartGraph& g,
                           std::span<const Automorphism> gens) {
  for (const auto& a : gens) {
    if (!is_automorphism(g, a)) throw Error("generator is not an automorphism");
  }
}

}  // namespace

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kSemiEdge:
      return "semi-edge";
    case EdgeKind::kLoop:
      return "loop";
    case EdgeKind::kLink:
      return "link";
  }
  return "?";
}

DartGraph::DartGraph(int num_vertices, std::vector<Vertex> beg,
                     std::vector<Dart> inv)
    : num_vertices_(num_vertices), beg_(std::move(beg)), inv_(std::move(inv)) {
  if (num_vertices_ < 0) throw Error("negative vertex count");
  if (beg_.size() != inv_.size()) throw Error("beg and inv sizes differ");
  const int d = num_darts();
  for (Dart x = 0; x < d; ++x) {
    if (beg_[x] < 0 || beg_[x] >= num_vertices_)
      throw Error("dart " + std::to_string(x) + " begins at unknown vertex");
    if (inv_[x] < 0 || inv_[x] >= d)
      throw Error("dart " + std::to_string(x) + " has unknown inverse");
  }
  for (Dart x = 0; x < d; ++x) {
    if (inv_[inv_[x]] != x)
      throw Error("inv is not an involution at dart " + std::to_string(x));
  }
  offset_.assign(num_vertices_ + 1, 0);
  for (Dart x = 0; x < d; ++x) ++offset_[beg_[x] + 1];
  for (int v = 0; v < num_vertices_; ++v) offset_[v + 1] += offset_[v];
  by_vertex_.resize(d);
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  for (Dart x = 0; x < d; ++x) by_vertex_[fill[beg_[x]]++] = x;
}

void DartGraph::check_dart(Dart x) const {
  if (x < 0 || x >= num_darts())
    throw Error("unknown dart id " + std::to_string(x));
}

Vertex DartGraph::beg(Dart x) const {
  check_dart(x);
  return beg_[x];
}

Dart DartGraph::inv(Dart x) const {
  check_dart(x);
  return inv_[x];
}

std::span<const Dart> DartGraph::darts_at(Vertex v) const {
  if (v < 0 || v >= num_vertices_)
    throw Error("unknown vertex id " + std::to_string(v));
  return {by_vertex_.data() + offset_[v],
          static_cast<size_t>(offset_[v + 1] - offset_[v])};
}

void GraphBuilder::check_vertex(Vertex v) const {
  if (v < 0 || v >= num_vertices_)
    throw Error("unknown vertex id " + std::to_string(v));
}

Dart GraphBuilder::add_link(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return add_loop(u);
  Dart x = static_cast<Dart>(beg_.size());
  beg_.push_back(u);
  beg_.push_back(v);
  inv_.push_back(x + 1);
  inv_.push_back(x);
  return x;
}

Dart GraphBuilder::add_loop(Vertex v) {
  check_vertex(v);
  Dart x = static_cast<Dart>(beg_.size());
  beg_.push_back(v);
  beg_.push_back(v);
  inv_.push_back(x + 1);
  inv_.push_back(x);
  return x;
}

Dart GraphBuilder::add_semi_edge(Vertex v) {
  check_vertex(v);
  Dart x = static_cast<Dart>(beg_.size());
  beg_.push_back(v);
  inv_.push_back(x);
  return x;
}

DartGraph GraphBuilder::build() const {
  return DartGraph(num_vertices_, beg_, inv_);
}

DartGraph simple_graph(int num_vertices,
                       std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(num_vertices);
  for (auto [u, v] : edges) b.add_link(u, v);
  return b.build();
}

Vertex term(const DartGraph& g, Dart x) { return g.term(x); }

EdgeKind classify_edge(const DartGraph& g, Dart x) {
  Dart y = g.inv(x);
  if (y == x) return EdgeKind::kSemiEdge;
  if (g.beg(x) == g.beg(y)) return EdgeKind::kLoop;
  return EdgeKind::kLink;
}

bool are_parallel(const DartGraph& g, Dart x, Dart y) {
  return g.beg(x) == g.beg(y) && g.term(x) == g.term(y);
}

bool is_simple(const DartGraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<Vertex> ends;
    for (Dart x : g.darts_at(v)) {
      if (classify_edge(g, x) != EdgeKind::kLink) return false;
      ends.push_back(g.term(x));
    }
    std::sort(ends.begin(), ends.end());
    if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
      return false;
  }
  return true;
}

bool is_connected(const DartGraph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart x : g.darts_at(v)) {
      Vertex w = g.term(x);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.num_vertices();
}

bool is_cubic(const DartGraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) != 3) return false;
  return true;
}

void validate_walk(const DartGraph& g, const Walk& w) {
  for (size_t i = 0; i < w.darts.size(); ++i) {
    Dart x = w.darts[i];
    if (x < 0 || x >= g.num_darts())
      throw Error("walk uses unknown dart " + std::to_string(x));
    if (i > 0 && g.term(w.darts[i - 1]) != g.beg(x))
      throw Error("not a walk: dart " + std::to_string(x) +
                  " does not continue from the previous one");
  }
}

Walk inverse_walk(const DartGraph& g, const Walk& w) {
  Walk out;
  for (auto it = w.darts.rbegin(); it != w.darts.rend(); ++it)
    out.darts.push_back(g.inv(*it));
  return out;
}

SpanningTree spanning_tree(const DartGraph& g,
                           std::span<const Dart> required_edges) {
  const int n = g.num_vertices();
  if (n == 0) throw Error("spanning tree of the empty graph");
  UnionFind uf(n);
  std::vector<char> chosen(g.num_darts(), 0);
  auto take = [&](Dart x) {
    chosen[x] = 1;
    chosen[g.inv(x)] = 1;
  };
  for (Dart x : required_edges) {
    if (classify_edge(g, x) != EdgeKind::kLink)
      throw Error("required edges contain a cycle (loop or semi-edge)");
    if (chosen[x]) continue;
    if (!uf.unite(g.beg(x), g.term(x)))
      throw Error("required edges contain a cycle");
    take(x);
  }
  for (Dart x = 0; x < g.num_darts(); ++x) {
    if (classify_edge(g, x) != EdgeKind::kLink || chosen[x]) continue;
    if (uf.unite(g.beg(x), g.term(x))) take(x);
  }
  SpanningTree t;
  t.in_tree = chosen;
  t.parent_dart.assign(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    t.order.push_back(v);
    for (Dart x : g.darts_at(v)) {
      if (!chosen[x]) continue;
      Vertex w = g.term(x);
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent_dart[w] = x;
      q.push(w);
    }
  }
  if (static_cast<int>(t.order.size()) != n) throw Error("graph is disconnected");
  return t;
}

std::vector<Walk> fundamental_cycles(const DartGraph& g,
                                     const SpanningTree& t) {
  const int n = g.num_vertices();
  std::vector<int> depth(n, 0);
  for (Vertex v : t.order)
    if (t.parent_dart[v] >= 0) depth[v] = depth[g.beg(t.parent_dart[v])] + 1;
  std::vector<Walk> out;
  for (Dart x = 0; x < g.num_darts(); ++x) {
    if (t.contains(x) || carrier(g, x) != x) continue;
    Walk w;
    w.darts.push_back(x);
    Vertex a = g.term(x);
    Vertex b = g.beg(x);
    if (a != b) {
      // Tree path a -> b through their lowest common ancestor.
      std::vector<Dart> up;    // from a upward
      std::vector<Dart> down;  // from b upward, reversed later
      while (a != b) {
        if (depth[a] >= depth[b]) {
          Dart p = t.parent_dart[a];
          up.push_back(g.inv(p));
          a = g.beg(p);
        } else {
          Dart p = t.parent_dart[b];
          down.push_back(p);
          b = g.beg(p);
        }
      }
      w.darts.insert(w.darts.end(), up.begin(), up.end());
      w.darts.insert(w.darts.end(), down.rbegin(), down.rend());
    }
    out.push_back(std::move(w));
  }
  return out;
}

bool is_isomorphism(const DartGraph& from, const DartGraph& to,
                    const Automorphism& map) {
  if (from.num_vertices() != to.num_vertices() ||
      from.num_darts() != to.num_darts())
    return false;
  if (static_cast<int>(map.vertex_map.size()) != from.num_vertices() ||
      static_cast<int>(map.dart_map.size()) != from.num_darts())
    return false;
  std::vector<char> hit_v(to.num_vertices(), 0), hit_d(to.num_darts(), 0);
  for (Vertex v : map.vertex_map) {
    if (v < 0 || v >= to.num_vertices() || hit_v[v]) return false;
    hit_v[v] = 1;
  }
  for (Dart x : map.dart_map) {
    if (x < 0 || x >= to.num_darts() || hit_d[x]) return false;
    hit_d[x] = 1;
  }
  for (Dart x = 0; x < from.num_darts(); ++x) {
    Dart y = map.dart_map[x];
    if (to.beg(y) != map.vertex_map[from.beg(x)]) return false;
    if (to.inv(y) != map.dart_map[from.inv(x)]) return false;
  }
  return true;
}

bool is_automorphism(const DartGraph& g, const Automorphism& a) {
  return is_isomorphism(g, g, a);
}

Automorphism identity_automorphism(const DartGraph& g) {
  Automorphism a;
  a.vertex_map.resize(g.num_vertices());
  a.dart_map.resize(g.num_darts());
  std::iota(a.vertex_map.begin(), a.vertex_map.end(), 0);
  std::iota(a.dart_map.begin(), a.dart_map.end(), 0);
  return a;
}

Automorphism compose(const Automorphism& first, const Automorphism& second) {
  Automorphism out;
  out.vertex_map.resize(first.vertex_map.size());
  out.dart_map.resize(first.dart_map.size());
  for (size_t v = 0; v < first.vertex_map.size(); ++v)
    out.vertex_map[v] = second.vertex_map[first.vertex_map[v]];
  for (size_t x = 0; x < first.dart_map.size(); ++x)
    out.dart_map[x] = second.dart_map[first.dart_map[x]];
  return out;
}

Automorphism inverse(const Automorphism& a) {
  Automorphism out;
  out.vertex_map.resize(a.vertex_map.size());
  out.dart_map.resize(a.dart_map.size());
  for (size_t v = 0; v < a.vertex_map.size(); ++v)
    out.vertex_map[a.vertex_map[v]] = static_cast<Vertex>(v);
  for (size_t x = 0; x < a.dart_map.size(); ++x)
    out.dart_map[a.dart_map[x]] = static_cast<Dart>(x);
  return out;
}

VertexPartition vertex_orbits(const DartGraph& g,
                              std::span<const Automorphism> gens) {
  require_automorphisms(g, gens);
  UnionFind uf(g.num_vertices());
  for (const auto& a : gens)
    for (Vertex v = 0; v < g.num_vertices(); ++v) uf.unite(v, a.vertex_map[v]);
  return {group_classes(uf, g.num_vertices())};
}

std::vector<std::vector<Dart>> dart_orbits(const DartGraph& g,
                                           std::span<const Automorphism> gens) {
  require_automorphisms(g, gens);
  UnionFind uf(g.num_darts());
  for (const auto& a : gens)
    for (Dart x = 0; x < g.num_darts(); ++x) uf.unite(x, a.dart_map[x]);
  return group_classes(uf, g.num_darts());
}

Quotient quotient(const DartGraph& g, std::span<const Automorphism> gens) {
  Quotient q;
  q.vertex_blocks = vertex_orbits(g, gens).blocks;
  q.dart_blocks = dart_orbits(g, gens);
  q.vertex_projection.assign(g.num_vertices(), -1);
  q.dart_projection.assign(g.num_darts(), -1);
  for (size_t b = 0; b < q.vertex_blocks.size(); ++b)
    for (Vertex v : q.vertex_blocks[b]) q.vertex_projection[v] = static_cast<int>(b);
  for (size_t b = 0; b < q.dart_blocks.size(); ++b)
    for (Dart x : q.dart_blocks[b]) q.dart_projection[x] = static_cast<int>(b);
  std::vector<Vertex> beg(q.dart_blocks.size());
  std::vector<Dart> inv(q.dart_blocks.size());
  for (size_t b = 0; b < q.dart_blocks.size(); ++b) {
    Dart x = q.dart_blocks[b].front();
    beg[b] = q.vertex_projection[g.beg(x)];
    inv[b] = q.dart_projection[g.inv(x)];
  }
  q.graph = DartGraph(static_cast<int>(q.vertex_blocks.size()), std::move(beg),
                      std::move(inv));
  return q;
}

}  // namespace ccv
