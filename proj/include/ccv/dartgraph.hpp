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

#ifndef CCV_DARTGRAPH_HPP_
#define CCV_DARTGRAPH_HPP_

#include <span>
#include <utility>
#include <vector>

namespace ccv {

using Vertex = int;
using Dart = int;

enum class EdgeKind { kSemiEdge, kLoop, kLink };

const char* to_string(EdgeKind kind);

// A graph in the dart formalism: every edge is an orbit of the involution
// inv. Semi-edges are fixed points of inv. Vertex ids are 0..V-1 and dart
// ids are 0..D-1. Immutable once built.
class DartGraph {
 public:
  DartGraph() = default;
  // Throws Error unless inv is an involution and beg maps into 0..V-1.
  DartGraph(int num_vertices, std::vector<Vertex> beg, std::vector<Dart> inv);

  int num_vertices() const { return num_vertices_; }
  int num_darts() const { return static_cast<int>(beg_.size()); }

  Vertex beg(Dart x) const;
  Dart inv(Dart x) const;
  Vertex term(Dart x) const { return beg(inv(x)); }

  // Darts beginning at v, in increasing id order.
  std::span<const Dart> darts_at(Vertex v) const;
  int valence(Vertex v) const { return static_cast<int>(darts_at(v).size()); }

  const std::vector<Vertex>& beg_map() const { return beg_; }
  const std::vector<Dart>& inv_map() const { return inv_; }

  bool operator==(const DartGraph& other) const {
    return num_vertices_ == other.num_vertices_ && beg_ == other.beg_ &&
           inv_ == other.inv_;
  }

 private:
  void check_dart(Dart x) const;

  int num_vertices_ = 0;
  std::vector<Vertex> beg_;
  std::vector<Dart> inv_;
  std::vector<int> offset_;  // CSR layout of darts_at
  std::vector<Dart> by_vertex_;
};

// Incremental construction. Darts are numbered in order of creation; a link
// or loop gets two consecutive ids, the first beginning at the first argument.
class GraphBuilder {
 public:
  explicit GraphBuilder(int num_vertices = 0) : num_vertices_(num_vertices) {}
  Vertex add_vertex() { return num_vertices_++; }
  Dart add_link(Vertex u, Vertex v);
  Dart add_loop(Vertex v);
  Dart add_semi_edge(Vertex v);
  DartGraph build() const;

 private:
  void check_vertex(Vertex v) const;
  int num_vertices_;
  std::vector<Vertex> beg_;
  std::vector<Dart> inv_;
};

// Simple graph from an edge list.
DartGraph simple_graph(int num_vertices,
                       std::span<const std::pair<Vertex, Vertex>> edges);

Vertex term(const DartGraph& g, Dart x);
EdgeKind classify_edge(const DartGraph& g, Dart x);
bool is_simple(const DartGraph& g);
bool is_connected(const DartGraph& g);
bool is_cubic(const DartGraph& g);

// The lower of the two darts of an edge; identifies the edge.
inline Dart carrier(const DartGraph& g, Dart x) {
  Dart y = g.inv(x);
  return x < y ? x : y;
}

// True iff x and y share both endpoints (beg x = beg y, term x = term y).
bool are_parallel(const DartGraph& g, Dart x, Dart y);

struct Walk {
  std::vector<Dart> darts;
};

// Throws Error unless consecutive darts chain up.
void validate_walk(const DartGraph& g, const Walk& w);
Walk inverse_walk(const DartGraph& g, const Walk& w);

struct SpanningTree {
  Vertex root = 0;
  std::vector<char> in_tree;      // per dart; both darts of a tree edge
  std::vector<Dart> parent_dart;  // per vertex: dart from parent, -1 at root
  std::vector<Vertex> order;      // root first, parents before children
  bool contains(Dart x) const { return in_tree[x] != 0; }
};

// Kruskal over required edges first, then all remaining links in dart id
// order. Throws Error if g is disconnected or required edges form a cycle.
SpanningTree spanning_tree(const DartGraph& g,
                           std::span<const Dart> required_edges = {});

// For every edge not in the tree, the cycle made of that edge and the tree
// path back. Semi-edges and loops give walks of length 1.
std::vector<Walk> fundamental_cycles(const DartGraph& g, const SpanningTree& t);

struct Automorphism {
  std::vector<Vertex> vertex_map;
  std::vector<Dart> dart_map;
  bool operator==(const Automorphism&) const = default;
};

// A map between two graphs is an isomorphism iff it is bijective and
// commutes with beg and inv.
bool is_isomorphism(const DartGraph& from, const DartGraph& to,
                    const Automorphism& map);
bool is_automorphism(const DartGraph& g, const Automorphism& a);
Automorphism identity_automorphism(const DartGraph& g);
// x -> second(first(x)).
Automorphism compose(const Automorphism& first, const Automorphism& second);
Automorphism inverse(const Automorphism& a);

struct VertexPartition {
  std::vector<std::vector<Vertex>> blocks;  // sorted, ordered by least member
};

// Orbits of the group generated by gens. Throws Error on a non-automorphism.
VertexPartition vertex_orbits(const DartGraph& g,
                              std::span<const Automorphism> gens);
std::vector<std::vector<Dart>> dart_orbits(const DartGraph& g,
                                           std::span<const Automorphism> gens);

struct Quotient {
  DartGraph graph;
  std::vector<Vertex> vertex_projection;
  std::vector<Dart> dart_projection;
  std::vector<std::vector<Vertex>> vertex_blocks;
  std::vector<std::vector<Dart>> dart_blocks;
};

// Orbit graph; orbit ids are assigned by least member id.
Quotient quotient(const DartGraph& g, std::span<const Automorphism> gens);

}  // namespace ccv

#endif  // CCV_DARTGRAPH_HPP_
