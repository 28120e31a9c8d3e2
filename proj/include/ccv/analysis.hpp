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

#ifndef CCV_ANALYSIS_HPP_
#define CCV_ANALYSIS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccv/dartgraph.hpp"
#include "ccv/families.hpp"
#include "ccv/voltage.hpp"

namespace ccv {

inline constexpr int kMaxCycleLength = 12;
inline constexpr int kMaxAnalysisVertices = 64;

// Shortest cycle length. Semi-edges and loops count as 1, parallel edges as 2.
int girth(const DartGraph& g);

// Number of c-cycles through the edge of dart e in a simple graph.
std::int64_t edge_cycle_count(const DartGraph& g, Dart e, int c);

// Sorted counts over the three edges at v.
std::array<std::int64_t, 3> c_signature(const DartGraph& g, Vertex v, int c);

bool is_vertex_transitive(const DartGraph& g);
bool is_arc_transitive(const DartGraph& g);

struct SignatureReport {
  int girth = 0;
  int c = 0;  // cycle length the signatures refer to
  std::vector<std::array<std::int64_t, 3>> signatures;
  bool cycle_regular = false;
  bool vertex_transitive = false;
  bool arc_transitive = false;
  std::uint64_t aut_order = 0;
};

// c = 0 means c = girth.
SignatureReport analyze(const DartGraph& g, int c = 0);

// The four labelled subgraphs whose preimages have forced local structure.
enum class Shape { kS1 = 1, kS2, kS3, kS4 };

struct ShapeEmbedding {
  Shape shape = Shape::kS1;
  std::vector<Vertex> vertices;
  std::vector<Dart> darts;  // both darts of every edge
};

// Every labelled subgraph of cvg isomorphic to one of the shapes.
std::vector<ShapeEmbedding> find_shapes(const LabelledGraph& lg);

enum class ComponentType { kTriangle, kSquare, kK32, kOther };
const char* to_string(ComponentType t);

struct PreimageReport {
  Shape shape = Shape::kS1;
  std::vector<ComponentType> components;
  bool as_expected = false;
};

// Throws if sub is not one of the four shapes inside cvg.
PreimageReport preimage_structure(const CyclicVoltageGraph& cvg, const ShapeEmbedding& sub);

struct CensusRecord {
  FamilyParams params;
  Int order = 0;
  bool vertex_transitive = false;
  std::optional<std::string> clause;  // "1".."5" or "tutte-coxeter"
  std::uint64_t aut_order = 0;
  int girth = 0;
  std::string canonical_key;

  bool agrees() const { return vertex_transitive == clause.has_value(); }
};

inline constexpr int kDefaultCensusOrder = 48;
inline constexpr int kMaxCensusOrder = 64;

// Admissible parameter points with cover order at most max_order, in
// (index, m, r, s) order.
std::vector<FamilyParams> census_parameters(int max_order);

// threads = 0 uses the hardware concurrency.
std::vector<CensusRecord> census(int max_order, unsigned threads = 0);

// The classification clause an order-N graph belongs to, decided by
// isomorphism against the clause members of that order.
std::optional<std::string> classification_clause(const DartGraph& g);

}  // namespace ccv

#endif  // CCV_ANALYSIS_HPP_
