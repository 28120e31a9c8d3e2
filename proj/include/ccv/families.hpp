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

#ifndef CCV_FAMILIES_HPP_
#define CCV_FAMILIES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccv/dartgraph.hpp"
#include "ccv/voltage.hpp"

namespace ccv {

inline constexpr int kNumTemplates = 25;

// One of the 25 cubic quotients. Vertex 0 is always the distinguished
// vertex, the one whose index is the family parameter m. Darts listed in
// slots carry r and s; every other link and loop carries voltage 0 and
// every semi-edge carries half its index.
struct QuotientTemplate {
  int index = 0;
  LabelledGraph labelled;
  Vertex distinguished_vertex = 0;
  std::vector<Dart> slots;       // carrier darts for r, then s
  std::vector<Dart> tree_edges;  // carrier darts of the spanning tree
  std::vector<Int> minimal_iota;
  std::optional<Int> forced_m;   // the sporadic templates

  int arity() const { return static_cast<int>(slots.size()); }
};

// Throws Error unless 1 <= i <= 25.
const QuotientTemplate& quotient_template(int i);

struct FamilyParams {
  int index = 0;
  Int m = 0;
  std::optional<Int> r;
  std::optional<Int> s;
};

struct Admissibility {
  bool ok = false;
  std::string clause;     // the predicate that was evaluated
  std::string violation;  // first failing condition when !ok
};

// The family predicate plus the normal form of the voltages (each slot
// reduced below gcd of its end indices, loop voltages off 0 and iota/2).
Admissibility check_admissible(const FamilyParams& p);
bool admissible(const FamilyParams& p);
// Human-readable predicate for `families list`.
std::string predicate_text(int index);

// Throws Error naming the violated condition when p is not admissible.
CyclicVoltageGraph make_family(const FamilyParams& p);
// The same construction without the admissibility check. Any m that is a
// multiple of the minimal index and any slot values are accepted.
CyclicVoltageGraph instantiate(const FamilyParams& p);
// Minimal index, zero voltages everywhere: the shipped golden files.
CyclicVoltageGraph template_skeleton(int index);
// Number of cover vertices for index and m.
Int cover_order(int index, Int m);
std::string family_name(const FamilyParams& p);

DartGraph generalized_petersen(int n, int k);
DartGraph prism(int n);
DartGraph moebius_ladder(int n);  // 2n vertices
// Cubic graph from LCF notation on a Hamiltonian cycle of length n.
DartGraph lcf_graph(int n, const std::vector<int>& jumps);

// K4, K33, Q3, Petersen, Heawood, Pappus, Dodecahedron, TutteCoxeter,
// GP(m,r), Prism(n), Moebius(n). Throws Error on unknown names.
DartGraph named_graph(std::string_view name);

}  // namespace ccv

#endif  // CCV_FAMILIES_HPP_
