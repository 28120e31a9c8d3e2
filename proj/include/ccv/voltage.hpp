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

#ifndef CCV_VOLTAGE_HPP_
#define CCV_VOLTAGE_HPP_

#include <optional>
#include <vector>

#include "ccv/dartgraph.hpp"
#include "ccv/numeric.hpp"

namespace ccv {

// A dart graph with a positive label per dart.
struct LabelledGraph {
  DartGraph graph;
  std::vector<int> lambda;

  LabelledGraph() = default;
  // Throws Error unless lambda has one entry >= 1 per dart.
  LabelledGraph(DartGraph g, std::vector<int> labels);
};

// Product of lambda(x) / lambda(x^-1) along a walk, in lowest terms.
struct WalkRatio {
  Int numerator = 1;
  Int denominator = 1;
  bool operator==(const WalkRatio&) const = default;
};

WalkRatio walk_ratio(const LabelledGraph& lg, const Walk& w);

struct Extension {
  bool extendable = false;
  std::vector<Int> iota;  // minimal index function when extendable
  Walk witness;           // a fundamental cycle with ratio != 1 otherwise
};

// Minimal index function (gcd 1) or a violating fundamental cycle. Throws
// Error on a disconnected graph.
Extension extend(const LabelledGraph& lg);

// The index function with iota(v0) = m; throws Error unless m is a multiple
// of the minimal value at v0 or lg is not extendable.
std::vector<Int> scaled_iota(const LabelledGraph& lg, Vertex v0, Int m);

// (Delta, lambda, iota, zeta). Voltages are stored as residues in
// [0, lambda(x) iota(beg x)), and zeta(x^-1) = -zeta(x) holds exactly.
class CyclicVoltageGraph {
 public:
  // zeta gives a value for every dart; inverse pairs must already agree.
  CyclicVoltageGraph(LabelledGraph lg, std::vector<Int> iota,
                     std::vector<Int> zeta);
  // Only the carrier (lower id) dart of each edge is read from zeta; the
  // other dart of the edge is derived.
  static CyclicVoltageGraph from_carriers(LabelledGraph lg,
                                          std::vector<Int> iota,
                                          const std::vector<Int>& zeta);

  const LabelledGraph& labelled() const { return lg_; }
  const DartGraph& graph() const { return lg_.graph; }
  int lambda(Dart x) const { return lg_.lambda[x]; }
  Int iota(Vertex v) const { return iota_[v]; }
  Int zeta(Dart x) const { return zeta_[x]; }
  // |fib(x)| = lambda(x) iota(beg x).
  Int fibre_size(Dart x) const { return lambda(x) * iota_[graph().beg(x)]; }
  const std::vector<Int>& iota_map() const { return iota_; }
  const std::vector<Int>& zeta_map() const { return zeta_; }

  bool operator==(const CyclicVoltageGraph& o) const {
    return lg_.graph == o.lg_.graph && lg_.lambda == o.lg_.lambda &&
           iota_ == o.iota_ && zeta_ == o.zeta_;
  }

 private:
  CyclicVoltageGraph() = default;
  void validate_ratio() const;
  LabelledGraph lg_;
  std::vector<Int> iota_;
  std::vector<Int> zeta_;
};

struct FibreIndex {
  int base = 0;
  Int index = 0;
};

struct Cover {
  DartGraph graph;
  std::vector<FibreIndex> fibre_of_vertex;
  std::vector<FibreIndex> fibre_of_dart;
  std::vector<int> vertex_offset;  // first cover vertex of each fibre
  std::vector<int> dart_offset;    // first cover dart of each fibre
  std::vector<Int> vertex_fibre_size;
  std::vector<Int> dart_fibre_size;
  Int n = 1;

  Vertex vertex(Vertex base, Int i) const {
    return vertex_offset[base] + static_cast<int>(mod(i, vertex_fibre_size[base]));
  }
  Dart dart(Dart base, Int i) const {
    return dart_offset[base] + static_cast<int>(mod(i, dart_fibre_size[base]));
  }
};

// The cyclic generalised cover. Throws Error above 10^7 darts.
Cover expand(const CyclicVoltageGraph& cvg);

// Adjacency of u_i and v_j read off the voltages alone.
bool adjacent_in_cover(const CyclicVoltageGraph& cvg, Vertex u, Int i,
                       Vertex v, Int j);

// Carrier voltages reduced modulo gcd(iota(beg), iota(term)); the other dart
// of each edge keeps zeta(x^-1) = -zeta(x). Semi-edges are left alone. The cover keeps its vertex set
// and every edge; only dart ids inside a fibre may be permuted.
CyclicVoltageGraph reduce_voltages(const CyclicVoltageGraph& cvg);

// Dart bijection fixing every vertex id, when a and b have the same vertex
// set and the same edges between each pair of vertices.
std::optional<Automorphism> same_edges(const DartGraph& a, const DartGraph& b);

bool is_t_normalised(const CyclicVoltageGraph& cvg, const SpanningTree& t);

// Zero voltage on every tree dart, by shifting fibre indices along t.
CyclicVoltageGraph t_normalise(const CyclicVoltageGraph& cvg,
                               const SpanningTree& t);
// Isomorphism expand(cvg) -> expand(t_normalise(cvg, t)).
Automorphism t_normalise_witness(const CyclicVoltageGraph& cvg,
                                 const SpanningTree& t);

// gcd of all voltages and indices is 1. Throws Error unless cvg is
// T-normalised for t.
bool is_connected_cover(const CyclicVoltageGraph& cvg, const SpanningTree& t);
// The three voltage conditions for a simple cover.
bool is_simple_cover(const CyclicVoltageGraph& cvg);
// Every base vertex has label sum 3.
bool is_cubic_cover(const CyclicVoltageGraph& cvg);
// Cubic, simple and connected, after T-normalising on a default tree.
bool is_ccv(const CyclicVoltageGraph& cvg);

// lcm of lambda(x) iota(beg x) over darts (and iota over dartless vertices).
Int faithful_n(const CyclicVoltageGraph& cvg);

struct ZnWeights {
  Int n = 1;
  std::vector<Int> vertex;  // generator of the vertex stabiliser subgroup
  std::vector<Int> dart;
};
ZnWeights zn_weights(const CyclicVoltageGraph& cvg);

// x_i -> x_{i+a} on every fibre.
Automorphism fibre_rotation(const Cover& cover, Int a);

// zeta -> a zeta. Throws Error unless gcd(a, n) = 1.
CyclicVoltageGraph scale_voltages(const CyclicVoltageGraph& cvg, Int a);
// Isomorphism expand(cvg) -> expand(scale_voltages(cvg, a)): x_i -> x_{ai}.
Automorphism scale_witness(const CyclicVoltageGraph& cvg, Int a);

// Lifts a base automorphism phi that preserves lambda and iota and satisfies
// zeta(phi x) = a zeta(x) to the cover automorphism x_i -> (phi x)_{ai}.
// Throws Error when phi or a is not compatible.
Automorphism lift_automorphism(const CyclicVoltageGraph& cvg,
                               const Automorphism& phi, Int a);

// Three parallel links between two vertices, iota = 3 and voltages 0, 1, 2
// on the darts leaving vertex 0.
CyclicVoltageGraph dipole_extension(const LabelledGraph& lg);

// A cubic, simple, connected extension of a labelled graph meeting the
// label conditions of a ccv quotient, built as in the standard existence
// argument: scale iota, zero voltage on a maximal simple subgraph, half
// index on semi-edges and 1 elsewhere. Dipoles go to dipole_extension.
CyclicVoltageGraph ccv_extension(const LabelledGraph& lg);

}  // namespace ccv

#endif  // CCV_VOLTAGE_HPP_
