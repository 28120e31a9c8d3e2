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

#include <doctest.h>

#include <numeric>
#include <random>

#include "ccv/enumeration.hpp"
#include "ccv/error.hpp"
#include "ccv/families.hpp"
#include "ccv/isomorphism.hpp"
#include "ccv/voltage.hpp"
#include "oracles.hpp"

using namespace ccv;

namespace {

// Two vertices, two parallel links with labels [1,2] and [2,1]: the cycle
// through both has ratio 1/4.
LabelledGraph unbalanced_dipole() {
  GraphBuilder b(2);
  b.add_link(0, 1);
  b.add_link(0, 1);
  return LabelledGraph(b.build(), {1, 2, 2, 1});
}

}  // namespace

TEST_SUITE("voltage") {
  TEST_CASE("walk ratios multiply and invert") {
    LabelledGraph lg = unbalanced_dipole();
    Walk a{{0}}, b{{3}};
    CHECK(walk_ratio(lg, a) == WalkRatio{1, 2});
    CHECK(walk_ratio(lg, b) == WalkRatio{1, 2});
    Walk ab{{0, 3}};
    CHECK(walk_ratio(lg, ab) == WalkRatio{1, 4});
    Walk back = inverse_walk(lg.graph, ab);
    CHECK(walk_ratio(lg, back) == WalkRatio{4, 1});
  }

  TEST_CASE("extendability") {
    Extension bad = extend(unbalanced_dipole());
    CHECK_FALSE(bad.extendable);
    CHECK_FALSE(bad.witness.darts.empty());
    for (int i = 1; i <= kNumTemplates; ++i) {
      const QuotientTemplate& t = quotient_template(i);
      Extension e = extend(t.labelled);
      REQUIRE(e.extendable);
      Int g = 0;
      for (Int v : e.iota) g = std::gcd(g, v);
      CHECK(g == 1);
      CHECK(e.iota == t.minimal_iota);
    }
    GraphBuilder b(2);
    CHECK_THROWS_AS(extend(LabelledGraph(b.build(), {})), Error);
  }

  TEST_CASE("scaled index functions") {
    const LabelledGraph& lg = quotient_template(6).labelled;
    CHECK(scaled_iota(lg, 0, 2) == std::vector<Int>{2, 6});
    CHECK_THROWS_AS(scaled_iota(lg, 1, 4), Error);
  }

  TEST_CASE("constructor enforces the ratio and inverse-voltage conditions") {
    GraphBuilder b(2);
    b.add_link(0, 1);
    DartGraph g = b.build();
    CHECK_THROWS_AS(CyclicVoltageGraph(LabelledGraph(g, {1, 2}), {1, 1}, {0, 0}), Error);
    CHECK_THROWS_AS(CyclicVoltageGraph(LabelledGraph(g, {1, 1}), {3, 3}, {1, 1}), Error);
    CHECK_NOTHROW(CyclicVoltageGraph(LabelledGraph(g, {1, 1}), {3, 3}, {1, 2}));
    GraphBuilder s(1);
    s.add_semi_edge(0);
    CHECK_THROWS_AS(CyclicVoltageGraph::from_carriers(LabelledGraph(s.build(), {1}), {4}, {1}), Error);
  }

  TEST_CASE("small covers by hand") {
    // One vertex with a loop of voltage 1 and index 5: the 5-cycle.
    GraphBuilder b(1);
    b.add_loop(0);
    auto cvg = CyclicVoltageGraph::from_carriers(LabelledGraph(b.build(), {1, 1}), {5}, {1, 0});
    Cover c = expand(cvg);
    CHECK(c.graph.num_vertices() == 5);
    CHECK(are_isomorphic(c.graph, oracle::circulant(5, {1, -1})));
    CHECK(c.vertex(0, 7) == c.vertex(0, 2));
    CHECK(c.fibre_of_vertex[c.vertex(0, 3)].index == 3);
  }

  TEST_CASE("the two covers of the first figure") {
    CHECK(are_isomorphic(expand(make_family({6, 1, 1, {}})).graph, named_graph("K4")));
    CHECK(are_isomorphic(expand(make_family({6, 2, 1, {}})).graph, named_graph("Q3")));
  }

  TEST_CASE("worked example: the 14-vertex cover") {
    CyclicVoltageGraph cvg = make_family({18, 2, 2, {}});
    Cover c = expand(cvg);
    CHECK(c.graph.num_vertices() == 14);
    CHECK(oracle::directly_simple(c.graph));
    CHECK(oracle::bfs_connected(c.graph));
    CHECK(is_cubic(c.graph));
    CHECK(is_ccv(cvg));
  }

  TEST_CASE("criteria agree with the expanded cover on random instances") {
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 200) {
      auto drawn = oracle::random_cvg(rng, 60);
      if (!drawn) continue;
      ++done;
      const CyclicVoltageGraph& cvg = *drawn;
      Cover c = expand(cvg);
      SpanningTree t = spanning_tree(cvg.graph());
      CHECK(is_connected_cover(t_normalise(cvg, t), t) == oracle::bfs_connected(c.graph));
      CHECK(is_simple_cover(cvg) == oracle::directly_simple(c.graph));
      if (!is_t_normalised(cvg, t)) CHECK_THROWS_AS(is_connected_cover(cvg, t), Error);
    }
  }

  TEST_CASE("faithful n and the Z_n weights") {
    CyclicVoltageGraph cvg = make_family({18, 2, 2, {}});
    Int n = faithful_n(cvg);
    CHECK(n == expand(cvg).n);
    ZnWeights w = zn_weights(cvg);
    CHECK(w.n == n);
    for (Vertex v = 0; v < cvg.graph().num_vertices(); ++v) CHECK(w.vertex[v] == cvg.iota(v));
    for (Dart x = 0; x < cvg.graph().num_darts(); ++x) CHECK(w.dart[x] == cvg.fibre_size(x));
  }

  TEST_CASE("lifting a voltage-compatible base automorphism") {
    // Delta_1: flipping the loop negates its voltage, so it lifts with a = -1.
    CyclicVoltageGraph cvg = make_family({1, 8, 3, {}});
    const DartGraph& g = cvg.graph();
    Automorphism flip = identity_automorphism(g);
    Dart loop = quotient_template(1).slots[0];
    std::swap(flip.dart_map[loop], flip.dart_map[g.inv(loop)]);
    REQUIRE(is_automorphism(g, flip));
    Automorphism lifted = lift_automorphism(cvg, flip, -1);
    CHECK(is_automorphism(expand(cvg).graph, lifted));
    CHECK_THROWS_AS(lift_automorphism(cvg, flip, 1), Error);
  }

  TEST_CASE("constructive extensions of every enumerated class") {
    for (const auto& cls : enumerate_quotients(3)) {
      CyclicVoltageGraph cvg = ccv_extension(cls.representative);
      CHECK(is_ccv(cvg));
      Cover c = expand(cvg);
      CHECK(oracle::directly_simple(c.graph));
      CHECK(oracle::bfs_connected(c.graph));
      CHECK(is_cubic(c.graph));
    }
  }
}
