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

#include <algorithm>
#include <numeric>
#include <random>

#include "ccv/families.hpp"
#include "ccv/isomorphism.hpp"
#include "oracles.hpp"

using namespace ccv;

namespace {

// Same graph with vertices and darts renumbered at random.
DartGraph shuffle(const DartGraph& g, std::mt19937_64& rng) {
  std::vector<int> vp(g.num_vertices()), dp(g.num_darts());
  std::iota(vp.begin(), vp.end(), 0);
  std::iota(dp.begin(), dp.end(), 0);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::shuffle(dp.begin(), dp.end(), rng);
  std::vector<Vertex> beg(g.num_darts());
  std::vector<Dart> inv(g.num_darts());
  for (Dart x = 0; x < g.num_darts(); ++x) {
    beg[dp[x]] = vp[g.beg(x)];
    inv[dp[x]] = dp[g.inv(x)];
  }
  return DartGraph(g.num_vertices(), beg, inv);
}

}  // namespace

TEST_SUITE("isomorphism") {
  TEST_CASE("named graphs match independent constructions") {
    struct Case {
      const char* name;
      DartGraph oracle;
    };
    std::vector<Case> cases{{"Petersen", oracle::kneser_petersen()},
                            {"Heawood", oracle::fano_heawood()},
                            {"TutteCoxeter", oracle::gq22_tutte_coxeter()}};
    for (const auto& c : cases) {
      CAPTURE(c.name);
      DartGraph g = named_graph(c.name);
      auto iso = find_isomorphism(g, c.oracle);
      REQUIRE(iso.has_value());
      CHECK(is_isomorphism(g, c.oracle, *iso));
      CHECK(canonical_key(g) == canonical_key(c.oracle));
    }
  }

  TEST_CASE("group orders agree with brute-force counting") {
    for (const char* name : {"K4", "K33", "Q3", "Petersen", "Heawood", "Prism(5)", "Moebius(4)", "GP(8,3)"}) {
      CAPTURE(name);
      DartGraph g = named_graph(name);
      std::uint64_t brute = oracle::count_automorphisms(g);
      CHECK(automorphism_group(g).size() == brute);
      CHECK(group_order(g, automorphism_generators(g)) == brute);
    }
  }

  TEST_CASE("every listed element is an automorphism and the list has no repeats") {
    DartGraph g = named_graph("Petersen");
    auto group = automorphism_group(g);
    std::set<std::vector<int>> seen;
    for (const auto& a : group) {
      CHECK(is_automorphism(g, a));
      seen.insert(a.dart_map);
    }
    CHECK(seen.size() == group.size());
  }

  TEST_CASE("multigraph automorphisms include parallel-edge swaps") {
    // A dipole with three parallel edges: S_3 on the edges times the swap of ends.
    GraphBuilder b(2);
    for (int k = 0; k < 3; ++k) b.add_link(0, 1);
    DartGraph theta = b.build();
    CHECK(automorphism_group(theta).size() == 12);
    // One vertex with a loop and a semi-edge: flipping the loop.
    GraphBuilder c(1);
    c.add_loop(0);
    c.add_semi_edge(0);
    CHECK(automorphism_group(c.build()).size() == 2);
  }

  TEST_CASE("canonical key is invariant under relabelling") {
    std::mt19937_64 rng(7);
    for (const char* name : {"Petersen", "Pappus", "GP(10,3)", "Dodecahedron"}) {
      DartGraph g = named_graph(name);
      std::string key = canonical_key(g);
      for (int trial = 0; trial < 10; ++trial) {
        DartGraph h = shuffle(g, rng);
        CHECK(canonical_key(h) == key);
        auto iso = find_isomorphism(g, h);
        REQUIRE(iso.has_value());
        CHECK(is_isomorphism(g, h, *iso));
      }
    }
  }

  TEST_CASE("non-isomorphic graphs are separated") {
    CHECK_FALSE(are_isomorphic(named_graph("Petersen"), named_graph("Prism(5)")));
    CHECK_FALSE(are_isomorphic(named_graph("GP(8,3)"), named_graph("Moebius(8)")));
    CHECK_FALSE(are_isomorphic(named_graph("Dodecahedron"), named_graph("GP(10,3)")));
    CHECK(are_isomorphic(named_graph("Prism(4)"), named_graph("Q3")));
  }

  TEST_CASE("dart colours restrict isomorphisms") {
    DartGraph g = named_graph("K4");
    std::vector<int> colours(g.num_darts(), 0);
    colours[0] = colours[g.inv(0)] = 1;
    // Stabiliser of an edge in S_4: order 4.
    CHECK(automorphism_group(g, colours).size() == 4);
  }
}
