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

#include <random>

#include "ccv/analysis.hpp"
#include "ccv/error.hpp"
#include "ccv/families.hpp"
#include "ccv/io.hpp"
#include "ccv/isomorphism.hpp"
#include "oracles.hpp"

using namespace ccv;

TEST_SUITE("families") {
  TEST_CASE("admissibility predicates") {
    CHECK(admissible({1, 4, 1, {}}));
    CHECK(admissible({4, 3, 1, 2}));
    CHECK_FALSE(admissible({12, 6, 3, {}}));
    Admissibility a = check_admissible({1, 5, 1, {}});
    CHECK_FALSE(a.ok);
    CHECK(a.violation.find("m even") != std::string::npos);
    CHECK_FALSE(admissible({4, 3, 1, {}}));        // s missing
    CHECK_FALSE(admissible({6, 1, 1, 1}));         // s not allowed
    CHECK_FALSE(admissible({7, 4, {}, {}}));       // sporadic m is fixed
    CHECK(admissible({7, 2, {}, {}}));
    CHECK_FALSE(admissible({26, 2, {}, {}}));
    CHECK_THROWS_AS(make_family({1, 5, 1, {}}), Error);
  }

  TEST_CASE("every template has the minimal index at its distinguished vertex") {
    for (int i = 1; i <= kNumTemplates; ++i) {
      const QuotientTemplate& t = quotient_template(i);
      CAPTURE(i);
      Int lo = *std::min_element(t.minimal_iota.begin(), t.minimal_iota.end());
      CHECK(t.minimal_iota[t.distinguished_vertex] == lo);
      CHECK(t.labelled.graph.num_vertices() <= 3);
      CHECK(is_cubic_cover(template_skeleton(i)));
    }
  }

  TEST_CASE("sporadic families") {
    for (auto [i, m] : std::vector<std::pair<int, Int>>{{7, 2}, {9, 4}, {10, 2}, {11, 4}, {15, 6}, {16, 1}}) {
      CAPTURE(i);
      CHECK(is_ccv(make_family({i, m, {}, {}})));
    }
  }

  TEST_CASE("admissible points give ccv-graphs") {
    for (const FamilyParams& p : census_parameters(36)) {
      CAPTURE(family_name(p));
      CyclicVoltageGraph cvg = make_family(p);
      CHECK(is_ccv(cvg));
      Cover c = expand(cvg);
      CHECK(c.graph.num_vertices() == cover_order(p.index, p.m));
      CHECK(oracle::directly_simple(c.graph));
      CHECK(oracle::bfs_connected(c.graph));
      CHECK(is_cubic(c.graph));
    }
  }

  TEST_CASE("larger admissible points, sampled up to order 200") {
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 150) {
      int i = std::uniform_int_distribution<int>(1, kNumTemplates)(rng);
      const QuotientTemplate& t = quotient_template(i);
      if (t.forced_m) continue;
      Int base = t.minimal_iota[t.distinguished_vertex];
      Int m = base * std::uniform_int_distribution<Int>(1, 40)(rng);
      if (cover_order(i, m) > 200) continue;
      FamilyParams p{i, m, std::nullopt, std::nullopt};
      if (t.arity() >= 1) p.r = std::uniform_int_distribution<Int>(0, 3 * m)(rng);
      if (t.arity() == 2) p.s = std::uniform_int_distribution<Int>(0, 3 * m)(rng);
      if (!admissible(p)) continue;
      ++done;
      CAPTURE(family_name(p));
      Cover c = expand(make_family(p));
      CHECK(oracle::directly_simple(c.graph));
      CHECK(oracle::bfs_connected(c.graph));
      CHECK(is_cubic(c.graph));
    }
  }

  TEST_CASE("generalised Petersen graphs") {
    for (Int m = 3; m <= 16; ++m)
      for (Int r = 1; r < m; ++r) {
        FamilyParams p{2, m, r, 1};
        if (!admissible(p) || 2 * r == m) continue;
        CAPTURE(family_name(p));
        // GP(m,r) and GP(m,m-r) coincide.
        int k = static_cast<int>(std::min(r, m - r));
        CHECK(are_isomorphic(expand(make_family(p)).graph, generalized_petersen(static_cast<int>(m), k)));
      }
  }

  TEST_CASE("circulants") {
    for (Int m = 4; m <= 20; m += 2)
      for (Int r = 1; r < m; ++r) {
        FamilyParams p{1, m, r, {}};
        if (!admissible(p)) continue;
        CAPTURE(family_name(p));
        DartGraph cay = oracle::circulant(static_cast<int>(m), {static_cast<int>(r), -static_cast<int>(r),
                                                               static_cast<int>(m / 2)});
        CHECK(are_isomorphic(expand(make_family(p)).graph, cay));
      }
  }

  TEST_CASE("named graphs") {
    CHECK(named_graph("Petersen").num_vertices() == 10);
    CHECK(named_graph("Heawood").num_vertices() == 14);
    CHECK(named_graph("GP(10,2)").num_vertices() == 20);
    CHECK(are_isomorphic(named_graph("GP(10,2)"), named_graph("Dodecahedron")));
    CHECK(oracle::girth_by_edge_removal(named_graph("Petersen")) == 5);
    CHECK(oracle::girth_by_edge_removal(named_graph("Heawood")) == 6);
    CHECK(is_cubic(named_graph("Moebius(5)")));
    CHECK_THROWS_AS(named_graph("GP(4,2)"), Error);
    CHECK_THROWS_AS(named_graph("nonsense"), Error);
  }

  TEST_CASE("shipped template files match the templates") {
    for (int i = 1; i <= kNumTemplates; ++i) {
      char name[64];
      std::snprintf(name, sizeof name, "%s/templates/delta_%02d.cvg", CCV_SOURCE_DIR, i);
      CAPTURE(name);
      CHECK(read_file(name) == write_cvg(template_skeleton(i)));
    }
  }
}
