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

#include "ccv/analysis.hpp"
#include "ccv/error.hpp"
#include "ccv/families.hpp"
#include "ccv/isomorphism.hpp"
#include "oracles.hpp"

using namespace ccv;

TEST_SUITE("analysis") {
  TEST_CASE("girth against an independent computation") {
    for (const char* name : {"K4", "K33", "Q3", "Petersen", "Heawood", "Pappus", "Dodecahedron",
                             "TutteCoxeter", "GP(8,3)", "Prism(7)", "Moebius(6)"}) {
      CAPTURE(name);
      DartGraph g = named_graph(name);
      CHECK(girth(g) == oracle::girth_by_edge_removal(g));
    }
    CHECK(girth(named_graph("TutteCoxeter")) == 8);
    GraphBuilder semi(1);
    semi.add_semi_edge(0);
    CHECK(girth(semi.build()) == 1);
    GraphBuilder theta(2);
    theta.add_link(0, 1);
    theta.add_link(0, 1);
    CHECK(girth(theta.build()) == 2);
    GraphBuilder path(3);
    path.add_link(0, 1);
    path.add_link(1, 2);
    CHECK_THROWS_AS(girth(path.build()), Error);
  }

  TEST_CASE("edge cycle counts against exhaustive cycle listing") {
    for (const char* name : {"K4", "Petersen", "Heawood", "Q3", "GP(8,3)"}) {
      DartGraph g = named_graph(name);
      for (int c = 3; c <= 8; ++c) {
        auto listing = oracle::cycles_per_edge(g, c);
        for (Dart x = 0; x < g.num_darts(); ++x) {
          int a = g.beg(x), b = term(g, x);
          auto it = listing.find({std::min(a, b), std::max(a, b)});
          std::int64_t want = it == listing.end() ? 0 : it->second;
          CAPTURE(name);
          CAPTURE(c);
          CHECK(edge_cycle_count(g, x, c) == want);
        }
      }
    }
    CHECK(edge_cycle_count(named_graph("K4"), 0, 3) == 2);
    CHECK(edge_cycle_count(named_graph("Heawood"), 0, 6) == 8);
    CHECK(edge_cycle_count(named_graph("Petersen"), 0, 3) == 0);
    CHECK_THROWS_AS(edge_cycle_count(named_graph("K4"), 0, 13), Error);
  }

  TEST_CASE("signatures") {
    CHECK(c_signature(named_graph("K4"), 0, 3) == std::array<std::int64_t, 3>{2, 2, 2});
    CHECK(c_signature(named_graph("Heawood"), 0, 4) == std::array<std::int64_t, 3>{0, 0, 0});
    SignatureReport p = analyze(named_graph("Petersen"), 5);
    CHECK(p.cycle_regular);
    GraphBuilder b(2);
    b.add_link(0, 1);
    CHECK_THROWS_AS(c_signature(b.build(), 0, 3), Error);
  }

  TEST_CASE("transitivity flags") {
    CHECK(is_vertex_transitive(named_graph("K33")));
    CHECK(is_arc_transitive(named_graph("Petersen")));
    CHECK(is_arc_transitive(named_graph("TutteCoxeter")));
    CHECK(is_vertex_transitive(named_graph("Prism(3)")));
    CHECK_FALSE(is_arc_transitive(named_graph("Prism(3)")));
    CHECK_FALSE(is_vertex_transitive(expand(make_family({12, 6, 4, {}})).graph));
    CHECK_THROWS_AS(is_vertex_transitive(named_graph("Prism(33)")), Error);
    for (int m = 2; m <= 8; m += 2) {
      FamilyParams p{20, m, 1, {}};
      if (!admissible(p)) continue;
      CAPTURE(family_name(p));
      CHECK_FALSE(is_vertex_transitive(expand(make_family(p)).graph));
    }
  }

  TEST_CASE("full report") {
    SignatureReport r = analyze(named_graph("TutteCoxeter"));
    CHECK(r.girth == 8);
    CHECK(r.c == 8);
    CHECK(r.aut_order == 1440);
    CHECK(r.vertex_transitive);
    CHECK(r.arc_transitive);
    CHECK(r.cycle_regular);
  }

  TEST_CASE("census graphs: invariants from the girth-regular and arc-transitive lists") {
    std::vector<DartGraph> small{named_graph("K4"), named_graph("Petersen"), named_graph("Dodecahedron")};
    std::vector<DartGraph> arc{named_graph("K4"), named_graph("K33"), named_graph("Q3"),
                               named_graph("Petersen"), named_graph("Dodecahedron")};
    auto known = [](const DartGraph& g, const std::vector<DartGraph>& list) {
      for (const auto& h : list)
        if (are_isomorphic(g, h)) return true;
      return false;
    };
    std::set<std::string> seen;
    for (const auto& p : census_parameters(30)) {
      DartGraph g = expand(make_family(p)).graph;
      if (!seen.insert(canonical_key(g)).second) continue;
      CAPTURE(family_name(p));
      SignatureReport r = analyze(g);
      if (r.vertex_transitive)
        for (int c = 3; c <= 10; ++c) CHECK(analyze(g, c).cycle_regular);
      if (r.cycle_regular && r.girth <= 5 && r.signatures[0] != std::array<std::int64_t, 3>{0, 1, 1}) {
        const int n = g.num_vertices();
        bool prism = n % 2 == 0 && n >= 6 && are_isomorphic(g, named_graph("Prism(" + std::to_string(n / 2) + ")"));
        bool moebius = n % 2 == 0 && n >= 6 && are_isomorphic(g, named_graph("Moebius(" + std::to_string(n / 2) + ")"));
        CHECK((known(g, small) || prism || moebius));
      }
      if (r.arc_transitive && r.girth < 6) CHECK(known(g, arc));
    }
  }

  TEST_CASE("the 5-cycles in the Gamma_21 covers") {
    for (Int m = 2; m <= 10; m += 2)
      for (Int r = 0; r < 2 * m; ++r) {
        FamilyParams p{21, m, r, {}};
        if (!admissible(p)) continue;
        CAPTURE(family_name(p));
        DartGraph g = expand(make_family(p)).graph;
        CHECK(girth(g) <= 5);
        std::int64_t through = 0;
        for (Dart x : g.darts_at(0)) through += edge_cycle_count(g, x, 5);
        CHECK(through > 0);
      }
  }

  TEST_CASE("preimages of the four shapes") {
    std::set<int> shapes_seen;
    for (int i = 1; i <= kNumTemplates; ++i) {
      for (const ShapeEmbedding& s : find_shapes(quotient_template(i).labelled)) {
        shapes_seen.insert(static_cast<int>(s.shape));
        for (const auto& p : census_parameters(40)) {
          if (p.index != i) continue;
          PreimageReport rep = preimage_structure(make_family(p), s);
          CAPTURE(family_name(p));
          CHECK(rep.as_expected);
        }
      }
    }
    CHECK(shapes_seen == std::set<int>{1, 2, 3, 4});
    ShapeEmbedding bogus{Shape::kS4, {0}, {0}};
    CHECK_THROWS_AS(preimage_structure(make_family({1, 4, 1, {}}), bogus), Error);
  }

  TEST_CASE("census on small orders") {
    auto records = census(20, 2);
    CHECK_FALSE(records.empty());
    bool petersen_sporadic = false;
    for (const auto& r : records) {
      CAPTURE(family_name(r.params));
      CHECK(r.agrees());
      if (r.params.index == 2 && r.params.m == 10 && r.params.r == 2 && r.params.s == 1) {
        petersen_sporadic = true;
        CHECK(r.vertex_transitive);
        CHECK(r.clause == std::optional<std::string>("2"));
      }
      if (r.params.index == 22 && r.params.m == 6 && r.params.r == 2 && r.params.s == 1)
        CHECK(r.vertex_transitive);
      if (r.params.index == 12 && r.params.m == 6 && r.params.r == 4) {
        CHECK_FALSE(r.vertex_transitive);
        CHECK_FALSE(r.clause.has_value());
      }
    }
    CHECK(petersen_sporadic);
    CHECK_THROWS_AS(census(65), Error);
  }
}
