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
#include <set>

#include "ccv/analysis.hpp"
#include "ccv/enumeration.hpp"
#include "ccv/families.hpp"
#include "ccv/isomorphism.hpp"

using namespace ccv;

namespace {

LabelledGraph relabel(const LabelledGraph& lg, std::mt19937_64& rng) {
  const DartGraph& g = lg.graph;
  std::vector<int> vp(g.num_vertices()), dp(g.num_darts());
  std::iota(vp.begin(), vp.end(), 0);
  std::iota(dp.begin(), dp.end(), 0);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::shuffle(dp.begin(), dp.end(), rng);
  std::vector<Vertex> beg(g.num_darts());
  std::vector<Dart> inv(g.num_darts());
  std::vector<int> lambda(g.num_darts());
  for (Dart x = 0; x < g.num_darts(); ++x) {
    beg[dp[x]] = vp[g.beg(x)];
    inv[dp[x]] = dp[g.inv(x)];
    lambda[dp[x]] = lg.lambda[x];
  }
  return LabelledGraph(DartGraph(g.num_vertices(), beg, inv), lambda);
}

LabelledGraph dipole(int a, int b) {
  GraphBuilder g(2);
  g.add_link(0, 1);
  return LabelledGraph(g.build(), {a, b});
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("class counts") {
    CHECK(enumerate_quotients(3).size() == 25);
    CHECK(enumerate_quotients(1).size() == 1);
    CHECK(enumerate_quotients(2).size() == 7);
    // Without the one-semi-edge-per-vertex rule.
    CHECK(enumerate_quotients(1, QuotientFilter::kLabelConditions).size() == 2);
    CHECK(enumerate_quotients(3, QuotientFilter::kLabelConditions).size() == 41);
  }

  TEST_CASE("realisable classes are exactly those with a ccv extension") {
    std::set<std::string> strict;
    for (const auto& c : enumerate_quotients(3)) strict.insert(c.canonical_key);
    for (const auto& c : enumerate_quotients(3, QuotientFilter::kLabelConditions)) {
      CAPTURE(c.canonical_key);
      CHECK(has_ccv_extension(c.representative) == (strict.count(c.canonical_key) > 0));
    }
  }

  TEST_CASE("the classes are the 25 templates") {
    std::set<int> seen;
    for (const auto& c : enumerate_quotients(3)) {
      int t = match_template(c.representative);
      CHECK(t > 0);
      seen.insert(t);
    }
    CHECK(seen.size() == 25);
  }

  TEST_CASE("label-preserving isomorphism") {
    LabelledGraph a = quotient_template(13).labelled;
    CHECK(label_preserving_isomorphic(a, a));
    GraphBuilder g(2);
    g.add_link(1, 0);
    LabelledGraph flipped(g.build(), {2, 1});
    CHECK(label_preserving_isomorphic(dipole(1, 2), flipped));
    CHECK_FALSE(label_preserving_isomorphic(dipole(1, 2), dipole(1, 3)));
  }

  TEST_CASE("canonical keys are stable under relabelling") {
    std::mt19937_64 rng(3);
    auto classes = enumerate_quotients(3);
    for (int trial = 0; trial < 100; ++trial) {
      const auto& c = classes[trial % classes.size()];
      LabelledGraph r = relabel(c.representative, rng);
      CHECK(labelled_canonical_key(r) == c.canonical_key);
      CHECK(label_preserving_isomorphic(r, c.representative));
      CHECK(match_template(r) == match_template(c.representative));
    }
  }

  TEST_CASE("induced labellings") {
    DartGraph k4 = named_graph("K4");
    LabelledGraph trivial = induced_labelling(k4, identity_automorphism(k4));
    CHECK(trivial.graph.num_vertices() == 4);
    CHECK(std::all_of(trivial.lambda.begin(), trivial.lambda.end(), [](int l) { return l == 1; }));

    GraphBuilder b(6);
    for (int i = 0; i < 6; ++i) b.add_link(i, (i + 1) % 6);
    DartGraph c6 = b.build();
    Automorphism rot;
    for (int i = 0; i < 6; ++i) rot.vertex_map.push_back((i + 1) % 6);
    for (int i = 0; i < 6; ++i) {
      rot.dart_map.push_back(2 * ((i + 1) % 6));
      rot.dart_map.push_back(2 * ((i + 1) % 6) + 1);
    }
    LabelledGraph q = induced_labelling(c6, rot);
    CHECK(q.graph.num_vertices() == 1);
    CHECK(classify_edge(q.graph, 0) == EdgeKind::kLoop);
    CHECK(q.lambda == std::vector<int>{1, 1});

    // An order-4 element of Aut(K4) acts with one orbit: the quotient is Delta_1.
    int found = 0;
    for (const auto& a : automorphism_group(k4)) {
      std::vector<Automorphism> gens{a};
      if (vertex_orbits(k4, gens).blocks.size() != 1) continue;
      Automorphism p = a;
      int order = 1;
      while (p.dart_map != identity_automorphism(k4).dart_map) {
        p = compose(p, a);
        ++order;
      }
      if (order != 4) continue;
      ++found;
      CHECK(match_template(induced_labelling(k4, a)) == 1);
    }
    CHECK(found > 0);
  }

  TEST_CASE("quotients of family covers are always templates") {
    std::mt19937_64 rng(19);
    auto params = census_parameters(48);
    std::shuffle(params.begin(), params.end(), rng);
    int tested = 0;
    for (const auto& p : params) {
      DartGraph g = expand(make_family(p)).graph;
      if (group_order(g, automorphism_generators(g)) > 5000) continue;
      CAPTURE(family_name(p));
      CyclicQuotientReport rep = cyclic_quotients(g);
      CHECK(rep.indices.count(p.index) == 1);
      for (const auto& q : rep.quotients) CHECK(q.template_index > 0);
      if (++tested == 40) break;
    }
  }
}
