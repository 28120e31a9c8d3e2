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

#ifndef CCV_ENUMERATION_HPP_
#define CCV_ENUMERATION_HPP_

#include <set>
#include <string>
#include <vector>

#include "ccv/dartgraph.hpp"
#include "ccv/voltage.hpp"

namespace ccv {

struct LabelledIsoClass {
  LabelledGraph representative;  // relabelled into canonical order
  std::string canonical_key;
};

// Lexicographically least edge-list encoding over all vertex orders.
// Throws Error above 8 vertices.
std::string labelled_canonical_key(const LabelledGraph& lg);
// The graph rebuilt from its canonical encoding.
LabelledGraph canonical_relabelling(const LabelledGraph& lg);

bool label_preserving_isomorphic(const LabelledGraph& a, const LabelledGraph& b);

enum class QuotientFilter {
  // Connected, extendable, label sum 3 everywhere and the label conditions
  // on pairs, parallel darts and semi-edges.
  kLabelConditions,
  // Additionally at most one semi-edge per vertex: two semi-edges at a
  // vertex both need voltage iota/2 and are parallel, so no extension is
  // simple.
  kCcvRealisable,
};

// All classes on 1..max_vertices vertices, sorted by vertex count then key.
std::vector<LabelledIsoClass> enumerate_quotients(
    int max_vertices, QuotientFilter filter = QuotientFilter::kCcvRealisable);

// True iff some extension with iota = c * minimal (c <= max_scale) and
// reduced T-normalised voltages is a ccv-graph. Exhaustive; small inputs.
bool has_ccv_extension(const LabelledGraph& lg, int max_scale = 6);

// Index 1..25 of the matching template, 0 when none matches.
int match_template(const LabelledGraph& lg);

// Quotient by <a>, with lambda(x^G) the number of darts of x^G leaving a
// fixed vertex of (beg x)^G. Throws Error if a is not an automorphism.
LabelledGraph induced_labelling(const DartGraph& g, const Automorphism& a);

struct CyclicQuotient {
  Automorphism generator;
  int order = 1;
  LabelledGraph quotient;
  int template_index = 0;
};

struct CyclicQuotientReport {
  std::vector<CyclicQuotient> quotients;  // one per cyclic subgroup
  std::set<int> indices;
  std::size_t aut_order = 0;
};

// Every cyclic subgroup of Aut(g) with at most max_orbits vertex orbits and
// the template its quotient matches.
CyclicQuotientReport cyclic_quotients(const DartGraph& g, int max_orbits = 3);

}  // namespace ccv

#endif  // CCV_ENUMERATION_HPP_
