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

#ifndef CCV_ISOMORPHISM_HPP_
#define CCV_ISOMORPHISM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccv/dartgraph.hpp"

namespace ccv {

struct SearchOptions {
  int max_vertices = 64;
  // Closure of the automorphism group stops with an Error beyond this size.
  std::size_t max_group_order = 2000000;
};

// Canonical labelling by individualisation and colour refinement. Darts may
// carry integer colours (empty span: all equal) which isomorphisms must
// preserve; this is how label-preserving isomorphism is decided.
struct CanonicalForm {
  std::vector<Vertex> position;  // vertex -> canonical position
  std::vector<std::int64_t> key;  // equal keys iff isomorphic
};

CanonicalForm canonical_form(const DartGraph& g,
                             std::span<const int> dart_colours = {},
                             const SearchOptions& options = {});

// Printable form of canonical_form(g).key.
std::string canonical_key(const DartGraph& g, const SearchOptions& options = {});

// A generating set of the (colour-preserving) automorphism group.
std::vector<Automorphism> automorphism_generators(
    const DartGraph& g, std::span<const int> dart_colours = {},
    const SearchOptions& options = {});

// Every automorphism, identity first, then in discovery order.
std::vector<Automorphism> automorphism_group(const DartGraph& g,
                                             const SearchOptions& options = {});
std::vector<Automorphism> automorphism_group(const DartGraph& g,
                                             std::span<const int> dart_colours,
                                             const SearchOptions& options = {});

// All elements of the group generated by gens (vertex and dart maps).
std::vector<Automorphism> group_closure(const DartGraph& g,
                                        std::span<const Automorphism> gens,
                                        std::size_t max_order = 2000000);

// Order of the group generated by gens, by Schreier-Sims on vertices and
// darts; does not list the elements.
std::uint64_t group_order(const DartGraph& g, std::span<const Automorphism> gens);

std::optional<Automorphism> find_isomorphism(const DartGraph& a,
                                             const DartGraph& b,
                                             const SearchOptions& options = {});
std::optional<Automorphism> find_isomorphism(const DartGraph& a,
                                             std::span<const int> colours_a,
                                             const DartGraph& b,
                                             std::span<const int> colours_b,
                                             const SearchOptions& options = {});
bool are_isomorphic(const DartGraph& a, const DartGraph& b,
                    const SearchOptions& options = {});

}  // namespace ccv

#endif  // CCV_ISOMORPHISM_HPP_
