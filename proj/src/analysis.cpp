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

#include "ccv/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <thread>

#include "ccv/error.hpp"
#include "ccv/isomorphism.hpp"

namespace ccv {

namespace {

void require_size(const DartGraph& g) {
  if (g.num_vertices() > kMaxAnalysisVertices)
    throw Error("graph has more than " + std::to_string(kMaxAnalysisVertices) + " vertices");
}

void require_simple(const DartGraph& g) {
  if (!is_simple(g)) throw Error("graph is not simple");
}

// Simple paths from v back to target of the given remaining length.
std::int64_t count_paths(const DartGraph& g, Vertex v, Vertex target, int remaining,
                         std::vector<char>& on_path) {
  if (remaining == 0) return v == target ? 1 : 0;
  std::int64_t total = 0;
  for (Dart x : g.darts_at(v)) {
    Vertex w = term(g, x);
    if (w == target) {
      if (remaining == 1) ++total;
      continue;
    }
    if (on_path[w] || remaining == 1) continue;
    on_path[w] = 1;
    total += count_paths(g, w, target, remaining - 1, on_path);
    on_path[w] = 0;
  }
  return total;
}

ComponentType classify_component(const std::vector<int>& degree,
                                 const std::vector<std::pair<int, int>>& edges) {
  const size_t n = degree.size();
  auto all_two = std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
  if (n == 3 && edges.size() == 3 && all_two) return ComponentType::kTriangle;
  if (n == 4 && edges.size() == 4 && all_two) return ComponentType::kSquare;
  if (n == 5 && edges.size() == 6) {
    std::vector<int> big;
    for (size_t i = 0; i < n; ++i) {
      if (degree[i] == 3) big.push_back(static_cast<int>(i));
      else if (degree[i] != 2) return ComponentType::kOther;
    }
    if (big.size() != 2) return ComponentType::kOther;
    for (auto [a, b] : edges)
      if ((a == big[0] && b == big[1]) || (a == big[1] && b == big[0])) return ComponentType::kOther;
    return ComponentType::kK32;
  }
  return ComponentType::kOther;
}

ComponentType expected_component(Shape s) {
  switch (s) {
    case Shape::kS1: return ComponentType::kTriangle;
    case Shape::kS2: return ComponentType::kSquare;
    default: return ComponentType::kK32;
  }
}

bool is_link_with_labels(const LabelledGraph& lg, Dart x, int at_beg, int at_term) {
  return classify_edge(lg.graph, x) == EdgeKind::kLink && lg.lambda[x] == at_beg &&
         lg.lambda[lg.graph.inv(x)] == at_term;
}

std::optional<CyclicVoltageGraph> try_instantiate(int index, Int m, std::optional<Int> r,
                                                  std::optional<Int> s) {
  try {
    CyclicVoltageGraph cvg = instantiate({index, m, r, s});
    if (is_ccv(cvg)) return cvg;
  } catch (const Error&) {
  }
  return std::nullopt;
}

std::vector<Int> family_ms_of_order(int index, Int order) {
  const QuotientTemplate& t = quotient_template(index);
  Int base = t.minimal_iota[t.distinguished_vertex];
  std::vector<Int> out;
  for (Int m = base; cover_order(index, m) <= order; m += base)
    if (cover_order(index, m) == order) out.push_back(m);
  return out;
}

// Canonical keys of every clause member on the given number of vertices.
std::vector<std::pair<std::string, std::string>> clause_members(Int order) {
  std::vector<std::pair<std::string, std::string>> out;
  auto add = [&](const char* clause, int index, Int m, std::optional<Int> r, std::optional<Int> s) {
    if (auto cvg = try_instantiate(index, m, r, s))
      out.emplace_back(clause, canonical_key(expand(*cvg).graph));
  };
  for (Int m : family_ms_of_order(1, order)) {
    if (m % 2 != 0 || m < 4) continue;
    for (Int r : {1, 2})
      if (std::gcd(m / 2, r) == 1) add("1", 1, m, r, std::nullopt);
  }
  for (Int m : family_ms_of_order(2, order)) {
    if (m < 3) continue;
    for (Int r = 0; r < m; ++r) {
      Int sq = r * r % m;
      if (sq == 1 % m || sq == m - 1 || (m == 10 && r == 2)) add("2", 2, m, r, 1);
    }
  }
  for (Int m : family_ms_of_order(4, order)) {
    if (m < 3) continue;
    for (Int r = 0; r < m; ++r)
      for (Int s = 0; s < m; ++s)
        if (r != s && std::gcd(m, std::gcd(r, s)) == 1) add("3", 4, m, r, s);
  }
  for (Int m : family_ms_of_order(22, order))
    if (m >= 4 && m % 2 == 0 && (m / 2) % 2 == 1) add("4", 22, m, 2, 1);
  for (Int m : family_ms_of_order(23, order)) {
    if (m % 2 != 0) continue;
    Int h = m / 2;
    std::optional<Int> r;
    if (h % 4 == 1) r = (h + 3) / 2;
    else if (h % 4 == 3) r = (3 * h + 3) / 2;
    if (r) add("5", 23, m, *r % m, 1);
    if (m == 4) add("5", 23, m, 0, 1);
  }
  if (order == 30) out.emplace_back("tutte-coxeter", canonical_key(named_graph("TutteCoxeter")));
  return out;
}

}  // namespace

int girth(const DartGraph& g) {
  for (Dart x = 0; x < g.num_darts(); ++x) {
    EdgeKind k = classify_edge(g, x);
    if (k == EdgeKind::kSemiEdge || k == EdgeKind::kLoop) return 1;
  }
  for (Dart x = 0; x < g.num_darts(); ++x)
    for (Dart y : g.darts_at(g.beg(x)))
      if (carrier(g, y) != carrier(g, x) && term(g, y) == term(g, x)) return 2;
  int best = 0;
  const int n = g.num_vertices();
  for (Vertex root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1);
    std::vector<Dart> via(n, -1);
    std::queue<Vertex> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Dart x : g.darts_at(v)) {
        if (via[v] >= 0 && x == g.inv(via[v])) continue;
        Vertex w = term(g, x);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          via[w] = x;
          q.push(w);
        } else {
          int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  if (best == 0) throw Error("graph is a forest");
  return best;
}

std::int64_t edge_cycle_count(const DartGraph& g, Dart e, int c) {
  require_simple(g);
  if (e < 0 || e >= g.num_darts()) throw Error("dart out of range");
  if (c < 1 || c > kMaxCycleLength)
    throw Error("cycle length must be in 1.." + std::to_string(kMaxCycleLength));
  if (c < 3) return 0;
  Vertex a = g.beg(e);
  Vertex b = term(g, e);
  std::vector<char> on_path(g.num_vertices(), 0);
  on_path[a] = on_path[b] = 1;
  // Paths b -> a of length c-1 that avoid the edge e itself.
  std::int64_t total = 0;
  for (Dart x : g.darts_at(b)) {
    if (x == g.inv(e)) continue;
    Vertex w = term(g, x);
    if (w == a) continue;
    on_path[w] = 1;
    total += count_paths(g, w, a, c - 2, on_path);
    on_path[w] = 0;
  }
  return total;
}

std::array<std::int64_t, 3> c_signature(const DartGraph& g, Vertex v, int c) {
  if (v < 0 || v >= g.num_vertices()) throw Error("vertex out of range");
  auto darts = g.darts_at(v);
  if (darts.size() != 3) throw Error("vertex " + std::to_string(v) + " is not of valence 3");
  std::array<std::int64_t, 3> out{};
  for (int k = 0; k < 3; ++k) out[k] = edge_cycle_count(g, darts[k], c);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_vertex_transitive(const DartGraph& g) {
  require_size(g);
  auto gens = automorphism_generators(g);
  return vertex_orbits(g, gens).blocks.size() <= 1;
}

bool is_arc_transitive(const DartGraph& g) {
  require_size(g);
  auto gens = automorphism_generators(g);
  return dart_orbits(g, gens).size() <= 1;
}

SignatureReport analyze(const DartGraph& g, int c) {
  require_size(g);
  require_simple(g);
  if (!is_cubic(g)) throw Error("graph is not cubic");
  SignatureReport r;
  r.girth = girth(g);
  r.c = c == 0 ? r.girth : c;
  for (Vertex v = 0; v < g.num_vertices(); ++v) r.signatures.push_back(c_signature(g, v, r.c));
  r.cycle_regular = std::all_of(r.signatures.begin(), r.signatures.end(),
                                [&](const auto& s) { return s == r.signatures.front(); });
  auto gens = automorphism_generators(g);
  r.vertex_transitive = vertex_orbits(g, gens).blocks.size() <= 1;
  r.arc_transitive = dart_orbits(g, gens).size() <= 1;
  r.aut_order = group_order(g, gens);
  return r;
}

const char* to_string(ComponentType t) {
  switch (t) {
    case ComponentType::kTriangle: return "3-cycle";
    case ComponentType::kSquare: return "4-cycle";
    case ComponentType::kK32: return "K32";
    case ComponentType::kOther: return "other";
  }
  return "?";
}

std::vector<ShapeEmbedding> find_shapes(const LabelledGraph& lg) {
  const DartGraph& g = lg.graph;
  std::vector<ShapeEmbedding> out;
  // S1: [1,2]-edge whose label-1 end carries a semi-edge.
  for (Dart x = 0; x < g.num_darts(); ++x) {
    if (!is_link_with_labels(lg, x, 1, 2)) continue;
    for (Dart y : g.darts_at(g.beg(x)))
      if (classify_edge(g, y) == EdgeKind::kSemiEdge)
        out.push_back({Shape::kS1, {g.beg(x), term(g, x)}, {x, g.inv(x), y}});
  }
  // S2 and S3: two [1,k]-edges sharing their label-1 end.
  for (int k : {2, 3}) {
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      auto at = g.darts_at(u);
      for (size_t i = 0; i < at.size(); ++i)
        for (size_t j = i + 1; j < at.size(); ++j) {
          Dart x = at[i], y = at[j];
          if (!is_link_with_labels(lg, x, 1, k) || !is_link_with_labels(lg, y, 1, k)) continue;
          if (term(g, x) == term(g, y)) continue;
          out.push_back({k == 2 ? Shape::kS2 : Shape::kS3,
                         {u, term(g, x), term(g, y)},
                         {x, g.inv(x), y, g.inv(y)}});
        }
    }
  }
  // S4: a [3,2]-edge.
  for (Dart x = 0; x < g.num_darts(); ++x)
    if (is_link_with_labels(lg, x, 3, 2))
      out.push_back({Shape::kS4, {g.beg(x), term(g, x)}, {x, g.inv(x)}});
  return out;
}

PreimageReport preimage_structure(const CyclicVoltageGraph& cvg, const ShapeEmbedding& sub) {
  auto shapes = find_shapes(cvg.labelled());
  auto same = [&](const ShapeEmbedding& e) {
    auto a = e.darts, b = sub.darts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return e.shape == sub.shape && a == b;
  };
  if (std::none_of(shapes.begin(), shapes.end(), same))
    throw Error("subgraph is not one of the shapes S1..S4");

  Cover cover = expand(cvg);
  const DartGraph& h = cover.graph;
  std::vector<char> in_vertex(cvg.graph().num_vertices(), 0);
  std::vector<char> in_dart(cvg.graph().num_darts(), 0);
  for (Vertex v : sub.vertices) in_vertex[v] = 1;
  for (Dart x : sub.darts) in_dart[x] = 1;

  std::vector<int> comp(h.num_vertices(), -1);
  PreimageReport report;
  report.shape = sub.shape;
  for (Vertex start = 0; start < h.num_vertices(); ++start) {
    if (!in_vertex[cover.fibre_of_vertex[start].base] || comp[start] >= 0) continue;
    std::vector<Vertex> members{start};
    comp[start] = start;
    for (size_t k = 0; k < members.size(); ++k)
      for (Dart x : h.darts_at(members[k])) {
        if (!in_dart[cover.fibre_of_dart[x].base]) continue;
        Vertex w = term(h, x);
        if (comp[w] < 0) {
          comp[w] = start;
          members.push_back(w);
        }
      }
    std::map<Vertex, int> local;
    for (Vertex v : members) local.emplace(v, static_cast<int>(local.size()));
    std::vector<int> degree(members.size(), 0);
    std::vector<std::pair<int, int>> edges;
    for (Vertex v : members)
      for (Dart x : h.darts_at(v)) {
        if (!in_dart[cover.fibre_of_dart[x].base]) continue;
        ++degree[local[v]];
        if (carrier(h, x) == x) edges.emplace_back(local[v], local[term(h, x)]);
      }
    report.components.push_back(classify_component(degree, edges));
  }
  ComponentType want = expected_component(sub.shape);
  report.as_expected = !report.components.empty() &&
                       std::all_of(report.components.begin(), report.components.end(),
                                   [&](ComponentType t) { return t == want; });
  return report;
}

std::vector<FamilyParams> census_parameters(int max_order) {
  if (max_order < 1 || max_order > kMaxCensusOrder)
    throw Error("census order bound must be in 1.." + std::to_string(kMaxCensusOrder));
  std::vector<FamilyParams> out;
  for (int i = 1; i <= kNumTemplates; ++i) {
    const QuotientTemplate& t = quotient_template(i);
    Int base = t.minimal_iota[t.distinguished_vertex];
    std::vector<Int> ms;
    if (t.forced_m) {
      ms.push_back(*t.forced_m);
    } else {
      for (Int m = base; cover_order(i, m) <= max_order; m += base) ms.push_back(m);
    }
    for (Int m : ms) {
      if (cover_order(i, m) > max_order) continue;
      std::vector<Int> iota = scaled_iota(t.labelled, t.distinguished_vertex, m);
      std::vector<Int> bound;
      for (Dart x : t.slots) bound.push_back(t.labelled.lambda[x] * iota[t.labelled.graph.beg(x)]);
      if (t.arity() == 0) {
        FamilyParams p{i, m, std::nullopt, std::nullopt};
        if (admissible(p)) out.push_back(p);
      } else if (t.arity() == 1) {
        for (Int r = 0; r < bound[0]; ++r) {
          FamilyParams p{i, m, r, std::nullopt};
          if (admissible(p)) out.push_back(p);
        }
      } else {
        for (Int r = 0; r < bound[0]; ++r)
          for (Int s = 0; s < bound[1]; ++s) {
            FamilyParams p{i, m, r, s};
            if (admissible(p)) out.push_back(p);
          }
      }
    }
  }
  return out;
}

std::optional<std::string> classification_clause(const DartGraph& g) {
  static std::mutex mu;
  static std::map<Int, std::vector<std::pair<std::string, std::string>>> cache;
  const Int order = g.num_vertices();
  const std::vector<std::pair<std::string, std::string>>* members;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, clause_members(order)).first;
    members = &it->second;
  }
  std::string key = canonical_key(g);
  for (const auto& [clause, k] : *members)
    if (k == key) return clause;
  return std::nullopt;
}

std::vector<CensusRecord> census(int max_order, unsigned threads) {
  std::vector<FamilyParams> params = census_parameters(max_order);
  std::vector<CensusRecord> records(params.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<size_t> next{0};
  std::mutex err_mu;
  std::string first_error;
  auto work = [&] {
    for (size_t k = next++; k < params.size(); k = next++) {
      try {
        CensusRecord& rec = records[k];
        rec.params = params[k];
        DartGraph g = expand(make_family(params[k])).graph;
        rec.order = g.num_vertices();
        auto gens = automorphism_generators(g);
        rec.vertex_transitive = vertex_orbits(g, gens).blocks.size() <= 1;
        rec.aut_order = group_order(g, gens);
        rec.girth = girth(g);
        rec.canonical_key = canonical_key(g);
        rec.clause = classification_clause(g);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (first_error.empty()) first_error = family_name(params[k]) + ": " + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (!first_error.empty()) throw Error(first_error);
  return records;
}

}  // namespace ccv
