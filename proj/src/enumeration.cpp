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

#include "ccv/enumeration.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ccv/error.hpp"
#include "ccv/families.hpp"
#include "ccv/isomorphism.hpp"

namespace ccv {

namespace {

// (kind, a, b, label at a, label at b); kind 0 semi-edge, 1 loop, 2 link.
using EdgeTuple = std::array<int, 5>;

std::vector<EdgeTuple> encode(const LabelledGraph& lg, const std::vector<int>& perm) {
  const DartGraph& g = lg.graph;
  std::vector<EdgeTuple> out;
  for (Dart x = 0; x < g.num_darts(); ++x) {
    if (carrier(g, x) != x) continue;
    Dart y = g.inv(x);
    int a = perm[g.beg(x)];
    switch (classify_edge(g, x)) {
      case EdgeKind::kSemiEdge:
        out.push_back({0, a, a, lg.lambda[x], lg.lambda[x]});
        break;
      case EdgeKind::kLoop:
        out.push_back({1, a, a, std::min(lg.lambda[x], lg.lambda[y]),
                       std::max(lg.lambda[x], lg.lambda[y])});
        break;
      case EdgeKind::kLink: {
        int b = perm[g.term(x)];
        if (a < b)
          out.push_back({2, a, b, lg.lambda[x], lg.lambda[y]});
        else
          out.push_back({2, b, a, lg.lambda[y], lg.lambda[x]});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeTuple> minimal_encoding(const LabelledGraph& lg) {
  const int n = lg.graph.num_vertices();
  if (n > 8) throw Error("canonical key by relabelling needs at most 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<EdgeTuple> best;
  bool first = true;
  do {
    auto e = encode(lg, perm);
    if (first || e < best) {
      best = std::move(e);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

LabelledGraph from_tuples(int n, const std::vector<EdgeTuple>& tuples) {
  GraphBuilder b(n);
  std::vector<int> lambda;
  for (const auto& t : tuples) {
    switch (t[0]) {
      case 0:
        b.add_semi_edge(t[1]);
        lambda.push_back(t[3]);
        break;
      case 1:
        b.add_loop(t[1]);
        lambda.push_back(t[3]);
        lambda.push_back(t[4]);
        break;
      default:
        b.add_link(t[1], t[2]);
        lambda.push_back(t[3]);
        lambda.push_back(t[4]);
        break;
    }
  }
  return LabelledGraph(b.build(), lambda);
}

bool label_conditions(const LabelledGraph& lg) {
  const DartGraph& g = lg.graph;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int sum = 0;
    for (Dart x : g.darts_at(v)) sum += lg.lambda[x];
    if (sum != 3) return false;
  }
  for (Dart x = 0; x < g.num_darts(); ++x) {
    Dart y = g.inv(x);
    if (lg.lambda[x] == lg.lambda[y] && lg.lambda[x] != 1) return false;
    if (x == y && lg.lambda[x] != 1) return false;
    for (Dart w : g.darts_at(g.beg(x))) {
      if (w != x && g.term(w) == g.term(x) && (lg.lambda[x] != 1 || lg.lambda[w] != 1))
        return false;
    }
  }
  return true;
}

bool at_most_one_semi_edge(const DartGraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int semis = 0;
    for (Dart x : g.darts_at(v)) semis += classify_edge(g, x) == EdgeKind::kSemiEdge;
    if (semis > 1) return false;
  }
  return true;
}

// Every multiset of edge tuples on n vertices with label sum 3 per vertex.
void generate(int n, const std::vector<EdgeTuple>& atoms, size_t next,
              std::vector<int>& budget, std::vector<EdgeTuple>& chosen,
              std::vector<std::vector<EdgeTuple>>& out) {
  if (std::all_of(budget.begin(), budget.end(), [](int b) { return b == 0; })) {
    out.push_back(chosen);
    return;
  }
  for (size_t k = next; k < atoms.size(); ++k) {
    const EdgeTuple& t = atoms[k];
    // Vertices before the lowest endpoint of later atoms can no longer be
    // filled, so prune when an earlier vertex still has budget.
    if (t[0] == 2) {
      budget[t[1]] -= t[3];
      budget[t[2]] -= t[4];
    } else if (t[0] == 1) {
      budget[t[1]] -= t[3] + t[4];
    } else {
      budget[t[1]] -= t[3];
    }
    if (std::all_of(budget.begin(), budget.end(), [](int b) { return b >= 0; })) {
      chosen.push_back(t);
      generate(n, atoms, k, budget, chosen, out);
      chosen.pop_back();
    }
    if (t[0] == 2) {
      budget[t[1]] += t[3];
      budget[t[2]] += t[4];
    } else if (t[0] == 1) {
      budget[t[1]] += t[3] + t[4];
    } else {
      budget[t[1]] += t[3];
    }
  }
}

const std::array<std::string, kNumTemplates>& template_keys() {
  static std::once_flag once;
  static std::array<std::string, kNumTemplates> keys;
  std::call_once(once, [] {
    for (int i = 1; i <= kNumTemplates; ++i)
      keys[i - 1] = labelled_canonical_key(quotient_template(i).labelled);
  });
  return keys;
}

}  // namespace

std::string labelled_canonical_key(const LabelledGraph& lg) {
  std::ostringstream os;
  os << lg.graph.num_vertices() << ":";
  bool first = true;
  for (const auto& t : minimal_encoding(lg)) {
    os << (first ? "" : ";") << "SLE"[t[0]] << t[1] << t[2] << t[3] << t[4];
    first = false;
  }
  return os.str();
}

LabelledGraph canonical_relabelling(const LabelledGraph& lg) {
  return from_tuples(lg.graph.num_vertices(), minimal_encoding(lg));
}

bool label_preserving_isomorphic(const LabelledGraph& a, const LabelledGraph& b) {
  if (a.graph.num_vertices() != b.graph.num_vertices() ||
      a.graph.num_darts() != b.graph.num_darts())
    return false;
  if (a.graph.num_vertices() <= 8)
    return labelled_canonical_key(a) == labelled_canonical_key(b);
  return find_isomorphism(a.graph, a.lambda, b.graph, b.lambda).has_value();
}

std::vector<LabelledIsoClass> enumerate_quotients(int max_vertices, QuotientFilter filter) {
  if (max_vertices < 1 || max_vertices > 3) throw Error("max_vertices must be in 1..3");
  std::map<std::pair<int, std::string>, LabelledGraph> classes;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<EdgeTuple> atoms;
    for (int u = 0; u < n; ++u) {
      for (int l = 1; l <= 3; ++l) atoms.push_back({0, u, u, l, l});
      for (int a = 1; a <= 3; ++a)
        for (int b = a; a + b <= 3; ++b) atoms.push_back({1, u, u, a, b});
      for (int v = u + 1; v < n; ++v)
        for (int a = 1; a <= 3; ++a)
          for (int b = 1; b <= 3; ++b) atoms.push_back({2, u, v, a, b});
    }
    std::vector<int> budget(n, 3);
    std::vector<EdgeTuple> chosen;
    std::vector<std::vector<EdgeTuple>> candidates;
    generate(n, atoms, 0, budget, chosen, candidates);
    for (const auto& c : candidates) {
      LabelledGraph lg = from_tuples(n, c);
      if (!is_connected(lg.graph) || !label_conditions(lg)) continue;
      if (!extend(lg).extendable) continue;
      if (filter == QuotientFilter::kCcvRealisable && !at_most_one_semi_edge(lg.graph))
        continue;
      std::string key = labelled_canonical_key(lg);
      classes.try_emplace({n, key}, canonical_relabelling(lg));
    }
  }
  std::vector<LabelledIsoClass> out;
  for (auto& [k, lg] : classes) out.push_back({lg, k.second});
  return out;
}

bool has_ccv_extension(const LabelledGraph& lg, int max_scale) {
  Extension e = extend(lg);
  if (!e.extendable) return false;
  const DartGraph& g = lg.graph;
  SpanningTree t = spanning_tree(g);
  std::vector<Dart> free;
  for (Dart x = 0; x < g.num_darts(); ++x)
    if (carrier(g, x) == x && !t.contains(x)) free.push_back(x);
  for (int c = 1; c <= max_scale; ++c) {
    std::vector<Int> iota(e.iota);
    for (Int& i : iota) i *= c;
    // Candidate voltages per free carrier.
    std::vector<std::vector<Int>> choices;
    for (Dart x : free) {
      std::vector<Int> vals;
      Int fib = lg.lambda[x] * iota[g.beg(x)];
      if (classify_edge(g, x) == EdgeKind::kSemiEdge) {
        vals.push_back(0);
        if (fib % 2 == 0) vals.push_back(fib / 2);
      } else {
        Int d = std::gcd(iota[g.beg(x)], iota[g.term(x)]);
        for (Int z = 0; z < d; ++z) vals.push_back(z);
      }
      choices.push_back(std::move(vals));
    }
    std::vector<size_t> pick(free.size(), 0);
    while (true) {
      std::vector<Int> z(g.num_darts(), 0);
      for (size_t k = 0; k < free.size(); ++k) z[free[k]] = choices[k][pick[k]];
      if (is_ccv(CyclicVoltageGraph::from_carriers(lg, iota, z))) return true;
      size_t k = 0;
      while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  return false;
}

int match_template(const LabelledGraph& lg) {
  if (lg.graph.num_vertices() > 3) return 0;
  std::string key = labelled_canonical_key(lg);
  const auto& keys = template_keys();
  for (int i = 0; i < kNumTemplates; ++i)
    if (keys[i] == key) return i + 1;
  return 0;
}

LabelledGraph induced_labelling(const DartGraph& g, const Automorphism& a) {
  std::vector<Automorphism> gens{a};
  Quotient q = quotient(g, gens);
  std::vector<int> lambda(q.graph.num_darts(), 0);
  for (size_t b = 0; b < q.dart_blocks.size(); ++b) {
    Vertex qv = q.graph.beg(static_cast<Dart>(b));
    Vertex fixed = q.vertex_blocks[qv].front();
    for (Dart x : q.dart_blocks[b]) lambda[b] += g.beg(x) == fixed;
  }
  return LabelledGraph(q.graph, lambda);
}

CyclicQuotientReport cyclic_quotients(const DartGraph& g, int max_orbits) {
  if (max_orbits < 1 || max_orbits > 3) throw Error("max_orbits must be in 1..3");
  std::vector<Automorphism> group = automorphism_group(g);
  CyclicQuotientReport report;
  report.aut_order = group.size();
  struct Hash {
    size_t operator()(const std::vector<int>& v) const {
      size_t h = 0;
      for (int a : v) h = h * 31 + static_cast<size_t>(a);
      return h;
    }
  };
  std::unordered_map<std::vector<int>, size_t, Hash> index;
  for (size_t k = 0; k < group.size(); ++k) index[group[k].dart_map] = k;
  std::vector<char> done(group.size(), 0);
  for (size_t k = 0; k < group.size(); ++k) {
    if (done[k]) continue;
    // Powers of the element; generators of the same subgroup are skipped.
    std::vector<size_t> powers;
    Automorphism p = identity_automorphism(g);
    do {
      powers.push_back(index.at(p.dart_map));
      p = compose(p, group[k]);
    } while (p.dart_map != group[0].dart_map);
    const int order = static_cast<int>(powers.size());
    for (int e = 1; e < order; ++e)
      if (std::gcd(e, order) == 1) done[powers[e]] = 1;
    if (order == 1) done[k] = 1;
    std::vector<Automorphism> gens{group[k]};
    if (static_cast<int>(vertex_orbits(g, gens).blocks.size()) > max_orbits) continue;
    CyclicQuotient cq;
    cq.generator = group[k];
    cq.order = order;
    cq.quotient = induced_labelling(g, group[k]);
    cq.template_index = match_template(cq.quotient);
    if (cq.template_index > 0) report.indices.insert(cq.template_index);
    report.quotients.push_back(std::move(cq));
  }
  return report;
}

}  // namespace ccv
