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

#include "ccv/voltage.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ccv/error.hpp"

namespace ccv {

namespace {

WalkRatio reduced(Int num, Int den) {
  Int g = std::gcd(num, den);
  return {num / g, den / g};
}

WalkRatio times(const WalkRatio& a, Int num, Int den) {
  WalkRatio x = reduced(num, den);
  Int g1 = std::gcd(a.numerator, x.denominator);
  Int g2 = std::gcd(x.numerator, a.denominator);
  return {checked_mul(a.numerator / g1, x.numerator / g2),
          checked_mul(a.denominator / g2, x.denominator / g1)};
}

void check_vertex(const CyclicVoltageGraph& cvg, Vertex v) {
  if (v < 0 || v >= cvg.graph().num_vertices())
    throw Error("unknown vertex id " + std::to_string(v));
}

}  // namespace

LabelledGraph::LabelledGraph(DartGraph g, std::vector<int> labels)
    : graph(std::move(g)), lambda(std::move(labels)) {
  if (static_cast<int>(lambda.size()) != graph.num_darts())
    throw Error("label vector has the wrong length");
  for (size_t x = 0; x < lambda.size(); ++x)
    if (lambda[x] < 1)
      throw Error("dart " + std::to_string(x) + " has a non-positive label");
}

WalkRatio walk_ratio(const LabelledGraph& lg, const Walk& w) {
  validate_walk(lg.graph, w);
  WalkRatio r;
  for (Dart x : w.darts) r = times(r, lg.lambda[x], lg.lambda[lg.graph.inv(x)]);
  return r;
}

Extension extend(const LabelledGraph& lg) {
  const DartGraph& g = lg.graph;
  SpanningTree t = spanning_tree(g);
  Extension out;
  for (const Walk& c : fundamental_cycles(g, t)) {
    if (walk_ratio(lg, c) != WalkRatio{}) {
      out.witness = c;
      return out;
    }
  }
  // alpha(v) is the ratio of the tree path from the root to v.
  std::vector<WalkRatio> alpha(g.num_vertices());
  for (Vertex v : t.order) {
    Dart p = t.parent_dart[v];
    if (p < 0) continue;
    alpha[v] = times(alpha[g.beg(p)], lg.lambda[p], lg.lambda[g.inv(p)]);
  }
  Int root = 1;
  for (const auto& a : alpha) root = checked_lcm(root, a.denominator);
  out.iota.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    out.iota[v] = checked_mul(root / alpha[v].denominator, alpha[v].numerator);
  out.extendable = true;
  return out;
}

std::vector<Int> scaled_iota(const LabelledGraph& lg, Vertex v0, Int m) {
  if (v0 < 0 || v0 >= lg.graph.num_vertices())
    throw Error("unknown vertex id " + std::to_string(v0));
  if (m < 1) throw Error("index must be positive");
  Extension e = extend(lg);
  if (!e.extendable) throw Error("labelled graph is not extendable");
  if (m % e.iota[v0] != 0)
    throw Error("index at vertex " + std::to_string(v0) +
                " must be a multiple of " + std::to_string(e.iota[v0]));
  Int c = m / e.iota[v0];
  for (Int& i : e.iota) i = checked_mul(i, c);
  return e.iota;
}

CyclicVoltageGraph::CyclicVoltageGraph(LabelledGraph lg, std::vector<Int> iota,
                                       std::vector<Int> zeta)
    : lg_(std::move(lg)), iota_(std::move(iota)), zeta_(std::move(zeta)) {
  validate_ratio();
  const DartGraph& g = lg_.graph;
  if (static_cast<int>(zeta_.size()) != g.num_darts())
    throw Error("voltage vector has the wrong length");
  for (Dart x = 0; x < g.num_darts(); ++x) {
    Int m = fibre_size(x);
    if (mod(zeta_[x] + zeta_[g.inv(x)], m) != 0)
      throw Error("voltages of dart " + std::to_string(x) +
                  " and its inverse do not cancel modulo " + std::to_string(m));
  }
  for (Dart x = 0; x < g.num_darts(); ++x) zeta_[x] = mod(zeta_[x], fibre_size(x));
}

CyclicVoltageGraph CyclicVoltageGraph::from_carriers(
    LabelledGraph lg, std::vector<Int> iota, const std::vector<Int>& zeta) {
  CyclicVoltageGraph out;
  out.lg_ = std::move(lg);
  out.iota_ = std::move(iota);
  out.validate_ratio();
  const DartGraph& g = out.lg_.graph;
  if (static_cast<int>(zeta.size()) != g.num_darts())
    throw Error("voltage vector has the wrong length");
  out.zeta_.assign(g.num_darts(), 0);
  for (Dart x = 0; x < g.num_darts(); ++x) {
    if (carrier(g, x) != x) continue;
    Int m = out.fibre_size(x);
    Int z = mod(zeta[x], m);
    Dart y = g.inv(x);
    if (y == x && mod(2 * z, m) != 0)
      throw Error("semi-edge dart " + std::to_string(x) +
                  " needs 2*zeta divisible by " + std::to_string(m));
    out.zeta_[x] = z;
    out.zeta_[y] = mod(-z, m);
  }
  return out;
}

void CyclicVoltageGraph::validate_ratio() const {
  const DartGraph& g = lg_.graph;
  if (static_cast<int>(iota_.size()) != g.num_vertices())
    throw Error("index vector has the wrong length");
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (iota_[v] < 1)
      throw Error("vertex " + std::to_string(v) + " has a non-positive index");
  for (Dart x = 0; x < g.num_darts(); ++x) {
    Dart y = g.inv(x);
    if (checked_mul(lambda(x), iota_[g.beg(x)]) !=
        checked_mul(lambda(y), iota_[g.beg(y)]))
      throw Error("dart " + std::to_string(x) +
                  " violates lambda(x) iota(beg x) = lambda(x^-1) iota(term x)");
  }
}

Cover expand(const CyclicVoltageGraph& cvg) {
  const DartGraph& g = cvg.graph();
  Cover c;
  c.n = faithful_n(cvg);
  Int nv = 0, nd = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    c.vertex_offset.push_back(static_cast<int>(nv));
    c.vertex_fibre_size.push_back(cvg.iota(v));
    nv += cvg.iota(v);
    if (nv > 10000000) throw Error("cover too large");
  }
  for (Dart x = 0; x < g.num_darts(); ++x) {
    c.dart_offset.push_back(static_cast<int>(nd));
    c.dart_fibre_size.push_back(cvg.fibre_size(x));
    nd += cvg.fibre_size(x);
    if (nd > 10000000) throw Error("cover too large");
  }
  std::vector<Vertex> beg(nd);
  std::vector<Dart> inv(nd);
  c.fibre_of_vertex.resize(nv);
  c.fibre_of_dart.resize(nd);
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (Int i = 0; i < cvg.iota(v); ++i)
      c.fibre_of_vertex[c.vertex_offset[v] + i] = {v, i};
  for (Dart x = 0; x < g.num_darts(); ++x) {
    Vertex u = g.beg(x);
    Dart y = g.inv(x);
    for (Int i = 0; i < cvg.fibre_size(x); ++i) {
      Dart xi = c.dart_offset[x] + static_cast<int>(i);
      c.fibre_of_dart[xi] = {x, i};
      beg[xi] = c.vertex(u, i);
      inv[xi] = c.dart(y, i + cvg.zeta(x));
    }
  }
  c.graph = DartGraph(static_cast<int>(nv), std::move(beg), std::move(inv));
  return c;
}

bool adjacent_in_cover(const CyclicVoltageGraph& cvg, Vertex u, Int i,
                       Vertex v, Int j) {
  check_vertex(cvg, u);
  check_vertex(cvg, v);
  if (i < 0 || i >= cvg.iota(u) || j < 0 || j >= cvg.iota(v))
    throw Error("fibre index out of range");
  const DartGraph& g = cvg.graph();
  Int d = std::gcd(cvg.iota(u), cvg.iota(v));
  for (Dart x : g.darts_at(u)) {
    if (g.term(x) != v) continue;
    if (mod(j - i - cvg.zeta(x), d) == 0) return true;
  }
  return false;
}

CyclicVoltageGraph reduce_voltages(const CyclicVoltageGraph& cvg) {
  const DartGraph& g = cvg.graph();
  std::vector<Int> z(g.num_darts(), 0);
  for (Dart x = 0; x < g.num_darts(); ++x) {
    if (carrier(g, x) != x) continue;
    // A semi-edge with lambda > 1 lifts to loops or semi-edges depending on
    // its voltage modulo lambda iota, so it keeps its voltage.
    if (g.inv(x) == x) {
      z[x] = cvg.zeta(x);
      continue;
    }
    z[x] = mod(cvg.zeta(x), std::gcd(cvg.iota(g.beg(x)), cvg.iota(g.term(x))));
  }
  return CyclicVoltageGraph::from_carriers(cvg.labelled(), cvg.iota_map(), z);
}

std::optional<Automorphism> same_edges(const DartGraph& a, const DartGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_darts() != b.num_darts())
    return std::nullopt;
  Automorphism m = identity_automorphism(a);
  std::vector<char> used(b.num_darts(), 0);
  std::fill(m.dart_map.begin(), m.dart_map.end(), -1);
  for (Dart x = 0; x < a.num_darts(); ++x) {
    if (m.dart_map[x] >= 0) continue;
    EdgeKind kind = classify_edge(a, x);
    Dart found = -1;
    for (Dart y : b.darts_at(a.beg(x))) {
      if (!used[y] && b.term(y) == a.term(x) && classify_edge(b, y) == kind) {
        found = y;
        break;
      }
    }
    if (found < 0) return std::nullopt;
    m.dart_map[x] = found;
    m.dart_map[a.inv(x)] = b.inv(found);
    used[found] = used[b.inv(found)] = 1;
  }
  return m;
}

bool is_t_normalised(const CyclicVoltageGraph& cvg, const SpanningTree& t) {
  const DartGraph& g = cvg.graph();
  if (static_cast<int>(t.in_tree.size()) != g.num_darts())
    throw Error("spanning tree does not belong to this graph");
  for (Dart x = 0; x < g.num_darts(); ++x)
    if (t.contains(x) && cvg.zeta(x) != 0) return false;
  return true;
}

namespace {

std::vector<Int> tree_shifts(const CyclicVoltageGraph& cvg,
                             const SpanningTree& t) {
  const DartGraph& g = cvg.graph();
  if (static_cast<int>(t.in_tree.size()) != g.num_darts() ||
      static_cast<int>(t.order.size()) != g.num_vertices())
    throw Error("tree does not span the graph");
  std::vector<Int> s(g.num_vertices(), 0);
  for (Vertex v : t.order) {
    Dart p = t.parent_dart[v];
    if (p >= 0) s[v] = s[g.beg(p)] - cvg.zeta(p);
  }
  return s;
}

}  // namespace

CyclicVoltageGraph t_normalise(const CyclicVoltageGraph& cvg,
                               const SpanningTree& t) {
  const DartGraph& g = cvg.graph();
  std::vector<Int> s = tree_shifts(cvg, t);
  std::vector<Int> z(g.num_darts());
  for (Dart x = 0; x < g.num_darts(); ++x)
    z[x] = cvg.zeta(x) + s[g.term(x)] - s[g.beg(x)];
  return CyclicVoltageGraph::from_carriers(cvg.labelled(), cvg.iota_map(), z);
}

Automorphism t_normalise_witness(const CyclicVoltageGraph& cvg,
                                 const SpanningTree& t) {
  const DartGraph& g = cvg.graph();
  std::vector<Int> s = tree_shifts(cvg, t);
  Cover c = expand(cvg);
  Automorphism m;
  m.vertex_map.resize(c.graph.num_vertices());
  m.dart_map.resize(c.graph.num_darts());
  for (Vertex w = 0; w < c.graph.num_vertices(); ++w) {
    auto [v, i] = c.fibre_of_vertex[w];
    m.vertex_map[w] = c.vertex(v, i + s[v]);
  }
  for (Dart w = 0; w < c.graph.num_darts(); ++w) {
    auto [x, i] = c.fibre_of_dart[w];
    m.dart_map[w] = c.dart(x, i + s[g.beg(x)]);
  }
  return m;
}

bool is_connected_cover(const CyclicVoltageGraph& cvg, const SpanningTree& t) {
  if (!is_t_normalised(cvg, t))
    throw Error("voltage assignment is not T-normalised for the given tree");
  Int g = 0;
  for (Int z : cvg.zeta_map()) g = std::gcd(g, z);
  for (Int i : cvg.iota_map()) g = std::gcd(g, i);
  return g == 1;
}

bool is_simple_cover(const CyclicVoltageGraph& cvg) {
  const DartGraph& g = cvg.graph();
  for (Dart x = 0; x < g.num_darts(); ++x) {
    Dart y = g.inv(x);
    if (std::gcd(cvg.lambda(x), cvg.lambda(y)) != 1) return false;
    Vertex u = g.beg(x);
    if (y == x && mod(cvg.zeta(x), cvg.iota(u)) == 0) return false;
    Int d = std::gcd(cvg.iota(u), cvg.iota(g.term(x)));
    for (Dart w : g.darts_at(u)) {
      if (w == x || g.term(w) != g.term(x)) continue;
      if (mod(cvg.zeta(x) - cvg.zeta(w), d) == 0) return false;
    }
  }
  return true;
}

bool is_cubic_cover(const CyclicVoltageGraph& cvg) {
  const DartGraph& g = cvg.graph();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int sum = 0;
    for (Dart x : g.darts_at(v)) sum += cvg.lambda(x);
    if (sum != 3) return false;
  }
  return true;
}

bool is_ccv(const CyclicVoltageGraph& cvg) {
  if (!is_cubic_cover(cvg) || !is_simple_cover(cvg)) return false;
  SpanningTree t = spanning_tree(cvg.graph());
  return is_connected_cover(t_normalise(cvg, t), t);
}

Int faithful_n(const CyclicVoltageGraph& cvg) {
  const DartGraph& g = cvg.graph();
  Int n = 1;
  for (Dart x = 0; x < g.num_darts(); ++x) n = checked_lcm(n, cvg.fibre_size(x));
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) == 0) n = checked_lcm(n, cvg.iota(v));
  return n;
}

ZnWeights zn_weights(const CyclicVoltageGraph& cvg) {
  ZnWeights w;
  w.n = faithful_n(cvg);
  w.vertex = cvg.iota_map();
  for (Dart x = 0; x < cvg.graph().num_darts(); ++x) w.dart.push_back(cvg.fibre_size(x));
  return w;
}

Automorphism fibre_rotation(const Cover& cover, Int a) {
  a = mod(a, cover.n);
  Automorphism m;
  m.vertex_map.resize(cover.graph.num_vertices());
  m.dart_map.resize(cover.graph.num_darts());
  for (Vertex w = 0; w < cover.graph.num_vertices(); ++w) {
    auto [v, i] = cover.fibre_of_vertex[w];
    m.vertex_map[w] = cover.vertex(v, i + a);
  }
  for (Dart w = 0; w < cover.graph.num_darts(); ++w) {
    auto [x, i] = cover.fibre_of_dart[w];
    m.dart_map[w] = cover.dart(x, i + a);
  }
  return m;
}

CyclicVoltageGraph scale_voltages(const CyclicVoltageGraph& cvg, Int a) {
  if (std::gcd(mod(a, faithful_n(cvg)), faithful_n(cvg)) != 1)
    throw Error("scaling factor " + std::to_string(a) +
                " is not coprime to n = " + std::to_string(faithful_n(cvg)));
  const DartGraph& g = cvg.graph();
  std::vector<Int> z(g.num_darts());
  for (Dart x = 0; x < g.num_darts(); ++x)
    z[x] = checked_mul(cvg.zeta(x), mod(a, cvg.fibre_size(x)));
  return CyclicVoltageGraph::from_carriers(cvg.labelled(), cvg.iota_map(), z);
}

Automorphism scale_witness(const CyclicVoltageGraph& cvg, Int a) {
  scale_voltages(cvg, a);  // validates a
  Cover c = expand(cvg);
  Automorphism m;
  m.vertex_map.resize(c.graph.num_vertices());
  m.dart_map.resize(c.graph.num_darts());
  for (Vertex w = 0; w < c.graph.num_vertices(); ++w) {
    auto [v, i] = c.fibre_of_vertex[w];
    m.vertex_map[w] = c.vertex(v, checked_mul(mod(a, cvg.iota(v)), i));
  }
  for (Dart w = 0; w < c.graph.num_darts(); ++w) {
    auto [x, i] = c.fibre_of_dart[w];
    m.dart_map[w] = c.dart(x, checked_mul(mod(a, cvg.fibre_size(x)), i));
  }
  return m;
}

Automorphism lift_automorphism(const CyclicVoltageGraph& cvg,
                               const Automorphism& phi, Int a) {
  const DartGraph& g = cvg.graph();
  if (!is_automorphism(g, phi)) throw Error("map is not an automorphism of the base graph");
  Int n = faithful_n(cvg);
  if (std::gcd(mod(a, n), n) != 1) throw Error("multiplier is not a unit modulo n");
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (cvg.iota(phi.vertex_map[v]) != cvg.iota(v))
      throw Error("automorphism does not preserve the index function");
  for (Dart x = 0; x < g.num_darts(); ++x) {
    Dart y = phi.dart_map[x];
    if (cvg.lambda(y) != cvg.lambda(x))
      throw Error("automorphism does not preserve labels");
    if (mod(cvg.zeta(y) - checked_mul(a, cvg.zeta(x)), cvg.fibre_size(x)) != 0)
      throw Error("voltages are not compatible with the multiplier");
  }
  Cover c = expand(cvg);
  Automorphism m;
  m.vertex_map.resize(c.graph.num_vertices());
  m.dart_map.resize(c.graph.num_darts());
  for (Vertex w = 0; w < c.graph.num_vertices(); ++w) {
    auto [v, i] = c.fibre_of_vertex[w];
    m.vertex_map[w] = c.vertex(phi.vertex_map[v], checked_mul(mod(a, cvg.iota(v)), i));
  }
  for (Dart w = 0; w < c.graph.num_darts(); ++w) {
    auto [x, i] = c.fibre_of_dart[w];
    m.dart_map[w] = c.dart(phi.dart_map[x], checked_mul(mod(a, cvg.fibre_size(x)), i));
  }
  if (!is_automorphism(c.graph, m)) throw Error("internal: lift is not an automorphism");
  return m;
}

CyclicVoltageGraph dipole_extension(const LabelledGraph& lg) {
  const DartGraph& g = lg.graph;
  if (g.num_vertices() != 2 || g.num_darts() != 6 || g.valence(0) != 3)
    throw Error("not a dipole with three parallel edges");
  std::vector<Int> z(6, 0);
  Int k = 0;
  for (Dart x : g.darts_at(0)) {
    if (classify_edge(g, x) != EdgeKind::kLink || lg.lambda[x] != 1 ||
        lg.lambda[g.inv(x)] != 1)
      throw Error("not a dipole with three parallel [1,1]-edges");
    z[x] = k;
    z[g.inv(x)] = -k;
    ++k;
  }
  return CyclicVoltageGraph(lg, {3, 3}, z);
}

CyclicVoltageGraph ccv_extension(const LabelledGraph& lg) {
  const DartGraph& g = lg.graph;
  if (g.num_vertices() == 2 && g.num_darts() == 6 && g.valence(0) == 3 &&
      std::all_of(g.darts_at(0).begin(), g.darts_at(0).end(), [&](Dart x) {
        return classify_edge(g, x) == EdgeKind::kLink;
      }))
    return dipole_extension(lg);
  Extension e = extend(lg);
  if (!e.extendable) throw Error("labelled graph is not extendable");
  // Which vertices need an even index, and which need index >= 3.
  std::vector<char> even(g.num_vertices(), 0), big(g.num_vertices(), 0);
  std::map<std::pair<Vertex, Vertex>, int> links;
  for (Dart x = 0; x < g.num_darts(); ++x) {
    switch (classify_edge(g, x)) {
      case EdgeKind::kSemiEdge:
        even[g.beg(x)] = 1;
        break;
      case EdgeKind::kLoop:
        big[g.beg(x)] = 1;
        break;
      case EdgeKind::kLink:
        if (++links[{g.beg(x), g.term(x)}] > 1) even[g.beg(x)] = 1;
        break;
    }
  }
  Int c = 1;
  auto fits = [&](Int c) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      Int i = c * e.iota[v];
      if ((even[v] && i % 2) || (big[v] && i < 3)) return false;
    }
    return true;
  };
  while (!fits(c)) ++c;
  std::vector<Int> iota(e.iota);
  for (Int& i : iota) i *= c;
  // The first link of each parallel class stays in the simple subgraph;
  // the spanning tree is chosen inside it, so zero voltages there are
  // T-normalised.
  std::vector<Int> z(g.num_darts(), 0);
  std::map<std::pair<Vertex, Vertex>, int> seen;
  for (Dart x = 0; x < g.num_darts(); ++x) {
    if (carrier(g, x) != x) continue;
    switch (classify_edge(g, x)) {
      case EdgeKind::kSemiEdge:
        z[x] = iota[g.beg(x)] / 2;
        break;
      case EdgeKind::kLoop:
        z[x] = 1;
        break;
      case EdgeKind::kLink: {
        Vertex a = g.beg(x), b = g.term(x);
        z[x] = seen[{std::min(a, b), std::max(a, b)}]++ == 0 ? 0 : 1;
        break;
      }
    }
  }
  return CyclicVoltageGraph::from_carriers(lg, iota, z);
}

}  // namespace ccv
