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

#include "ccv/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "ccv/error.hpp"

namespace ccv {

namespace {

using Sig = std::vector<std::int64_t>;

// Vertex-level view of a coloured dart graph. Loops and semi-edges fold into
// the vertex colour, parallel links into a single coloured arc.
struct Coloured {
  int n = 0;
  std::vector<int> vertex_colour;
  std::vector<std::vector<std::pair<int, int>>> out;  // (neighbour, colour)
  std::vector<Sig> dictionary;
};

std::vector<int> colours_or_default(const DartGraph& g,
                                    std::span<const int> colours) {
  if (colours.empty()) return std::vector<int>(g.num_darts(), 0);
  if (static_cast<int>(colours.size()) != g.num_darts())
    throw Error("dart colour vector has the wrong length");
  return {colours.begin(), colours.end()};
}

Coloured build_coloured(const DartGraph& g, const std::vector<int>& c) {
  Coloured out;
  out.n = g.num_vertices();
  std::vector<Sig> vertex_sig(out.n);
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> link_pairs;
  for (Vertex v = 0; v < out.n; ++v) {
    std::vector<std::pair<int, int>> loops;
    std::vector<int> semis;
    for (Dart x : g.darts_at(v)) {
      Dart y = g.inv(x);
      switch (classify_edge(g, x)) {
        case EdgeKind::kSemiEdge:
          semis.push_back(c[x]);
          break;
        case EdgeKind::kLoop:
          if (x < y) loops.emplace_back(std::min(c[x], c[y]), std::max(c[x], c[y]));
          break;
        case EdgeKind::kLink:
          link_pairs[{v, g.term(x)}].emplace_back(c[x], c[y]);
          break;
      }
    }
    std::sort(loops.begin(), loops.end());
    std::sort(semis.begin(), semis.end());
    Sig& s = vertex_sig[v];
    s.push_back(0);
    s.push_back(static_cast<std::int64_t>(loops.size()));
    for (auto [p, q] : loops) {
      s.push_back(p);
      s.push_back(q);
    }
    s.push_back(static_cast<std::int64_t>(semis.size()));
    for (int q : semis) s.push_back(q);
  }
  std::vector<std::pair<std::pair<int, int>, Sig>> arcs;
  for (auto& [ends, pairs] : link_pairs) {
    std::sort(pairs.begin(), pairs.end());
    Sig s{1};
    for (auto [p, q] : pairs) {
      s.push_back(p);
      s.push_back(q);
    }
    arcs.emplace_back(ends, std::move(s));
  }
  std::vector<Sig> dict = vertex_sig;
  for (auto& a : arcs) dict.push_back(a.second);
  std::sort(dict.begin(), dict.end());
  dict.erase(std::unique(dict.begin(), dict.end()), dict.end());
  auto id = [&](const Sig& s) {
    return static_cast<int>(std::lower_bound(dict.begin(), dict.end(), s) -
                            dict.begin());
  };
  out.vertex_colour.resize(out.n);
  for (Vertex v = 0; v < out.n; ++v) out.vertex_colour[v] = id(vertex_sig[v]);
  out.out.resize(out.n);
  for (auto& [ends, s] : arcs) out.out[ends.first].emplace_back(ends.second, id(s));
  out.dictionary = std::move(dict);
  return out;
}

// Dense ranks of arbitrary sortable keys, ordered by key.
template <class Key>
std::vector<int> dense_ranks(const std::vector<Key>& keys, int* count) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> rank(n);
  int r = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || keys[idx[i - 1]] < keys[idx[i]]) ++r;
    rank[idx[i]] = r;
  }
  *count = r + 1;
  return rank;
}

class Search {
 public:
  explicit Search(const Coloured& g)
      : g_(g), palette_(static_cast<std::int64_t>(g.dictionary.size()) + 1) {}

  void run() {
    int k = 0;
    std::vector<int> cols = dense_ranks(g_.vertex_colour, &k);
    std::vector<Vertex> path;
    if (g_.n > 0) node(std::move(cols), path);
  }

  const std::vector<std::int64_t>& best_certificate() const { return best_; }
  const std::vector<int>& best_position() const { return best_pos_; }
  const std::vector<std::vector<Vertex>>& generators() const { return gens_; }

 private:
  std::vector<int> refine(std::vector<int> cols) const {
    int k = 0;
    for (int c : cols) k = std::max(k, c + 1);
    while (true) {
      std::vector<Sig> sig(g_.n);
      for (Vertex v = 0; v < g_.n; ++v) {
        Sig& s = sig[v];
        s.reserve(g_.out[v].size() + 1);
        s.push_back(cols[v]);
        for (auto [u, c] : g_.out[v]) s.push_back(cols[u] * palette_ + c);
        std::sort(s.begin() + 1, s.end());
      }
      int nk = 0;
      std::vector<int> next = dense_ranks(sig, &nk);
      cols = std::move(next);
      if (nk == k) return cols;
      k = nk;
    }
  }

  std::vector<std::int64_t> certificate(const std::vector<int>& pos) const {
    std::vector<std::int64_t> cert(g_.n);
    std::vector<std::array<std::int64_t, 3>> arcs;
    for (Vertex v = 0; v < g_.n; ++v) {
      cert[pos[v]] = g_.vertex_colour[v];
      for (auto [u, c] : g_.out[v]) arcs.push_back({pos[v], pos[u], c});
    }
    std::sort(arcs.begin(), arcs.end());
    for (auto& a : arcs) cert.insert(cert.end(), a.begin(), a.end());
    return cert;
  }

  void leaf(const std::vector<int>& pos) {
    std::vector<std::int64_t> cert = certificate(pos);
    if (best_pos_.empty() || cert < best_) {
      best_ = std::move(cert);
      best_pos_ = pos;
      best_inv_.assign(g_.n, 0);
      for (Vertex v = 0; v < g_.n; ++v) best_inv_[best_pos_[v]] = v;
      return;
    }
    if (cert != best_) return;
    std::vector<Vertex> perm(g_.n);
    bool identity = true;
    for (Vertex v = 0; v < g_.n; ++v) {
      perm[v] = best_inv_[pos[v]];
      identity = identity && perm[v] == v;
    }
    if (!identity) gens_.push_back(std::move(perm));
  }

  // True iff w lies in the orbit of an explored sibling under the found
  // automorphisms that fix the current path pointwise.
  bool pruned(Vertex w, const std::vector<Vertex>& explored,
              const std::vector<Vertex>& path) const {
    if (explored.empty() || gens_.empty()) return false;
    std::vector<int> parent(g_.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    bool any = false;
    for (const auto& p : gens_) {
      bool fixes = std::all_of(path.begin(), path.end(),
                               [&](Vertex v) { return p[v] == v; });
      if (!fixes) continue;
      any = true;
      for (Vertex v = 0; v < g_.n; ++v) parent[find(v)] = find(p[v]);
    }
    if (!any) return false;
    int rw = find(w);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex e) { return find(e) == rw; });
  }

  void node(std::vector<int> cols, std::vector<Vertex>& path) {
    cols = refine(std::move(cols));
    std::vector<int> size(g_.n, 0);
    for (int c : cols) ++size[c];
    int target = -1;
    for (int c = 0; c < g_.n; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(cols);
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex w = 0; w < g_.n; ++w) {
      if (cols[w] != target) continue;
      if (pruned(w, explored, path)) continue;
      explored.push_back(w);
      std::vector<int> next(g_.n);
      for (Vertex v = 0; v < g_.n; ++v)
        next[v] = 2 * cols[v] + ((cols[v] == target && v != w) ? 1 : 0);
      int k = 0;
      next = dense_ranks(next, &k);
      path.push_back(w);
      node(std::move(next), path);
      path.pop_back();
    }
  }

  const Coloured& g_;
  std::int64_t palette_;
  std::vector<std::int64_t> best_;
  std::vector<int> best_pos_;
  std::vector<Vertex> best_inv_;
  std::vector<std::vector<Vertex>> gens_;
};

void check_bound(const DartGraph& g, const SearchOptions& options) {
  if (g.num_vertices() > options.max_vertices)
    throw Error("graph has " + std::to_string(g.num_vertices()) +
                " vertices, above the search bound of " +
                std::to_string(options.max_vertices));
}

struct Form {
  CanonicalForm form;
  std::vector<std::vector<Vertex>> vertex_gens;
};

Form compute(const DartGraph& g, const std::vector<int>& c,
             const SearchOptions& options) {
  check_bound(g, options);
  Coloured cg = build_coloured(g, c);
  Search s(cg);
  s.run();
  Form f;
  f.form.position = s.best_position();
  auto& key = f.form.key;
  key.push_back(g.num_vertices());
  key.push_back(g.num_darts());
  key.push_back(static_cast<std::int64_t>(cg.dictionary.size()));
  for (const Sig& sig : cg.dictionary) {
    key.push_back(static_cast<std::int64_t>(sig.size()));
    key.insert(key.end(), sig.begin(), sig.end());
  }
  key.insert(key.end(), s.best_certificate().begin(), s.best_certificate().end());
  f.vertex_gens = s.generators();
  return f;
}

// Extends a vertex bijection to darts, matching kind and colours. Greedy is
// enough because compatible darts form equivalence classes.
std::optional<Automorphism> extend_to_darts(const DartGraph& a,
                                            const std::vector<int>& ca,
                                            const DartGraph& b,
                                            const std::vector<int>& cb,
                                            const std::vector<Vertex>& vmap) {
  Automorphism out;
  out.vertex_map = vmap;
  out.dart_map.assign(a.num_darts(), -1);
  std::vector<char> used(b.num_darts(), 0);
  for (Dart x = 0; x < a.num_darts(); ++x) {
    if (out.dart_map[x] >= 0) continue;
    Dart xi = a.inv(x);
    EdgeKind kind = classify_edge(a, x);
    Dart found = -1;
    for (Dart y : b.darts_at(vmap[a.beg(x)])) {
      if (used[y] || b.term(y) != vmap[a.term(x)]) continue;
      if (classify_edge(b, y) != kind) continue;
      if (cb[y] != ca[x] || cb[b.inv(y)] != ca[xi]) continue;
      found = y;
      break;
    }
    if (found < 0) return std::nullopt;
    out.dart_map[x] = found;
    out.dart_map[xi] = b.inv(found);
    used[found] = 1;
    used[b.inv(found)] = 1;
  }
  return out;
}

// Dart permutations fixing every vertex: swaps of interchangeable edges and
// flips of loops whose two darts share a colour.
std::vector<Automorphism> kernel_generators(const DartGraph& g,
                                            const std::vector<int>& c) {
  std::map<std::array<int, 5>, std::vector<Dart>> classes;
  std::vector<Automorphism> out;
  for (Dart x = 0; x < g.num_darts(); ++x) {
    Dart y = g.inv(x);
    EdgeKind kind = classify_edge(g, x);
    Dart rep = x;
    if (kind == EdgeKind::kLink) {
      if (g.beg(x) > g.beg(y)) continue;
    } else if (kind == EdgeKind::kLoop) {
      if (c[x] > c[y] || (c[x] == c[y] && x > y)) continue;
      if (c[x] == c[y] && x < y) {
        Automorphism flip = identity_automorphism(g);
        std::swap(flip.dart_map[x], flip.dart_map[y]);
        out.push_back(std::move(flip));
      }
    }
    classes[{static_cast<int>(kind), g.beg(rep), g.term(rep), c[rep],
             c[g.inv(rep)]}]
        .push_back(rep);
  }
  for (auto& [key, reps] : classes) {
    for (size_t i = 0; i + 1 < reps.size(); ++i) {
      Automorphism t = identity_automorphism(g);
      Dart x = reps[i], y = reps[i + 1];
      std::swap(t.dart_map[x], t.dart_map[y]);
      if (g.inv(x) != x) {
        t.dart_map[g.inv(x)] = g.inv(y);
        t.dart_map[g.inv(y)] = g.inv(x);
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int a : v) h = h * 1000003u ^ static_cast<std::size_t>(a + 0x9e3779b9);
    return h;
  }
};

}  // namespace

CanonicalForm canonical_form(const DartGraph& g, std::span<const int> colours,
                             const SearchOptions& options) {
  return compute(g, colours_or_default(g, colours), options).form;
}

std::string canonical_key(const DartGraph& g, const SearchOptions& options) {
  CanonicalForm f = canonical_form(g, {}, options);
  std::ostringstream os;
  for (size_t i = 0; i < f.key.size(); ++i) os << (i ? "." : "") << f.key[i];
  return os.str();
}

std::vector<Automorphism> automorphism_generators(const DartGraph& g,
                                                  std::span<const int> colours,
                                                  const SearchOptions& options) {
  std::vector<int> c = colours_or_default(g, colours);
  Form f = compute(g, c, options);
  std::vector<Automorphism> out;
  for (const auto& p : f.vertex_gens) {
    auto a = extend_to_darts(g, c, g, c, p);
    if (!a) throw Error("internal: vertex automorphism without dart extension");
    out.push_back(std::move(*a));
  }
  for (auto& k : kernel_generators(g, c)) out.push_back(std::move(k));
  return out;
}

std::vector<Automorphism> group_closure(const DartGraph& g,
                                        std::span<const Automorphism> gens,
                                        std::size_t max_order) {
  auto key_of = [](const Automorphism& a) {
    std::vector<int> k(a.vertex_map);
    k.insert(k.end(), a.dart_map.begin(), a.dart_map.end());
    return k;
  };
  std::vector<Automorphism> elements{identity_automorphism(g)};
  std::unordered_set<std::vector<int>, VectorHash> seen{key_of(elements[0])};
  for (size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : gens) {
      Automorphism next = compose(elements[i], s);
      auto k = key_of(next);
      if (seen.insert(std::move(k)).second) {
        elements.push_back(std::move(next));
        if (elements.size() > max_order)
          throw Error("automorphism group exceeds the enumeration bound");
      }
    }
  }
  return elements;
}

std::vector<Automorphism> automorphism_group(const DartGraph& g,
                                             std::span<const int> colours,
                                             const SearchOptions& options) {
  auto gens = automorphism_generators(g, colours, options);
  return group_closure(g, gens, options.max_group_order);
}

std::vector<Automorphism> automorphism_group(const DartGraph& g,
                                             const SearchOptions& options) {
  return automorphism_group(g, std::span<const int>{}, options);
}

std::optional<Automorphism> find_isomorphism(const DartGraph& a,
                                             std::span<const int> colours_a,
                                             const DartGraph& b,
                                             std::span<const int> colours_b,
                                             const SearchOptions& options) {
  check_bound(a, options);
  check_bound(b, options);
  if (a.num_vertices() != b.num_vertices() || a.num_darts() != b.num_darts())
    return std::nullopt;
  std::vector<int> ca = colours_or_default(a, colours_a);
  std::vector<int> cb = colours_or_default(b, colours_b);
  Form fa = compute(a, ca, options);
  Form fb = compute(b, cb, options);
  if (fa.form.key != fb.form.key) return std::nullopt;
  std::vector<Vertex> b_at(b.num_vertices());
  for (Vertex v = 0; v < b.num_vertices(); ++v) b_at[fb.form.position[v]] = v;
  std::vector<Vertex> vmap(a.num_vertices());
  for (Vertex v = 0; v < a.num_vertices(); ++v) vmap[v] = b_at[fa.form.position[v]];
  auto iso = extend_to_darts(a, ca, b, cb, vmap);
  if (!iso || !is_isomorphism(a, b, *iso))
    throw Error("internal: equal canonical keys without a valid witness");
  return iso;
}

std::optional<Automorphism> find_isomorphism(const DartGraph& a,
                                             const DartGraph& b,
                                             const SearchOptions& options) {
  return find_isomorphism(a, {}, b, {}, options);
}

bool are_isomorphic(const DartGraph& a, const DartGraph& b,
                    const SearchOptions& options) {
  return find_isomorphism(a, b, options).has_value();
}

namespace {

using Perm = std::vector<int>;

// One level of a stabiliser chain: base point, generators and a transversal
// (trans[p] maps the base point to p, empty when p is outside the orbit).
struct ChainLevel {
  int point = 0;
  std::vector<Perm> gens;
  std::vector<Perm> trans;
  std::vector<int> orbit;
};

Perm perm_compose(const Perm& a, const Perm& b) {  // a after b
  Perm out(b.size());
  for (size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm perm_inverse(const Perm& a) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

bool is_identity(const Perm& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i)) return false;
  return true;
}

class StabiliserChain {
 public:
  explicit StabiliserChain(int degree) : degree_(degree) {}

  void add_generator(const Perm& g) {
    if (is_identity(sift(g, 0))) return;
    add_at(0, g);
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& l : levels_) n *= l.orbit.size();
    return n;
  }

 private:
  Perm sift(Perm h, size_t from) const {
    for (size_t i = from; i < levels_.size(); ++i) {
      const ChainLevel& l = levels_[i];
      int y = h[l.point];
      if (l.trans[y].empty()) return h;
      h = perm_compose(perm_inverse(l.trans[y]), h);
    }
    return h;
  }

  void add_at(size_t i, const Perm& g) {
    if (i == levels_.size()) {
      ChainLevel l;
      for (int p = 0; p < degree_; ++p)
        if (g[p] != p) {
          l.point = p;
          break;
        }
      levels_.push_back(std::move(l));
    }
    levels_[i].gens.push_back(g);
    rebuild(i);
  }

  void rebuild(size_t i) {
    {
      ChainLevel& l = levels_[i];
      l.trans.assign(degree_, Perm{});
      Perm id(degree_);
      std::iota(id.begin(), id.end(), 0);
      l.trans[l.point] = id;
      l.orbit = {l.point};
      for (size_t k = 0; k < l.orbit.size(); ++k)
        for (const Perm& s : l.gens) {
          int q = s[l.orbit[k]];
          if (l.trans[q].empty()) {
            l.trans[q] = perm_compose(s, l.trans[l.orbit[k]]);
            l.orbit.push_back(q);
          }
        }
    }
    // Schreier generators of the point stabiliser.
    for (size_t k = 0; k < levels_[i].orbit.size(); ++k) {
      for (size_t j = 0; j < levels_[i].gens.size(); ++j) {
        const ChainLevel& l = levels_[i];
        int p = l.orbit[k];
        const Perm& s = l.gens[j];
        Perm h = perm_compose(perm_inverse(l.trans[s[p]]), perm_compose(s, l.trans[p]));
        Perm r = sift(h, i + 1);
        if (!is_identity(r)) add_at(i + 1, r);
      }
    }
  }

  int degree_;
  std::vector<ChainLevel> levels_;
};

}  // namespace

std::uint64_t group_order(const DartGraph& g, std::span<const Automorphism> gens) {
  const int nv = g.num_vertices();
  StabiliserChain chain(nv + g.num_darts());
  for (const Automorphism& a : gens) {
    Perm p(a.vertex_map.begin(), a.vertex_map.end());
    for (int x : a.dart_map) p.push_back(nv + x);
    chain.add_generator(p);
  }
  return chain.order();
}

}  // namespace ccv
