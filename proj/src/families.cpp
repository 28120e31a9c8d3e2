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

#include "ccv/families.hpp"

#include <array>
#include <charconv>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ccv/error.hpp"

namespace ccv {

namespace {

// One edge of a template: 'S' semi-edge at u, 'L' loop at u, 'E' link from
// u to v with labels lu at u and lv at v. slot is -1, 0 (r) or 1 (s).
struct EdgeSpec {
  char kind;
  int u;
  int v = 0;
  int lu = 1;
  int lv = 1;
  int slot = -1;
};

constexpr int kR = 0;
constexpr int kS = 1;

EdgeSpec S(int u) { return {'S', u}; }
EdgeSpec L(int u, int slot) { return {'L', u, u, 1, 1, slot}; }
EdgeSpec E(int u, int v, int lu = 1, int lv = 1, int slot = -1) {
  return {'E', u, v, lu, lv, slot};
}
EdgeSpec Er(int u, int v, int slot) { return {'E', u, v, 1, 1, slot}; }

struct TemplateSpec {
  int vertices;
  std::vector<EdgeSpec> edges;
};

// Vertex 0 is the distinguished vertex: the vertex of least index in the
// minimal extension. Slot placement follows the family predicates and the
// named covers (Pappus, Tutte-Coxeter, GP(m,r), Haar graphs).
const std::array<TemplateSpec, kNumTemplates>& specs() {
  static const std::array<TemplateSpec, kNumTemplates> table = {{
      /* 1 */ {1, {L(0, kR), S(0)}},
      /* 2 */ {2, {L(0, kR), E(0, 1), L(1, kS)}},
      /* 3 */ {2, {E(0, 1), Er(0, 1, kR), S(0), S(1)}},
      /* 4 */ {2, {E(0, 1), Er(0, 1, kR), Er(0, 1, kS)}},
      /* 5 */ {2, {E(0, 1, 2, 1), S(0), L(1, kR)}},
      /* 6 */ {2, {E(0, 1, 3, 1), L(1, kR)}},
      /* 7 */ {3, {E(0, 1, 3, 1), E(2, 1, 3, 1), S(1)}},
      /* 8 */ {3, {E(0, 2, 2, 1), E(1, 2, 2, 1), Er(0, 1, kR), S(2)}},
      /* 9 */ {3, {E(0, 1, 3, 1), E(2, 1, 2, 1), S(1), S(2)}},
      /* 10 */ {3, {E(0, 1, 2, 1), E(2, 1, 2, 1), S(0), S(1), S(2)}},
      /* 11 */ {2, {E(0, 1, 3, 2), S(1)}},
      /* 12 */ {3, {E(0, 1, 2, 1), S(0), S(1), E(1, 2), L(2, kR)}},
      /* 13 */ {3, {E(0, 1, 3, 1), S(1), E(1, 2), L(2, kR)}},
      /* 14 */ {3, {E(0, 1, 3, 2), E(1, 2), L(2, kR)}},
      /* 15 */ {3, {E(0, 1, 2, 1), S(0), E(1, 2, 2, 3)}},
      /* 16 */ {3, {E(0, 1, 3, 1), E(1, 2, 2, 3)}},
      /* 17 */ {3, {E(0, 1), L(0, kR), E(1, 2, 2, 1), L(2, kS)}},
      /* 18 */ {3, {E(0, 1, 2, 1), S(0), E(1, 2, 2, 1), L(2, kR)}},
      /* 19 */ {3, {E(0, 1, 3, 1), E(1, 2, 2, 1), L(2, kR)}},
      /* 20 */ {3, {E(0, 1, 3, 1), E(1, 2), Er(1, 2, kR), S(2)}},
      /* 21 */ {3, {E(0, 1, 2, 1), S(0), E(1, 2), Er(1, 2, kR), S(2)}},
      /* 22 */ {3, {E(0, 1), Er(0, 1, kR), S(0), E(1, 2), L(2, kS)}},
      /* 23 */ {3, {Er(0, 1, kR), Er(0, 1, kS), E(0, 2), E(1, 2), S(2)}},
      /* 24 */ {3, {E(0, 1), E(1, 2), Er(2, 0, kR), S(0), S(1), S(2)}},
      /* 25 */ {3, {S(0), E(0, 1), E(0, 2), L(1, kR), L(2, kS)}},
  }};
  return table;
}

QuotientTemplate build_template(int index) {
  const TemplateSpec& spec = specs()[index - 1];
  GraphBuilder b(spec.vertices);
  std::vector<int> lambda;
  QuotientTemplate t;
  t.index = index;
  std::array<Dart, 2> slot{-1, -1};
  for (const EdgeSpec& e : spec.edges) {
    Dart x = -1;
    switch (e.kind) {
      case 'S':
        x = b.add_semi_edge(e.u);
        lambda.push_back(1);
        break;
      case 'L':
        x = b.add_loop(e.u);
        lambda.push_back(1);
        lambda.push_back(1);
        break;
      default:
        x = b.add_link(e.u, e.v);
        lambda.push_back(e.lu);
        lambda.push_back(e.lv);
        if (e.slot < 0) t.tree_edges.push_back(x);
        break;
    }
    if (e.slot >= 0) slot[e.slot] = x;
  }
  for (Dart x : slot)
    if (x >= 0) t.slots.push_back(x);
  t.labelled = LabelledGraph(b.build(), lambda);
  t.distinguished_vertex = 0;
  Extension ext = extend(t.labelled);
  if (!ext.extendable) throw Error("internal: template is not extendable");
  t.minimal_iota = ext.iota;
  static const std::array<int, kNumTemplates + 1> forced = {
      0, 0, 0, 0, 0, 0, 0, 2, 0, 4, 2, 4, 0, 0, 0, 6, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  if (forced[index] > 0) t.forced_m = forced[index];
  return t;
}

bool even(Int a) { return a % 2 == 0; }

struct Condition {
  std::string text;
  bool holds;
};

// Family predicate conditions in order; m, r, s already present per arity.
std::vector<Condition> family_conditions(int i, Int m, Int r, Int s) {
  auto g2 = [](Int a, Int b) { return std::gcd(a, b); };
  switch (i) {
    case 7: case 9: case 10: case 11: case 15: case 16:
      return {{"m = " + std::to_string(*quotient_template(i).forced_m),
               m == *quotient_template(i).forced_m}};
    case 1:
      return {{"m even", even(m)}, {"m >= 4", m >= 4}, {"r != 0", r != 0},
              {"gcd(m/2, r) = 1", even(m) && g2(m / 2, r) == 1}};
    case 3: case 12: case 13: case 14: case 18: case 20: case 21:
      return {{"m even", even(m)}, {"r != 0", r != 0},
              {"gcd(m/2, r) = 1", even(m) && g2(m / 2, r) == 1}};
    case 6: case 19:
      return {{"r != 0", r != 0}, {"gcd(m, r) = 1", g2(m, r) == 1}};
    case 8:
      return {{"gcd(m, r) = 1", g2(m, r) == 1}};
    case 2: case 17:
      return {{"m >= 3", m >= 3}, {"r != 0", r != 0}, {"s != 0", s != 0},
              {"gcd(m, r, s) = 1", g2(g2(m, r), s) == 1}};
    case 4:
      return {{"m >= 3", m >= 3}, {"0 < r < s", 0 < r && r < s},
              {"gcd(m, r, s) = 1", g2(g2(m, r), s) == 1}};
    case 5:
      return {{"m even", even(m)}, {"r != 0", r != 0},
              {"gcd(m/2, r) = 1", even(m) && g2(m / 2, r) == 1}};
    case 23:
      return {{"m even", even(m)}, {"r != s", r != s},
              {"gcd(m/2, r) = 1", even(m) && g2(m / 2, r) == 1}};
    case 24:
      return {{"m even", even(m)}, {"gcd(m/2, r) = 1", even(m) && g2(m / 2, r) == 1}};
    case 22: case 25:
      return {{"m even", even(m)}, {"m >= 4", m >= 4}, {"r != 0", r != 0},
              {"s != 0", s != 0},
              {"gcd(m/2, r, s) = 1", even(m) && g2(g2(m / 2, r), s) == 1}};
    default:
      throw Error("template index out of range");
  }
}

void check_index(int i) {
  if (i < 1 || i > kNumTemplates)
    throw Error("template index " + std::to_string(i) + " is outside 1..25");
}

const char* kSlotNames[] = {"r", "s"};

}  // namespace

const QuotientTemplate& quotient_template(int i) {
  check_index(i);
  static std::once_flag once;
  static std::array<QuotientTemplate, kNumTemplates> table;
  std::call_once(once, [] {
    for (int k = 1; k <= kNumTemplates; ++k) table[k - 1] = build_template(k);
  });
  return table[i - 1];
}

std::string predicate_text(int index) {
  const QuotientTemplate& t = quotient_template(index);
  std::string out;
  for (const auto& c : family_conditions(index, 0, 0, 0)) {
    if (!out.empty()) out += ", ";
    out += c.text;
  }
  for (int k = 0; k < t.arity(); ++k) {
    Dart x = t.slots[k];
    const DartGraph& g = t.labelled.graph;
    out += ", ";
    if (classify_edge(g, x) == EdgeKind::kLoop)
      out += std::string("0 < ") + kSlotNames[k] + " < iota, " + kSlotNames[k] + " != iota/2";
    else
      out += std::string("0 <= ") + kSlotNames[k] + " < gcd of end indices";
  }
  return out;
}

Int cover_order(int index, Int m) {
  const QuotientTemplate& t = quotient_template(index);
  Int base = t.minimal_iota[t.distinguished_vertex];
  if (m < 1 || m % base != 0) throw Error("m must be a positive multiple of " + std::to_string(base));
  Int total = 0;
  for (Int i : t.minimal_iota) total += i * (m / base);
  return total;
}

Admissibility check_admissible(const FamilyParams& p) {
  Admissibility a;
  if (p.index < 1 || p.index > kNumTemplates) {
    a.violation = "index must be in 1..25";
    return a;
  }
  const QuotientTemplate& t = quotient_template(p.index);
  a.clause = predicate_text(p.index);
  if (p.m < 1) {
    a.violation = "m >= 1";
    return a;
  }
  if (t.arity() >= 1 && !p.r) {
    a.violation = "r is required";
    return a;
  }
  if (t.arity() < 1 && p.r) {
    a.violation = "this family takes no r";
    return a;
  }
  if (t.arity() >= 2 && !p.s) {
    a.violation = "s is required";
    return a;
  }
  if (t.arity() < 2 && p.s) {
    a.violation = "this family takes no s";
    return a;
  }
  Int base = t.minimal_iota[t.distinguished_vertex];
  if (p.m % base != 0) {
    a.violation = "m is a multiple of " + std::to_string(base);
    return a;
  }
  for (const auto& c : family_conditions(p.index, p.m, p.r.value_or(0), p.s.value_or(0))) {
    if (!c.holds) {
      a.violation = c.text;
      return a;
    }
  }
  const DartGraph& g = t.labelled.graph;
  Int c = p.m / base;
  for (int k = 0; k < t.arity(); ++k) {
    Dart x = t.slots[k];
    Int value = k == 0 ? *p.r : *p.s;
    Int iu = t.minimal_iota[g.beg(x)] * c;
    Int iv = t.minimal_iota[g.term(x)] * c;
    Int d = std::gcd(iu, iv);
    std::string name = kSlotNames[k];
    if (classify_edge(g, x) == EdgeKind::kLoop) {
      if (value <= 0 || value >= iu) {
        a.violation = "0 < " + name + " < " + std::to_string(iu);
        return a;
      }
      if (2 * value == iu) {
        a.violation = name + " != " + std::to_string(iu / 2);
        return a;
      }
    } else if (value < 0 || value >= d) {
      a.violation = "0 <= " + name + " < " + std::to_string(d);
      return a;
    }
  }
  a.ok = true;
  return a;
}

bool admissible(const FamilyParams& p) { return check_admissible(p).ok; }

CyclicVoltageGraph instantiate(const FamilyParams& p) {
  const QuotientTemplate& t = quotient_template(p.index);
  std::vector<Int> iota = scaled_iota(t.labelled, t.distinguished_vertex, p.m);
  const DartGraph& g = t.labelled.graph;
  std::vector<Int> z(g.num_darts(), 0);
  for (Dart x = 0; x < g.num_darts(); ++x)
    if (classify_edge(g, x) == EdgeKind::kSemiEdge) z[x] = iota[g.beg(x)] / 2;
  if (t.arity() >= 1) z[t.slots[0]] = p.r.value_or(0);
  if (t.arity() >= 2) z[t.slots[1]] = p.s.value_or(0);
  return CyclicVoltageGraph::from_carriers(t.labelled, iota, z);
}

CyclicVoltageGraph make_family(const FamilyParams& p) {
  Admissibility a = check_admissible(p);
  if (!a.ok)
    throw Error("inadmissible parameters for " + family_name(p) + ": condition '" +
                a.violation + "' fails (family predicate: " + a.clause + ")");
  return instantiate(p);
}

CyclicVoltageGraph template_skeleton(int index) {
  const QuotientTemplate& t = quotient_template(index);
  return CyclicVoltageGraph::from_carriers(
      t.labelled, t.minimal_iota,
      std::vector<Int>(t.labelled.graph.num_darts(), 0));
}

std::string family_name(const FamilyParams& p) {
  std::ostringstream os;
  os << "Gamma_" << p.index << "(" << p.m;
  if (p.r) os << ";" << *p.r;
  if (p.s) os << "," << *p.s;
  os << ")";
  return os.str();
}

DartGraph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) throw Error("GP(n,k) needs n >= 3 and 1 <= k < n/2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + k) % n);
  }
  return simple_graph(2 * n, edges);
}

DartGraph prism(int n) {
  if (n < 3) throw Error("prism needs n >= 3");
  return generalized_petersen(n, 1);
}

DartGraph moebius_ladder(int n) {
  if (n < 2) throw Error("Moebius ladder needs n >= 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 2 * n; ++i) edges.emplace_back(i, (i + 1) % (2 * n));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, i + n);
  return simple_graph(2 * n, edges);
}

DartGraph lcf_graph(int n, const std::vector<int>& jumps) {
  if (jumps.empty() || n % static_cast<int>(jumps.size()) != 0)
    throw Error("LCF jump list must divide the cycle length");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    int j = static_cast<int>(mod(i + jumps[i % jumps.size()], n));
    if (i < j) edges.emplace_back(i, j);
  }
  return simple_graph(n, edges);
}

namespace {

std::vector<int> parse_args(std::string_view name, std::string_view prefix, size_t count) {
  std::string_view body = name.substr(prefix.size());
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw Error("malformed graph name '" + std::string(name) + "'");
  body = body.substr(1, body.size() - 2);
  std::vector<int> out;
  while (true) {
    size_t comma = body.find(',');
    std::string_view part = body.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw Error("malformed graph name '" + std::string(name) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  if (out.size() != count) throw Error("wrong number of parameters in '" + std::string(name) + "'");
  return out;
}

}  // namespace

DartGraph named_graph(std::string_view name) {
  if (name == "K4") return lcf_graph(4, {2});
  if (name == "K33") return lcf_graph(6, {3});
  if (name == "Q3") return generalized_petersen(4, 1);
  if (name == "Petersen") return generalized_petersen(5, 2);
  if (name == "Heawood") return lcf_graph(14, {5, -5});
  if (name == "Pappus") return lcf_graph(18, {5, 7, -7, 7, -7, -5});
  if (name == "Dodecahedron") return generalized_petersen(10, 2);
  if (name == "TutteCoxeter") return lcf_graph(30, {-13, -9, 7, -7, 9, 13});
  if (name.starts_with("GP(")) {
    auto a = parse_args(name, "GP", 2);
    return generalized_petersen(a[0], a[1]);
  }
  if (name.starts_with("Prism(")) return prism(parse_args(name, "Prism", 1)[0]);
  if (name.starts_with("Moebius(")) return moebius_ladder(parse_args(name, "Moebius", 1)[0]);
  throw Error("unknown graph name '" + std::string(name) + "'");
}

}  // namespace ccv
