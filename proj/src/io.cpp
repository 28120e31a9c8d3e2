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

#include "ccv/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "ccv/error.hpp"

namespace ccv {

namespace {

struct Token {
  std::string_view text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    Line l{number, {}};
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start)
        l.tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

Int parse_int(const Line& line, size_t k) {
  if (k >= line.tokens.size()) {
    int col = line.tokens.back().column + static_cast<int>(line.tokens.back().text.size());
    throw ParseError(line.number, col, "missing integer field");
  }
  const Token& t = line.tokens[k];
  Int value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError(line.number, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  return value;
}

void expect_fields(const Line& line, size_t count) {
  if (line.tokens.size() < count) parse_int(line, line.tokens.size());
  if (line.tokens.size() > count)
    throw ParseError(line.number, line.tokens[count].column, "unexpected extra field");
}

struct Records {
  std::optional<DartGraph> graph;
  std::map<Int, std::pair<Int, const Line*>> lambda, iota, zeta;
};

Records parse(std::string_view text, bool allow_voltage, std::vector<Line>& lines) {
  const std::string header = allow_voltage ? "cvg" : "dgf";
  lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected '" + header + " 1'");
  const Line& head = lines[0];
  if (head.tokens[0].text != header)
    throw ParseError(head.number, head.tokens[0].column, "expected header '" + header + " 1'");
  expect_fields(head, 2);
  if (parse_int(head, 1) != 1)
    throw ParseError(head.number, head.tokens[1].column, "unsupported format version");
  Int nv = -1;
  std::map<Int, std::pair<Int, Int>> darts;
  std::map<Int, const Line*> dart_line;
  Records r;
  for (size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    std::string_view kind = l.tokens[0].text;
    if (kind == "v") {
      expect_fields(l, 2);
      if (nv >= 0) throw ParseError(l.number, l.tokens[0].column, "duplicate 'v' record");
      nv = parse_int(l, 1);
      if (nv < 0) throw ParseError(l.number, l.tokens[1].column, "negative vertex count");
    } else if (kind == "d") {
      expect_fields(l, 4);
      Int id = parse_int(l, 1);
      if (darts.count(id)) throw ParseError(l.number, l.tokens[1].column, "duplicate dart id");
      darts[id] = {parse_int(l, 2), parse_int(l, 3)};
      dart_line[id] = &l;
    } else if (allow_voltage && (kind == "l" || kind == "i" || kind == "z")) {
      expect_fields(l, 3);
      auto& table = kind == "l" ? r.lambda : kind == "i" ? r.iota : r.zeta;
      Int id = parse_int(l, 1);
      if (table.count(id))
        throw ParseError(l.number, l.tokens[1].column, "duplicate '" + std::string(kind) + "' record");
      table[id] = {parse_int(l, 2), &l};
    } else {
      throw ParseError(l.number, l.tokens[0].column, "unknown record '" + std::string(kind) + "'");
    }
  }
  if (nv < 0) throw ParseError(head.number, 1, "missing 'v' record");
  const Int nd = static_cast<Int>(darts.size());
  std::vector<Vertex> beg(nd);
  std::vector<Dart> inv(nd);
  Int expected = 0;
  for (auto& [id, bi] : darts) {
    const Line& l = *dart_line[id];
    if (id != expected) throw ParseError(l.number, l.tokens[1].column, "dart ids must be 0..D-1 without gaps");
    ++expected;
    if (bi.first < 0 || bi.first >= nv)
      throw ParseError(l.number, l.tokens[2].column, "vertex out of range");
    if (bi.second < 0 || bi.second >= nd)
      throw ParseError(l.number, l.tokens[3].column, "inverse dart out of range");
    beg[id] = static_cast<Vertex>(bi.first);
    inv[id] = static_cast<Dart>(bi.second);
  }
  for (auto& [id, bi] : darts) {
    if (darts[bi.second].second != id) {
      const Line& l = *dart_line[id];
      throw ParseError(l.number, l.tokens[3].column, "inverse map is not an involution");
    }
  }
  r.graph = DartGraph(static_cast<int>(nv), std::move(beg), std::move(inv));
  return r;
}

void check_ids(const std::map<Int, std::pair<Int, const Line*>>& table, Int limit,
               const char* what) {
  for (auto& [id, value] : table) {
    if (id < 0 || id >= limit)
      throw ParseError(value.second->number, value.second->tokens[1].column,
                       std::string(what) + " id out of range");
  }
}

}  // namespace

namespace {

void write_body(std::ostream& os, const DartGraph& g) {
  os << "v " << g.num_vertices() << "\n";
  for (Dart x = 0; x < g.num_darts(); ++x)
    os << "d " << x << ' ' << g.beg(x) << ' ' << g.inv(x) << "\n";
}

}  // namespace

std::string write_dgf(const DartGraph& g) {
  std::ostringstream os;
  os << "dgf 1\n";
  write_body(os, g);
  return os.str();
}

DartGraph read_dgf(std::string_view text) {
  std::vector<Line> lines;
  return *parse(text, false, lines).graph;
}

std::string write_cvg(const CyclicVoltageGraph& cvg) {
  const DartGraph& g = cvg.graph();
  std::ostringstream os;
  os << "cvg 1\n";
  write_body(os, g);
  for (Dart x = 0; x < g.num_darts(); ++x) os << "l " << x << ' ' << cvg.lambda(x) << "\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) os << "i " << v << ' ' << cvg.iota(v) << "\n";
  for (Dart x = 0; x < g.num_darts(); ++x)
    if (carrier(g, x) == x && cvg.zeta(x) != 0) os << "z " << x << ' ' << cvg.zeta(x) << "\n";
  return os.str();
}

CyclicVoltageGraph read_cvg(std::string_view text) {
  std::vector<Line> lines;
  Records r = parse(text, true, lines);
  const DartGraph& g = *r.graph;
  check_ids(r.lambda, g.num_darts(), "dart");
  check_ids(r.zeta, g.num_darts(), "dart");
  check_ids(r.iota, g.num_vertices(), "vertex");
  std::vector<int> lambda(g.num_darts(), 1);
  for (auto& [id, value] : r.lambda) {
    if (value.first < 1)
      throw ParseError(value.second->number, value.second->tokens[2].column, "label must be positive");
    lambda[id] = static_cast<int>(value.first);
  }
  std::vector<Int> iota(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto it = r.iota.find(v);
    if (it == r.iota.end()) throw ParseError(lines.back().number, 1, "missing 'i' record for vertex " + std::to_string(v));
    if (it->second.first < 1)
      throw ParseError(it->second.second->number, it->second.second->tokens[2].column, "index must be positive");
    iota[v] = it->second.first;
  }
  LabelledGraph lg(g, lambda);
  std::vector<Int> z(g.num_darts(), 0);
  for (Dart x = 0; x < g.num_darts(); ++x) {
    if (carrier(g, x) != x) continue;
    Dart y = g.inv(x);
    auto zx = r.zeta.find(x);
    auto zy = r.zeta.find(y);
    if (zx != r.zeta.end()) {
      z[x] = zx->second.first;
      if (zy != r.zeta.end() && y != x) {
        Int m = checked_mul(lambda[x], iota[g.beg(x)]);
        if (mod(zx->second.first + zy->second.first, m) != 0)
          throw ParseError(zy->second.second->number, zy->second.second->tokens[2].column,
                           "voltage does not cancel its inverse dart");
      }
    } else if (zy != r.zeta.end()) {
      z[x] = -zy->second.first;
    }
  }
  try {
    return CyclicVoltageGraph::from_carriers(lg, iota, z);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(lines.back().number, 1, e.what());
  }
}

std::string write_graph6(const DartGraph& g) {
  if (!is_simple(g)) throw Error("graph6 needs a simple graph");
  const Int n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw Error("graph too large for graph6");
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (Dart x = 0; x < g.num_darts(); ++x) adj[g.beg(x)][g.term(x)] = 1;
  int bits = 0, acc = 0;
  for (Int j = 1; j < n; ++j) {
    for (Int i = 0; i < j; ++i) {
      acc = (acc << 1) | adj[i][j];
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

DartGraph read_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw ParseError(1, static_cast<int>(pos) + 1, "graph6 string too short");
    int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError(1, static_cast<int>(pos) + 1, "invalid graph6 character");
    ++pos;
    return c - 63;
  };
  Int n = next();
  if (n == 63) {
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | next();
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  int bits = 0, acc = 0;
  for (Int j = 1; j < n; ++j) {
    for (Int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      --bits;
      if ((acc >> bits) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (pos != text.size()) throw ParseError(1, static_cast<int>(pos) + 1, "trailing characters after graph6 data");
  std::sort(edges.begin(), edges.end());
  return simple_graph(static_cast<int>(n), edges);
}

std::string write_dot(const DartGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) os << "  " << v << ";\n";
  for (Dart x = 0; x < g.num_darts(); ++x) {
    if (carrier(g, x) != x) continue;
    if (classify_edge(g, x) == EdgeKind::kSemiEdge) {
      os << "  s" << x << " [shape=point];\n";
      os << "  " << g.beg(x) << " -- s" << x << " [style=dashed];\n";
    } else {
      os << "  " << g.beg(x) << " -- " << g.term(x) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("cannot write " + path);
}

}  // namespace ccv
