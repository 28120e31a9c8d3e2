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

// ccv: command-line front end for cyclic generalised voltage graphs.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "ccv/analysis.hpp"
#include "ccv/enumeration.hpp"
#include "ccv/error.hpp"
#include "ccv/families.hpp"
#include "ccv/io.hpp"
#include "ccv/isomorphism.hpp"
#include "ccv/voltage.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string extension(const std::string& path) {
  return fs::path(path).extension().string();
}

// Reads a graph from .g6, .dgf or .cvg (the cover of the latter).
ccv::DartGraph load_graph(const std::string& path) {
  std::string ext = extension(path);
  std::string text = ccv::read_file(path);
  if (ext == ".g6") return ccv::read_graph6(text);
  if (ext == ".dgf") return ccv::read_dgf(text);
  if (ext == ".cvg") return ccv::expand(ccv::read_cvg(text)).graph;
  throw ccv::Error("unknown input format '" + ext + "' (expected .g6, .dgf or .cvg)");
}

std::string render_graph(const ccv::DartGraph& g, const std::string& ext) {
  if (ext == ".g6") return ccv::write_graph6(g) + "\n";
  if (ext == ".dgf") return ccv::write_dgf(g);
  if (ext == ".dot") return ccv::write_dot(g);
  throw ccv::Error("unknown output format '" + ext + "' (expected .g6, .dgf or .dot)");
}

void emit(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-")
    std::cout << content;
  else
    ccv::write_file(out, content);
}

void emit_json(const std::string& out, const json& j) { emit(out, j.dump(2) + "\n"); }

json params_json(const ccv::FamilyParams& p) {
  json j;
  j["index"] = p.index;
  j["m"] = p.m;
  j["r"] = p.r ? json(*p.r) : json(nullptr);
  j["s"] = p.s ? json(*p.s) : json(nullptr);
  return j;
}

int census_bound_default() {
  if (const char* env = std::getenv("CCV_MAX_ORDER")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ccv::Error(std::string("CCV_MAX_ORDER is not an integer: ") + env);
    }
  }
  return ccv::kDefaultCensusOrder;
}

std::string template_file_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "delta_%02d.cvg", index);
  return buf;
}

json families_manifest() {
  json list = json::array();
  for (int i = 1; i <= ccv::kNumTemplates; ++i) {
    const ccv::QuotientTemplate& t = ccv::quotient_template(i);
    json e;
    e["index"] = i;
    e["file"] = template_file_name(i);
    e["arity"] = t.arity();
    e["vertices"] = t.labelled.graph.num_vertices();
    e["minimal_iota"] = t.minimal_iota;
    e["distinguished_vertex"] = t.distinguished_vertex;
    e["slots"] = t.slots;
    e["forced_m"] = t.forced_m ? json(*t.forced_m) : json(nullptr);
    e["predicate"] = ccv::predicate_text(i);
    e["canonical_key"] = ccv::labelled_canonical_key(t.labelled);
    list.push_back(e);
  }
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic generalised voltage graphs: covers, families, quotients and census"};
  app.require_subcommand(1);

  std::string in, out, named;

  auto* cover = app.add_subcommand("cover", "Expand a .cvg file into its cover graph");
  cover->add_option("--in", in, "input .cvg file")->required();
  cover->add_option("--out", out, "output file (.g6, .dgf or .dot); .dgf to stdout if omitted");

  int index = 0;
  ccv::Int m = 0;
  std::optional<ccv::Int> r, s;
  bool explain = false;
  auto* family = app.add_subcommand("family", "Build the cover Gamma_i(m;r,s)");
  family->add_option("--index", index, "family index 1..25")->required();
  family->add_option("--m", m, "parameter m")->required();
  family->add_option("--r", r, "slot r");
  family->add_option("--s", s, "slot s");
  family->add_option("--out", out, "output file (.cvg, .g6, .dgf or .dot); graph6 to stdout if omitted");
  family->add_flag("--explain", explain, "print the admissibility predicate that was checked");

  int max_vertices = 3;
  std::string filter = "ccv";
  auto* enumerate = app.add_subcommand("enumerate-quotients",
                                       "Enumerate dart-labelled cubic quotients on few vertices");
  enumerate->add_option("--max-vertices", max_vertices, "1..3")->check(CLI::Range(1, 3));
  enumerate->add_option("--filter", filter, "ccv (realisable) or labels (label conditions only)")
      ->check(CLI::IsMember({"ccv", "labels"}));
  enumerate->add_option("--out", out, "directory for .cvg skeletons and manifest.json");

  int max_orbits = 3;
  auto* quot = app.add_subcommand("quotient", "Quotients of a graph by its cyclic automorphism groups");
  auto* quot_in = quot->add_option("--in", in, "input graph (.g6, .dgf or .cvg)");
  quot->add_option("--named", named, "named graph instead of a file");
  quot->add_option("--max-orbits", max_orbits, "1..3")->check(CLI::Range(1, 3));
  quot->add_option("--out", out, "JSON output file");

  auto* check = app.add_subcommand("check", "Evaluate the ccv criteria on a .cvg file");
  check->add_option("--in", in, "input .cvg file")->required();

  int max_order = 0;
  unsigned threads = 0;
  std::string json_out;
  auto* census = app.add_subcommand("census", "Vertex-transitivity census of all families");
  census->add_option("--max-order", max_order, "largest cover order (default 48 or $CCV_MAX_ORDER)");
  census->add_option("--json", json_out, "JSON output file");
  census->add_option("--threads", threads, "worker threads (0 = hardware)");

  int c = 0, max_c = 10;
  auto* analyze = app.add_subcommand("analyze", "Girth, signatures and transitivity of a cubic graph");
  auto* analyze_in = analyze->add_option("--in", in, "input graph (.g6, .dgf or .cvg)");
  analyze->add_option("--named", named, "named graph instead of a file");
  analyze->add_option("--c", c, "cycle length for the signatures (default: girth)");
  analyze->add_option("--max-c", max_c, "report c-cycle-regularity for c up to this bound")
      ->check(CLI::Range(1, ccv::kMaxCycleLength));
  analyze->add_option("--out", out, "JSON output file");

  auto* convert = app.add_subcommand("convert", "Convert between graph formats");
  convert->add_option("--in", in, "input file (.g6, .dgf or .cvg)")->required();
  convert->add_option("--out", out, "output file (.g6, .dgf, .dot or .cvg)")->required();

  auto* families = app.add_subcommand("families", "Family templates");
  families->require_subcommand(1);
  auto* families_list = families->add_subcommand("list", "Print each family's admissibility predicate");
  std::string dir = "templates";
  auto* families_export = families->add_subcommand("export", "Write the template .cvg files");
  families_export->add_option("--dir", dir, "output directory");

  quot->callback([&] {
    if (quot_in->count() == 0 && named.empty()) throw CLI::ValidationError("--in or --named is required");
  });
  analyze->callback([&] {
    if (analyze_in->count() == 0 && named.empty()) throw CLI::ValidationError("--in or --named is required");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cover) {
      ccv::CyclicVoltageGraph cvg = ccv::read_cvg(ccv::read_file(in));
      ccv::DartGraph g = ccv::expand(cvg).graph;
      std::string ext = out.empty() ? ".dgf" : extension(out);
      if (ext == ".g6" && !ccv::is_simple(g))
        throw ccv::Error("the cover is not simple and cannot be written as graph6");
      emit(out, render_graph(g, ext));
    } else if (*family) {
      ccv::FamilyParams p{index, m, r, s};
      ccv::Admissibility a = ccv::check_admissible(p);
      if (explain) std::cerr << ccv::family_name(p) << ": " << a.clause << "\n";
      ccv::CyclicVoltageGraph cvg = ccv::make_family(p);
      std::string ext = out.empty() ? ".g6" : extension(out);
      if (ext == ".cvg")
        emit(out, ccv::write_cvg(cvg));
      else
        emit(out, render_graph(ccv::expand(cvg).graph, ext));
    } else if (*enumerate) {
      auto f = filter == "ccv" ? ccv::QuotientFilter::kCcvRealisable
                               : ccv::QuotientFilter::kLabelConditions;
      auto classes = ccv::enumerate_quotients(max_vertices, f);
      json manifest;
      manifest["max_vertices"] = max_vertices;
      manifest["filter"] = filter;
      manifest["count"] = classes.size();
      json list = json::array();
      for (size_t k = 0; k < classes.size(); ++k) {
        const auto& cls = classes[k];
        int t = ccv::match_template(cls.representative);
        json e;
        e["canonical_key"] = cls.canonical_key;
        e["vertices"] = cls.representative.graph.num_vertices();
        e["template"] = t > 0 ? json(t) : json(nullptr);
        if (!out.empty()) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "class_%02zu.cvg", k + 1);
          std::string file = t > 0 ? template_file_name(t) : std::string(buf);
          ccv::CyclicVoltageGraph skel = t > 0 ? ccv::template_skeleton(t)
                                               : ccv::ccv_extension(cls.representative);
          e["file"] = file;
          fs::create_directories(out);
          ccv::write_file((fs::path(out) / file).string(), ccv::write_cvg(skel));
        }
        list.push_back(e);
      }
      manifest["classes"] = list;
      if (out.empty())
        emit_json("", manifest);
      else
        emit_json((fs::path(out) / "manifest.json").string(), manifest);
      std::cerr << classes.size() << " classes\n";
    } else if (*quot) {
      ccv::DartGraph g = named.empty() ? load_graph(in) : ccv::named_graph(named);
      auto report = ccv::cyclic_quotients(g, max_orbits);
      json j;
      j["aut_order"] = report.aut_order;
      j["indices"] = report.indices;
      json list = json::array();
      for (const auto& q : report.quotients) {
        json e;
        e["order"] = q.order;
        e["orbits"] = q.quotient.graph.num_vertices();
        e["template"] = q.template_index > 0 ? json(q.template_index) : json(nullptr);
        e["canonical_key"] = ccv::labelled_canonical_key(q.quotient);
        e["generator"] = q.generator.vertex_map;
        list.push_back(e);
      }
      j["quotients"] = list;
      emit_json(out, j);
    } else if (*check) {
      ccv::CyclicVoltageGraph cvg = ccv::read_cvg(ccv::read_file(in));
      ccv::SpanningTree t = ccv::spanning_tree(cvg.graph());
      json j;
      j["extendable"] = ccv::extend(cvg.labelled()).extendable;
      j["connected"] = ccv::is_connected_cover(ccv::t_normalise(cvg, t), t);
      j["simple"] = ccv::is_simple_cover(cvg);
      j["cubic"] = ccv::is_cubic_cover(cvg);
      j["ccv"] = ccv::is_ccv(cvg);
      emit_json("", j);
    } else if (*census) {
      int bound = max_order > 0 ? max_order : census_bound_default();
      auto records = ccv::census(bound, threads);
      json list = json::array();
      size_t disagreements = 0, vt = 0;
      for (const auto& rec : records) {
        json e = params_json(rec.params);
        e["order"] = rec.order;
        e["vt"] = rec.vertex_transitive;
        e["clause"] = rec.clause ? json(*rec.clause) : json(nullptr);
        e["aut_order"] = rec.aut_order;
        e["girth"] = rec.girth;
        list.push_back(e);
        vt += rec.vertex_transitive;
        disagreements += !rec.agrees();
      }
      emit_json(json_out, list);
      std::cerr << records.size() << " parameter points, " << vt << " vertex-transitive, "
                << disagreements << " disagreements\n";
      return disagreements == 0 ? 0 : 1;
    } else if (*analyze) {
      ccv::DartGraph g = named.empty() ? load_graph(in) : ccv::named_graph(named);
      ccv::SignatureReport rep = ccv::analyze(g, c);
      json j;
      j["vertices"] = g.num_vertices();
      j["girth"] = rep.girth;
      j["c"] = rep.c;
      j["signatures"] = rep.signatures;
      j["cycle_regular"] = rep.cycle_regular;
      j["vertex_transitive"] = rep.vertex_transitive;
      j["arc_transitive"] = rep.arc_transitive;
      j["aut_order"] = rep.aut_order;
      json regular = json::object();
      for (int k = rep.girth; k <= max_c; ++k) {
        bool same = true;
        auto first = ccv::c_signature(g, 0, k);
        for (ccv::Vertex v = 1; v < g.num_vertices() && same; ++v)
          same = ccv::c_signature(g, v, k) == first;
        regular[std::to_string(k)] = same;
      }
      j["cycle_regular_by_c"] = regular;
      emit_json(out, j);
    } else if (*convert) {
      std::string ext_in = extension(in), ext_out = extension(out);
      if (ext_in == ".cvg" && ext_out == ".cvg") {
        ccv::write_file(out, ccv::write_cvg(ccv::read_cvg(ccv::read_file(in))));
      } else {
        if (ext_out == ".cvg") throw ccv::Error("only a .cvg file converts to .cvg");
        ccv::DartGraph g = load_graph(in);
        if (ext_out == ".g6" && !ccv::is_simple(g))
          throw ccv::Error("graph is not simple and cannot be written as graph6");
        ccv::write_file(out, render_graph(g, ext_out));
      }
    } else if (*families_list) {
      for (int i = 1; i <= ccv::kNumTemplates; ++i)
        std::cout << i << "\t" << ccv::quotient_template(i).arity() << "\t"
                  << ccv::predicate_text(i) << "\n";
    } else if (*families_export) {
      fs::create_directories(dir);
      for (int i = 1; i <= ccv::kNumTemplates; ++i)
        ccv::write_file((fs::path(dir) / template_file_name(i)).string(),
                        ccv::write_cvg(ccv::template_skeleton(i)));
      emit_json((fs::path(dir) / "manifest.json").string(), families_manifest());
    }
  } catch (const ccv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
