#include "dbw/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "dbw/errors.hpp"
#include "json.hpp"

namespace dbw {

namespace {

using nlohmann::json;

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Splits a line into whitespace-separated integer tokens or complains.
std::vector<long long> int_tokens(const std::string& line, int ln,
                                  std::size_t expected) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw ParseError(ln, "expected an integer, got \"" + tok + "\"");
    out.push_back(v);
  }
  if (out.size() != expected)
    throw ParseError(ln, "expected " + std::to_string(expected) +
                             " integers, got " + std::to_string(out.size()));
  return out;
}

int line_of_byte(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(),
                                         text.begin() + static_cast<long>(byte),
                                         '\n'));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_byte(text, e.byte), "malformed document");
  }
}

void check_endpoint(long long v, long long n, int ln) {
  if (v < 0 || v >= n)
    throw ParseError(ln, "vertex id " + std::to_string(v) +
                             " out of range [0, " + std::to_string(n) + ")");
}

}  // namespace

DiGraph parse_digraph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<std::pair<long long, long long>> seen;
  while (std::getline(in, line)) {
    ++ln;
    if (blank(line)) continue;
    if (n < 0) {
      auto hdr = int_tokens(line, ln, 2);
      n = hdr[0];
      m = hdr[1];
      if (n < 0 || m < 0)
        throw ParseError(ln, "vertex and edge counts must be non-negative");
      continue;
    }
    if (static_cast<long long>(edges.size()) >= m)
      throw ParseError(ln, "more than " + std::to_string(m) + " edge lines");
    auto tok = int_tokens(line, ln, 2);
    check_endpoint(tok[0], n, ln);
    check_endpoint(tok[1], n, ln);
    if (tok[0] == tok[1]) throw ParseError(ln, "self-loop not allowed");
    if (!seen.insert({tok[0], tok[1]}).second)
      throw ParseError(ln, "parallel edge repeats an earlier line");
    edges.push_back({static_cast<VertexId>(tok[0]),
                     static_cast<VertexId>(tok[1])});
  }
  if (n < 0) throw ParseError(1, "missing \"n m\" header line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(ln + 1, "expected " + std::to_string(m) +
                                 " edge lines, got " +
                                 std::to_string(edges.size()));
  return DiGraph::build(static_cast<int>(n), edges);
}

std::string format_digraph_text(const DiGraph& d) {
  std::ostringstream out;
  out << d.vertex_count() << ' ' << d.edge_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

DiGraph parse_digraph_structured(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw ParseError(1, "expected an object with \"vertices\" and \"edges\"");
  if (!doc["vertices"].is_array() || !doc["edges"].is_array())
    throw ParseError(1, "\"vertices\" and \"edges\" must be arrays");
  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string())
      throw ParseError(1, "vertex names must be strings");
    labels.push_back(v.get<std::string>());
  }
  long long n = static_cast<long long>(labels.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<std::pair<long long, long long>> seen;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError(1, "each edge must be a [tail, head] integer pair");
    long long t = e[0].get<long long>(), h = e[1].get<long long>();
    check_endpoint(t, n, 1);
    check_endpoint(h, n, 1);
    if (t == h) throw ParseError(1, "self-loop not allowed");
    if (!seen.insert({t, h}).second)
      throw ParseError(1, "parallel edge repeated in \"edges\"");
    edges.push_back({static_cast<VertexId>(t), static_cast<VertexId>(h)});
  }
  return DiGraph::build(static_cast<int>(n), edges, false, std::move(labels));
}

std::string format_digraph_structured(const DiGraph& d) {
  json doc;
  doc["schema_version"] = 1;
  doc["vertices"] = json::array();
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    doc["vertices"].push_back(d.vertex_name(v));
  doc["edges"] = json::array();
  for (const Arc& a : d.arcs()) doc["edges"].push_back({a.tail, a.head});
  return doc.dump(2) + "\n";
}

DiGraph parse_digraph_auto(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_digraph_structured(text)
                    : parse_digraph_text(text);
  }
  throw ParseError(1, "empty input");
}

std::string format_decomposition(const DecompositionDoc& doc) {
  json j;
  j["schema_version"] = 1;
  j["cut_kind"] = doc.cut_kind;
  j["width"] = doc.width;
  j["tree_edges"] = json::array();
  for (auto [a, b] : doc.tree.tree_edges) j["tree_edges"].push_back({a, b});
  j["leaf_map"] = doc.tree.leaf_map;
  j["per_edge_orders"] = doc.per_edge_orders;
  return j.dump(2) + "\n";
}

DecompositionDoc parse_decomposition(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("tree_edges") || !j.contains("leaf_map") ||
      !j.contains("width") || !j.contains("cut_kind"))
    throw ParseError(1,
                     "expected {cut_kind, width, tree_edges, leaf_map, ...}");
  DecompositionDoc doc;
  doc.cut_kind = j["cut_kind"].get<std::string>();
  doc.width = j["width"].get<int>();
  if (j.contains("per_edge_orders"))
    doc.per_edge_orders = j["per_edge_orders"].get<std::vector<int>>();
  doc.tree.leaf_map = j["leaf_map"].get<std::vector<int>>();
  doc.tree.node_count = static_cast<int>(doc.tree.leaf_map.size());
  int ground = 0;
  for (int e : doc.tree.leaf_map)
    if (e >= 0) ++ground;
  doc.tree.ground_size = ground;
  for (const auto& e : j["tree_edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError(1, "tree_edges entries must be [a, b] pairs");
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 0 || a >= doc.tree.node_count || b < 0 ||
        b >= doc.tree.node_count)
      throw ParseError(1, "tree edge endpoint out of range");
    doc.tree.add_edge(a, b);
  }
  std::string why;
  if (!validate_layout_tree(doc.tree, &why))
    throw ParseError(1, "invalid layout tree: " + why);
  return doc;
}

std::string format_dred_sidecar(const DredInstance& inst) {
  json j;
  j["schema_version"] = 1;
  j["k"] = inst.k;
  j["h"] = inst.h;
  j["s"] = inst.s;
  return j.dump(2) + "\n";
}

void parse_dred_sidecar(const std::string& text, DredInstance& inst) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("k") || !j.contains("h") ||
      !j.contains("s"))
    throw ParseError(1, "expected an object with \"k\", \"h\", \"s\"");
  inst.k = j["k"].get<int>();
  inst.h = j["h"].get<int>();
  inst.s = j["s"].get<int>();
  if (inst.k < 0 || inst.h < 0)
    throw ParseError(1, "k and h must be non-negative");
  if (inst.s < 0 || inst.s >= inst.d.vertex_count())
    throw ParseError(1, "s out of range for the accompanying graph");
}

namespace {

json base_doc(const std::string& problem) {
  json j;
  j["schema_version"] = 1;
  j["problem"] = problem;
  j["certificate_checks"] = json::object();
  return j;
}

}  // namespace

std::string format_maxcut_doc(const DiGraph& d, const MaxCutResult& r) {
  json j = base_doc("maxcut");
  j["answer"] = r.value;
  j["witness"] = r.side.indices();
  j["certificate_checks"]["witness_value_matches"] =
      edge_separator(d, r.side).count() == r.value;
  return j.dump(2) + "\n";
}

std::string format_hamilton_doc(const DiGraph& d, const HamiltonResult& r) {
  json j = base_doc("hamilton");
  j["answer"] = r.exists;
  if (r.exists) {
    j["witness"] = r.path;
    bool ok = static_cast<int>(r.path.size()) == d.vertex_count();
    std::vector<char> seen(d.vertex_count(), 0);
    for (VertexId v : r.path) {
      if (v < 0 || v >= d.vertex_count() || seen[v]) ok = false;
      if (ok) seen[v] = 1;
    }
    for (std::size_t i = 0; ok && i + 1 < r.path.size(); ++i)
      ok = d.has_arc(r.path[i], r.path[i + 1]);
    j["certificate_checks"]["path_is_hamiltonian"] = ok;
  } else {
    j["witness"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string format_dred_doc(const DredInstance& inst, bool answer) {
  json j = base_doc("dred");
  j["answer"] = answer;
  j["witness"] = nullptr;
  j["k"] = inst.k;
  j["h"] = inst.h;
  j["s"] = inst.s;
  return j.dump(2) + "\n";
}

}  // namespace dbw
