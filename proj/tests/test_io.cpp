#include <string>
#include <vector>

#include "doctest.h"
#include "dbw/errors.hpp"
#include "dbw/io.hpp"
#include "dbw/layout.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using namespace dbw;

TEST_CASE("text format parsing") {
  DiGraph d = parse_digraph_text("3 3\n0 1\n1 2\n2 0\n");
  CHECK(d.vertex_count() == 3);
  CHECK(d.edge_count() == 3);
  CHECK(d.has_arc(2, 0));

  // blank lines are fine, order is preserved
  d = parse_digraph_text("\n4 2\n\n0 1\n\n2 3\n\n");
  CHECK(d.edge_count() == 2);
  CHECK(d.arc(0).tail == 0);
  CHECK(d.arc(1).head == 3);

  d = parse_digraph_text("2 0\n");
  CHECK(d.vertex_count() == 2);
  CHECK(d.edge_count() == 0);
}

TEST_CASE("text format errors carry line numbers") {
  try {
    parse_digraph_text("2 1\n0 5\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_digraph_text(""), ParseError);
  CHECK_THROWS_AS(parse_digraph_text("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph_text("2 1\n0 1 junk\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph_text("2 2\n0 1\n"), ParseError);   // short
  CHECK_THROWS_AS(parse_digraph_text("1 1\n0 0\n"), ParseError);   // loop
  CHECK_THROWS_AS(parse_digraph_text("2 2\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph_text("-2 0\n"), ParseError);

  try {
    parse_digraph_text("3 2\n0 1\n1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("text format round trip") {
  DiGraph d = fixtures::grid_orientation();
  DiGraph back = parse_digraph_text(format_digraph_text(d));
  CHECK(back.arcs() == d.arcs());
  CHECK(back.vertex_count() == d.vertex_count());
}

TEST_CASE("structured format") {
  DiGraph d = parse_digraph_structured(
      R"({"vertices": ["a", "b", "c"], "edges": [[0, 1], [1, 2]]})");
  CHECK(d.vertex_count() == 3);
  CHECK(d.edge_count() == 2);
  CHECK(d.vertex_name(0) == "a");
  CHECK(d.vertex_name(2) == "c");

  DiGraph back = parse_digraph_structured(format_digraph_structured(d));
  CHECK(back.arcs() == d.arcs());
  CHECK(back.vertex_name(1) == "b");

  CHECK_THROWS_AS(parse_digraph_structured("{"), ParseError);
  CHECK_THROWS_AS(
      parse_digraph_structured(R"({"vertices": ["a"], "edges": [[0, 0]]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_digraph_structured(R"({"vertices": ["a"], "edges": [[0, 3]]})"),
      ParseError);

  // auto-detection keys off the first non-space byte
  CHECK(parse_digraph_auto("  {\"vertices\": [], \"edges\": []}")
            .vertex_count() == 0);
  CHECK(parse_digraph_auto("2 1\n0 1\n").edge_count() == 1);
}

TEST_CASE("decomposition documents round trip") {
  DiGraph d = fixtures::three_cycle();
  WidthResult r = exact_width(DbwCut(d));

  DecompositionDoc doc;
  doc.cut_kind = "dbw";
  doc.tree = r.tree;
  WidthReport rep = layout_width(r.tree, DbwCut(d));
  doc.width = rep.width;
  doc.per_edge_orders = rep.per_edge_orders;

  std::string text = format_decomposition(doc);
  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["schema_version"] == 1);
  CHECK(j["cut_kind"] == "dbw");
  CHECK(j["width"] == 2);

  DecompositionDoc back = parse_decomposition(text);
  CHECK(back.cut_kind == "dbw");
  CHECK(back.width == doc.width);
  CHECK(back.tree.tree_edges == doc.tree.tree_edges);
  CHECK(back.tree.leaf_map == doc.tree.leaf_map);

  // re-scoring the imported tree reproduces the width
  CHECK(layout_width(back.tree, DbwCut(d)).width == doc.width);

  CHECK_THROWS_AS(parse_decomposition("not json"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("{}"), ParseError);
}

TEST_CASE("dred sidecar") {
  DredInstance inst;
  inst.d = fixtures::path3();
  inst.k = 2;
  inst.h = 1;
  inst.s = 0;
  std::string text = format_dred_sidecar(inst);

  DredInstance back;
  back.d = inst.d;
  parse_dred_sidecar(text, back);
  CHECK(back.k == 2);
  CHECK(back.h == 1);
  CHECK(back.s == 0);

  DredInstance tiny;
  tiny.d = fixtures::single_arc();
  CHECK_THROWS_AS(parse_dred_sidecar(R"({"k": 1, "h": 1, "s": 9})", tiny),
                  ParseError);
}

TEST_CASE("solver documents") {
  DiGraph d = fixtures::path3();

  MaxCutResult mc = d_max_cut(d);
  nlohmann::json j = nlohmann::json::parse(format_maxcut_doc(d, mc));
  CHECK(j["schema_version"] == 1);
  CHECK(j["problem"] == "maxcut");
  CHECK(j["answer"] == 1);
  CHECK(j["certificate_checks"]["witness_value_matches"] == true);

  HamiltonResult yes = d_hamilton_path(d);
  j = nlohmann::json::parse(format_hamilton_doc(d, yes));
  CHECK(j["problem"] == "hamilton");
  CHECK(j["answer"] == true);
  CHECK(j["witness"] == std::vector<int>{0, 1, 2});
  CHECK(j["certificate_checks"]["path_is_hamiltonian"] == true);

  DiGraph no = fixtures::jay();
  j = nlohmann::json::parse(format_hamilton_doc(no, d_hamilton_path(no)));
  CHECK(j["answer"] == false);
  CHECK(j["witness"].is_null());

  DredInstance inst;
  inst.d = d;
  inst.k = 1;
  inst.h = 1;
  j = nlohmann::json::parse(format_dred_doc(inst, true));
  CHECK(j["problem"] == "dred");
  CHECK(j["answer"] == true);
  CHECK(j["k"] == 1);
}
