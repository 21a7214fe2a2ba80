#pragma once

#include <string>
#include <vector>

#include "dbw/digraph.hpp"
#include "dbw/layout.hpp"
#include "dbw/solvers.hpp"

namespace dbw {

// Text format: first line "n m", then m lines "tail head" with 0-based
// vertex ids. Violations raise ParseError carrying the offending line.
DiGraph parse_digraph_text(const std::string& text);
std::string format_digraph_text(const DiGraph& d);

// Structured format: {"vertices": ["a", ...], "edges": [[tail, head], ...]}.
DiGraph parse_digraph_structured(const std::string& text);
std::string format_digraph_structured(const DiGraph& d);

// Picks the structured parser when the first non-space byte is '{'.
DiGraph parse_digraph_auto(const std::string& text);

// Branch-decomposition document; round-trips through format/parse so an
// exported decomposition can be re-scored against its graph later.
struct DecompositionDoc {
  std::string cut_kind;  // "dbw" | "bw" | "bcrk"
  int width = 0;
  std::vector<int> per_edge_orders;
  LayoutTree tree;
};
std::string format_decomposition(const DecompositionDoc& doc);
DecompositionDoc parse_decomposition(const std::string& text);

// DRED sidecar {"k": ..., "h": ..., "s": ...} accompanying a graph file.
std::string format_dred_sidecar(const DredInstance& inst);
void parse_dred_sidecar(const std::string& text, DredInstance& inst);

// Solver result documents {problem, answer, witness, certificate_checks}.
std::string format_maxcut_doc(const DiGraph& d, const MaxCutResult& r);
std::string format_hamilton_doc(const DiGraph& d, const HamiltonResult& r);
std::string format_dred_doc(const DredInstance& inst, bool answer);

}  // namespace dbw
