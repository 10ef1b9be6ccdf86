// Reference data for the Q_8 64-cycle construction: the 16 matching-edge
// tables driven by the appendix-q8 command and the 64-term block sequence for
// h = 4.  Hand-transcribed; a few entries of the original tabulation carry
// rendering glitches, recorded in q8_table_typos() with the values the
// verified construction gives.

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qcycle/basis.hpp"
#include "qcycle/hypercube.hpp"

namespace qcycle {

struct Q8Table {
  FamilyKind kind;   // phi rows print as e, gamma rows as f
  int family;        // 1 or 2
  Vertex a, b;       // coset-element subscripts of the cycle
  std::array<std::pair<Vertex, Vertex>, 8> edges;  // rows 1..4 then "4+1".."4+4"
};

// The 16 tables in print order: F1, F2, F1', F2'; cycles ordered
// lexicographically by (a, b) masks within each family.
const std::vector<Q8Table>& q8_reference_tables();

// The 64-term direction sequence of the Phi cycles for h = 4.
const DirSeq& q8_reference_sequence();

struct Q8Typo {
  int table;         // index into q8_reference_tables()
  int row;           // 0-based row, -1 for a table-wide label glitch
  const char* note;  // what the original prints vs. the verified value
};

// Deviations between the original tabulation and the values embedded above
// (all four are rendering/label glitches; every set value is reproduced by
// the construction and re-checked by the matching verifier).
const std::vector<Q8Typo>& q8_table_typos();

// Selected matching edges of one basis cycle in table-row order.  Row j maps
// to offset-rule position ((L-1)*n + first - 1) mod n^2 + 1 where L is the
// row label (2i-2+j for the low wing, n/2 more for the high wing) and `first`
// is 2i-1 for Phi cycles, n/2+2i-1 for Gamma cycles.
std::array<std::pair<Vertex, Vertex>, 8> selected_edges_in_table_order(const CycleSpec& cycle,
                                                                       int family, FamilyKind kind);

// The 16 tables recomputed from basis_decomposition(3).
std::vector<Q8Table> q8_tables_from_construction();

// Plain-text rendering in (family, cycle, row) order, one edge per line.
std::string render_q8_tables(const std::vector<Q8Table>& tables);

}  // namespace qcycle
