// Brute-force verification oracle.  Every theorem-level claim becomes a
// mechanical check over first principles: E(Q_n) is re-derived as all
// (v, v xor {i}) pairs, cycles are re-walked locally, and nothing here calls
// the construction code paths.  Checks collect findings instead of failing
// fast.

#pragma once

#include <string>
#include <vector>

#include "qcycle/decomposition.hpp"
#include "qcycle/hypercube.hpp"

namespace qcycle {

struct Finding {
  std::string kind;    // e.g. "NotClosed", "Duplicate", "Conflict"
  std::string detail;
};

struct Report {
  std::vector<Finding> findings;
  std::vector<std::string> notes;  // non-failing remarks (skipped gates etc.)

  bool ok() const { return findings.empty(); }
  void add(std::string kind, std::string detail);
  void merge(const Report& other);
  std::string to_text() const;   // human-readable summary
  std::string to_lines() const;  // one "KIND<TAB>detail" line per finding
};

// Full-graph edge accounting is held to n <= 20 (the byte-per-slot table
// grows as n*2^n); per-cycle checks run up to the hard cap.
inline constexpr int kEdgeSetCap = 20;

// Closure, simplicity, directions in range.
Report verify_cycle(const CycleSpec& spec, int n);

// The multiset of all cycle edges equals E(Q_n) with multiplicity one.
Report verify_edge_partition(const std::vector<CycleSpec>& cycles, int n);

// Matching edge set checks: pairwise vertex-disjoint; with require_perfect,
// also covers every vertex (size 2^{n-1}).
Report verify_matching_set(const std::vector<std::pair<Vertex, Vertex>>& edges, int n,
                           bool require_perfect);

// The selected edges of a decomposition form a perfect matching.
Report verify_matching(const Decomposition& dec);

// Condition (I): deleting each cycle's selected edges leaves 2^m components,
// each a simple path of n-1 edges.
Report verify_condition_I(const Decomposition& dec);

// Cycles pairwise vertex-disjoint and jointly spanning V(Q_n).
Report verify_spanning_two_regular(const std::vector<CycleSpec>& family, int n);

// Everything applicable to a decomposition: counts, per-cycle validity,
// condition (I), perfect matching, and (within the edge-set cap) the edge
// partition.
Report verify_decomposition(const Decomposition& dec);

}  // namespace qcycle
