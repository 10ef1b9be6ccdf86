// The base case n = 2^m: Q_n = Q_{n/2} box Q_{n/2}, the coset families of
// 2^{m-1}-dimensional 2n'-cycles are paired through the product splitting,
// and the matching edges are picked by the equally-spaced offset rule.  The
// closed-form edge expressions exist as a second, independent route used only
// for cross-checking.

#pragma once

#include <cstdint>
#include <vector>

#include "qcycle/decomposition.hpp"
#include "qcycle/hypercube.hpp"

namespace qcycle {

struct CycleFamilyPair {
  std::vector<CycleSpec> phi;    // F_i
  std::vector<CycleSpec> gamma;  // F_i' (empty in the degenerate m = 1 case)
};

struct BasisDecomposition {
  int n = 0;  // = 2^m
  int m = 0;
  // i = 1..n/4 for m >= 2; a single pair for m = 1.  Cycles within a family
  // are ordered lexicographically by their (A, B) coset-element masks.
  std::vector<CycleFamilyPair> families;
};

// Theorem-level construction.  m = 1 yields the 4-cycle C({}, (1,2,1,2)) of
// Q_2; m >= 5 is refused (n = 32 exceeds every envelope).
BasisDecomposition basis_decomposition(int m);

struct MatchingSelection {
  // Positions per cycle, in flatten order (all phi families, then all gamma
  // families).
  std::vector<std::vector<std::uint32_t>> positions;
};

// Offset rule: cycles of F_i take positions {2i-1 + t*n}, cycles of F_i' take
// {n/2 + 2i-1 + t*n}, t = 0..n-1.
MatchingSelection select_matching(const BasisDecomposition& dec);

// Flattens to F_1..F_k, F_1'..F_k' with the selected matching attached.
Decomposition flatten_basis(const BasisDecomposition& dec, const MatchingSelection& sel);

enum class FamilyKind { phi, gamma };
enum class Wing { low, high };  // low = label r, high = label n/2 + r

// Closed-form matching edge for family index i, row r in [2i-1, n/2+2i-2],
// and A, B in the base subgroup (coset translation is internal).  Cross-check
// oracle for the offset rule; requires m >= 2.
Edge matching_edge_formula(int i, int r, Vertex a, Vertex b, FamilyKind family, Wing wing, int m);

}  // namespace qcycle
