// The lift Q_{n-2} -> Q_n: four copies of Q_{n-2} indexed by a Gray ring on
// the two new coordinates; each source cycle trades its matching edges in
// copy p for the corresponding edges of copy p+1 plus the cross edges between
// their endpoints.

#pragma once

#include "qcycle/decomposition.hpp"
#include "qcycle/hypercube.hpp"

namespace qcycle {

// Copy codes on coordinates (n-1, n): 1 -> {}, 2 -> {n-1}, 3 -> {n-1,n},
// 4 -> {n}.  Consecutive copies (mod 4) are adjacent.
Vertex copy_code(int p, int n);

// Image of a Q_{n-2} vertex inside copy p of Q_n.
Vertex embed_copy(Vertex v, int p, int n);

// Direction of the cross edges between copy p and copy p+1 (mod 4).
int copy_cross_direction(int p, int n);

// Lifts a Q_{n-2} decomposition satisfying conditions (I)+(II) to Q_n: 4s
// cycles of length r*n, each carrying the inserted copy-(p+1) matching edges
// as its new matching.  PreconditionViolation when the input's matching is
// not perfect or its positions are not equally spaced.
Decomposition lift_decomposition(const Decomposition& dec);

}  // namespace qcycle
