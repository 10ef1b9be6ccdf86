// The 2n-cycle decomposition of Q_n from the fundamental set C(0, 1..n,1..n)
// translated by even subsets, and its partition into vertex-disjoint spanning
// 2-regular families indexed by the cosets of the standard subgroup.

#pragma once

#include <vector>

#include "qcycle/group.hpp"
#include "qcycle/hypercube.hpp"

namespace qcycle {

struct TwoRegularFamily {
  int n = 0;
  std::vector<CycleSpec> cycles;  // pairwise vertex-disjoint, union spans Q_n
};

// S = (1, 2, ..., n, 1, 2, ..., n).
DirSeq standard_two_n_sequence(int n);

// G: all even subsets of [n-1], ascending by mask.  2^{n-2} of them.
std::vector<Vertex> even_subsets(int n);

// {C(A, S) : A in G}; 2^{n-2} edge-disjoint 2n-cycles covering E(Q_n).
// n must be even; enumeration is refused above n = 24.
std::vector<CycleSpec> two_n_cycle_decomposition(int n);

// W_1..W_{n/2} for n = 2^mu: W_i = {C(A,S) : A in H_i} over the cosets of the
// standard subgroup.  Each family is a spanning 2-regular subgraph.
std::vector<TwoRegularFamily> coset_spanning_families(int n, int mu);

}  // namespace qcycle
