// Splitting the Cartesian product of two k-cycles with a common direction
// sequence into two k^2-cycles.  The product lives in Q_{2h}; the second
// factor's coordinates are relabeled through theta, and the two hamiltonian
// cycles of the product are carried by the block sequence below and its
// theta image.

#pragma once

#include "qcycle/hypercube.hpp"

namespace qcycle {

struct ProductSplit {
  CycleSpec phi;    // direction sequence S-blocks
  CycleSpec gamma;  // direction sequence theta(S-blocks)
};

// The k^2-term block sequence built from S = (s_1..s_k): block b holds the
// k-1 entries of the cyclically repeated S starting one position earlier than
// the previous block, followed by theta(s_b).
DirSeq product_sequence(const DirSeq& s, int half);

// Elementwise theta over [2*half].
DirSeq theta_sequence(const DirSeq& s, int half);

// C(u1,S) box C(u2,S) = Phi(u1 xor theta(u2), SS) + Gamma(u1 xor theta(u2),
// theta(SS)).  Validates the factors as cycles of Q_half and both outputs as
// cycles of Q_{2*half}.
ProductSplit kotzig_pair(Vertex u1, Vertex u2, const DirSeq& s, int half);

}  // namespace qcycle
