// Top-level construction: decompositions of Q_n into 2^m*n-cycles with a
// distinguished perfect matching for any even n >= 2^m, plus the derived path
// decompositions.

#pragma once

#include "qcycle/basis.hpp"
#include "qcycle/decomposition.hpp"

namespace qcycle {

// basis_decomposition(m) lifted (n - 2^m)/2 times.  BadParameters for odd n
// or n < 2^m; ResourceCap beyond the envelope (16 by default, 24 with force).
Decomposition decompose(int n, int m, bool force = false);

// Cuts every cycle into len/r consecutive paths of r edges each, starting at
// the cycle's first selected matching position.  r must properly divide the
// cycle length.
PathDecomposition path_decomposition(const Decomposition& dec, std::uint32_t r);

}  // namespace qcycle
