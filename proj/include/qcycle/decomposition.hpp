// The decomposition object: 2^{n-1-m} cycles of length 2^m*n covering E(Q_n)
// once, with per-cycle matching positions whose edges form a perfect matching
// (conditions (I) and (II)).

#pragma once

#include <cstdint>
#include <vector>

#include "qcycle/hypercube.hpp"

namespace qcycle {

// Construction envelope.  Within the default envelope output is covered by
// the verification suite; up to the hard cap construction is allowed but
// flagged unverified; beyond it we refuse rather than thrash memory.
inline constexpr int kDefaultEnvelope = 16;
inline constexpr int kHardCap = 24;

struct Decomposition {
  int n = 0;
  int m = 0;
  std::vector<CycleSpec> cycles;
  // 1-based ascending edge positions per cycle; aligned with `cycles`.
  std::vector<std::vector<std::uint32_t>> matching_positions;
  // Set when constructed past the default envelope (and on files carrying the
  // "# unverified" marker).
  bool unverified = false;

  std::uint64_t cycle_length() const {
    return (1ull << m) * static_cast<std::uint64_t>(n);
  }
  std::uint64_t expected_cycle_count() const { return 1ull << (n - 1 - m); }
};

struct PathDecomposition {
  int n = 0;
  std::uint32_t path_len = 0;                // r edges per path
  std::vector<std::vector<Vertex>> paths;    // each holds r+1 vertices
};

}  // namespace qcycle
