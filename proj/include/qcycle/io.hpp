// QCYC: the line-oriented text format for decompositions (UTF-8, LF).
//
//   qcyc 1
//   # unverified            <- only when the decomposition is flagged
//   n=<n> m=<m> cycles=<count> len=<2^m n>
//   c <index> start=<hex mask, lowercase, no prefix> dirs=<d1,d2,...>
//   m <index> pos=<p1,p2,...>
//
// One c/m line pair per cycle, indices 1-based and sequential.  Writing is
// canonical: write(read(f)) is byte-identical to f for canonical files.

#pragma once

#include <iosfwd>
#include <string>

#include "qcycle/decomposition.hpp"

namespace qcycle {

void write_decomposition(const Decomposition& dec, std::ostream& out);
std::string format_decomposition(const Decomposition& dec);

// Parses and validates structure (version, counts, ranges, ascending
// positions).  Graph-level semantics are the verifier's job, not the
// reader's.
Decomposition read_decomposition(std::istream& in);
Decomposition read_decomposition_file(const std::string& path);

}  // namespace qcycle
