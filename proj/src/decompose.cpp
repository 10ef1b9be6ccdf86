#include "qcycle/decompose.hpp"

#include "qcycle/induction.hpp"

namespace qcycle {

Decomposition decompose(int n, int m, bool force) {
  if (m < 1) fail(Errc::BadParameters, "m = " + std::to_string(m));
  if (n < 2 || n % 2 != 0) fail(Errc::BadParameters, "n = " + std::to_string(n) + " is not even");
  if (m >= 31 || (1 << m) > n)
    fail(Errc::BadParameters, "n = " + std::to_string(n) + " < 2^" + std::to_string(m));
  const int cap = force ? kHardCap : kDefaultEnvelope;
  if (n > cap)
    fail(Errc::ResourceCap, "n = " + std::to_string(n) + " beyond the envelope (" +
                                std::to_string(cap) + ")");
  const BasisDecomposition basis = basis_decomposition(m);
  Decomposition dec = flatten_basis(basis, select_matching(basis));
  while (dec.n < n) dec = lift_decomposition(dec);
  dec.unverified = n > kDefaultEnvelope;
  return dec;
}

PathDecomposition path_decomposition(const Decomposition& dec, std::uint32_t r) {
  const std::uint64_t len = dec.cycle_length();
  if (r == 0 || r >= len || len % r != 0)
    fail(Errc::NotADivisor, std::to_string(r) + " does not properly divide " + std::to_string(len));
  PathDecomposition out;
  out.n = dec.n;
  out.path_len = r;
  out.paths.reserve(dec.cycles.size() * (len / r));
  for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
    const std::vector<Vertex> verts = walk_cycle(dec.cycles[i], dec.n);
    if (dec.matching_positions[i].empty())
      fail(Errc::PreconditionViolation, "cycle " + std::to_string(i + 1) + " has no matching positions");
    const std::uint64_t first = dec.matching_positions[i].front();
    for (std::uint64_t cut = 0; cut < len / r; ++cut) {
      std::vector<Vertex> path;
      path.reserve(r + 1);
      const std::uint64_t base = first - 1 + cut * r;  // 0-based index of the path's first vertex
      for (std::uint64_t t = 0; t <= r; ++t) path.push_back(verts[(base + t) % len]);
      out.paths.push_back(std::move(path));
    }
  }
  return out;
}

}  // namespace qcycle
