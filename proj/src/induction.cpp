#include "qcycle/induction.hpp"

#include <algorithm>

namespace qcycle {

Vertex copy_code(int p, int n) {
  if (p < 1 || p > 4) fail(Errc::OutOfRange, "copy index " + std::to_string(p));
  if (n < 4 || n > kMaskBits) fail(Errc::OutOfRange, "n = " + std::to_string(n));
  switch (p) {
    case 1: return Vertex{};
    case 2: return single(n - 1);
    case 3: return single(n - 1) ^ single(n);
    default: return single(n);
  }
}

Vertex embed_copy(Vertex v, int p, int n) {
  const std::uint64_t inner = (1ull << (n - 2)) - 1;
  if (v.bits & ~inner)
    fail(Errc::ElementOutOfRange, to_set_string(v) + " uses elements beyond " + std::to_string(n - 2));
  return v ^ copy_code(p, n);
}

int copy_cross_direction(int p, int n) {
  const int q = p % 4 + 1;
  return edge_direction(copy_code(p, n), copy_code(q, n));
}

namespace {

// Equal cyclic spacing check: positions ascending, gaps == expected spacing.
bool spacing_ok(const std::vector<std::uint32_t>& pos, std::uint64_t len, std::uint32_t spacing) {
  if (pos.empty() || len % spacing != 0 || pos.size() != len / spacing) return false;
  for (std::size_t j = 0; j < pos.size(); ++j) {
    if (pos[j] < 1 || pos[j] > len) return false;
    if (j > 0 && pos[j] - pos[j - 1] != spacing) return false;
  }
  return pos.front() + static_cast<std::uint32_t>(len) - pos.back() == spacing;
}

}  // namespace

Decomposition lift_decomposition(const Decomposition& dec) {
  const int n0 = dec.n;
  const int n = n0 + 2;
  if (n0 < 2 || n0 % 2 != 0 || dec.m < 1)
    fail(Errc::PreconditionViolation, "not a liftable decomposition");
  if (n > kHardCap) fail(Errc::ResourceCap, "lift to n = " + std::to_string(n) + " beyond 24");
  if (dec.cycles.size() != dec.matching_positions.size() ||
      dec.cycles.size() != dec.expected_cycle_count())
    fail(Errc::PreconditionViolation, "cycle/matching counts are off");

  const std::uint64_t len0 = dec.cycle_length();
  const std::uint32_t r = 1u << dec.m;  // matching edges per cycle

  // Check spacing, walk every source cycle, and check the matching is
  // perfect in Q_{n0} before building anything.
  std::vector<std::vector<Vertex>> walks;
  walks.reserve(dec.cycles.size());
  std::vector<std::uint8_t> covered(1ull << n0, 0);
  for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
    const auto& pos = dec.matching_positions[i];
    if (dec.cycles[i].dirs.size() != len0 || !spacing_ok(pos, len0, static_cast<std::uint32_t>(n0)))
      fail(Errc::PreconditionViolation, "cycle " + std::to_string(i + 1) + " violates condition (I) spacing");
    walks.push_back(walk_cycle(dec.cycles[i], n0));
    const auto& verts = walks.back();
    for (std::uint32_t p : pos) {
      const Vertex u = verts[p - 1];
      const Vertex v = verts[p % len0];
      if (covered[u.bits]++ || covered[v.bits]++)
        fail(Errc::PreconditionViolation, "matching is not vertex-disjoint at " + to_set_string(u));
    }
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    fail(Errc::PreconditionViolation, "matching does not cover Q_" + std::to_string(n0));

  Decomposition out;
  out.n = n;
  out.m = dec.m;
  out.unverified = dec.unverified;
  out.cycles.reserve(dec.cycles.size() * 4);
  out.matching_positions.reserve(dec.cycles.size() * 4);

  for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
    const auto& dirs = dec.cycles[i].dirs;
    const auto& pos = dec.matching_positions[i];
    for (int p = 1; p <= 4; ++p) {
      const std::uint8_t cross = static_cast<std::uint8_t>(copy_cross_direction(p, n));
      CycleSpec lifted;
      lifted.start = embed_copy(dec.cycles[i].start, p, n);
      lifted.dirs.reserve(len0 + 2ull * r);
      std::vector<std::uint32_t> new_pos;
      new_pos.reserve(r);
      std::size_t next = 0;  // index into pos
      for (std::uint64_t j = 1; j <= len0; ++j) {
        if (next < pos.size() && pos[next] == j) {
          // Bridge: cross into copy p+1, take its matching edge, cross back.
          lifted.dirs.push_back(cross);
          lifted.dirs.push_back(dirs[j - 1]);
          lifted.dirs.push_back(cross);
          new_pos.push_back(static_cast<std::uint32_t>(lifted.dirs.size()) - 1);
          ++next;
        } else {
          lifted.dirs.push_back(dirs[j - 1]);
        }
      }
      out.cycles.push_back(std::move(lifted));
      out.matching_positions.push_back(std::move(new_pos));
    }
  }
  return out;
}

}  // namespace qcycle
