#include "qcycle/kotzig.hpp"

namespace qcycle {

DirSeq product_sequence(const DirSeq& s, int half) {
  const int k = static_cast<int>(s.size());
  for (std::uint8_t d : s)
    if (d < 1 || d > half)
      fail(Errc::DirectionOutOfHalf, "direction " + std::to_string(d) + " over [" + std::to_string(half) + "]");
  DirSeq out;
  out.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  const auto at = [&](int j) {  // cyclic 1-based access
    const int idx = ((j - 1) % k + k) % k;
    return s[static_cast<std::size_t>(idx)];
  };
  for (int b = 1; b <= k; ++b) {
    for (int t = 0; t <= k - 2; ++t) out.push_back(at(2 - b + t));
    out.push_back(static_cast<std::uint8_t>(theta(at(b), half)));
  }
  return out;
}

DirSeq theta_sequence(const DirSeq& s, int half) {
  DirSeq out;
  out.reserve(s.size());
  for (std::uint8_t d : s) out.push_back(static_cast<std::uint8_t>(theta(d, half)));
  return out;
}

ProductSplit kotzig_pair(Vertex u1, Vertex u2, const DirSeq& s, int half) {
  walk_cycle(CycleSpec{u1, s}, half);
  walk_cycle(CycleSpec{u2, s}, half);
  const Vertex start = u1 ^ theta_set(u2, half);
  ProductSplit split;
  split.phi = CycleSpec{start, product_sequence(s, half)};
  split.gamma = CycleSpec{start, theta_sequence(split.phi.dirs, half)};
  walk_cycle(split.phi, 2 * half);
  walk_cycle(split.gamma, 2 * half);
  return split;
}

}  // namespace qcycle
