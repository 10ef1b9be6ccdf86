#include "qcycle/mollard_ramras.hpp"

#include <bit>

namespace qcycle {

namespace {
constexpr int kEnumerationCap = 24;  // 2^{n-2} specs beyond this thrashes memory
}

DirSeq standard_two_n_sequence(int n) {
  DirSeq s;
  s.reserve(static_cast<std::size_t>(2 * n));
  for (int round = 0; round < 2; ++round)
    for (int d = 1; d <= n; ++d) s.push_back(static_cast<std::uint8_t>(d));
  return s;
}

std::vector<Vertex> even_subsets(int n) {
  if (n < 2) fail(Errc::OutOfRange, "n = " + std::to_string(n));
  if (n > kEnumerationCap) fail(Errc::ResourceCap, "even-subset enumeration beyond n = 24");
  std::vector<Vertex> g;
  g.reserve(1ull << (n - 2));
  const std::uint64_t top = 1ull << (n - 1);
  for (std::uint64_t m = 0; m < top; ++m)
    if (std::popcount(m) % 2 == 0) g.push_back(Vertex{m});
  return g;
}

std::vector<CycleSpec> two_n_cycle_decomposition(int n) {
  if (n % 2 != 0 || n < 2) fail(Errc::OddDimension, "n = " + std::to_string(n));
  if (n > kEnumerationCap) fail(Errc::ResourceCap, "n = " + std::to_string(n) + " beyond 24");
  const DirSeq s = standard_two_n_sequence(n);
  std::vector<CycleSpec> out;
  for (const Vertex& a : even_subsets(n)) out.push_back(CycleSpec{a, s});
  return out;
}

std::vector<TwoRegularFamily> coset_spanning_families(int n, int mu) {
  if (n < 2 || mu < 1 || n != (1 << mu))
    fail(Errc::NotPowerOfTwo, "n = " + std::to_string(n) + ", mu = " + std::to_string(mu));
  const CosetFamily fam = cosets(standard_subgroup(n));
  const DirSeq s = standard_two_n_sequence(n);
  std::vector<TwoRegularFamily> out;
  out.reserve(static_cast<std::size_t>(fam.count()));
  for (int i = 1; i <= fam.count(); ++i) {
    TwoRegularFamily w{n, {}};
    for (const Vertex& a : fam.coset_elements(i)) w.cycles.push_back(CycleSpec{a, s});
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace qcycle
