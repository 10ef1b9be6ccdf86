#include "qcycle/basis.hpp"

#include "qcycle/group.hpp"
#include "qcycle/kotzig.hpp"
#include "qcycle/mollard_ramras.hpp"

namespace qcycle {

BasisDecomposition basis_decomposition(int m) {
  if (m < 1) fail(Errc::BadParameters, "m = " + std::to_string(m));
  if (m > 4) fail(Errc::ResourceCap, "basis for n = 2^" + std::to_string(m) + " exceeds the envelope");
  BasisDecomposition dec;
  dec.m = m;
  dec.n = 1 << m;
  if (m == 1) {
    CycleFamilyPair pair;
    pair.phi.push_back(CycleSpec{Vertex{}, DirSeq{1, 2, 1, 2}});
    dec.families.push_back(std::move(pair));
    return dec;
  }
  const int h = dec.n / 2;
  const CosetFamily fam = cosets(standard_subgroup(h));
  const DirSeq s = standard_two_n_sequence(h);  // the n-cycle sequence of Q_h
  for (int i = 1; i <= fam.count(); ++i) {
    const std::vector<Vertex> elems = fam.coset_elements(i);
    CycleFamilyPair pair;
    pair.phi.reserve(elems.size() * elems.size());
    pair.gamma.reserve(elems.size() * elems.size());
    for (const Vertex& a : elems) {
      for (const Vertex& b : elems) {
        ProductSplit split = kotzig_pair(a, b, s, h);
        pair.phi.push_back(std::move(split.phi));
        pair.gamma.push_back(std::move(split.gamma));
      }
    }
    dec.families.push_back(std::move(pair));
  }
  return dec;
}

MatchingSelection select_matching(const BasisDecomposition& dec) {
  const int n = dec.n;
  const std::uint32_t len = static_cast<std::uint32_t>(n) * static_cast<std::uint32_t>(n);
  MatchingSelection sel;
  const auto positions_from = [&](int first) {
    std::vector<std::uint32_t> pos;
    pos.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pos.push_back(static_cast<std::uint32_t>(first + t * n));
    return pos;
  };
  if (dec.m == 1) {
    // The 4-cycle: opposite edges 1 and 3.
    sel.positions.push_back({1, 3});
    return sel;
  }
  for (std::size_t i = 1; i <= dec.families.size(); ++i) {
    const auto pos = positions_from(static_cast<int>(2 * i - 1));
    for (std::size_t c = 0; c < dec.families[i - 1].phi.size(); ++c) sel.positions.push_back(pos);
  }
  for (std::size_t i = 1; i <= dec.families.size(); ++i) {
    const auto pos = positions_from(n / 2 + static_cast<int>(2 * i - 1));
    for (std::size_t c = 0; c < dec.families[i - 1].gamma.size(); ++c) sel.positions.push_back(pos);
  }
  for (const auto& pos : sel.positions)
    if (pos.back() > len) fail(Errc::PreconditionViolation, "selected position beyond cycle length");
  return sel;
}

Decomposition flatten_basis(const BasisDecomposition& dec, const MatchingSelection& sel) {
  Decomposition out;
  out.n = dec.n;
  out.m = dec.m;
  for (const CycleFamilyPair& pair : dec.families)
    for (const CycleSpec& c : pair.phi) out.cycles.push_back(c);
  for (const CycleFamilyPair& pair : dec.families)
    for (const CycleSpec& c : pair.gamma) out.cycles.push_back(c);
  out.matching_positions = sel.positions;
  if (out.cycles.size() != out.matching_positions.size())
    fail(Errc::PreconditionViolation, "matching selection does not align with the cycle list");
  return out;
}

Edge matching_edge_formula(int i, int r, Vertex a, Vertex b, FamilyKind family, Wing wing, int m) {
  if (m < 2) fail(Errc::RangeViolation, "closed forms need m >= 2");
  const int n = 1 << m;
  const int half = n / 2;
  if (i < 1 || i > n / 4) fail(Errc::RangeViolation, "family index i = " + std::to_string(i));
  if (r < 2 * i - 1 || r > half + 2 * i - 2)
    fail(Errc::RangeViolation, "row r = " + std::to_string(r) + " for family " + std::to_string(i));
  const Vertex shift = bracket(2 * i - 2, half);
  const auto cih = [&](Vertex x) { return complement_in_half(x, half); };
  const auto th = [&](Vertex x) { return theta_set(x, half); };
  Vertex lo, hi;
  if (family == FamilyKind::phi) {
    if (wing == Wing::low) {
      const Vertex t = th(bracket(r - 1, half) ^ shift ^ b);
      lo = a ^ shift ^ cih(bracket(half - r + 2 * i - 1, half)) ^ t;
      hi = a ^ shift ^ cih(bracket(half - r + 2 * i, half)) ^ t;
    } else {
      const Vertex t = th(cih(bracket(r - 1, half)) ^ shift ^ b);
      lo = a ^ shift ^ bracket(half - r + 2 * i - 1, half) ^ t;
      hi = a ^ shift ^ bracket(half - r + 2 * i, half) ^ t;
    }
  } else {
    if (wing == Wing::low) {
      const Vertex base = a ^ shift ^ bracket(r - 1, half);
      lo = base ^ th(shift ^ bracket(half - r + 2 * i - 1, half) ^ b);
      hi = base ^ th(shift ^ bracket(half - r + 2 * i, half) ^ b);
    } else {
      const Vertex base = a ^ shift ^ cih(bracket(r - 1, half));
      lo = base ^ th(shift ^ cih(bracket(half - r + 2 * i - 1, half)) ^ b);
      hi = base ^ th(shift ^ cih(bracket(half - r + 2 * i, half)) ^ b);
    }
  }
  return Edge::canonical(lo, hi);
}

}  // namespace qcycle
