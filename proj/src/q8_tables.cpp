#include "qcycle/q8_tables.hpp"

#include <string>

#include "qcycle/group.hpp"

namespace qcycle {

namespace {

using VL = std::initializer_list<int>;

std::pair<Vertex, Vertex> edge(VL lo, VL hi) { return {vertex_of(lo), vertex_of(hi)}; }

std::vector<Q8Table> build_tables() {
  std::vector<Q8Table> t;
  const Vertex e0 = vertex_of({});
  const Vertex s13 = vertex_of({1, 3});
  const Vertex s12 = vertex_of({1, 2});
  const Vertex s23 = vertex_of({2, 3});

  // F1
  t.push_back({FamilyKind::phi, 1, e0, e0,
               {edge({}, {1}),
                edge({4, 5}, {5}),
                edge({3, 4, 5, 6}, {4, 5, 6}),
                edge({2, 3, 4, 5, 6, 7}, {3, 4, 5, 6, 7}),
                edge({1, 2, 3, 4, 5, 6, 7, 8}, {2, 3, 4, 5, 6, 7, 8}),
                edge({1, 2, 3, 6, 7, 8}, {1, 2, 3, 4, 6, 7, 8}),
                edge({1, 2, 7, 8}, {1, 2, 3, 7, 8}),
                edge({1, 8}, {1, 2, 8})}});
  t.push_back({FamilyKind::phi, 1, e0, s13,
               {edge({5, 7}, {1, 5, 7}),
                edge({4, 7}, {7}),
                edge({3, 4, 6, 7}, {4, 6, 7}),
                edge({2, 3, 4, 6}, {3, 4, 6}),
                edge({1, 2, 3, 4, 6, 8}, {2, 3, 4, 6, 8}),
                edge({1, 2, 3, 5, 6, 8}, {1, 2, 3, 4, 5, 6, 8}),
                edge({1, 2, 5, 8}, {1, 2, 3, 5, 8}),
                edge({1, 5, 7, 8}, {1, 2, 5, 7, 8})}});
  t.push_back({FamilyKind::phi, 1, s13, e0,
               {edge({1, 3}, {3}),
                edge({1, 3, 4, 5}, {1, 3, 5}),
                edge({1, 4, 5, 6}, {1, 3, 4, 5, 6}),
                edge({1, 2, 4, 5, 6, 7}, {1, 4, 5, 6, 7}),
                edge({2, 4, 5, 6, 7, 8}, {1, 2, 4, 5, 6, 7, 8}),
                edge({2, 6, 7, 8}, {2, 4, 6, 7, 8}),
                edge({2, 3, 7, 8}, {2, 7, 8}),
                edge({3, 8}, {2, 3, 8})}});
  t.push_back({FamilyKind::phi, 1, s13, s13,
               {edge({1, 3, 5, 7}, {3, 5, 7}),
                edge({1, 3, 4, 7}, {1, 3, 7}),
                edge({1, 4, 6, 7}, {1, 3, 4, 6, 7}),
                edge({1, 2, 4, 6}, {1, 4, 6}),
                edge({2, 4, 6, 8}, {1, 2, 4, 6, 8}),
                edge({2, 5, 6, 8}, {2, 4, 5, 6, 8}),
                edge({2, 3, 5, 8}, {2, 5, 8}),
                edge({3, 5, 7, 8}, {2, 3, 5, 7, 8})}});
  // F2
  t.push_back({FamilyKind::phi, 2, s12, s12,
               {edge({1, 2}, {2}),
                edge({1, 2, 4, 7}, {1, 2, 7}),
                edge({1, 2, 3, 4, 7, 8}, {1, 2, 4, 7, 8}),
                edge({1, 3, 4, 5, 7, 8}, {1, 2, 3, 4, 5, 7, 8}),
                edge({3, 4, 5, 6, 7, 8}, {1, 3, 4, 5, 6, 7, 8}),
                edge({3, 5, 6, 8}, {3, 4, 5, 6, 8}),
                edge({5, 6}, {3, 5, 6}),
                edge({2, 6}, {6})}});
  t.push_back({FamilyKind::phi, 2, s12, s23,
               {edge({1, 2, 5, 7}, {2, 5, 7}),
                edge({1, 2, 4, 5}, {1, 2, 5}),
                edge({1, 2, 3, 4, 5, 8}, {1, 2, 4, 5, 8}),
                edge({1, 3, 4, 8}, {1, 2, 3, 4, 8}),
                edge({3, 4, 6, 8}, {1, 3, 4, 6, 8}),
                edge({3, 6, 7, 8}, {3, 4, 6, 7, 8}),
                edge({6, 7}, {3, 6, 7}),
                edge({2, 5, 6, 7}, {5, 6, 7})}});
  t.push_back({FamilyKind::phi, 2, s23, s12,
               {edge({2, 3}, {1, 2, 3}),
                edge({2, 3, 4, 7}, {2, 3, 7}),
                edge({2, 4, 7, 8}, {2, 3, 4, 7, 8}),
                edge({4, 5, 7, 8}, {2, 4, 5, 7, 8}),
                edge({1, 4, 5, 6, 7, 8}, {4, 5, 6, 7, 8}),
                edge({1, 5, 6, 8}, {1, 4, 5, 6, 8}),
                edge({1, 3, 5, 6}, {1, 5, 6}),
                edge({1, 2, 3, 6}, {1, 3, 6})}});
  t.push_back({FamilyKind::phi, 2, s23, s23,
               {edge({2, 3, 5, 7}, {1, 2, 3, 5, 7}),
                edge({2, 3, 4, 5}, {2, 3, 5}),
                edge({2, 4, 5, 8}, {2, 3, 4, 5, 8}),
                edge({4, 8}, {2, 4, 8}),
                edge({1, 4, 6, 8}, {4, 6, 8}),
                edge({1, 6, 7, 8}, {1, 4, 6, 7, 8}),
                edge({1, 3, 6, 7}, {1, 6, 7}),
                edge({1, 2, 3, 5, 6, 7}, {1, 3, 5, 6, 7})}});
  // F1'
  t.push_back({FamilyKind::gamma, 1, e0, e0,
               {edge({5, 6, 7, 8}, {6, 7, 8}),
                edge({1, 5, 6, 7}, {1, 5, 6, 7, 8}),
                edge({1, 2, 5, 6}, {1, 2, 5, 6, 7}),
                edge({1, 2, 3, 5}, {1, 2, 3, 5, 6}),
                edge({1, 2, 3, 4}, {1, 2, 3, 4, 5}),
                edge({2, 3, 4, 8}, {2, 3, 4}),
                edge({3, 4, 7, 8}, {3, 4, 8}),
                edge({4, 6, 7, 8}, {4, 7, 8})}});
  t.push_back({FamilyKind::gamma, 1, e0, s13,
               {edge({6, 8}, {5, 6, 8}),
                edge({1, 6}, {1, 6, 8}),
                edge({1, 2, 6, 7}, {1, 2, 6}),
                edge({1, 2, 3, 7}, {1, 2, 3, 6, 7}),
                edge({1, 2, 3, 4, 5, 7}, {1, 2, 3, 4, 7}),
                edge({2, 3, 4, 5, 7, 8}, {2, 3, 4, 5, 7}),
                edge({3, 4, 5, 8}, {3, 4, 5, 7, 8}),
                edge({4, 5, 6, 8}, {4, 5, 8})}});
  t.push_back({FamilyKind::gamma, 1, s13, e0,
               {edge({1, 3, 5, 6, 7, 8}, {1, 3, 6, 7, 8}),
                edge({3, 5, 6, 7}, {3, 5, 6, 7, 8}),
                edge({2, 3, 5, 6}, {2, 3, 5, 6, 7}),
                edge({2, 5}, {2, 5, 6}),
                edge({2, 4}, {2, 4, 5}),
                edge({1, 2, 4, 8}, {1, 2, 4}),
                edge({1, 4, 7, 8}, {1, 4, 8}),
                edge({1, 3, 4, 6, 7, 8}, {1, 3, 4, 7, 8})}});
  t.push_back({FamilyKind::gamma, 1, s13, s13,
               {edge({1, 3, 6, 8}, {1, 3, 5, 6, 8}),
                edge({3, 6}, {3, 6, 8}),
                edge({2, 3, 6, 7}, {2, 3, 6}),
                edge({2, 7}, {2, 6, 7}),
                edge({2, 4, 5, 7}, {2, 4, 7}),
                edge({1, 2, 4, 5, 7, 8}, {1, 2, 4, 5, 7}),
                edge({1, 4, 5, 8}, {1, 4, 5, 7, 8}),
                edge({1, 3, 4, 5, 6, 8}, {1, 3, 4, 5, 8})}});
  // F2'
  t.push_back({FamilyKind::gamma, 2, s12, s12,
               {edge({7, 8}, {5, 7, 8}),
                edge({3, 7}, {3, 7, 8}),
                edge({3, 4}, {3, 4, 7}),
                edge({1, 3, 4, 6}, {1, 3, 4}),
                edge({1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 6}),
                edge({1, 2, 4, 5, 6, 8}, {1, 2, 4, 5, 6}),
                edge({1, 2, 5, 6, 7, 8}, {1, 2, 5, 6, 8}),
                edge({2, 5, 7, 8}, {2, 5, 6, 7, 8})}});
  t.push_back({FamilyKind::gamma, 2, s12, s23,
               {edge({5, 8}, {8}),
                edge({3, 5}, {3, 5, 8}),
                edge({3, 4, 5, 7}, {3, 4, 5}),
                edge({1, 3, 4, 5, 6, 7}, {1, 3, 4, 5, 7}),
                edge({1, 2, 3, 4, 6, 7}, {1, 2, 3, 4, 5, 6, 7}),
                edge({1, 2, 4, 6, 7, 8}, {1, 2, 4, 6, 7}),
                edge({1, 2, 6, 8}, {1, 2, 6, 7, 8}),
                edge({2, 8}, {2, 6, 8})}});
  t.push_back({FamilyKind::gamma, 2, s23, s12,
               {edge({1, 3, 7, 8}, {1, 3, 5, 7, 8}),
                edge({1, 7}, {1, 7, 8}),
                edge({1, 4}, {1, 4, 7}),
                edge({4, 6}, {4}),
                edge({2, 4, 5, 6}, {2, 4, 6}),
                edge({2, 3, 4, 5, 6, 8}, {2, 3, 4, 5, 6}),
                edge({2, 3, 5, 6, 7, 8}, {2, 3, 5, 6, 8}),
                edge({1, 2, 3, 5, 7, 8}, {1, 2, 3, 5, 6, 7, 8})}});
  t.push_back({FamilyKind::gamma, 2, s23, s23,
               {edge({1, 3, 5, 8}, {1, 3, 8}),
                edge({1, 5}, {1, 5, 8}),
                edge({1, 4, 5, 7}, {1, 4, 5}),
                edge({4, 5, 6, 7}, {4, 5, 7}),
                edge({2, 4, 6, 7}, {2, 4, 5, 6, 7}),
                edge({2, 3, 4, 6, 7, 8}, {2, 3, 4, 6, 7}),
                edge({2, 3, 6, 8}, {2, 3, 6, 7, 8}),
                edge({1, 2, 3, 8}, {1, 2, 3, 6, 8})}});
  return t;
}

DirSeq build_sequence() {
  // Four 8-term blocks, repeated: (1,2,3,4,1,2,3,t(1)), (4,1,2,3,4,1,2,t(2)),
  // (3,4,1,2,3,4,1,t(3)), (2,3,4,1,2,3,4,t(4)) with t(i) = i+4.
  const std::uint8_t tau[32] = {1, 2, 3, 4, 1, 2, 3, 5,  //
                                4, 1, 2, 3, 4, 1, 2, 6,  //
                                3, 4, 1, 2, 3, 4, 1, 7,  //
                                2, 3, 4, 1, 2, 3, 4, 8};
  DirSeq s;
  s.reserve(64);
  for (int round = 0; round < 2; ++round) s.insert(s.end(), tau, tau + 32);
  return s;
}

}  // namespace

const std::vector<Q8Table>& q8_reference_tables() {
  static const std::vector<Q8Table> tables = build_tables();
  return tables;
}

const DirSeq& q8_reference_sequence() {
  static const DirSeq seq = build_sequence();
  return seq;
}

const std::vector<Q8Typo>& q8_table_typos() {
  static const std::vector<Q8Typo> typos = {
      {8, 2, "Gamma[{},{}] row f3 second endpoint printed with a stray leading comma; value is {1,2,5,6,7}"},
      {9, 1, "Gamma[{},{1,3}] row f2 first endpoint printed with a stray trailing comma; value is {1,6}"},
      {10, -1, "Gamma[{1,3},{}] rows labeled f2 in the original; the cycle belongs to family 1"},
      {11, -1, "Gamma[{1,3},{1,3}] rows labeled f2 in the original; the cycle belongs to family 1"},
  };
  return typos;
}

std::array<std::pair<Vertex, Vertex>, 8> selected_edges_in_table_order(const CycleSpec& cycle,
                                                                       int family, FamilyKind kind) {
  const int n = 8;
  const std::uint64_t len = static_cast<std::uint64_t>(n) * n;
  const std::vector<Vertex> verts = walk_cycle(cycle, n);
  const int first = (kind == FamilyKind::phi ? 0 : n / 2) + 2 * family - 1;
  std::array<std::pair<Vertex, Vertex>, 8> out;
  for (int j = 1; j <= n; ++j) {
    const int label = (j <= n / 2) ? (2 * family - 2 + j) : (n / 2 + 2 * family - 2 + (j - n / 2));
    const std::uint64_t pos = (static_cast<std::uint64_t>(label - 1) * n + first - 1) % len + 1;
    out[static_cast<std::size_t>(j - 1)] = {verts[pos - 1], verts[pos % len]};
  }
  return out;
}

std::vector<Q8Table> q8_tables_from_construction() {
  const BasisDecomposition basis = basis_decomposition(3);
  const CosetFamily fam = cosets(standard_subgroup(4));
  std::vector<Q8Table> out;
  for (FamilyKind kind : {FamilyKind::phi, FamilyKind::gamma}) {
    for (int i = 1; i <= fam.count(); ++i) {
      const std::vector<Vertex> elems = fam.coset_elements(i);
      const auto& cycles =
          (kind == FamilyKind::phi) ? basis.families[i - 1].phi : basis.families[i - 1].gamma;
      std::size_t idx = 0;
      for (const Vertex& a : elems) {
        for (const Vertex& b : elems) {
          const CycleSpec& cycle = cycles.at(idx++);
          if (cycle.start != (a ^ theta_set(b, 4)))
            fail(Errc::PreconditionViolation, "cycle order does not match (a,b) order");
          out.push_back(Q8Table{kind, i, a, b, selected_edges_in_table_order(cycle, i, kind)});
        }
      }
    }
  }
  return out;
}

std::string render_q8_tables(const std::vector<Q8Table>& tables) {
  std::string out;
  for (const Q8Table& t : tables) {
    const bool phi = t.kind == FamilyKind::phi;
    out += "F" + std::to_string(t.family) + (phi ? "" : "'");
    out += phi ? " Phi[" : " Gamma[";
    out += to_set_string(t.a) + "," + to_set_string(t.b) + "] start ";
    out += to_set_string(t.a ^ theta_set(t.b, 4)) + "\n";
    for (int j = 1; j <= 8; ++j) {
      const auto& [lo, hi] = t.edges[static_cast<std::size_t>(j - 1)];
      out += (phi ? "e" : "f") + std::to_string(t.family) + "_" + std::to_string(j) + " (" +
             to_set_string(lo) + "," + to_set_string(hi) + ")\n";
    }
    out += "\n";
  }
  return out;
}

}  // namespace qcycle
