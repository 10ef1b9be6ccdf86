#include <algorithm>
#include <set>

#include "doctest.h"
#include "qcycle/kotzig.hpp"
#include "qcycle/mollard_ramras.hpp"
#include "qcycle/q8_tables.hpp"

using namespace qcycle;

namespace {

Vertex V(std::initializer_list<int> e) { return vertex_of(e); }

using EdgeKey = std::pair<std::uint64_t, std::uint64_t>;

EdgeKey key(Vertex a, Vertex b) { return {std::min(a.bits, b.bits), std::max(a.bits, b.bits)}; }

std::set<EdgeKey> cycle_edges(const CycleSpec& c, int n) {
  const auto verts = walk_cycle(c, n);
  std::set<EdgeKey> out;
  for (std::size_t j = 0; j < verts.size(); ++j)
    out.insert(key(verts[j], verts[(j + 1) % verts.size()]));
  return out;
}

// E(C1 box C2) under the embedding (x, u) -> x xor theta(u), built from first
// principles off the factor walks.
std::set<EdgeKey> product_edges(const CycleSpec& c1, const CycleSpec& c2, int half) {
  const auto v1 = walk_cycle(c1, half);
  const auto v2 = walk_cycle(c2, half);
  std::set<EdgeKey> out;
  for (std::size_t i = 0; i < v1.size(); ++i) {
    const Vertex x = v1[i], y = v1[(i + 1) % v1.size()];
    for (const Vertex& u : v2) out.insert(key(x ^ theta_set(u, half), y ^ theta_set(u, half)));
  }
  for (std::size_t i = 0; i < v2.size(); ++i) {
    const Vertex u = v2[i], w = v2[(i + 1) % v2.size()];
    for (const Vertex& x : v1) out.insert(key(x ^ theta_set(u, half), x ^ theta_set(w, half)));
  }
  return out;
}

}  // namespace

TEST_CASE("product_sequence matches the h=4 reference listing") {
  const DirSeq s = standard_two_n_sequence(4);
  CHECK(product_sequence(s, 4) == q8_reference_sequence());
}

TEST_CASE("product_sequence for the 4-cycle factor") {
  const DirSeq expect{1, 2, 1, 3, 2, 1, 2, 4, 1, 2, 1, 3, 2, 1, 2, 4};
  CHECK(product_sequence(DirSeq{1, 2, 1, 2}, 2) == expect);
  CHECK_THROWS_AS(product_sequence(DirSeq{1, 3, 1, 3}, 2), Error);  // 3 beyond half
}

TEST_CASE("theta_sequence is an involution") {
  const DirSeq ss = product_sequence(standard_two_n_sequence(4), 4);
  CHECK(theta_sequence(theta_sequence(ss, 4), 4) == ss);
}

TEST_CASE("kotzig_pair for the Q8 factors") {
  const DirSeq s = standard_two_n_sequence(4);
  const ProductSplit p1 = kotzig_pair(V({}), V({}), s, 4);
  CHECK(p1.phi.start == V({}));
  CHECK(p1.gamma.start == V({}));
  CHECK(p1.phi.dirs.size() == 64);
  CHECK(p1.gamma.dirs.size() == 64);

  const ProductSplit p2 = kotzig_pair(V({}), V({1, 3}), s, 4);
  CHECK(p2.phi.start == V({5, 7}));
  // first edge of the Phi cycle
  const auto verts = walk_cycle(p2.phi, 8);
  CHECK(verts[0] == V({5, 7}));
  CHECK(verts[1] == V({1, 5, 7}));
}

TEST_CASE("kotzig_pair splits the product edge set") {
  const DirSeq s4{1, 2, 1, 2};
  const ProductSplit split = kotzig_pair(V({}), V({}), s4, 2);
  const auto phi_edges = cycle_edges(split.phi, 4);
  const auto gamma_edges = cycle_edges(split.gamma, 4);
  CHECK(phi_edges.size() == 16);
  CHECK(gamma_edges.size() == 16);
  std::set<EdgeKey> inter;
  std::set_intersection(phi_edges.begin(), phi_edges.end(), gamma_edges.begin(), gamma_edges.end(),
                        std::inserter(inter, inter.begin()));
  CHECK(inter.empty());
  std::set<EdgeKey> uni = phi_edges;
  uni.insert(gamma_edges.begin(), gamma_edges.end());
  CHECK(uni == product_edges(CycleSpec{V({}), s4}, CycleSpec{V({}), s4}, 2));
}

TEST_CASE("kotzig_pair shares its vertex set across the two halves") {
  const DirSeq s = standard_two_n_sequence(4);
  const ProductSplit split = kotzig_pair(V({1, 3}), V({}), s, 4);
  auto pv = walk_cycle(split.phi, 8);
  auto gv = walk_cycle(split.gamma, 8);
  std::sort(pv.begin(), pv.end());
  std::sort(gv.begin(), gv.end());
  CHECK(pv == gv);
}

TEST_CASE("kotzig_pair rejects invalid factors") {
  CHECK_THROWS_AS(kotzig_pair(V({}), V({}), DirSeq{1, 1, 2, 2}, 2), Error);
}
