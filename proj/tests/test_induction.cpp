#include "doctest.h"
#include "qcycle/basis.hpp"
#include "qcycle/induction.hpp"
#include "qcycle/verify.hpp"

using namespace qcycle;

namespace {

Vertex V(std::initializer_list<int> e) { return vertex_of(e); }

Decomposition basis_flat(int m) {
  const BasisDecomposition dec = basis_decomposition(m);
  return flatten_basis(dec, select_matching(dec));
}

}  // namespace

TEST_CASE("embed_copy") {
  CHECK(embed_copy(V({}), 1, 6) == V({}));
  CHECK(embed_copy(V({}), 2, 6) == V({5}));
  CHECK(embed_copy(V({}), 3, 6) == V({5, 6}));
  CHECK(embed_copy(V({}), 4, 6) == V({6}));
  CHECK(embed_copy(V({1, 4}), 3, 6) == V({1, 4, 5, 6}));
  CHECK(edge_direction(embed_copy(V({2}), 2, 6), embed_copy(V({2}), 3, 6)) == 6);
  CHECK_THROWS_AS(embed_copy(V({5}), 1, 6), Error);  // element beyond n-2
  CHECK_THROWS_AS(embed_copy(V({}), 5, 6), Error);
}

TEST_CASE("copy ring is a Gray cycle") {
  for (int n : {4, 6, 8}) {
    for (int p = 1; p <= 4; ++p) {
      const int q = p % 4 + 1;
      const int d = copy_cross_direction(p, n);
      CHECK((copy_code(p, n) ^ copy_code(q, n)) == single(d));
      CHECK((d == n - 1 || d == n));
    }
  }
}

TEST_CASE("lift Q2 -> Q4") {
  const Decomposition lifted = lift_decomposition(basis_flat(1));
  CHECK(lifted.n == 4);
  CHECK(lifted.m == 1);
  REQUIRE(lifted.cycles.size() == 4);
  for (const auto& c : lifted.cycles) CHECK(c.dirs.size() == 8);
  for (const auto& pos : lifted.matching_positions)
    CHECK(pos == std::vector<std::uint32_t>{2, 6});
  const Report rep = verify_decomposition(lifted);
  CHECK_MESSAGE(rep.ok(), rep.to_text());
}

TEST_CASE("lift Q4 -> Q6 from the m=2 basis") {
  const Decomposition lifted = lift_decomposition(basis_flat(2));
  CHECK(lifted.n == 6);
  REQUIRE(lifted.cycles.size() == 8);
  for (const auto& c : lifted.cycles) CHECK(c.dirs.size() == 24);
  std::size_t matching_size = 0;
  for (const auto& pos : lifted.matching_positions) matching_size += pos.size();
  CHECK(matching_size == 32);  // 2^{6-1}
  const Report rep = verify_decomposition(lifted);
  CHECK_MESSAGE(rep.ok(), rep.to_text());
}

TEST_CASE("lift rejects broken inputs") {
  // matching positions with the wrong spacing
  Decomposition bad = basis_flat(2);
  bad.matching_positions[0] = {1, 2, 9, 13};
  CHECK_THROWS_AS(lift_decomposition(bad), Error);

  // a start flip makes the matching collide between cycles
  Decomposition collide = basis_flat(2);
  collide.cycles[1].start = collide.cycles[0].start;
  collide.cycles[1].dirs = collide.cycles[0].dirs;
  collide.matching_positions[1] = collide.matching_positions[0];
  CHECK_THROWS_AS(lift_decomposition(collide), Error);

  // wrong cycle count
  Decomposition short_dec = basis_flat(2);
  short_dec.cycles.pop_back();
  short_dec.matching_positions.pop_back();
  CHECK_THROWS_AS(lift_decomposition(short_dec), Error);
}
