#include <set>

#include "doctest.h"
#include "qcycle/mollard_ramras.hpp"
#include "qcycle/verify.hpp"

using namespace qcycle;

namespace {
Vertex V(std::initializer_list<int> e) { return vertex_of(e); }

std::set<CycleSpec> canonical_set(const std::vector<CycleSpec>& cycles, int n) {
  std::set<CycleSpec> out;
  for (const CycleSpec& c : cycles) out.insert(canonical_cycle(c, n));
  return out;
}
}  // namespace

TEST_CASE("two_n_cycle_decomposition counts and starts") {
  const auto q4 = two_n_cycle_decomposition(4);
  REQUIRE(q4.size() == 4);
  std::set<std::uint64_t> starts;
  for (const auto& c : q4) {
    CHECK(c.dirs.size() == 8);
    starts.insert(c.start.bits);
  }
  CHECK(starts == std::set<std::uint64_t>{V({}).bits, V({1, 2}).bits, V({1, 3}).bits, V({2, 3}).bits});

  const auto q2 = two_n_cycle_decomposition(2);
  REQUIRE(q2.size() == 1);
  CHECK(q2[0].dirs.size() == 4);

  CHECK_THROWS_AS(two_n_cycle_decomposition(5), Error);
  CHECK_THROWS_AS(two_n_cycle_decomposition(26), Error);
}

TEST_CASE("two_n_cycle_decomposition partitions the edges") {
  for (int n : {2, 4, 6}) {
    const auto cycles = two_n_cycle_decomposition(n);
    CHECK(cycles.size() == (1ull << (n - 2)));
    const Report rep = verify_edge_partition(cycles, n);
    CHECK_MESSAGE(rep.ok(), rep.to_text());
  }
}

TEST_CASE("coset_spanning_families") {
  const auto w4 = coset_spanning_families(4, 2);
  REQUIRE(w4.size() == 2);
  CHECK(canonical_set(w4[0].cycles, 4) ==
        canonical_set({CycleSpec{V({}), standard_two_n_sequence(4)},
                       CycleSpec{V({1, 3}), standard_two_n_sequence(4)}},
                      4));
  CHECK(canonical_set(w4[1].cycles, 4) ==
        canonical_set({CycleSpec{V({1, 2}), standard_two_n_sequence(4)},
                       CycleSpec{V({2, 3}), standard_two_n_sequence(4)}},
                      4));

  const auto w8 = coset_spanning_families(8, 3);
  REQUIRE(w8.size() == 4);
  for (const auto& fam : w8) {
    CHECK(fam.cycles.size() == 16);
    const Report rep = verify_spanning_two_regular(fam.cycles, 8);
    CHECK_MESSAGE(rep.ok(), rep.to_text());
  }

  const auto w2 = coset_spanning_families(2, 1);
  REQUIRE(w2.size() == 1);
  CHECK(w2[0].cycles.size() == 1);
  const Report rep = verify_spanning_two_regular(w2[0].cycles, 2);
  CHECK(rep.ok());

  CHECK_THROWS_AS(coset_spanning_families(6, 2), Error);
}

TEST_CASE("families are the sigma translates of W_1") {
  for (int n : {4, 8}) {
    const int mu = (n == 4) ? 2 : 3;
    const auto fams = coset_spanning_families(n, mu);
    for (std::size_t i = 0; i < fams.size(); ++i) {
      const Vertex rep{(i >= 1) ? ((1ull << (2 * i)) - 1) : 0};  // {1..2i} for family i+1
      std::vector<CycleSpec> translated;
      for (const CycleSpec& c : fams[0].cycles) translated.push_back(apply_sigma(rep, c));
      CHECK(canonical_set(translated, n) == canonical_set(fams[i].cycles, n));
    }
  }
}

TEST_CASE("families are pairwise edge-disjoint and jointly exhaustive") {
  for (int n : {4, 8}) {
    const int mu = (n == 4) ? 2 : 3;
    const auto fams = coset_spanning_families(n, mu);
    std::vector<CycleSpec> all;
    for (const auto& fam : fams) all.insert(all.end(), fam.cycles.begin(), fam.cycles.end());
    const Report rep = verify_edge_partition(all, n);
    CHECK_MESSAGE(rep.ok(), rep.to_text());
  }
}
