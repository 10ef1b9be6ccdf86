#include <algorithm>
#include <set>

#include "doctest.h"
#include "qcycle/group.hpp"

using namespace qcycle;

namespace {

Vertex V(std::initializer_list<int> e) { return vertex_of(e); }

std::set<std::uint64_t> masks(const std::vector<Vertex>& vs) {
  std::set<std::uint64_t> out;
  for (const Vertex& v : vs) out.insert(v.bits);
  return out;
}

// Maximal runs of consecutive elements.
std::vector<std::pair<int, int>> runs_of(Vertex a) {
  std::vector<std::pair<int, int>> runs;
  const auto elems = elements_of(a);
  for (int e : elems) {
    if (!runs.empty() && runs.back().second + 1 == e)
      runs.back().second = e;
    else
      runs.emplace_back(e, e);
  }
  return runs;
}

}  // namespace

TEST_CASE("generator_set_K") {
  CHECK(masks(generator_set_K(subset_group_params(8))) ==
        masks({V({1, 3}), V({1, 5}), V({2, 6}), V({3, 7})}));
  CHECK(masks(generator_set_K(subset_group_params(4))) == masks({V({1, 3})}));
  CHECK(generator_set_K(subset_group_params(2)).empty());
  CHECK_THROWS_AS(subset_group_params(6), Error);
  CHECK_THROWS_AS(subset_group_params(1), Error);
}

TEST_CASE("span_subgroup over K") {
  const Subgroup h8 = standard_subgroup(8);
  CHECK(h8.size() == 16);
  CHECK(h8.contains(V({1, 2, 3, 5, 6, 7})));
  // the full element listing
  CHECK(masks(h8.elements()) ==
        masks({V({}), V({1, 3}), V({1, 5}), V({1, 7}), V({2, 6}), V({3, 5}), V({3, 7}), V({5, 7}),
               V({1, 2, 3, 6}), V({1, 2, 5, 6}), V({1, 2, 6, 7}), V({1, 3, 5, 7}), V({2, 3, 5, 6}),
               V({2, 3, 6, 7}), V({2, 5, 6, 7}), V({1, 2, 3, 5, 6, 7})}));

  CHECK(masks(standard_subgroup(4).elements()) == masks({V({}), V({1, 3})}));
  CHECK(masks(Subgroup::span({}, subset_group_params(4)).elements()) == masks({V({})}));

  CHECK_THROWS_AS(Subgroup::span({V({1, 4})}, subset_group_params(4)), Error);  // 4 beyond [3]
  CHECK_THROWS_AS(Subgroup::span({V({1})}, subset_group_params(4)), Error);     // odd set
}

TEST_CASE("contains") {
  const Subgroup h8 = standard_subgroup(8);
  CHECK(h8.contains(V({1, 7})));
  CHECK_FALSE(h8.contains(V({1, 2})));
  for (int k = 1; k <= 3; ++k) CHECK(h8.contains(V({1}) ^ single(2 * k + 1)));
}

TEST_CASE("rank identity for h in {4,8,16,32}") {
  for (int h : {4, 8, 16, 32}) {
    const Subgroup sub = standard_subgroup(h);
    const int mu = subset_group_params(h).mu;
    CHECK(sub.rank() == h - mu - 1);
    CHECK(sub.size() == (1ull << (h - mu - 1)));
  }
}

TEST_CASE("cosets") {
  const CosetFamily f4 = cosets(standard_subgroup(4));
  REQUIRE(f4.count() == 2);
  CHECK(f4.reps[0] == V({}));
  CHECK(f4.reps[1] == V({1, 2}));
  CHECK(masks(f4.coset_elements(2)) == masks({V({1, 2}), V({2, 3})}));

  const CosetFamily f8 = cosets(standard_subgroup(8));
  REQUIRE(f8.count() == 4);
  std::set<std::uint64_t> all;
  for (int i = 1; i <= 4; ++i) {
    const auto elems = f8.coset_elements(i);
    CHECK(elems.size() == 16);
    for (const Vertex& v : elems) {
      CHECK(v.count() % 2 == 0);
      CHECK(all.insert(v.bits).second);  // pairwise disjoint
    }
  }
  CHECK(all.size() == 64);  // |G| = 2^6

  const CosetFamily f2 = cosets(standard_subgroup(2));
  REQUIRE(f2.count() == 1);
  CHECK(masks(f2.coset_elements(1)) == masks({V({})}));

  // a wrong subgroup is detected: {1,2} lands in span({{1,2}})
  CHECK_THROWS_AS(cosets(Subgroup::span({V({1, 2})}, subset_group_params(4))), Error);
}

TEST_CASE("is_consecutive_string") {
  CHECK(is_consecutive_string(V({3, 4, 5})));
  CHECK_FALSE(is_consecutive_string(V({1, 3})));
  CHECK(is_consecutive_string(V({4})));
  CHECK_FALSE(is_consecutive_string(V({})));
  CHECK_FALSE(is_consecutive_string(V({1, 2, 4})));
}

TEST_CASE("no element of H is a consecutive string; h/2 and h never appear") {
  for (int h : {4, 8, 16}) {
    const Subgroup sub = standard_subgroup(h);
    sub.for_each_element([&](Vertex v) {
      CHECK_FALSE(is_consecutive_string(v));
      CHECK_FALSE(v.contains(h));
      CHECK_FALSE(v.contains(h / 2));
    });
  }
}

TEST_CASE("{1,2k+1} lies in H for all valid k") {
  for (int h : {4, 8, 16, 32}) {
    const Subgroup sub = standard_subgroup(h);
    for (int k = 1; k <= h / 2 - 1; ++k) CHECK(sub.contains(V({1}) ^ single(2 * k + 1)));
  }
}

TEST_CASE("two-string non-membership families") {
  for (int h : {8, 16}) {
    const Subgroup sub = standard_subgroup(h);
    // [r] + {t+1..t+s} with s,t > r >= 1 never lies in H
    for (int r = 1; r <= h - 1; ++r)
      for (int t = r + 1; t <= h - 2; ++t)
        for (int s = r + 1; t + s <= h - 1; ++s) {
          Vertex a = bracket(r, h);
          for (int x = t + 1; x <= t + s; ++x) a ^= single(x);
          CHECK_FALSE(sub.contains(a));
        }
    // [2^k] + {t+1..t+s} with t > 2^{k+1}, s < 2^k
    for (int k = 0; (1 << k) <= h - 1; ++k)
      for (int t = (1 << (k + 1)) + 1; t <= h - 2; ++t)
        for (int s = 1; s < (1 << k) && t + s <= h - 1; ++s) {
          Vertex a = bracket(1 << k, h);
          for (int x = t + 1; x <= t + s; ++x) a ^= single(x);
          CHECK_FALSE(sub.contains(a));
        }
    // [r] + {S+1..S+s} with S a sum of increasing powers 2^{k_1} < ..., and
    // 1 <= s < r < 2^{k_1}
    for (std::uint32_t powerset = 1; powerset < (1u << 6); ++powerset) {
      int sum = 0, k1 = -1;
      for (int bit = 0; bit < 6; ++bit)
        if (powerset & (1u << bit)) {
          if (k1 < 0) k1 = bit;
          sum += 1 << bit;
        }
      if (sum >= h - 1) continue;
      for (int r = 2; r < (1 << k1); ++r)
        for (int s = 1; s < r && sum + s <= h - 1; ++s) {
          Vertex a = bracket(r, h);
          for (int x = sum + 1; x <= sum + s; ++x) a ^= single(x);
          CHECK_FALSE(sub.contains(a));
        }
    }
  }
}

TEST_CASE("two-string members admit a power-of-two shifted partner") {
  for (int h : {8, 16}) {
    const Subgroup sub = standard_subgroup(h);
    const auto elems = sub.elements();
    for (const Vertex& a : elems) {
      if (runs_of(a).size() != 2) continue;
      bool found = false;
      for (const Vertex& b : elems) {
        const Vertex x = a ^ b;
        const auto rs = runs_of(x);
        if (rs.size() != 2) continue;
        const int len1 = rs[0].second - rs[0].first + 1;
        const int len2 = rs[1].second - rs[1].first + 1;
        if (len1 != len2) continue;
        const int shift = rs[1].first - rs[0].first;
        if (shift > 0 && (shift & (shift - 1)) == 0) {
          found = true;
          break;
        }
      }
      CHECK_MESSAGE(found, "no shifted partner for ", to_set_string(a), " at h = ", h);
    }
  }
}
