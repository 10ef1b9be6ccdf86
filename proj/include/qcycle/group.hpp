// GF(2) machinery over even subsets of [h-1]: the group G, the subgroup H
// generated by the pairs {j, 2^{i-1}+j}, and its cosets with prefix-set
// representatives.  Membership is decided against a reduced basis so large h
// stays cheap; explicit element lists are materialized only on demand.

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "qcycle/hypercube.hpp"

namespace qcycle {

struct SubsetGroupParams {
  int h = 0;   // subsets are drawn from [h-1]
  int mu = 0;  // log2 h
};

// Derives mu and validates that h is a power of two, h >= 2.
SubsetGroupParams subset_group_params(int h);

// K = {{j, 2^{i-1}+j} : j = 1..2^{i-1}-1, i = 2..mu}.  Empty for mu = 1.
std::vector<Vertex> generator_set_K(const SubsetGroupParams& params);

class Subgroup {
 public:
  // GF(2) span of the generators; each must be an even subset of [h-1].
  static Subgroup span(std::vector<Vertex> generators, const SubsetGroupParams& params);

  const SubsetGroupParams& params() const { return params_; }
  const std::vector<Vertex>& generators() const { return generators_; }
  const std::vector<std::uint64_t>& basis() const { return basis_; }

  int rank() const { return static_cast<int>(basis_.size()); }
  std::uint64_t size() const { return 1ull << rank(); }

  bool contains(Vertex a) const;

  // All elements sorted by mask.  Materializes 2^rank vertices.
  std::vector<Vertex> elements() const;

  // Streaming enumeration (Gray order, unsorted); visits each element once
  // without materializing the list.
  template <typename F>
  void for_each_element(F&& f) const {
    Vertex x;
    f(x);
    for (std::uint64_t c = 1; c < size(); ++c) {
      x ^= Vertex{basis_[static_cast<std::size_t>(std::countr_zero(c))]};
      f(x);
    }
  }

 private:
  SubsetGroupParams params_;
  std::vector<Vertex> generators_;
  std::vector<std::uint64_t> basis_;  // reduced, pivots strictly decreasing
};

// span(K) with the rank identity rank = h - mu - 1 asserted rather than
// trusted.
Subgroup standard_subgroup(int h);

struct CosetFamily {
  Subgroup subgroup;
  std::vector<Vertex> reps;  // {1..2i-2} for i = 1..h/2

  int count() const { return static_cast<int>(reps.size()); }
  // Elements of the i-th coset (1-based), sorted by mask.
  std::vector<Vertex> coset_elements(int i) const;
};

// The h/2 cosets of H in G with prefix-set representatives.  Verifies the
// reps land in pairwise-distinct cosets (CosetCollision otherwise) and that
// the cosets account for all of G.
CosetFamily cosets(const Subgroup& h);

// True iff a = {x, x+1, ..., y} for some x <= y; the empty set is not a
// consecutive string.
bool is_consecutive_string(Vertex a);

}  // namespace qcycle
