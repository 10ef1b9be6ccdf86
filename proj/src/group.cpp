#include "qcycle/group.hpp"

#include <algorithm>

namespace qcycle {

SubsetGroupParams subset_group_params(int h) {
  if (h < 2 || h > kMaskBits || !std::has_single_bit(static_cast<unsigned>(h)))
    fail(Errc::NotPowerOfTwo, "h = " + std::to_string(h));
  return SubsetGroupParams{h, std::countr_zero(static_cast<unsigned>(h))};
}

std::vector<Vertex> generator_set_K(const SubsetGroupParams& params) {
  std::vector<Vertex> k;
  for (int i = 2; i <= params.mu; ++i) {
    const int stride = 1 << (i - 1);
    for (int j = 1; j <= stride - 1; ++j) k.push_back(single(j) ^ single(stride + j));
  }
  return k;
}

Subgroup Subgroup::span(std::vector<Vertex> generators, const SubsetGroupParams& params) {
  Subgroup h;
  h.params_ = params;
  const std::uint64_t ambient = (1ull << (params.h - 1)) - 1;  // subsets of [h-1]
  for (const Vertex& g : generators) {
    if (g.bits & ~ambient)
      fail(Errc::GeneratorOutOfRange, to_set_string(g) + " not within [" + std::to_string(params.h - 1) + "]");
    if (g.count() % 2 != 0)
      fail(Errc::GeneratorOutOfRange, to_set_string(g) + " has odd cardinality");
  }
  h.generators_ = std::move(generators);
  for (const Vertex& g : h.generators_) {
    std::uint64_t x = g.bits;
    for (std::uint64_t b : h.basis_) {
      const std::uint64_t reduced = x ^ b;
      if (reduced < x) x = reduced;
    }
    if (x) h.basis_.push_back(x);
    std::sort(h.basis_.begin(), h.basis_.end(), std::greater<>());
  }
  return h;
}

bool Subgroup::contains(Vertex a) const {
  std::uint64_t x = a.bits;
  for (std::uint64_t b : basis_) {
    const std::uint64_t reduced = x ^ b;
    if (reduced < x) x = reduced;
  }
  return x == 0;
}

std::vector<Vertex> Subgroup::elements() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_element([&](Vertex v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup standard_subgroup(int h) {
  const SubsetGroupParams params = subset_group_params(h);
  Subgroup sub = Subgroup::span(generator_set_K(params), params);
  if (sub.rank() != params.h - params.mu - 1)
    fail(Errc::PreconditionViolation,
         "rank " + std::to_string(sub.rank()) + " != h - mu - 1 for h = " + std::to_string(h));
  return sub;
}

std::vector<Vertex> CosetFamily::coset_elements(int i) const {
  if (i < 1 || i > count()) fail(Errc::OutOfRange, "coset index " + std::to_string(i));
  const Vertex rep = reps[static_cast<std::size_t>(i - 1)];
  std::vector<Vertex> out = subgroup.elements();
  for (Vertex& v : out) v ^= rep;
  std::sort(out.begin(), out.end());
  return out;
}

CosetFamily cosets(const Subgroup& h) {
  const int hh = h.params().h;
  CosetFamily fam{h, {}};
  for (int i = 1; i <= hh / 2; ++i)
    fam.reps.push_back(Vertex{(2 * i - 2 >= 1) ? ((1ull << (2 * i - 2)) - 1) : 0});
  for (std::size_t a = 0; a < fam.reps.size(); ++a)
    for (std::size_t b = a + 1; b < fam.reps.size(); ++b)
      if (h.contains(fam.reps[a] ^ fam.reps[b]))
        fail(Errc::CosetCollision,
             to_set_string(fam.reps[a]) + " and " + to_set_string(fam.reps[b]) + " share a coset");
  // |G| = 2^{h-2}; the h/2 disjoint cosets must account for all of it.
  const std::uint64_t g_order = 1ull << (hh - 2);
  if (h.size() * static_cast<std::uint64_t>(fam.count()) != g_order)
    fail(Errc::PreconditionViolation, "cosets do not cover G for h = " + std::to_string(hh));
  return fam;
}

bool is_consecutive_string(Vertex a) {
  if (a.bits == 0) return false;
  const std::uint64_t x = a.bits >> std::countr_zero(a.bits);
  return (x & (x + 1)) == 0;
}

}  // namespace qcycle
