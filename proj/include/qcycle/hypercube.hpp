// Vertex/edge/direction model of the hypercube Q_n.
//
// Vertices are subsets of [n] = {1..n} stored as bitmasks (element j <-> bit
// j-1); adjacency is symmetric difference in exactly one element.  A cycle is
// carried as a start vertex plus an edge-direction sequence and realized by
// walking the XOR recurrence.  The ambient dimension n is always passed
// explicitly and never inferred from the highest set bit.

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcycle {

enum class Errc {
  NotAdjacent,
  OutOfRange,
  NotInLowerHalf,
  NotClosed,
  NotSimple,
  GeneratorOutOfRange,
  CosetCollision,
  OddDimension,
  NotPowerOfTwo,
  DirectionOutOfHalf,
  RangeViolation,
  BadParameters,
  ResourceCap,
  NotADivisor,
  ElementOutOfRange,
  PreconditionViolation,
  ParseError,
  VersionMismatch,
  SinkFailure,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

// Supported dimensions: masks are 64-bit words; constructions are gated far
// below that (see decomposition.hpp).
inline constexpr int kMaskBits = 64;

// A subset of [n] as a bitmask.  XOR is symmetric difference.
struct Vertex {
  std::uint64_t bits = 0;

  constexpr Vertex() = default;
  constexpr explicit Vertex(std::uint64_t b) : bits(b) {}

  constexpr bool contains(int element) const {
    return element >= 1 && element <= kMaskBits && ((bits >> (element - 1)) & 1u);
  }
  int count() const;  // |A|
  bool empty() const { return bits == 0; }

  friend constexpr Vertex operator^(Vertex a, Vertex b) { return Vertex{a.bits ^ b.bits}; }
  Vertex& operator^=(Vertex o) {
    bits ^= o.bits;
    return *this;
  }
  auto operator<=>(const Vertex&) const = default;
};

// {element} as a Vertex.
constexpr Vertex single(int element) { return Vertex{1ull << (element - 1)}; }

// Build a vertex from 1-based elements, e.g. vertex_of({1,3}).
Vertex vertex_of(std::initializer_list<int> elements);

// Elements of v in ascending order.
std::vector<int> elements_of(Vertex v);

// Render as "{1,3}"; the empty set prints "{}".
std::string to_set_string(Vertex v);

// Edge-direction sequence; entries are 1-based directions in [1, n].
using DirSeq = std::vector<std::uint8_t>;

// The cycle C(U, S): start vertex U and direction sequence S of length k.
// U_{j+1} = U_j xor {S_j}; a valid spec closes after k steps and visits k
// distinct vertices.
struct CycleSpec {
  Vertex start;
  DirSeq dirs;

  auto operator<=>(const CycleSpec&) const = default;
};

// Canonical edge: `lo` is the endpoint NOT containing `dir`; the other
// endpoint is lo xor {dir}.
struct Edge {
  Vertex lo;
  int dir = 0;

  static Edge canonical(Vertex u, Vertex v);  // throws NotAdjacent
  Vertex hi() const { return lo ^ single(dir); }
  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);  // "({1,3},{3})"

// The unique i with u xor v = {i}; NotAdjacent otherwise.
int edge_direction(Vertex u, Vertex v);

// The automorphism sigma_A applied to a cycle: C(U,S) -> C(A xor U, S).
CycleSpec apply_sigma(Vertex a, const CycleSpec& spec);

// Half-shift relabeling of directions on [2*half]: i -> i+half for i <= half,
// i -> i-half above.  An involution.
int theta(int i, int half);

// Elementwise theta of a subset of [half] (lands in {half+1..2*half}).
Vertex theta_set(Vertex a, int half);

// The bracket sets: <0> = {}, <i> = {1..i} for i <= half,
// <half+i> = {i+1..half} for 1 <= i <= half.
Vertex bracket(int i, int half);

// Complement within {1..half}: {1..half} xor x, for x a subset of [half].
Vertex complement_in_half(Vertex x, int half);

// Realize a cycle spec: the k visited vertices in order.  Validates that all
// directions lie in [1,n], that the walk closes, that no vertex repeats, and
// that the length is at least 4 (shorter closed walks are not cycles).
std::vector<Vertex> walk_cycle(const CycleSpec& spec, int n);

// Canonical form for comparing cycles as subgraphs rather than rooted walks:
// rotate to the lexicographically smallest vertex, then pick the traversal
// direction that makes the second vertex smaller.  Test/serialization helper;
// never used in construction.
CycleSpec canonical_cycle(const CycleSpec& spec, int n);

}  // namespace qcycle
