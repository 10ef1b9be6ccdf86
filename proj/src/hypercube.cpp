#include "qcycle/hypercube.hpp"

#include <algorithm>
#include <bit>

namespace qcycle {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotAdjacent: return "NotAdjacent";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotInLowerHalf: return "NotInLowerHalf";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotSimple: return "NotSimple";
    case Errc::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case Errc::CosetCollision: return "CosetCollision";
    case Errc::OddDimension: return "OddDimension";
    case Errc::NotPowerOfTwo: return "NotPowerOfTwo";
    case Errc::DirectionOutOfHalf: return "DirectionOutOfHalf";
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::BadParameters: return "BadParameters";
    case Errc::ResourceCap: return "ResourceCap";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::ElementOutOfRange: return "ElementOutOfRange";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::ParseError: return "ParseError";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::SinkFailure: return "SinkFailure";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

int Vertex::count() const { return std::popcount(bits); }

Vertex vertex_of(std::initializer_list<int> elements) {
  Vertex v;
  for (int e : elements) {
    if (e < 1 || e > kMaskBits) fail(Errc::ElementOutOfRange, "element " + std::to_string(e));
    v ^= single(e);
  }
  return v;
}

std::vector<int> elements_of(Vertex v) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(v.count()));
  std::uint64_t m = v.bits;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

std::string to_set_string(Vertex v) {
  std::string s = "{";
  bool first = true;
  for (int e : elements_of(v)) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(e);
  }
  s += '}';
  return s;
}

Edge Edge::canonical(Vertex u, Vertex v) {
  const int d = edge_direction(u, v);
  return Edge{u.contains(d) ? v : u, d};
}

std::string to_string(const Edge& e) {
  return "(" + to_set_string(e.lo) + "," + to_set_string(e.hi()) + ")";
}

int edge_direction(Vertex u, Vertex v) {
  const std::uint64_t d = u.bits ^ v.bits;
  if (std::popcount(d) != 1)
    fail(Errc::NotAdjacent, to_set_string(u) + " vs " + to_set_string(v));
  return std::countr_zero(d) + 1;
}

CycleSpec apply_sigma(Vertex a, const CycleSpec& spec) {
  return CycleSpec{a ^ spec.start, spec.dirs};
}

int theta(int i, int half) {
  if (half < 1 || i < 1 || i > 2 * half)
    fail(Errc::OutOfRange, "theta(" + std::to_string(i) + ") over [" + std::to_string(2 * half) + "]");
  return i <= half ? i + half : i - half;
}

Vertex theta_set(Vertex a, int half) {
  const std::uint64_t lower = (half >= kMaskBits) ? ~0ull : ((1ull << half) - 1);
  if (a.bits & ~lower)
    fail(Errc::NotInLowerHalf, to_set_string(a) + " not within [" + std::to_string(half) + "]");
  return Vertex{a.bits << half};
}

namespace {
// {a..b} as a mask; empty when a > b.
std::uint64_t range_mask(int a, int b) {
  if (a > b) return 0;
  return ((b >= kMaskBits ? ~0ull : (1ull << b) - 1)) ^ ((1ull << (a - 1)) - 1);
}
}  // namespace

Vertex bracket(int i, int half) {
  if (half < 1 || i < 0 || i > 2 * half)
    fail(Errc::OutOfRange, "bracket(" + std::to_string(i) + ") over half " + std::to_string(half));
  if (i == 0) return Vertex{};
  if (i <= half) return Vertex{range_mask(1, i)};
  return Vertex{range_mask(i - half + 1, half)};
}

Vertex complement_in_half(Vertex x, int half) {
  const std::uint64_t lower = (half >= kMaskBits) ? ~0ull : ((1ull << half) - 1);
  if (x.bits & ~lower)
    fail(Errc::NotInLowerHalf, to_set_string(x) + " not within [" + std::to_string(half) + "]");
  return Vertex{x.bits ^ lower};
}

std::vector<Vertex> walk_cycle(const CycleSpec& spec, int n) {
  if (n < 1 || n > kMaskBits) fail(Errc::OutOfRange, "dimension " + std::to_string(n));
  const std::uint64_t ambient = (n >= kMaskBits) ? ~0ull : ((1ull << n) - 1);
  if (spec.start.bits & ~ambient)
    fail(Errc::OutOfRange, "start " + to_set_string(spec.start) + " outside Q_" + std::to_string(n));
  const std::size_t k = spec.dirs.size();
  std::vector<Vertex> verts;
  verts.reserve(k);
  Vertex u = spec.start;
  for (std::size_t j = 0; j < k; ++j) {
    const int d = spec.dirs[j];
    if (d < 1 || d > n)
      fail(Errc::OutOfRange, "direction " + std::to_string(d) + " at step " + std::to_string(j + 1));
    verts.push_back(u);
    u ^= single(d);
  }
  if (u != spec.start) fail(Errc::NotClosed, "walk ends at " + to_set_string(u));
  std::vector<std::uint64_t> seen;
  seen.reserve(k);
  for (const Vertex& v : verts) seen.push_back(v.bits);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    fail(Errc::NotSimple, "a vertex repeats");
  if (k < 4) fail(Errc::NotSimple, "closed walk of length " + std::to_string(k));
  return verts;
}

CycleSpec canonical_cycle(const CycleSpec& spec, int n) {
  const std::vector<Vertex> verts = walk_cycle(spec, n);
  const std::size_t k = verts.size();
  std::size_t at = 0;
  for (std::size_t j = 1; j < k; ++j)
    if (verts[j] < verts[at]) at = j;
  const Vertex fwd = verts[(at + 1) % k];
  const Vertex bwd = verts[(at + k - 1) % k];
  std::vector<Vertex> order(k);
  for (std::size_t j = 0; j < k; ++j)
    order[j] = (fwd < bwd) ? verts[(at + j) % k] : verts[(at + k - j) % k];
  CycleSpec out;
  out.start = order[0];
  out.dirs.resize(k);
  for (std::size_t j = 0; j < k; ++j)
    out.dirs[j] = static_cast<std::uint8_t>(edge_direction(order[j], order[(j + 1) % k]));
  return out;
}

}  // namespace qcycle
