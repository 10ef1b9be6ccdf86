#include "qcycle/verify.hpp"

#include <algorithm>
#include <bit>

namespace qcycle {

namespace {

// At most this many detail lines per finding kind; the rest collapse into a
// single "...suppressed" summary so golden-diffing stays practical.
constexpr std::size_t kDetailCap = 64;

struct LocalWalk {
  std::vector<Vertex> verts;
  bool dirs_ok = true;
  bool in_range = true;
  bool closed = false;
  bool simple = false;
};

// Re-derives the walk directly from the spec; intentionally does not share
// code with hypercube::walk_cycle.
LocalWalk local_walk(const CycleSpec& spec, int n) {
  LocalWalk w;
  const std::uint64_t ambient = (n >= kMaskBits) ? ~0ull : ((1ull << n) - 1);
  w.in_range = (spec.start.bits & ~ambient) == 0;
  Vertex u = spec.start;
  w.verts.reserve(spec.dirs.size());
  for (std::uint8_t d : spec.dirs) {
    if (d < 1 || d > n) {
      w.dirs_ok = false;
      return w;
    }
    w.verts.push_back(u);
    u.bits ^= 1ull << (d - 1);
  }
  w.closed = (u == spec.start);
  std::vector<std::uint64_t> seen;
  seen.reserve(w.verts.size());
  for (const Vertex& v : w.verts) seen.push_back(v.bits);
  std::sort(seen.begin(), seen.end());
  w.simple = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  return w;
}

class CappedAdder {
 public:
  CappedAdder(Report& report, std::string kind) : report_(report), kind_(std::move(kind)) {}
  ~CappedAdder() {
    if (count_ > kDetailCap)
      report_.add(kind_, std::to_string(count_ - kDetailCap) + " further findings suppressed");
  }
  void add(const std::string& detail) {
    if (++count_ <= kDetailCap) report_.add(kind_, detail);
  }
  std::size_t count() const { return count_; }

 private:
  Report& report_;
  std::string kind_;
  std::size_t count_ = 0;
};

}  // namespace

void Report::add(std::string kind, std::string detail) {
  findings.push_back(Finding{std::move(kind), std::move(detail)});
}

void Report::merge(const Report& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string Report::to_text() const {
  if (ok() && notes.empty()) return "OK\n";
  std::string out;
  for (const Finding& f : findings) out += "FAIL " + f.kind + ": " + f.detail + "\n";
  for (const std::string& n : notes) out += "note: " + n + "\n";
  if (ok()) out += "OK\n";
  return out;
}

std::string Report::to_lines() const {
  std::string out;
  for (const Finding& f : findings) out += f.kind + "\t" + f.detail + "\n";
  return out;
}

Report verify_cycle(const CycleSpec& spec, int n) {
  Report rep;
  if (n < 1 || n > kMaskBits) {
    rep.add("OutOfRange", "dimension " + std::to_string(n));
    return rep;
  }
  const LocalWalk w = local_walk(spec, n);
  if (!w.in_range) rep.add("OutOfRange", "start " + to_set_string(spec.start));
  if (!w.dirs_ok) {
    rep.add("OutOfRange", "direction outside [1," + std::to_string(n) + "]");
    return rep;
  }
  if (!w.closed) rep.add("NotClosed", "walk from " + to_set_string(spec.start) + " does not return");
  if (!w.simple) rep.add("NotSimple", "a vertex repeats");
  if (w.verts.size() < 4) rep.add("NotSimple", "closed walk shorter than 4");
  return rep;
}

Report verify_edge_partition(const std::vector<CycleSpec>& cycles, int n) {
  if (n < 1 || n > kEdgeSetCap) fail(Errc::ResourceCap, "edge partition check for n = " + std::to_string(n));
  Report rep;
  std::vector<std::uint8_t> count(static_cast<std::size_t>(n) << n, 0);
  {
    CappedAdder dup(rep, "Duplicate");
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const LocalWalk w = local_walk(cycles[i], n);
      if (!w.dirs_ok || !w.in_range) {
        rep.add("OutOfRange", "cycle " + std::to_string(i + 1));
        continue;
      }
      for (std::size_t j = 0; j < w.verts.size(); ++j) {
        const std::uint8_t d = cycles[i].dirs[j];
        const std::uint64_t lo = w.verts[j].bits & ~(1ull << (d - 1));
        const std::size_t slot = static_cast<std::size_t>(lo) * n + (d - 1);
        if (count[slot] < 255) ++count[slot];
        if (count[slot] > 1)
          dup.add(to_string(Edge{Vertex{lo}, d}) + " covered " + std::to_string(count[slot]) + "x");
      }
    }
  }
  {
    CappedAdder missing(rep, "Missing");
    for (std::uint64_t v = 0; v < (1ull << n); ++v)
      for (int d = 1; d <= n; ++d) {
        if (v & (1ull << (d - 1))) continue;  // enumerate each edge once, from its lo endpoint
        if (count[static_cast<std::size_t>(v) * n + (d - 1)] == 0)
          missing.add(to_string(Edge{Vertex{v}, d}));
      }
  }
  return rep;
}

Report verify_matching_set(const std::vector<std::pair<Vertex, Vertex>>& edges, int n,
                           bool require_perfect) {
  Report rep;
  std::vector<std::uint8_t> covered(1ull << n, 0);
  CappedAdder conflict(rep, "Conflict");
  for (const auto& [u, v] : edges) {
    if ((u.bits ^ v.bits) == 0 || std::popcount(u.bits ^ v.bits) != 1) {
      rep.add("NotAdjacent", to_set_string(u) + " vs " + to_set_string(v));
      continue;
    }
    for (const Vertex& x : {u, v}) {
      if (x.bits >> n) {
        rep.add("OutOfRange", to_set_string(x));
        continue;
      }
      if (covered[x.bits]++) conflict.add(to_set_string(x));
    }
  }
  if (require_perfect) {
    std::uint64_t uncovered = 0;
    for (std::uint8_t c : covered) uncovered += (c == 0);
    if (uncovered) rep.add("NotPerfect", std::to_string(uncovered) + " vertices uncovered");
    if (edges.size() != (1ull << (n - 1)))
      rep.add("Size", std::to_string(edges.size()) + " edges, expected " + std::to_string(1ull << (n - 1)));
  }
  return rep;
}

namespace {

std::vector<std::pair<Vertex, Vertex>> selected_edges(const Decomposition& dec, Report& rep) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
    const LocalWalk w = local_walk(dec.cycles[i], dec.n);
    if (!w.dirs_ok || w.verts.empty()) {
      rep.add("OutOfRange", "cycle " + std::to_string(i + 1));
      continue;
    }
    const std::uint64_t k = w.verts.size();
    if (i >= dec.matching_positions.size()) break;
    for (std::uint32_t p : dec.matching_positions[i]) {
      if (p < 1 || p > k) {
        rep.add("OutOfRange", "position " + std::to_string(p) + " in cycle " + std::to_string(i + 1));
        continue;
      }
      edges.emplace_back(w.verts[p - 1], w.verts[p % k]);
    }
  }
  return edges;
}

}  // namespace

Report verify_matching(const Decomposition& dec) {
  Report rep;
  const auto edges = selected_edges(dec, rep);
  rep.merge(verify_matching_set(edges, dec.n, /*require_perfect=*/true));
  return rep;
}

Report verify_condition_I(const Decomposition& dec) {
  Report rep;
  const std::uint32_t want_components = 1u << dec.m;
  const int path_edges = dec.n - 1;
  for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
    const std::string tag = "cycle " + std::to_string(i + 1);
    const LocalWalk w = local_walk(dec.cycles[i], dec.n);
    if (!w.dirs_ok || !w.closed || !w.simple) {
      rep.add("InvalidCycle", tag);
      continue;
    }
    if (i >= dec.matching_positions.size()) {
      rep.add("Missing", "no matching positions for " + tag);
      continue;
    }
    const auto& pos = dec.matching_positions[i];
    const std::uint64_t k = w.verts.size();
    if (pos.size() != want_components) {
      rep.add("Count", tag + " selects " + std::to_string(pos.size()) + " edges, expected " +
                           std::to_string(want_components));
      continue;
    }
    bool ordered = true;
    for (std::size_t j = 0; j < pos.size(); ++j) {
      if (pos[j] < 1 || pos[j] > k || (j > 0 && pos[j] <= pos[j - 1])) ordered = false;
    }
    if (!ordered) {
      rep.add("OutOfRange", tag + " positions not ascending/in range");
      continue;
    }
    for (std::size_t j = 0; j < pos.size(); ++j) {
      const std::uint64_t gap = (j + 1 < pos.size())
                                    ? pos[j + 1] - pos[j] - 1
                                    : pos[0] + k - pos[j] - 1;
      if (gap != static_cast<std::uint64_t>(path_edges))
        rep.add("PathLength", tag + " leaves a path of " + std::to_string(gap) + " edges, expected " +
                                  std::to_string(path_edges));
    }
  }
  return rep;
}

Report verify_spanning_two_regular(const std::vector<CycleSpec>& family, int n) {
  Report rep;
  if (n < 1 || n > kHardCap) {
    rep.add("OutOfRange", "dimension " + std::to_string(n));
    return rep;
  }
  std::vector<std::uint8_t> covered(1ull << n, 0);
  CappedAdder overlap(rep, "Overlap");
  for (std::size_t i = 0; i < family.size(); ++i) {
    rep.merge(verify_cycle(family[i], n));
    const LocalWalk w = local_walk(family[i], n);
    if (!w.dirs_ok || !w.in_range) continue;
    for (const Vertex& v : w.verts)
      if (covered[v.bits]++) overlap.add(to_set_string(v));
  }
  std::uint64_t uncovered = 0;
  for (std::uint8_t c : covered) uncovered += (c == 0);
  if (uncovered) rep.add("NotSpanning", std::to_string(uncovered) + " vertices uncovered");
  return rep;
}

Report verify_decomposition(const Decomposition& dec) {
  Report rep;
  if (dec.n < 2 || dec.n > kHardCap || dec.m < 1 || (1 << dec.m) > dec.n) {
    rep.add("BadParameters", "n = " + std::to_string(dec.n) + ", m = " + std::to_string(dec.m));
    return rep;
  }
  if (dec.cycles.size() != dec.expected_cycle_count())
    rep.add("Count", std::to_string(dec.cycles.size()) + " cycles, expected " +
                         std::to_string(dec.expected_cycle_count()));
  if (dec.matching_positions.size() != dec.cycles.size())
    rep.add("Count", "matching records do not align with cycles");
  {
    CappedAdder length(rep, "Length");
    for (std::size_t i = 0; i < dec.cycles.size(); ++i)
      if (dec.cycles[i].dirs.size() != dec.cycle_length())
        length.add("cycle " + std::to_string(i + 1) + " has length " +
                   std::to_string(dec.cycles[i].dirs.size()));
  }
  for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
    Report cyc = verify_cycle(dec.cycles[i], dec.n);
    for (Finding& f : cyc.findings) f.detail = "cycle " + std::to_string(i + 1) + ": " + f.detail;
    rep.merge(cyc);
  }
  rep.merge(verify_condition_I(dec));
  rep.merge(verify_matching(dec));
  if (dec.n <= kEdgeSetCap)
    rep.merge(verify_edge_partition(dec.cycles, dec.n));
  else
    rep.notes.push_back("edge-partition check skipped (n > " + std::to_string(kEdgeSetCap) + ")");
  return rep;
}

}  // namespace qcycle
