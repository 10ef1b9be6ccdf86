#include "qcycle/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcycle {

namespace {

std::string to_hex(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%" PRIx64, v);
  return buf;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& reason) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ": " + reason);
}

// "key=value" -> value, or fail.
std::string expect_kv(const std::string& tok, const std::string& key, std::size_t line) {
  const std::string prefix = key + "=";
  if (tok.rfind(prefix, 0) != 0) parse_fail(line, "expected " + key + "=..., got '" + tok + "'");
  return tok.substr(prefix.size());
}

std::uint64_t parse_u64(const std::string& s, std::size_t line, int base = 10) {
  if (s.empty() || s.size() > 16) parse_fail(line, "bad number '" + s + "'");
  std::uint64_t v = 0;
  for (char c : s) {
    int digit;
    if (c >= '0' && c <= '9')
      digit = c - '0';
    else if (base == 16 && c >= 'a' && c <= 'f')
      digit = c - 'a' + 10;
    else
      parse_fail(line, "bad number '" + s + "'");
    v = v * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(digit);
  }
  return v;
}

std::vector<std::uint64_t> parse_list(const std::string& s, std::size_t line) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  if (s.empty()) parse_fail(line, "empty list");
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
    out.push_back(parse_u64(item, line));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

void write_decomposition(const Decomposition& dec, std::ostream& out) {
  if (dec.cycles.empty())
    fail(Errc::PreconditionViolation, "a decomposition always has at least one cycle");
  if (dec.cycles.size() != dec.matching_positions.size())
    fail(Errc::PreconditionViolation, "matching records do not align with cycles");
  std::string buf = "qcyc 1\n";
  if (dec.unverified) buf += "# unverified\n";
  buf += "n=" + std::to_string(dec.n) + " m=" + std::to_string(dec.m) +
         " cycles=" + std::to_string(dec.cycles.size()) +
         " len=" + std::to_string(dec.cycle_length()) + "\n";
  for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
    buf += "c " + std::to_string(i + 1) + " start=" + to_hex(dec.cycles[i].start.bits) + " dirs=";
    const DirSeq& dirs = dec.cycles[i].dirs;
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      if (j) buf += ',';
      buf += std::to_string(dirs[j]);
    }
    buf += "\nm " + std::to_string(i + 1) + " pos=";
    const auto& pos = dec.matching_positions[i];
    for (std::size_t j = 0; j < pos.size(); ++j) {
      if (j) buf += ',';
      buf += std::to_string(pos[j]);
    }
    buf += '\n';
  }
  out << buf;
  if (!out) fail(Errc::SinkFailure, "write failed");
}

std::string format_decomposition(const Decomposition& dec) {
  std::ostringstream os;
  write_decomposition(dec, os);
  return os.str();
}

Decomposition read_decomposition(std::istream& in) {
  std::size_t lineno = 0;
  std::string line;
  const auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) parse_fail(lineno + 1, std::string("unexpected end, wanted ") + what);
    ++lineno;
  };

  next_line("version header");
  if (line.rfind("qcyc ", 0) == 0) {
    if (line != "qcyc 1") fail(Errc::VersionMismatch, "got '" + line + "'");
  } else {
    parse_fail(lineno, "not a qcyc file");
  }

  Decomposition dec;
  next_line("header");
  if (line == "# unverified") {
    dec.unverified = true;
    next_line("header");
  }

  std::istringstream hs(line);
  std::string tn, tm, tc, tl;
  if (!(hs >> tn >> tm >> tc >> tl)) parse_fail(lineno, "short header");
  std::string extra;
  if (hs >> extra) parse_fail(lineno, "trailing header fields");
  dec.n = static_cast<int>(parse_u64(expect_kv(tn, "n", lineno), lineno));
  dec.m = static_cast<int>(parse_u64(expect_kv(tm, "m", lineno), lineno));
  const std::uint64_t cycles = parse_u64(expect_kv(tc, "cycles", lineno), lineno);
  const std::uint64_t len = parse_u64(expect_kv(tl, "len", lineno), lineno);
  if (dec.n < 2 || dec.n > kMaskBits) parse_fail(lineno, "n out of range");
  if (dec.m < 1 || dec.m > 30 || (1 << dec.m) > dec.n) parse_fail(lineno, "m out of range");
  if (len != dec.cycle_length()) parse_fail(lineno, "len does not equal 2^m*n");
  if (cycles == 0) parse_fail(lineno, "empty decomposition");

  const std::uint64_t ambient = (dec.n >= kMaskBits) ? ~0ull : ((1ull << dec.n) - 1);
  for (std::uint64_t i = 1; i <= cycles; ++i) {
    next_line("cycle record");
    {
      std::istringstream cs(line);
      std::string tag, idx, tstart, tdirs;
      if (!(cs >> tag >> idx >> tstart >> tdirs) || tag != "c")
        parse_fail(lineno, "expected c record");
      if (cs >> extra) parse_fail(lineno, "trailing fields");
      if (parse_u64(idx, lineno) != i) parse_fail(lineno, "cycle index out of order");
      CycleSpec spec;
      spec.start = Vertex{parse_u64(expect_kv(tstart, "start", lineno), lineno, 16)};
      if (spec.start.bits & ~ambient) parse_fail(lineno, "start outside Q_n");
      for (std::uint64_t d : parse_list(expect_kv(tdirs, "dirs", lineno), lineno)) {
        if (d < 1 || d > static_cast<std::uint64_t>(dec.n)) parse_fail(lineno, "direction out of range");
        spec.dirs.push_back(static_cast<std::uint8_t>(d));
      }
      if (spec.dirs.size() != len) parse_fail(lineno, "dirs count != len");
      dec.cycles.push_back(std::move(spec));
    }
    next_line("matching record");
    {
      std::istringstream ms(line);
      std::string tag, idx, tpos;
      if (!(ms >> tag >> idx >> tpos) || tag != "m") parse_fail(lineno, "expected m record");
      if (ms >> extra) parse_fail(lineno, "trailing fields");
      if (parse_u64(idx, lineno) != i) parse_fail(lineno, "matching index out of order");
      std::vector<std::uint32_t> pos;
      for (std::uint64_t p : parse_list(expect_kv(tpos, "pos", lineno), lineno)) {
        if (p < 1 || p > len) parse_fail(lineno, "position out of range");
        if (!pos.empty() && p <= pos.back()) parse_fail(lineno, "positions not ascending");
        pos.push_back(static_cast<std::uint32_t>(p));
      }
      if (pos.size() != (1ull << dec.m)) parse_fail(lineno, "expected 2^m positions");
      dec.matching_positions.push_back(std::move(pos));
    }
  }
  if (std::getline(in, line)) parse_fail(lineno + 1, "trailing content");
  return dec;
}

Decomposition read_decomposition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  return read_decomposition(in);
}

}  // namespace qcycle
