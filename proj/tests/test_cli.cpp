// End-to-end checks of the qcycle binary: exit-code contract, determinism,
// and the QCYC file surface.  Invoked with the CLI path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_tmp;
int g_failures = 0;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(bool cond, const std::string& what) {
  if (cond) {
    std::cout << "ok: " << what << "\n";
  } else {
    std::cout << "FAILED: " << what << "\n";
    ++g_failures;
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: qcycle_cli_tests <path-to-qcycle>\n";
    return 2;
  }
  g_cli = argv[1];
  std::mt19937_64 rng(std::random_device{}());
  g_tmp = fs::temp_directory_path() / ("qcycle_cli_" + std::to_string(rng()));
  fs::create_directories(g_tmp);

  // exit-code contract
  expect(run("decompose --n 8 --m 3 --verify").code == 0, "decompose --n 8 --m 3 --verify exits 0");
  expect(run("decompose --n 7 --m 1").code == 2, "odd n exits 2");
  expect(run("decompose --n 4 --m 3").code == 2, "n < 2^m exits 2");
  expect(run("decompose --n 18 --m 3").code == 2, "beyond envelope exits 2 without --force");
  expect(run("decompose").code == 2, "missing required options exit 2");
  expect(run("bogus").code == 2, "unknown subcommand exits 2");

  // the full --verify envelope from the module invariants
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{
           {2, 1}, {4, 1}, {4, 2}, {6, 1}, {6, 2}, {8, 1}, {8, 2}, {8, 3}, {10, 3}, {16, 4}}) {
    const std::string args = "decompose --n " + std::to_string(n) + " --m " + std::to_string(m) +
                             " --verify --out " + (g_tmp / "t.qcyc").string();
    expect(run(args).code == 0,
           "decompose --verify (" + std::to_string(n) + "," + std::to_string(m) + ") exits 0");
  }

  // determinism: byte-identical output for identical arguments
  const RunResult a = run("decompose --n 6 --m 2");
  const RunResult b = run("decompose --n 6 --m 2");
  expect(a.code == 0 && a.out == b.out, "decompose output is deterministic");
  expect(a.out.rfind("qcyc 1\nn=6 m=2 cycles=8 len=24\n", 0) == 0, "header as specified");

  // forced construction carries the unverified marker
  const fs::path forced = g_tmp / "forced.qcyc";
  expect(run("decompose --n 18 --m 3 --force --out " + forced.string()).code == 0,
         "--force allows n = 18");
  expect(slurp(forced).rfind("qcyc 1\n# unverified\n", 0) == 0, "forced output marked unverified");

  // verify: clean file passes, tampered start fails
  const fs::path good = g_tmp / "q8.qcyc";
  expect(run("decompose --n 8 --m 3 --out " + good.string()).code == 0, "write q8.qcyc");
  expect(run("verify " + good.string()).code == 0, "verify accepts the file");
  {
    std::string text = slurp(good);
    const std::size_t at = text.find("start=");
    const std::size_t digit = at + 6;
    // xor the low bit of the first hex digit of the first start mask
    const char c = text[digit];
    const int val = (c >= 'a') ? (c - 'a' + 10) : (c - '0');
    const int flipped = val ^ 1;
    text[digit] = static_cast<char>(flipped < 10 ? '0' + flipped : 'a' + flipped - 10);
    std::ofstream out(g_tmp / "tampered.qcyc", std::ios::binary);
    out << text;
  }
  expect(run("verify " + (g_tmp / "tampered.qcyc").string()).code == 1,
         "verify rejects a 1-bit start flip");
  expect(run("verify " + (g_tmp / "missing.qcyc").string()).code == 2, "unreadable file exits 2");

  // paths
  const RunResult paths = run("paths --len 16 " + good.string());
  expect(paths.code == 0, "paths --len 16 runs");
  std::size_t path_lines = 0;
  for (std::size_t pos = 0; (pos = paths.out.find("\np ", pos)) != std::string::npos; ++pos)
    ++path_lines;
  expect(path_lines == 64, "64 paths listed for r=16");
  expect(run("paths --len 7 " + good.string()).code == 2, "non-divisor path length exits 2");

  // mollard
  const RunResult mol = run("mollard --n 4");
  expect(mol.code == 0 && mol.out.rfind("q2ncyc 1\nn=4 cycles=4 len=8\n", 0) == 0,
         "mollard header and counts");
  expect(run("mollard --n 5").code == 2, "odd mollard dimension exits 2");

  // appendix tables
  const RunResult apx = run("appendix-q8 --check");
  expect(apx.code == 0, "appendix-q8 --check exits 0");
  expect(apx.out.find("e1_1 ({},{1})") != std::string::npos, "first Phi edge printed");
  expect(apx.out.find("f2_1 ({7,8},{5,7,8})") != std::string::npos,
         "first Gamma edge of F2' printed");

  fs::remove_all(g_tmp);
  if (g_failures) {
    std::cout << g_failures << " CLI checks failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
