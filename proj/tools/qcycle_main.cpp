// qcycle: construct, verify, and split hypercube cycle decompositions.
//
// Exit codes: 0 success, 1 verification/golden failure, 2 bad parameters or
// unreadable input.  Data goes to stdout (or --out); diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcycle/decompose.hpp"
#include "qcycle/io.hpp"
#include "qcycle/mollard_ramras.hpp"
#include "qcycle/q8_tables.hpp"
#include "qcycle/verify.hpp"

namespace {

using namespace qcycle;

int emit(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << data;
    return std::cout ? 0 : 1;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << data;
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  return 0;
}

int cmd_decompose(int n, int m, const std::string& out_path, bool verify, bool force) {
  const Decomposition dec = decompose(n, m, force);
  if (verify) {
    const Report rep = verify_decomposition(dec);
    for (const std::string& note : rep.notes) std::cerr << "note: " << note << "\n";
    if (!rep.ok()) {
      std::cerr << rep.to_lines();
      return 1;
    }
  }
  return emit(format_decomposition(dec), out_path);
}

int cmd_verify(const std::string& path) {
  const Decomposition dec = read_decomposition_file(path);
  const Report rep = verify_decomposition(dec);
  for (const std::string& note : rep.notes) std::cerr << "note: " << note << "\n";
  if (!rep.ok()) {
    std::cerr << rep.to_lines();
    return 1;
  }
  return 0;
}

int cmd_paths(std::uint32_t len, const std::string& path, const std::string& out_path) {
  const Decomposition dec = read_decomposition_file(path);
  const PathDecomposition pd = path_decomposition(dec, len);
  std::string data = "qpaths 1\n";
  data += "n=" + std::to_string(pd.n) + " r=" + std::to_string(pd.path_len) +
          " paths=" + std::to_string(pd.paths.size()) + "\n";
  char hex[20];
  for (std::size_t i = 0; i < pd.paths.size(); ++i) {
    data += "p " + std::to_string(i + 1) + " verts=";
    for (std::size_t j = 0; j < pd.paths[i].size(); ++j) {
      if (j) data += ',';
      std::snprintf(hex, sizeof hex, "%llx", static_cast<unsigned long long>(pd.paths[i][j].bits));
      data += hex;
    }
    data += '\n';
  }
  return emit(data, out_path);
}

int cmd_mollard(int n, const std::string& out_path) {
  const std::vector<CycleSpec> cycles = two_n_cycle_decomposition(n);
  std::string data = "q2ncyc 1\n";
  data += "n=" + std::to_string(n) + " cycles=" + std::to_string(cycles.size()) +
          " len=" + std::to_string(2 * n) + "\n";
  char hex[20];
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    std::snprintf(hex, sizeof hex, "%llx", static_cast<unsigned long long>(cycles[i].start.bits));
    data += "c " + std::to_string(i + 1) + " start=" + hex + " dirs=";
    for (std::size_t j = 0; j < cycles[i].dirs.size(); ++j) {
      if (j) data += ',';
      data += std::to_string(cycles[i].dirs[j]);
    }
    data += '\n';
  }
  return emit(data, out_path);
}

int cmd_appendix_q8(bool check) {
  const std::vector<Q8Table> built = q8_tables_from_construction();
  std::cout << render_q8_tables(built);
  if (!check) return 0;
  const std::vector<Q8Table>& ref = q8_reference_tables();
  int mismatches = 0;
  for (std::size_t t = 0; t < ref.size() && t < built.size(); ++t) {
    if (built[t].a != ref[t].a || built[t].b != ref[t].b || built[t].family != ref[t].family ||
        built[t].kind != ref[t].kind) {
      std::cerr << "table " << t + 1 << ": header mismatch\n";
      ++mismatches;
      continue;
    }
    for (std::size_t j = 0; j < 8; ++j) {
      if (built[t].edges[j] != ref[t].edges[j]) {
        std::cerr << "table " << t + 1 << " row " << j + 1 << ": constructed ("
                  << to_set_string(built[t].edges[j].first) << ","
                  << to_set_string(built[t].edges[j].second) << ") reference ("
                  << to_set_string(ref[t].edges[j].first) << ","
                  << to_set_string(ref[t].edges[j].second) << ")\n";
        ++mismatches;
      }
    }
  }
  if (built.size() != ref.size()) {
    std::cerr << "table count mismatch\n";
    ++mismatches;
  }
  if (mismatches) {
    std::cerr << mismatches << " golden mismatches\n";
    return 1;
  }
  std::cerr << "all 16 tables match the reference data (" << q8_table_typos().size()
            << " documented source glitches)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypercube cycle decompositions with a distinguished perfect matching"};
  app.require_subcommand(1);

  int n = 0, m = 0;
  std::string out_path, file_path;
  bool verify = false, force = false, check = false;
  std::uint32_t path_len = 0;

  CLI::App* dec = app.add_subcommand("decompose", "build a 2^m*n-cycle decomposition of Q_n");
  dec->add_option("--n", n, "dimension (even, >= 2^m)")->required();
  dec->add_option("--m", m, "cycle-length exponent")->required();
  dec->add_option("--out", out_path, "output file (default: stdout)");
  dec->add_flag("--verify", verify, "run the full verification oracle");
  dec->add_flag("--force", force, "bypass the resource cap (output marked unverified)");

  CLI::App* ver = app.add_subcommand("verify", "re-check a QCYC file");
  ver->add_option("file", file_path, "QCYC file")->required();

  CLI::App* paths = app.add_subcommand("paths", "cut a QCYC decomposition into equal paths");
  paths->add_option("--len", path_len, "path length (edges)")->required();
  paths->add_option("file", file_path, "QCYC file")->required();
  paths->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* mol = app.add_subcommand("mollard", "emit the 2n-cycle decomposition of Q_n");
  mol->add_option("--n", n, "dimension (even)")->required();
  mol->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* apx = app.add_subcommand("appendix-q8", "print the Q_8 matching-edge tables");
  apx->add_flag("--check", check, "compare against the embedded reference data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (dec->parsed()) return cmd_decompose(n, m, out_path, verify, force);
    if (ver->parsed()) return cmd_verify(file_path);
    if (paths->parsed()) return cmd_paths(path_len, file_path, out_path);
    if (mol->parsed()) return cmd_mollard(n, out_path);
    if (apx->parsed()) return cmd_appendix_q8(check);
  } catch (const qcycle::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
