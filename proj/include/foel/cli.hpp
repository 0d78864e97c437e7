#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace foel::cli {

enum class Command { Spectrum, Foel, TlMatrix, FkBasis, QFoel, Droplet, SsepGap, SpinMap, Figure1 };

enum ExitCode : int { kOk = 0, kPropertyViolation = 1, kUsage = 2, kNumerical = 3 };

struct Tolerances {
  double foel = 1e-8;
  double aldous = 1e-9;
  double spinmap = 1e-12;
  double sign = 1e-12;
};

struct RunConfig {
  Command command = Command::Spectrum;
  std::string out_dir = ".";
  Tolerances tol;
  unsigned long long seed = 20240101ULL;

  // Hamiltonian / graph sources
  std::vector<int> chain;          // twice-spins
  std::vector<double> couplings;   // --J
  std::string graph_file;
  std::optional<double> beta;      // spin-1 beta chain
  int length = 0;                  // --L
  int random_trials = 0;
  int path_sites = 0;
  int random_graph_sites = 0;

  // Temperley-Lieb / FK
  int k = 0;
  int n = -1;
  int twice_S = -1;
  std::optional<double> q;
  std::optional<double> delta;

  // droplet
  std::vector<int> droplet_sizes{1, 2, 3};
  int l_min = 4;
  int l_max = 16;
};

/// Human-readable command name as used on the command line.
std::string command_name(Command c);

/// Dispatches cfg, writing <out_dir>/<command>.csv and .json. A one-line
/// summary goes to out, diagnostics to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace foel::cli
