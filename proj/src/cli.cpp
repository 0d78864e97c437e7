#include "foel/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <random>
#include <sstream>

#include "foel/errors.hpp"
#include "foel/graph_families.hpp"
#include "foel/hamiltonians.hpp"
#include "foel/qgroup.hpp"
#include "foel/report.hpp"
#include "foel/sector_spectra.hpp"
#include "foel/ssep.hpp"
#include "foel/temperley_lieb.hpp"

namespace foel::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using report::cell;
using report::CsvTable;

std::string command_name(Command c) {
  switch (c) {
    case Command::Spectrum: return "spectrum";
    case Command::Foel: return "foel";
    case Command::TlMatrix: return "tl-matrix";
    case Command::FkBasis: return "fk-basis";
    case Command::QFoel: return "qfoel";
    case Command::Droplet: return "droplet";
    case Command::SsepGap: return "ssep-gap";
    case Command::SpinMap: return "spinmap";
    case Command::Figure1: return "figure1";
  }
  return "?";
}

namespace {

struct Outcome {
  int code = kOk;
  std::string summary;
};

class Emitter {
 public:
  Emitter(const RunConfig& cfg) : dir_(cfg.out_dir), stem_(command_name(cfg.command)) {}

  void csv(const CsvTable& t, const std::string& suffix = "") {
    report::write_csv(dir_ / (stem_ + suffix + ".csv"), t);
  }
  void json_summary(json j) {
    j["command"] = stem_;
    report::write_json(dir_ / (stem_ + ".json"), j);
  }

 private:
  fs::path dir_;
  std::string stem_;
};

std::vector<HalfInt> spins_from_twice(const std::vector<int>& twice) {
  std::vector<HalfInt> out;
  for (int t : twice) out.push_back(HalfInt::from_twice(t));
  return out;
}

std::vector<double> couplings_or_ones(const std::vector<double>& given, std::size_t count) {
  if (given.empty()) return std::vector<double>(count, 1.0);
  if (given.size() == 1 && count > 1) return std::vector<double>(count, given.front());
  if (given.size() != count)
    throw InputError("expected " + std::to_string(count) + " couplings, got " + std::to_string(given.size()));
  return given;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string chain_label(const ChainSpec& c) {
  std::string out = "chain ";
  for (std::size_t i = 0; i < c.spins.size(); ++i) out += (i ? "," : "") + std::to_string(c.spins[i].twice());
  return out;
}

struct Instance {
  std::string label;
  int length = 0;
  RealOperator h;
  HilbertShape shape;
};

SpinGraph load_graph(const std::string& path, std::ostream& err) {
  ParsedGraph pg = load_graph_spec(path);
  for (const std::string& w : pg.warnings) err << "warning: " << w << "\n";
  return std::move(pg.graph);
}

// Exactly one of --chain, --graph, --spin1-beta, --random must be given.
std::vector<Instance> hamiltonian_instances(const RunConfig& cfg, bool sweep, std::ostream& err) {
  const int sources = static_cast<int>(!cfg.chain.empty()) + static_cast<int>(!cfg.graph_file.empty()) +
                      static_cast<int>(cfg.beta.has_value()) + static_cast<int>(cfg.random_trials > 0);
  if (sources != 1) throw InputError("give exactly one of --chain, --graph, --spin1-beta, --random");
  std::vector<Instance> out;
  if (cfg.beta) {
    if (cfg.length < 2) throw InputError("--spin1-beta needs --L >= 2");
    for (int L = sweep ? 2 : cfg.length; L <= cfg.length; ++L) {
      std::ostringstream label;
      label << "spin1 beta=" << *cfg.beta << " L=" << L;
      out.push_back({label.str(), L, build_spin1_beta_chain(L, *cfg.beta),
                     HilbertShape(std::vector<int>(static_cast<std::size_t>(L), 3))});
    }
  } else if (!cfg.chain.empty()) {
    ChainSpec c{spins_from_twice(cfg.chain), {}};
    c.couplings = couplings_or_ones(cfg.couplings, cfg.chain.size() - 1);
    c.validate();
    const SpinGraph g = c.as_graph();
    out.push_back({"chain " + join(cfg.chain), static_cast<int>(g.size()), build_heisenberg(g), g.shape()});
  } else if (!cfg.graph_file.empty()) {
    const SpinGraph g = load_graph(cfg.graph_file, err);
    out.push_back({"graph " + fs::path(cfg.graph_file).filename().string(), static_cast<int>(g.size()),
                   build_heisenberg(g), g.shape()});
  } else {
    std::mt19937_64 rng(cfg.seed);
    for (int t = 0; t < cfg.random_trials; ++t) {
      const ChainSpec c = graphs::random_chain(8, {1, 2, 3}, 4096, 2.0, rng);
      const SpinGraph g = c.as_graph();
      out.push_back({chain_label(c), static_cast<int>(g.size()), build_heisenberg(g), g.shape()});
    }
  }
  return out;
}

SectorOptions sector_options(const RunConfig& cfg) {
  SectorOptions o;
  o.foel_tol = cfg.tol.foel;
  return o;
}

Outcome cmd_sectors(const RunConfig& cfg, bool foel_mode, std::ostream& err) {
  const std::vector<Instance> inst = hamiltonian_instances(cfg, foel_mode, err);
  CsvTable t({"run", "label", "L", "S_times2", "dim", "min_energy", "max_energy"});
  json runs = json::array();
  bool all_ok = true;
  int witnesses = 0;
  for (std::size_t r = 0; r < inst.size(); ++r) {
    const SectorReport rep = sector_energies(inst[r].h, inst[r].shape, sector_options(cfg));
    for (const auto& [S, e] : rep.entries)
      t.add_row({cell(r), cell(inst[r].label), cell(inst[r].length), cell(S.twice()), cell(e.dimension),
                 cell(e.min_energy), cell(e.max_energy)});
    all_ok = all_ok && rep.foel_ok;
    if (!rep.foel_ok) ++witnesses;
    json run{{"run", r},
             {"label", inst[r].label},
             {"L", inst[r].length},
             {"foel_ok", rep.foel_ok},
             {"margins", report::margins_json(rep.foel_margins)},
             {"max_ordering_ok", rep.liebmattis_max_ok}};
    if (rep.cross_check_deviation) run["cross_check_deviation"] = *rep.cross_check_deviation;
    runs.push_back(run);
  }
  json j{{"foel_ok", all_ok}, {"runs", runs}, {"foel_tol", cfg.tol.foel}, {"violating_runs", witnesses}};
  if (cfg.beta && foel_mode && witnesses == 0) j["note"] = "no witness at desk scale";
  Emitter em(cfg);
  em.csv(t);
  em.json_summary(j);
  Outcome o;
  o.summary = "foel_ok=" + std::string(all_ok ? "true" : "false") + " over " + std::to_string(inst.size()) + " run(s)";
  if (foel_mode && !all_ok) {
    o.code = kPropertyViolation;
    for (const json& run : runs)
      if (!run["foel_ok"].get<bool>()) err << "FOEL fails for " << run["label"].get<std::string>() << "\n";
  }
  return o;
}

Outcome cmd_figure1(const RunConfig& cfg, std::ostream&) {
  const int L = cfg.length > 0 ? cfg.length : 5;
  const int twice_s = cfg.chain.empty() ? 2 : cfg.chain.front();
  if (cfg.chain.size() > 1) throw InputError("figure1 takes a single --chain spin");
  ChainSpec c{std::vector<HalfInt>(static_cast<std::size_t>(L), HalfInt::from_twice(twice_s)), {}};
  c.couplings = couplings_or_ones(cfg.couplings, static_cast<std::size_t>(L - 1));
  c.validate();
  const SpinGraph g = c.as_graph();
  const RealOperator h = build_heisenberg(g);
  const std::vector<S3Spectrum> blocks = full_spectrum_by_s3(h, g.shape(), true);
  CsvTable t({"M_times2", "energy"});
  double lowest = std::numeric_limits<double>::infinity();
  for (const S3Spectrum& b : blocks)
    for (double e : b.eigenvalues) {
      t.add_row({cell(b.twice_m), cell(e)});
      lowest = std::min(lowest, e);
    }
  const SectorReport rep = sector_energies(h, g.shape(), sector_options(cfg));
  const HalfInt smax = rep.entries.rbegin()->first;
  const HalfInt lo = std::min(HalfInt::from_int(1), smax);
  const bool max_ok = check_max_ordering(rep.entries, lo, smax);
  Emitter em(cfg);
  em.csv(t);
  em.csv(report::sector_table(rep.entries), "_sectors");
  em.json_summary({{"L", L},
                   {"spin_times2", twice_s},
                   {"foel_ok", rep.foel_ok},
                   {"margins", report::margins_json(rep.foel_margins)},
                   {"max_ordering_ok", max_ok},
                   {"ground_offset", lowest}});
  Outcome o;
  o.summary = "foel_ok=" + std::string(rep.foel_ok ? "true" : "false") + " max_ordering_ok=" + (max_ok ? "true" : "false");
  if (!rep.foel_ok || !max_ok) o.code = kPropertyViolation;
  return o;
}

std::string arcs_str(const std::vector<std::pair<int, int>>& arcs) {
  std::string out;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    out += (i ? ";" : "") + ("(" + std::to_string(arcs[i].first) + "," + std::to_string(arcs[i].second) + ")");
  return out;
}

void dense_matrix_rows(CsvTable& t, const MatrixXd& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      t.add_row({cell(static_cast<int>(i)), cell(static_cast<int>(j)), cell(a(i, j))});
}

Outcome cmd_tl_matrix(const RunConfig& cfg, std::ostream&) {
  if (cfg.k < 1 || cfg.n < 0) throw InputError("tl-matrix needs --k >= 1 and --n >= 0");
  const double q = cfg.q.value_or(1.0);
  const TLMatrix m = tl_hamiltonian_matrix(cfg.k, cfg.n, couplings_or_ones(cfg.couplings, static_cast<std::size_t>(cfg.k - 1)), q);
  CsvTable basis({"id", "arcs"});
  for (std::size_t i = 0; i < m.basis.size(); ++i) basis.add_row({cell(i), cell(m.basis[i].str())});
  CsvTable entries({"row", "col", "value"});
  dense_matrix_rows(entries, m.A);
  const double offdiag = m.A.rows() > 0 ? max_offdiagonal(m.A) : 0.0;
  const bool sign_ok = offdiag <= cfg.tol.sign;
  json j{{"k", cfg.k}, {"n", cfg.n}, {"q", q}, {"dimension", m.basis.size()},
         {"max_offdiagonal", offdiag}, {"sign_ok", sign_ok}};
  if (m.A.rows() > 0) {
    const PerronResult p = perron_ground_vector(m.A);
    j["irreducible"] = p.irreducible;
    j["perron"] = {{"eigenvalue", p.eigenvalue}, {"positive", p.positive}, {"simple", p.simple}, {"gap", p.gap}};
  }
  Emitter em(cfg);
  em.csv(entries);
  em.csv(basis, "_basis");
  em.json_summary(j);
  Outcome o;
  o.summary = "dimension=" + std::to_string(m.basis.size()) + " sign_ok=" + (sign_ok ? "true" : "false");
  if (!sign_ok) o.code = kPropertyViolation;
  return o;
}

Outcome cmd_fk_basis(const RunConfig& cfg, std::ostream&) {
  if (cfg.chain.empty() || cfg.twice_S < 0) throw InputError("fk-basis needs --chain and --S2");
  const std::vector<HalfInt> spins = spins_from_twice(cfg.chain);
  const FKMatrix m = fk_hamiltonian_matrix(spins, couplings_or_ones(cfg.couplings, spins.size() - 1),
                                           HalfInt::from_twice(cfg.twice_S));
  CsvTable basis({"id", "n_down", "arcs"});
  for (std::size_t i = 0; i < m.basis.size(); ++i) {
    std::vector<int> downs;
    for (const OrderedIsingBlock& b : m.basis[i].blocks) downs.push_back(b.n_down);
    basis.add_row({cell(i), cell(join(downs)), cell(arcs_str(m.basis[i].arcs))});
  }
  CsvTable entries({"row", "col", "value"});
  dense_matrix_rows(entries, m.A);
  const double tol = std::max(cfg.tol.sign, 1e-10);
  const bool sign_ok = m.max_positive_offdiag <= tol;
  Emitter em(cfg);
  em.csv(entries);
  em.csv(basis, "_basis");
  em.json_summary({{"chain", cfg.chain},
                   {"S_times2", cfg.twice_S},
                   {"dimension", m.basis.size()},
                   {"gram_condition", m.gram_condition},
                   {"residual", m.residual},
                   {"max_positive_offdiagonal", m.max_positive_offdiag},
                   {"sign_ok", sign_ok}});
  Outcome o;
  o.summary = "dimension=" + std::to_string(m.basis.size()) + " sign_ok=" + (sign_ok ? "true" : "false");
  if (!sign_ok) o.code = kPropertyViolation;
  return o;
}

QParam qparam(const RunConfig& cfg) {
  if (cfg.q && cfg.delta) throw InputError("give --q or --delta, not both");
  if (cfg.delta) return QParam::from_delta(*cfg.delta);
  return QParam::from_q(cfg.q.value_or(0.5));
}

Outcome cmd_qfoel(const RunConfig& cfg, std::ostream&) {
  if (cfg.length < 2) throw InputError("qfoel needs --L >= 2");
  const QParam qp = qparam(cfg);
  const QSectorReport rep = q_sector_energies(cfg.length, qp, cfg.tol.foel);
  CsvTable t({"S_times2", "dim", "min_energy", "max_energy", "casimir"});
  for (const auto& [S, e] : rep.entries)
    t.add_row({cell(S.twice()), cell(e.dimension), cell(e.min_energy), cell(e.max_energy), cell(rep.casimir_values.at(S))});
  Emitter em(cfg);
  em.csv(t);
  em.json_summary({{"L", cfg.length},
                   {"q", qp.q},
                   {"delta", qp.delta},
                   {"foel_ok", rep.foel.ok},
                   {"margins", report::margins_json(rep.foel.margins)}});
  Outcome o;
  o.summary = "foel_ok=" + std::string(rep.foel.ok ? "true" : "false");
  if (!rep.foel.ok) o.code = kPropertyViolation;
  return o;
}

Outcome cmd_droplet(const RunConfig& cfg, std::ostream& err) {
  const QParam qp = qparam(cfg);
  if (cfg.droplet_sizes.empty()) throw InputError("droplet needs at least one --n");
  if (cfg.l_min < 2 || cfg.l_max < cfg.l_min) throw InputError("droplet needs 2 <= --Lmin <= --Lmax");
  CsvTable t({"L", "n", "q", "finite_energy", "E_infinity", "bandwidth"});
  json per_n = json::array();
  bool ok = true;
  for (int n : cfg.droplet_sizes) {
    const double einf = droplet_energy(n, qp);
    const double band = droplet_bandwidth(n, qp);
    bool decreasing = true;
    bool above = true;
    double prev = std::numeric_limits<double>::infinity();
    double last = std::numeric_limits<double>::quiet_NaN();
    for (int L = std::max(cfg.l_min, 2 * n); L <= cfg.l_max; ++L) {
      const double e = finite_droplet_energy(L, n, qp);
      t.add_row({cell(L), cell(n), cell(qp.q), cell(e), cell(einf), cell(band)});
      if (!(e < prev)) decreasing = false;
      if (e < einf) above = false;
      prev = last = e;
    }
    if (!decreasing) err << "finite droplet energy not decreasing in L for n=" << n << "\n";
    if (!above) err << "finite droplet energy below E(n) for n=" << n << "\n";
    ok = ok && decreasing && above;
    per_n.push_back({{"n", n},
                     {"E_infinity", einf},
                     {"bandwidth", band},
                     {"decreasing_in_L", decreasing},
                     {"above_E_infinity", above},
                     {"deviation_at_Lmax", std::isnan(last) ? json(nullptr) : json(last - einf)}});
  }
  Emitter em(cfg);
  em.csv(t);
  em.json_summary({{"q", qp.q}, {"delta", qp.delta}, {"L_min", cfg.l_min}, {"L_max", cfg.l_max}, {"droplets", per_n}});
  Outcome o;
  o.summary = "monotone_ok=" + std::string(ok ? "true" : "false");
  if (!ok) o.code = kPropertyViolation;
  return o;
}

// --graph, --path N or --random-graph N (spin-1/2 everywhere for the latter two).
SpinGraph ssep_graph(const RunConfig& cfg, std::ostream& err) {
  const int sources = static_cast<int>(!cfg.graph_file.empty()) + static_cast<int>(cfg.path_sites > 0) +
                      static_cast<int>(cfg.random_graph_sites > 0);
  if (sources != 1) throw InputError("give exactly one of --graph, --path, --random-graph");
  const HalfInt half = HalfInt::from_twice(1);
  if (!cfg.graph_file.empty()) return load_graph(cfg.graph_file, err);
  if (cfg.path_sites > 0)
    return graphs::path(cfg.path_sites, half, couplings_or_ones(cfg.couplings, static_cast<std::size_t>(cfg.path_sites - 1)));
  std::mt19937_64 rng(cfg.seed);
  return graphs::random_connected(cfg.random_graph_sites, half, 0.3, 2.0, rng);
}

Outcome cmd_ssep(const RunConfig& cfg, std::ostream& err) {
  const SpinGraph g = ssep_graph(cfg, err);
  const AldousReport rep = check_aldous(g, {}, cfg.tol.aldous);
  CsvTable t({"n", "sector_dim", "lambda_n", "lambda_1", "relative_deviation"});
  for (const AldousRow& r : rep.rows)
    t.add_row({cell(r.n), cell(r.sector_dim), cell(r.lambda), cell(rep.lambda1), cell(r.relative_deviation)});
  Emitter em(cfg);
  em.csv(t);
  em.json_summary({{"sites", g.size()},
                   {"edges", g.edges().size()},
                   {"lambda_1", rep.lambda1},
                   {"max_relative_deviation", rep.max_deviation},
                   {"aldous_holds", rep.holds}});
  Outcome o;
  o.summary = "aldous_holds=" + std::string(rep.holds ? "true" : "false");
  if (!rep.holds) o.code = kPropertyViolation;
  return o;
}

Outcome cmd_spinmap(const RunConfig& cfg, std::ostream& err) {
  const SpinGraph g = ssep_graph(cfg, err);
  const SpinMapReport rep = verify_spin_map(g, cfg.tol.spinmap);
  CsvTable t({"sites", "edges", "max_deviation", "max_gap_deviation", "s3_ok", "holds"});
  t.add_row({cell(g.size()), cell(g.edges().size()), cell(rep.max_deviation), cell(rep.max_gap_deviation),
             cell(rep.s3_ok), cell(rep.holds)});
  Emitter em(cfg);
  em.csv(t);
  em.json_summary({{"max_deviation", rep.max_deviation},
                   {"max_gap_deviation", rep.max_gap_deviation},
                   {"s3_ok", rep.s3_ok},
                   {"holds", rep.holds}});
  Outcome o;
  o.summary = "spin_map_holds=" + std::string(rep.holds ? "true" : "false");
  if (!rep.holds) o.code = kPropertyViolation;
  return o;
}

Outcome dispatch(const RunConfig& cfg, std::ostream& err) {
  switch (cfg.command) {
    case Command::Spectrum: return cmd_sectors(cfg, false, err);
    case Command::Foel: return cmd_sectors(cfg, true, err);
    case Command::TlMatrix: return cmd_tl_matrix(cfg, err);
    case Command::FkBasis: return cmd_fk_basis(cfg, err);
    case Command::QFoel: return cmd_qfoel(cfg, err);
    case Command::Droplet: return cmd_droplet(cfg, err);
    case Command::SsepGap: return cmd_ssep(cfg, err);
    case Command::SpinMap: return cmd_spinmap(cfg, err);
    case Command::Figure1: return cmd_figure1(cfg, err);
  }
  throw InputError("unknown command");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string name = command_name(cfg.command);
  try {
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec || !fs::is_directory(cfg.out_dir)) throw InputError("output directory " + cfg.out_dir + " is not usable");
    const Outcome o = dispatch(cfg, err);
    out << name << ": " << o.summary << "\n";
    return o.code;
  } catch (const PropertyViolation& e) {
    err << name << ": property violation: " << e.what() << "\n";
    return kPropertyViolation;
  } catch (const NumericalError& e) {
    err << name << ": numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const InputError& e) {
    err << name << ": input error: " << e.what() << "\n";
    return kUsage;
  } catch (const SymmetryError& e) {
    err << name << ": input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << name << ": out of memory\n";
    return kNumerical;
  } catch (const std::exception& e) {
    err << name << ": " << e.what() << "\n";
    return kUsage;
  }
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Sector spectra, Temperley-Lieb matrices and exclusion-process gaps", "foel"};
  app.require_subcommand(1, 1);
  app.add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized trials")->capture_default_str();
  app.add_option("--tol", cfg.tol.foel, "Strictness margin for the FOEL check")->capture_default_str();
  app.add_option("--aldous-tol", cfg.tol.aldous, "Relative tolerance for lambda(n) = lambda(1)")->capture_default_str();

  auto hamiltonian_source = [&](CLI::App* sub) {
    sub->add_option("--chain", cfg.chain, "Twice-spins of an open chain, comma separated")->delimiter(',');
    sub->add_option("--J", cfg.couplings, "Couplings, comma separated (one value: constant)")->delimiter(',');
    sub->add_option("--graph", cfg.graph_file, "Graph-spec file");
    sub->add_option("--spin1-beta", cfg.beta, "Spin-1 chain with biquadratic weight beta");
    sub->add_option("--L", cfg.length, "Chain length (sweeps 2..L for foel --spin1-beta)");
  };

  struct Sub {
    Command c;
    const char* help;
  };
  const std::vector<Sub> subs = {
      {Command::Spectrum, "Sector energies E(H,S) and maxima"},
      {Command::Foel, "FOEL verdict with per-pair margins"},
      {Command::TlMatrix, "Temperley-Lieb matrix and diagram basis"},
      {Command::FkBasis, "Higher-spin highest-weight basis and matrix"},
      {Command::QFoel, "FOEL for the SU_q(2)-invariant XXZ chain"},
      {Command::Droplet, "Finite-size droplet energies against the infinite-volume values"},
      {Command::SsepGap, "SSEP gaps lambda(n) per particle number"},
      {Command::SpinMap, "SSEP generator against the spin-1/2 Heisenberg model"},
      {Command::Figure1, "Spin-1 chain spectrum by S^3 with ground energy offset"},
  };
  std::vector<std::pair<CLI::App*, Command>> registered;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(command_name(s.c), s.help);
    registered.emplace_back(sub, s.c);
    switch (s.c) {
      case Command::Spectrum:
      case Command::Foel:
        hamiltonian_source(sub);
        if (s.c == Command::Foel) sub->add_option("--random", cfg.random_trials, "Number of random chains");
        break;
      case Command::TlMatrix:
        sub->add_option("--k", cfg.k, "Number of spin-1/2 sites")->required();
        sub->add_option("--n", cfg.n, "Number of arcs (S = k/2 - n)")->required();
        sub->add_option("--J", cfg.couplings, "Couplings J_1..J_{k-1}")->delimiter(',');
        sub->add_option("--q", cfg.q, "Deformation parameter in (0,1]");
        break;
      case Command::FkBasis:
        sub->add_option("--chain", cfg.chain, "Twice-spins, comma separated")->delimiter(',')->required();
        sub->add_option("--S2", cfg.twice_S, "Twice the total spin")->required();
        sub->add_option("--J", cfg.couplings, "Couplings")->delimiter(',');
        break;
      case Command::QFoel:
        sub->add_option("--L", cfg.length, "Chain length")->required();
        sub->add_option("--q", cfg.q, "q in (0,1); default 0.5");
        sub->add_option("--delta", cfg.delta, "Anisotropy > 1");
        break;
      case Command::Droplet:
        sub->add_option("--q", cfg.q, "q in (0,1); default 0.5");
        sub->add_option("--delta", cfg.delta, "Anisotropy > 1");
        sub->add_option("--n", cfg.droplet_sizes, "Droplet sizes")->delimiter(',')->capture_default_str();
        sub->add_option("--Lmin", cfg.l_min, "Smallest chain length")->capture_default_str();
        sub->add_option("--Lmax", cfg.l_max, "Largest chain length")->capture_default_str();
        break;
      case Command::SsepGap:
      case Command::SpinMap:
        sub->add_option("--graph", cfg.graph_file, "Graph-spec file");
        sub->add_option("--path", cfg.path_sites, "Path on N vertices");
        sub->add_option("--random-graph", cfg.random_graph_sites, "Random connected graph on N vertices");
        sub->add_option("--J", cfg.couplings, "Path couplings / rates")->delimiter(',');
        break;
      case Command::Figure1:
        sub->add_option("--L", cfg.length, "Chain length; default 5");
        sub->add_option("--chain", cfg.chain, "Twice the spin at every site; default 2");
        sub->add_option("--J", cfg.couplings, "Couplings")->delimiter(',');
        break;
    }
  }

  std::vector<const char*> cargv;
  for (const std::string& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (const auto& [sub, c] : registered)
    if (sub->parsed()) cfg.command = c;
  return run(cfg, out, err);
}

}  // namespace foel::cli
