#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gtoda/aks.hpp"
#include "gtoda/determinant.hpp"
#include "gtoda/lax.hpp"
#include "gtoda/samples.hpp"
#include "gtoda/serialization.hpp"
#include "gtoda/spectral.hpp"
#include "gtoda/toda_sim.hpp"

namespace fs = std::filesystem;
using namespace gtoda;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kSuites = {
    "poisson-commutativity", "quantum-commutativity", "grading",     "symmetrized-match",
    "determinant-equivalence", "conjugation",         "characters",  "aks-identity",
    "ratio-commutativity",   "ore",                   "parabolic"};

struct Common {
  int n = 2;
  std::string mode = "classical";
  bool force = false;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
};

fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("GTODA_OUT_DIR"); dir && *dir) p = fs::path(dir) / p;
  }
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  return p;
}

// Writes to --out (relative to $GTODA_OUT_DIR), else $GTODA_OUT_DIR/<fallback>,
// else stdout.
void emit(const nlohmann::json& doc, const std::string& out, const std::string& fallback) {
  std::string target = out;
  if (target.empty() && std::getenv("GTODA_OUT_DIR") && *std::getenv("GTODA_OUT_DIR")) target = fallback;
  if (target.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  const fs::path p = resolve_output(target);
  std::ofstream f(p);
  if (!f) throw UsageError("cannot write " + p.string());
  f << doc.dump(2) << '\n';
  std::cerr << "wrote " << p.string() << '\n';
}

void guard(int n, bool quantum, bool force) {
  const int limit = quantum ? 4 : 5;
  if (n < 1) throw UsageError("--n must be at least 1");
  if (n > limit && !force)
    throw UsageError("n = " + std::to_string(n) + " exceeds the " + (quantum ? "quantum" : "classical") +
                     " limit " + std::to_string(limit) + "; pass --force to run anyway (may take very long)");
}

std::string suite_tag(const std::string& suite, int n) { return suite + "-n" + std::to_string(n) + ".json"; }

Report determinant_suite(int n, std::uint64_t seed, int samples) {
  Report r;
  r.suite = "determinant-equivalence";
  r.n = n;
  r.mode = "quantum";
  const auto pencil = assemble_pencil(build_full_lax_quantum(n));
  r.add("quantum pencil", det_nc_permsum(pencil) == det_nc_antisym(pencil));
  SampleSource src(seed);
  int bad = 0;
  for (int s = 0; s < samples; ++s) {
    const auto m = src.linear_matrix(n, static_cast<std::size_t>(n));
    if (det_nc_permsum(m) != det_nc_antisym(m)) ++bad;
  }
  r.add("random degree<=1 matrices", bad == 0, std::to_string(samples - bad) + "/" + std::to_string(samples));
  return r;
}

Report conjugation_suite(int n, std::uint64_t seed, int samples) {
  Report r;
  r.suite = "conjugation";
  r.n = n;
  r.mode = "quantum";
  const auto pencil = assemble_pencil(build_full_lax_quantum(n));
  SampleSource src(seed);
  int bad = 0;
  for (int s = 0; s < samples; ++s)
    if (!conjugation_check(pencil, src.invertible(static_cast<std::size_t>(n)))) ++bad;
  r.add("det(g L g^-1) = det(L)", bad == 0, std::to_string(samples - bad) + "/" + std::to_string(samples));
  return r;
}

Report run_suite(const std::string& suite, const Common& c, std::uint64_t seed, int samples) {
  const int n = c.n;
  const bool quantum_mode = c.mode == "quantum";
  if (suite == "poisson-commutativity") {
    guard(n, false, c.force);
    return pairwise_commutativity(classical_family(n));
  }
  if (suite == "quantum-commutativity") {
    guard(n, true, c.force);
    return pairwise_commutativity(quantum_family(n, c.workers), c.workers);
  }
  if (suite == "grading") {
    guard(n, quantum_mode, c.force);
    return quantum_mode ? grading_report(quantum_charpoly(n, c.workers)) : grading_report(classical_charpoly(n));
  }
  if (suite == "symmetrized-match") {
    guard(n, false, c.force);
    const auto family = classical_family(n);
    Report r;
    r.suite = suite;
    r.n = n;
    r.mode = "classical";
    for (int k = 0; k < n; ++k) {
      const auto m = symmetrized_match(family, k);
      r.add("k=" + std::to_string(k), m.match, "sign " + std::to_string(m.sign));
    }
    return r;
  }
  if (suite == "determinant-equivalence") {
    guard(n, true, c.force);
    return determinant_suite(n, seed, samples);
  }
  if (suite == "conjugation") {
    guard(n, true, c.force);
    return conjugation_suite(n, seed, samples);
  }
  if (suite == "characters") {
    guard(n, quantum_mode, c.force);
    return quantum_mode ? character_report(quantum_family(n, c.workers)) : character_report(classical_family(n));
  }
  if (suite == "aks-identity") {
    guard(n, true, c.force);
    const auto family = quantum_family(n, c.workers);
    return aks_identity_check(family, reduce(family).characters, c.workers);
  }
  if (suite == "ratio-commutativity") {
    guard(n, quantum_mode, c.force);
    if (!quantum_mode) return classical_ratio_check(classical_family(n));
    return ratio_commutativity_check(reduce(quantum_family(n, c.workers)), c.workers);
  }
  if (suite == "ore") {
    guard(n, true, c.force);
    const auto reduced = reduce(quantum_family(n, c.workers));
    return ore_condition_check(reduced, default_ore_samples(reduced));
  }
  if (suite == "parabolic") {
    guard(n, false, c.force);
    const auto family = classical_family(n);
    Report r;
    r.suite = suite;
    r.n = n;
    r.mode = "classical";
    for (int k = 0; k <= n; ++k) r.merge(parabolic_invariance_check(family, k));
    return r;
  }
  throw UsageError("unknown suite " + suite);
}

std::pair<int, int> parse_hamiltonian(const std::string& text) {
  int k = 0, i = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "delta:%d,%d%c", &k, &i, &tail) != 2)
    throw UsageError("--hamiltonian expects delta:k,i, got " + text);
  return {k, i};
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad JSON in " + path + ": " + e.what());
  }
}

struct SimConfig {
  std::string model = "open";
  double dt = 1e-3;
  double t_end = 10.0;
  double w = 0.0;
  std::string hamiltonian = "delta:0,1";
  std::string init;
  std::size_t stride = 100;
  std::uint64_t seed = 1;
  std::string trace;
  std::string report;
};

int simulate(const Common& c, const SimConfig& s) {
  const int n = c.n;
  if (!(s.dt > 0)) throw UsageError("--dt must be positive");
  if (!(s.t_end > 0)) throw UsageError("--t-end must be positive");
  if (s.stride == 0) throw UsageError("--stride must be positive");
  if (n < 2) throw UsageError("--n must be at least 2 for simulation");

  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<std::string> coords;
  std::vector<std::vector<double>> samples;
  DriftReport drift;
  nlohmann::json params = {{"model", s.model}, {"n", n}, {"dt", s.dt}, {"t_end", s.t_end}, {"stride", s.stride}};

  if (s.model == "open") {
    OpenChainState s0{std::vector<double>(static_cast<std::size_t>(n)), std::vector<double>(static_cast<std::size_t>(n)), 0.0};
    if (!s.init.empty()) {
      const auto doc = read_json(s.init);
      s0.q = doc.at("q").get<std::vector<double>>();
      s0.p = doc.at("p").get<std::vector<double>>();
      if (s0.q.size() != static_cast<std::size_t>(n) || s0.p.size() != s0.q.size())
        throw UsageError("initial data must have n entries in q and p");
    } else {
      for (auto& q : s0.q) q = uni(rng);
      for (auto& p : s0.p) p = uni(rng);
    }
    params["w"] = s.w;
    const auto traj = integrate_open_chain(s0, s.dt, s.t_end, s.stride);
    drift = spectral_drift(traj, s.w);
    for (int k = 0; k < n; ++k) coords.push_back("q" + std::to_string(k));
    for (int k = 0; k < n; ++k) coords.push_back("p" + std::to_string(k));
    for (const auto& st : traj) {
      auto row = st.q;
      row.insert(row.end(), st.p.begin(), st.p.end());
      samples.push_back(std::move(row));
    }
    // energy rides along as an extra invariant
    drift.names.push_back("energy");
    for (std::size_t i = 0; i < traj.size(); ++i) drift.values[i].push_back(open_chain_energy(traj[i]));
  } else if (s.model == "kk") {
    guard(n, false, c.force);
    const auto [k, i] = parse_hamiltonian(s.hamiltonian);
    if (k < 0 || k >= n) throw UsageError("--hamiltonian level out of range");
    const CommPoly h = delta_coefficient(n, k, i);
    if (h.is_zero()) throw UsageError("Delta_{" + std::to_string(k) + "," + std::to_string(i) + "} is zero");
    BorelPoint p0(n);
    if (!s.init.empty()) {
      const auto doc = read_json(s.init);
      for (const auto& e : doc.at("x")) {
        const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a < b || a > n || b < 1) throw UsageError("initial data: x_ij needs 1 <= j <= i <= n");
        p0.at(a, b) = e.at(2).get<double>();
      }
    } else {
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= a; ++b) p0.at(a, b) = 0.5 * uni(rng);
    }
    params["hamiltonian"] = s.hamiltonian;
    const KKFlow flow(h);
    const auto traj = integrate_kk_flow(flow, p0, s.dt, s.t_end, s.stride);
    auto invariants = generic_toda_invariants(n);
    invariants.insert(invariants.begin(), Invariant{"hamiltonian", h, std::nullopt});
    drift = invariant_drift(traj, invariants);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= a; ++b) coords.push_back("x" + std::to_string(a) + std::to_string(b));
    for (const auto& pt : traj) {
      std::vector<double> row;
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= a; ++b) row.push_back(pt.at(a, b));
      samples.push_back(std::move(row));
    }
  } else {
    throw UsageError("--model must be open or kk");
  }

  const bool have_dir = std::getenv("GTODA_OUT_DIR") && *std::getenv("GTODA_OUT_DIR");
  const std::string trace = !s.trace.empty() ? s.trace : (have_dir ? "trace-" + s.model + ".csv" : "");
  if (!trace.empty()) {
    const fs::path p = resolve_output(trace);
    std::ofstream f(p);
    if (!f) throw UsageError("cannot write " + p.string());
    write_trace_csv(f, coords, samples, drift);
  }
  nlohmann::json doc = drift.to_json();
  doc["parameters"] = params;
  emit(doc, s.report, "drift-" + s.model + ".json");
  std::cerr << "max relative drift " << drift.max_drift() << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gtoda: generic Toda families, quantum AKS reduction and flows"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&common](CLI::App* sub, bool with_mode) {
    sub->add_option("--n", common.n, "rank")->check(CLI::PositiveNumber);
    if (with_mode)
      sub->add_option("--mode", common.mode, "classical or quantum")->check(CLI::IsMember({"classical", "quantum"}));
    sub->add_flag("--force", common.force, "ignore the rank guardrails");
    sub->add_option("--workers", common.workers, "threads for determinant and pair checks")
        ->check(CLI::PositiveNumber);
  };

  auto* charpoly = app.add_subcommand("charpoly", "expand the characteristic polynomial and write the family");
  add_common(charpoly, true);
  charpoly->add_option("--out", common.out, "output file (relative paths resolve under $GTODA_OUT_DIR)");

  std::string suite;
  std::uint64_t seed = 20240601;
  int samples = 20;
  auto* verify = app.add_subcommand("verify", "run one verification suite");
  add_common(verify, true);
  verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(kSuites));
  verify->add_option("--seed", seed, "seed for randomized suites");
  verify->add_option("--samples", samples, "sample count for randomized suites")->check(CLI::PositiveNumber);
  verify->add_option("--out", common.out, "report file");

  auto* reduce_cmd = app.add_subcommand("reduce", "AKS-reduce the quantum family to U(b)");
  add_common(reduce_cmd, false);
  reduce_cmd->add_option("--out", common.out, "output file");

  SimConfig sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "integrate the open chain or a Kirillov-Kostant flow");
  add_common(simulate_cmd, false);
  simulate_cmd->add_option("--model", sim.model, "open or kk")->check(CLI::IsMember({"open", "kk"}));
  simulate_cmd->add_option("--dt", sim.dt, "time step");
  simulate_cmd->add_option("--t-end", sim.t_end, "horizon");
  simulate_cmd->add_option("--w", sim.w, "corner parameter of L(w)");
  simulate_cmd->add_option("--hamiltonian", sim.hamiltonian, "delta:k,i (kk model)");
  simulate_cmd->add_option("--init", sim.init, "initial data JSON: {q, p} or {x: [[i, j, value], ...]}");
  simulate_cmd->add_option("--stride", sim.stride, "keep every stride-th step");
  simulate_cmd->add_option("--seed", sim.seed, "seed for generated initial data");
  simulate_cmd->add_option("--trace", sim.trace, "CSV trace path (default: none, or trace-<model>.csv under $GTODA_OUT_DIR)");
  simulate_cmd->add_option("--report", sim.report, "drift report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*charpoly) {
      const bool quantum = common.mode == "quantum";
      guard(common.n, quantum, common.force);
      const std::string name = "family-" + common.mode + "-n" + std::to_string(common.n) + ".json";
      if (quantum)
        emit(to_json(quantum_family(common.n, common.workers)), common.out, name);
      else
        emit(to_json(classical_family(common.n)), common.out, name);
      return kExitPass;
    }
    if (*verify) {
      const Report r = run_suite(suite, common, seed, samples);
      emit(r.to_json(), common.out, suite_tag(suite, common.n));
      std::cerr << suite << " n=" << common.n << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.checks.size()
                << " checks, " << r.failures() << " failed)\n";
      return r.pass() ? kExitPass : kExitFail;
    }
    if (*reduce_cmd) {
      guard(common.n, true, common.force);
      const auto family = quantum_family(common.n, common.workers);
      const ReducedFamily reduced = reduce(family);
      const Report check = ratio_commutativity_check(reduced, common.workers);
      nlohmann::json doc = to_json(reduced);
      doc["status"] = check.pass() ? "pass" : "fail";
      emit(doc, common.out, "reduced-n" + std::to_string(common.n) + ".json");
      if (!check.pass()) {
        std::cerr << "reduce: " << check.failures() << " ratio identities failed\n";
        return kExitFail;
      }
      return kExitPass;
    }
    if (*simulate_cmd) return simulate(common, sim);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SimulationError& e) {
    std::cerr << "simulation failed: " << e.what() << " (last good time " << e.last_good_time() << ")\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
