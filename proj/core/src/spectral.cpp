#include "gtoda/spectral.hpp"

#include <future>

#include "gtoda/determinant.hpp"
#include "gtoda/lax.hpp"

namespace gtoda {

std::string to_string(Mode m) { return m == Mode::Classical ? "classical" : "quantum"; }

namespace {

unsigned expected_eps(int k) { return static_cast<unsigned>(k * (k - 1) / 2); }

std::string abbreviate(std::string s) {
  constexpr std::size_t kMax = 240;
  if (s.size() > kMax) s = s.substr(0, kMax) + " ...";
  return s;
}

struct LevelScan {
  std::map<int, unsigned> min_eps;
  int max_degree = -1;
};

template <class Family>
void validate_levels(const Family& family, const LevelScan& scan) {
  const int n = family.n;
  if (scan.max_degree > n)
    throw GradingError("term of (u, lambda)-degree " + std::to_string(scan.max_degree) + " exceeds n");
  for (int k = 0; k <= n; ++k) {
    auto it = scan.min_eps.find(k);
    if (it == scan.min_eps.end()) throw GradingError("level " + std::to_string(k) + " is empty");
    if (it->second != expected_eps(k))
      throw GradingError("level " + std::to_string(k) + " has leading eps^" + std::to_string(it->second) +
                         ", expected eps^" + std::to_string(expected_eps(k)));
  }
}

}  // namespace

CommPoly classical_charpoly(int n) { return det_commutative(assemble_pencil(build_full_lax_classical(n))); }

QuantumPoly quantum_charpoly(int n, unsigned workers) {
  return det_nc_permsum(assemble_pencil(build_full_lax_quantum(n)), workers);
}

ClassicalFamily extract_family(const CommPoly& charpoly) {
  const int n = charpoly.rank();
  const int vu = CommPoly::var_u(n), vl = CommPoly::var_lambda(n), ve = CommPoly::var_eps(n);
  ClassicalFamily family;
  family.n = n;
  family.mode = Mode::Classical;

  LevelScan scan;
  for (const auto& [e, c] : charpoly.terms()) {
    const int d = e[vu] + e[vl];
    scan.max_degree = std::max(scan.max_degree, d);
    if (d > n) continue;
    auto [it, inserted] = scan.min_eps.try_emplace(n - d, e[ve]);
    if (!inserted) it->second = std::min<unsigned>(it->second, e[ve]);
  }
  validate_levels(family, scan);
  family.leading_eps = scan.min_eps;

  for (const auto& [e, c] : charpoly.terms()) {
    const int k = n - (e[vu] + e[vl]);
    if (e[ve] != family.leading_eps.at(k)) continue;
    CommPoly::Exponents x = e;
    x[vu] = x[vl] = x[ve] = 0;
    auto [it, inserted] = family.entries.try_emplace({k, e[vu]}, CommPoly(n));
    it->second.add_term(x, c);
  }
  std::erase_if(family.entries, [](const auto& kv) { return kv.second.is_zero(); });
  return family;
}

QuantumFamily extract_family(const QuantumPoly& charpoly) {
  const int n = charpoly.rank();
  QuantumFamily family;
  family.n = n;
  family.mode = Mode::Quantum;

  LevelScan scan;
  for (const auto& [key, c] : charpoly.terms()) {
    const int d = static_cast<int>(key.u_power + key.d_power);
    scan.max_degree = std::max(scan.max_degree, d);
    if (d > n) continue;
    auto [it, inserted] = scan.min_eps.try_emplace(n - d, key.eps_power);
    if (!inserted) it->second = std::min(it->second, key.eps_power);
  }
  validate_levels(family, scan);
  family.leading_eps = scan.min_eps;

  for (const auto& [key, c] : charpoly.terms()) {
    const int k = n - static_cast<int>(key.u_power + key.d_power);
    if (key.eps_power != family.leading_eps.at(k)) continue;
    auto [it, inserted] = family.entries.try_emplace({k, static_cast<int>(key.u_power)}, UEAElement(n));
    it->second.add_term(key.gens, c);
  }
  std::erase_if(family.entries, [](const auto& kv) { return kv.second.is_zero(); });
  return family;
}

CommPoly leading_part_at_unit_u(const ClassicalFamily& family, int k) {
  const int n = family.n;
  CommPoly out(n);
  for (int i : family.indices(k))
    out += family.at(k, i) * CommPoly::variable(n, CommPoly::var_lambda(n), static_cast<unsigned>(n - k - i));
  return out;
}

CommPoly delta_k(int n, int k) {
  return det_commutative(chop(build_borel_lax(n), k, CommPoly::lambda(n)));
}

std::map<unsigned, CommPoly> delta_coefficients(int n, int k) {
  const CommPoly d = delta_k(n, k);
  std::map<unsigned, CommPoly> out;
  const int vl = CommPoly::var_lambda(n);
  for (unsigned p = 0; p <= d.degree_in(vl); ++p) {
    CommPoly c = d.coefficient(vl, p);
    if (!c.is_zero()) out.emplace(p, std::move(c));
  }
  return out;
}

CommPoly symmetrize(const CommPoly& f) {
  const int n = f.rank();
  return f.rename_variables([n](int v) {
    if (v >= n * n) return v;
    const int i = v / n + 1, j = v % n + 1;
    return i < j ? CommPoly::var_x(n, j, i) : v;
  });
}

SymmetrizedMatch symmetrized_match(const ClassicalFamily& family, int k) {
  const int n = family.n;
  const int vl = CommPoly::var_lambda(n);
  const CommPoly lhs = symmetrize(leading_part_at_unit_u(family, k));
  const CommPoly rhs = delta_k(n, k);
  if (lhs.is_zero() || rhs.is_zero() || lhs.degree_in(vl) != rhs.degree_in(vl)) return {};
  const CommPoly lead_l = lhs.coefficient(vl, lhs.degree_in(vl));
  const CommPoly lead_r = rhs.coefficient(vl, rhs.degree_in(vl));
  int sign = 0;
  if (lead_l == lead_r)
    sign = 1;
  else if (lead_l == -lead_r)
    sign = -1;
  else
    return {};
  return {lhs == rhs * Rational(sign), sign};
}

Report pairwise_commutativity(const ClassicalFamily& family) {
  Report report;
  report.suite = "poisson-commutativity";
  report.n = family.n;
  report.mode = to_string(Mode::Classical);
  for (auto a = family.entries.begin(); a != family.entries.end(); ++a) {
    for (auto b = std::next(a); b != family.entries.end(); ++b) {
      const CommPoly r = poisson_bracket(a->second, b->second);
      report.add_pair(a->first, b->first, r.is_zero(), r.is_zero() ? "" : abbreviate(to_string(r)));
    }
  }
  return report;
}

Report pairwise_commutativity(const QuantumFamily& family, unsigned workers) {
  std::vector<std::pair<FamilyIndex, FamilyIndex>> pairs;
  for (auto a = family.entries.begin(); a != family.entries.end(); ++a)
    for (auto b = std::next(a); b != family.entries.end(); ++b) pairs.emplace_back(a->first, b->first);

  std::vector<UEAElement> residuals(pairs.size(), UEAElement(family.n));
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p)
      residuals[p] = commutator(family.entries.at(pairs[p].first), family.entries.at(pairs[p].second));
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, pairs.size()))));
  if (workers == 1) {
    run(0, pairs.size());
  } else {
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (pairs.size() + workers - 1) / workers;
    for (std::size_t b = 0; b < pairs.size(); b += chunk)
      jobs.push_back(std::async(std::launch::async, run, b, std::min(pairs.size(), b + chunk)));
    for (auto& j : jobs) j.get();
  }

  Report report;
  report.suite = "quantum-commutativity";
  report.n = family.n;
  report.mode = to_string(Mode::Quantum);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const bool zero = residuals[p].is_zero();
    report.add_pair(pairs[p].first, pairs[p].second, zero, zero ? "" : abbreviate(to_string(residuals[p])));
  }
  return report;
}

namespace {

Report grading_from_scan(int n, Mode mode, const std::map<int, unsigned>& levels,
                         int max_degree) {
  Report report;
  report.suite = "grading";
  report.n = n;
  report.mode = to_string(mode);
  report.add("max (u, spectral)-degree <= n", max_degree <= n, "max degree " + std::to_string(max_degree));
  for (int k = 0; k <= n; ++k) {
    auto it = levels.find(n - k);
    if (it == levels.end()) {
      report.add("level " + std::to_string(k), false, "no terms of degree " + std::to_string(n - k));
      continue;
    }
    const unsigned lead = it->second;
    report.add("level " + std::to_string(k) + " leading eps", lead == expected_eps(k),
               "eps^" + std::to_string(lead) + " (expected eps^" + std::to_string(expected_eps(k)) + ")");
  }
  return report;
}

}  // namespace

Report grading_report(const CommPoly& charpoly) {
  const int n = charpoly.rank();
  const int vu = CommPoly::var_u(n), vl = CommPoly::var_lambda(n), ve = CommPoly::var_eps(n);
  // degree -> lowest eps power
  std::map<int, unsigned> levels;
  int max_degree = -1;
  for (const auto& [e, c] : charpoly.terms()) {
    const int d = e[vu] + e[vl];
    max_degree = std::max(max_degree, d);
    auto [it, inserted] = levels.try_emplace(d, e[ve]);
    it->second = std::min<unsigned>(it->second, e[ve]);
  }
  return grading_from_scan(n, Mode::Classical, levels, max_degree);
}

Report grading_report(const QuantumPoly& charpoly) {
  const int n = charpoly.rank();
  std::map<int, unsigned> levels;
  int max_degree = -1;
  for (const auto& [key, c] : charpoly.terms()) {
    const int d = static_cast<int>(key.u_power + key.d_power);
    max_degree = std::max(max_degree, d);
    auto [it, inserted] = levels.try_emplace(d, key.eps_power);
    it->second = std::min(it->second, key.eps_power);
  }
  return grading_from_scan(n, Mode::Quantum, levels, max_degree);
}

Report quantization_report(const ClassicalFamily& classical, const QuantumFamily& quantum,
                           const CommPoly& classical_poly, const QuantumPoly& quantum_poly) {
  Report report;
  report.suite = "quantization";
  report.n = quantum.n;
  report.mode = to_string(Mode::Quantum);
  for (const auto& [idx, qi] : quantum.entries) {
    const CommPoly sym = principal_symbol(qi);
    auto it = classical.entries.find(idx);
    const bool ok = it != classical.entries.end() && sym == it->second;
    report.add("symbol(QI_" + std::to_string(idx.first) + "," + std::to_string(idx.second) + ")", ok,
               ok ? "" : abbreviate(to_string(sym)));
  }
  for (const auto& [idx, ci] : classical.entries) {
    if (!quantum.entries.count(idx))
      report.add("missing QI_" + std::to_string(idx.first) + "," + std::to_string(idx.second), false);
  }
  report.add("symbol(P_Q) == P", principal_symbol(quantum_poly) == classical_poly);
  return report;
}

}  // namespace gtoda
