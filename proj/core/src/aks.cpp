#include "gtoda/aks.hpp"

#include <future>
#include <optional>

namespace gtoda {

namespace {

std::string index_name(FamilyIndex a) { return std::to_string(a.first) + "," + std::to_string(a.second); }

std::string abbreviate(std::string s) {
  constexpr std::size_t kMax = 240;
  if (s.size() > kMax) s = s.substr(0, kMax) + " ...";
  return s;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t b = 0; b < count; b += chunk) {
    jobs.push_back(std::async(std::launch::async, [&fn, b, e = std::min(count, b + chunk)] {
      for (std::size_t i = b; i < e; ++i) fn(i);
    }));
  }
  for (auto& j : jobs) j.get();
}

// Scalar c with r == c * a, if any.
template <class Elem>
std::optional<Rational> proportionality(const Elem& r, const Elem& a) {
  if (r.is_zero()) return Rational(0);
  if (a.is_zero()) return std::nullopt;
  const auto& [m, c] = *a.terms().begin();
  auto it = r.terms().find(m);
  if (it == r.terms().end()) return std::nullopt;
  Rational chi = it->second / c;
  if (r == a * chi) return chi;
  return std::nullopt;
}

template <class Family>
Character character_impl(const Family& family, int k) {
  const auto idx = family.indices(k);
  if (idx.empty()) throw CharacterError("level " + std::to_string(k) + " is empty");
  Character chi;
  chi.k = k;
  for (const auto& x : borel_basis(family.n)) {
    std::optional<Rational> value;
    for (int i : idx) {
      const auto& a = family.at(k, i);
      auto c = proportionality(adjoint_action(x, a), a);
      if (!c || (value && *value != *c))
        throw CharacterError("ad_" + to_string(x) + " is not scalar on level " + std::to_string(k) + " (entry " +
                             index_name({k, i}) + ")");
      value = c;
    }
    if (*value != 0) chi.values.emplace(x, *value);
  }
  return chi;
}

template <class Family>
Report character_report_impl(const Family& family) {
  Report report;
  report.suite = "characters";
  report.n = family.n;
  report.mode = to_string(family.mode);
  for (int k : family.levels()) {
    const std::string level = "chi_" + std::to_string(k);
    try {
      const Character chi = character_impl(family, k);
      std::string values;
      bool lower_zero = true, cartan_integral = true;
      for (const auto& [x, v] : chi.values) {
        values += (values.empty() ? "" : ", ") + to_string(x) + "=" + to_string(v);
        if (!x.is_cartan()) lower_zero = false;
        if (v.get_den() != 1) cartan_integral = false;
      }
      report.add(level + " proportional", true, values);
      report.add(level + " vanishes on strictly lower", lower_zero);
      report.add(level + " integral on Cartan", cartan_integral);
    } catch (const CharacterError& e) {
      report.add(level + " proportional", false, e.what());
    }
  }
  return report;
}

// All nondecreasing words of length <= d over the Borel generators.
std::vector<PBWMonomial> borel_monomials(int n, int max_degree) {
  const auto& table = generator_table(n);
  const auto first = static_cast<GenIndex>(table.f_count());
  const auto last = static_cast<GenIndex>(table.size());
  std::vector<PBWMonomial> out{PBWMonomial()};
  std::vector<std::vector<GenIndex>> frontier{{}};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<std::vector<GenIndex>> next;
    for (const auto& w : frontier) {
      for (GenIndex g = w.empty() ? first : w.back(); g < last; ++g) {
        auto v = w;
        v.push_back(g);
        out.emplace_back(v);
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

Split<UEAElement> split(const UEAElement& a) {
  const auto& table = generator_table(a.rank());
  UEAElement::Terms plus, minus;
  for (const auto& [m, c] : a.terms()) (m.contains_f(table) ? minus : plus).emplace(m, c);
  return {UEAElement(a.rank(), std::move(plus)), UEAElement(a.rank(), std::move(minus))};
}

Split<CommPoly> split(const CommPoly& f) {
  CommPoly plus = symmetrize(f);
  CommPoly minus = f - plus;
  return {std::move(plus), std::move(minus)};
}

bool in_borel(const UEAElement& a) { return split(a).minus.is_zero(); }

bool in_borel(const CommPoly& f) {
  const int n = f.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (f.involves(CommPoly::var_x(n, i, j))) return false;
  return true;
}

std::vector<MixedGenerator> borel_basis(int n) {
  std::vector<MixedGenerator> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) out.push_back(MixedGenerator::e(i, j));
  return out;
}

Character compute_character(const ClassicalFamily& family, int k) { return character_impl(family, k); }
Character compute_character(const QuantumFamily& family, int k) { return character_impl(family, k); }

Report character_report(const ClassicalFamily& family) { return character_report_impl(family); }
Report character_report(const QuantumFamily& family) { return character_report_impl(family); }

UEAElement eta_map(const UEAElement& m, const Character& chi) {
  const int n = m.rank();
  const auto& table = generator_table(n);
  UEAElement out(n);
  for (const auto& [mono, c] : m.terms()) {
    if (mono.contains_f(table)) throw std::invalid_argument("eta_map: argument has an so_n factor");
    UEAElement term = UEAElement::scalar(n, c);
    for (GenIndex g : mono.word()) {
      const MixedGenerator& b = table.generator(g);
      term = term * (UEAElement::generator(n, b) + UEAElement::scalar(n, chi(b)));
    }
    out += term;
  }
  return out;
}

Report eta_relation_check(const QuantumFamily& family, const std::map<int, Character>& characters,
                          int max_degree) {
  const int n = family.n;
  Report report;
  report.suite = "eta-relation";
  report.n = n;
  report.mode = to_string(Mode::Quantum);
  const auto monomials = borel_monomials(n, max_degree);
  for (const auto& [idx, a] : family.entries) {
    const Character& chi = characters.at(idx.first);
    std::size_t bad = 0;
    std::string first_bad;
    for (const auto& mono : monomials) {
      const UEAElement m(n, UEAElement::Terms{{mono, Rational(1)}});
      const UEAElement r = m * a - a * eta_map(m, chi);
      if (!r.is_zero() && bad++ == 0) first_bad = to_string(m);
    }
    report.add("m QI_" + index_name(idx) + " = QI_" + index_name(idx) + " eta(m)", bad == 0,
               bad == 0 ? std::to_string(monomials.size()) + " monomials"
                        : std::to_string(bad) + " failures, first m = " + first_bad);
  }
  return report;
}

Report aks_identity_check(const QuantumFamily& family, const std::map<int, Character>& characters,
                          unsigned workers) {
  std::vector<FamilyIndex> keys;
  std::map<FamilyIndex, UEAElement> plus;
  for (const auto& [idx, a] : family.entries) {
    keys.push_back(idx);
    plus.emplace(idx, split(a).plus);
  }
  std::vector<std::pair<FamilyIndex, FamilyIndex>> pairs;
  for (std::size_t a = 0; a < keys.size(); ++a)
    for (std::size_t b = a; b < keys.size(); ++b) pairs.emplace_back(keys[a], keys[b]);

  std::vector<UEAElement> residuals(pairs.size(), UEAElement(family.n));
  parallel_for(pairs.size(), workers, [&](std::size_t p) {
    const auto& [ia, ib] = pairs[p];
    const UEAElement& ap = plus.at(ia);
    const UEAElement& bp = plus.at(ib);
    residuals[p] = ap * eta_map(bp, characters.at(ia.first)) - bp * eta_map(ap, characters.at(ib.first));
  });

  Report report;
  report.suite = "aks-identity";
  report.n = family.n;
  report.mode = to_string(Mode::Quantum);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const bool zero = residuals[p].is_zero();
    report.add_pair(pairs[p].first, pairs[p].second, zero, zero ? "" : abbreviate(to_string(residuals[p])));
  }
  return report;
}

ReducedFamily reduce(const QuantumFamily& family) {
  ReducedFamily out;
  out.n = family.n;
  for (int k : family.levels()) {
    out.characters.emplace(k, compute_character(family, k));
    UEAElement c = family.denominator(k);
    if (!in_borel(c)) throw std::logic_error("denominator of level " + std::to_string(k) + " leaves U(b)");
    out.denominators.emplace(k, std::move(c));
  }
  for (const auto& [idx, a] : family.entries) out.numerators.emplace(idx, split(a).plus);
  return out;
}

Report ratio_commutativity_check(const ReducedFamily& reduced, unsigned workers) {
  const int n = reduced.n;
  Report report;
  report.suite = "ratio-commutativity";
  report.n = n;
  report.mode = to_string(Mode::Quantum);

  // a_+ eta_k(b_+) = b_+ eta_m(a_+)
  std::vector<std::pair<FamilyIndex, FamilyIndex>> pairs;
  for (auto a = reduced.numerators.begin(); a != reduced.numerators.end(); ++a)
    for (auto b = std::next(a); b != reduced.numerators.end(); ++b) pairs.emplace_back(a->first, b->first);
  std::vector<UEAElement> residuals(pairs.size(), UEAElement(n));
  parallel_for(pairs.size(), workers, [&](std::size_t p) {
    const auto& [ia, ib] = pairs[p];
    const UEAElement& ap = reduced.numerators.at(ia);
    const UEAElement& bp = reduced.numerators.at(ib);
    residuals[p] =
        ap * eta_map(bp, reduced.characters.at(ia.first)) - bp * eta_map(ap, reduced.characters.at(ib.first));
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const bool zero = residuals[p].is_zero();
    report.add("aks (" + index_name(pairs[p].first) + ")x(" + index_name(pairs[p].second) + ")", zero,
               zero ? "" : abbreviate(to_string(residuals[p])));
  }

  // [c, d] = 0
  for (auto c = reduced.denominators.begin(); c != reduced.denominators.end(); ++c) {
    for (auto d = std::next(c); d != reduced.denominators.end(); ++d) {
      const UEAElement r = commutator(c->second, d->second);
      report.add("[c_" + std::to_string(c->first) + ", c_" + std::to_string(d->first) + "]", r.is_zero(),
                 r.is_zero() ? "" : abbreviate(to_string(r)));
    }
  }

  // m c = c eta_k(m) for the Borel generators and every numerator
  std::vector<std::pair<std::string, UEAElement>> movers;
  for (const auto& x : borel_basis(n)) movers.emplace_back(to_string(x), UEAElement::generator(n, x));
  for (const auto& [idx, a] : reduced.numerators) movers.emplace_back("QI_" + index_name(idx) + "+", a);
  for (const auto& [k, c] : reduced.denominators) {
    const Character& chi = reduced.characters.at(k);
    std::size_t bad = 0;
    std::string first_bad;
    for (const auto& [name, m] : movers) {
      if (!(m * c - c * eta_map(m, chi)).is_zero() && bad++ == 0) first_bad = name;
    }
    report.add("m c_" + std::to_string(k) + " = c_" + std::to_string(k) + " eta(m)", bad == 0,
               bad == 0 ? std::to_string(movers.size()) + " elements" : std::to_string(bad) + " failures, first " + first_bad);
  }
  return report;
}

Report classical_ratio_check(const ClassicalFamily& family) {
  Report report;
  report.suite = "ratio-commutativity";
  report.n = family.n;
  report.mode = to_string(Mode::Classical);

  std::map<FamilyIndex, CommPoly> plus;
  for (const auto& [idx, f] : family.entries) plus.emplace(idx, split(f).plus);
  std::map<int, CommPoly> den;
  for (int k : family.levels()) {
    CommPoly q = plus.at({k, family.top_index(k)});
    report.add("denominator " + std::to_string(k) + " nonzero in S(b)", !q.is_zero());
    den.emplace(k, std::move(q));
  }
  for (auto a = plus.begin(); a != plus.end(); ++a) {
    for (auto b = std::next(a); b != plus.end(); ++b) {
      const CommPoly& p = a->second;
      const CommPoly& q = den.at(a->first.first);
      const CommPoly& r = b->second;
      const CommPoly& s = den.at(b->first.first);
      const CommPoly res = q * s * poisson_bracket(p, r) - p * s * poisson_bracket(q, r) -
                           q * r * poisson_bracket(p, s) + p * r * poisson_bracket(q, s);
      report.add_pair(a->first, b->first, res.is_zero(), res.is_zero() ? "" : abbreviate(to_string(res)));
    }
  }
  return report;
}

OreWitness ore_witness(const ReducedFamily& reduced, const std::vector<int>& levels, const UEAElement& a) {
  const int n = reduced.n;
  OreWitness w{UEAElement::scalar(n, Rational(1)), UEAElement(n), a};
  for (int k : levels) {
    w.s = w.s * reduced.denominators.at(k);
    w.a_prime = eta_map(w.a_prime, reduced.characters.at(k));
  }
  w.s_prime = w.s;
  return w;
}

std::vector<OreSample> default_ore_samples(const ReducedFamily& reduced) {
  const int n = reduced.n;
  std::vector<UEAElement> elems{UEAElement::scalar(n, Rational(1))};
  const auto basis = borel_basis(n);
  for (const auto& x : basis) elems.push_back(UEAElement::generator(n, x));
  for (std::size_t i = 0; i + 1 < basis.size(); ++i)
    elems.push_back(UEAElement::generator(n, basis[i]) * UEAElement::generator(n, basis.back()));
  for (const auto& [idx, a] : reduced.numerators)
    if (!a.is_zero()) elems.push_back(a);

  std::vector<std::vector<int>> sets;
  std::vector<int> ks;
  for (const auto& [k, c] : reduced.denominators) ks.push_back(k);
  for (int k : ks) sets.push_back({k});
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i; j < ks.size(); ++j) sets.push_back({ks[i], ks[j]});

  std::vector<OreSample> out;
  for (const auto& s : sets)
    for (const auto& a : elems) out.push_back({s, a});
  return out;
}

Report ore_condition_check(const ReducedFamily& reduced, const std::vector<OreSample>& samples) {
  Report report;
  report.suite = "ore";
  report.n = reduced.n;
  report.mode = to_string(Mode::Quantum);
  // group per denominator product to keep the report short
  std::map<std::vector<int>, std::pair<std::size_t, std::size_t>> tally;
  std::map<std::vector<int>, std::string> first_bad;
  for (const auto& sample : samples) {
    const OreWitness w = ore_witness(reduced, sample.levels, sample.a);
    const bool ok = in_borel(w.a_prime) && w.s * w.a_prime == sample.a * w.s_prime;
    auto& [total, bad] = tally[sample.levels];
    ++total;
    if (!ok && bad++ == 0) first_bad[sample.levels] = abbreviate(to_string(sample.a));
  }
  for (const auto& [levels, counts] : tally) {
    std::string name = "s =";
    for (int k : levels) name += " c_" + std::to_string(k);
    const auto& [total, bad] = counts;
    report.add(name, bad == 0,
               bad == 0 ? std::to_string(total) + " samples"
                        : std::to_string(bad) + "/" + std::to_string(total) + " failed, first a = " + first_bad[levels]);
  }
  return report;
}

std::vector<int> parabolic_roots(int n, int k) {
  std::vector<int> out;
  for (int l = k + 1; l <= n - k - 1; ++l) out.push_back(l);
  return out;
}

Report parabolic_invariance_check(const ClassicalFamily& family, int k, const std::vector<int>& roots) {
  const int n = family.n;
  Report report;
  report.suite = "parabolic";
  report.n = n;
  report.mode = to_string(Mode::Classical);
  std::vector<std::pair<std::string, CommPoly>> gens;
  for (const auto& x : borel_basis(n)) gens.emplace_back(to_string(x), linear_form(n, x));
  for (int l : roots) {
    if (l < 1 || l >= n) throw std::out_of_range("simple root index out of range");
    gens.emplace_back("e(" + std::to_string(l) + "," + std::to_string(l + 1) + ")", CommPoly::x(n, l, l + 1));
  }
  const auto idx = family.indices(k);
  for (const auto& [name, x] : gens) {
    std::size_t bad = 0;
    std::string first_bad;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const CommPoly& fi = family.at(k, idx[a]);
        const CommPoly& fj = family.at(k, idx[b]);
        const CommPoly r = poisson_bracket(x, fi) * fj - fi * poisson_bracket(x, fj);
        if (!r.is_zero() && bad++ == 0) first_bad = index_name({k, idx[a]}) + " / " + index_name({k, idx[b]});
      }
    }
    report.add("level " + std::to_string(k) + " " + name, bad == 0, bad == 0 ? "" : "first failing ratio " + first_bad);
  }
  return report;
}

}  // namespace gtoda
