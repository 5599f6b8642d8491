#include "gtoda/quantum_poly.hpp"

#include <limits>
#include <stdexcept>

namespace gtoda {

namespace {

void add_into(QuantumPoly::Terms& acc, const QuantumKey& k, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

int weight(const QuantumKey& k) { return static_cast<int>(k.gens.degree()) - static_cast<int>(k.u_power); }

}  // namespace

QuantumPoly::QuantumPoly(int n, Terms terms) : n_(n), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

QuantumPoly QuantumPoly::scalar(int n, const Rational& c) {
  QuantumPoly p(n);
  p.add_term(QuantumKey{}, c);
  return p;
}

QuantumPoly QuantumPoly::from_uea(const UEAElement& a) {
  QuantumPoly p(a.rank());
  for (const auto& [m, c] : a.terms()) p.add_term(QuantumKey{m, 0, 0, 0}, c);
  return p;
}

QuantumPoly QuantumPoly::from_weyl(int n, const WeylElement& w) {
  QuantumPoly p(n);
  for (const auto& [k, c] : w.terms()) p.add_term(QuantumKey{PBWMonomial(), k.first, k.second, 0}, c);
  return p;
}

QuantumPoly QuantumPoly::eps(int n, unsigned power) {
  QuantumPoly p(n);
  p.add_term(QuantumKey{PBWMonomial(), 0, 0, power}, Rational(1));
  return p;
}

void QuantumPoly::add_term(const QuantumKey& k, const Rational& c) {
  if (c == 0) return;
  add_into(terms_, k, c);
}

UEAElement QuantumPoly::coefficient(unsigned u_power, unsigned d_power, unsigned eps_power) const {
  UEAElement out(n_);
  for (const auto& [k, c] : terms_) {
    if (k.u_power == u_power && k.d_power == d_power && k.eps_power == eps_power) out.add_term(k.gens, c);
  }
  return out;
}

void QuantumPoly::require_same_rank(const QuantumPoly& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("rank mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
}

QuantumPoly& QuantumPoly::operator+=(const QuantumPoly& other) {
  require_same_rank(other);
  for (const auto& [k, c] : other.terms_) add_into(terms_, k, c);
  return *this;
}

QuantumPoly& QuantumPoly::operator-=(const QuantumPoly& other) {
  require_same_rank(other);
  for (const auto& [k, c] : other.terms_) add_into(terms_, k, -c);
  return *this;
}

QuantumPoly& QuantumPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

QuantumPoly operator*(const QuantumPoly& a, const QuantumPoly& b) {
  a.require_same_rank(b);
  const int n = a.rank();
  QuantumPoly out(n);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const auto& gl = detail::monomial_product(n, ka.gens, kb.gens);
      const auto weyl = reorder_d_past_u(ka.d_power, kb.u_power);
      const Rational c = ca * cb;
      for (const auto& [j, cj] : weyl) {
        const unsigned up = ka.u_power + kb.u_power + j;
        const unsigned dp = ka.d_power - j + kb.d_power;
        const Rational cw = c * cj;
        for (const auto& [m, cm] : gl) out.add_term(QuantumKey{m, up, dp, ka.eps_power + kb.eps_power}, cw * cm);
      }
    }
  }
  return out;
}

int top_weight(const QuantumPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("top_weight of zero");
  int w = std::numeric_limits<int>::min();
  for (const auto& [k, c] : a.terms()) w = std::max(w, weight(k));
  return w;
}

CommPoly principal_symbol(const QuantumPoly& a) {
  const int n = a.rank();
  CommPoly out(n);
  if (a.is_zero()) return out;
  const int top = top_weight(a);
  const auto& table = generator_table(n);
  for (const auto& [k, c] : a.terms()) {
    if (weight(k) != top) continue;
    CommPoly term = CommPoly::scalar(n, c);
    for (GenIndex g : k.gens.word()) term = term * linear_form(n, table.generator(g));
    term = term * CommPoly::variable(n, CommPoly::var_u(n), k.u_power);
    term = term * CommPoly::variable(n, CommPoly::var_lambda(n), k.d_power);
    term = term * CommPoly::variable(n, CommPoly::var_eps(n), k.eps_power);
    out += term;
  }
  return out;
}

CommPoly principal_symbol(const UEAElement& a) { return principal_symbol(QuantumPoly::from_uea(a)); }

CommPoly principal_symbol(int n, const WeylElement& w) { return principal_symbol(QuantumPoly::from_weyl(n, w)); }

}  // namespace gtoda
