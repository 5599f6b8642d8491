#pragma once

#include <compare>
#include <map>

#include "gtoda/comm_poly.hpp"
#include "gtoda/uea.hpp"
#include "gtoda/weyl.hpp"

namespace gtoda {

/// Basis element of U(gl_n) (x) Weyl(u, D) (x) Q[eps]: a PBW monomial, then
/// u^u_power D^d_power in Weyl normal order, then eps^eps_power.
struct QuantumKey {
  PBWMonomial gens;
  unsigned u_power = 0;
  unsigned d_power = 0;
  unsigned eps_power = 0;

  auto operator<=>(const QuantumKey&) const = default;
};

/// Coefficient ring of the quantum spectral pencil. The gl_n generators
/// commute with u, D and eps; eps is central; D*u = u*D - u^2.
class QuantumPoly {
 public:
  using Terms = std::map<QuantumKey, Rational>;

  explicit QuantumPoly(int n) : n_(n) {}
  QuantumPoly(int n, Terms terms);

  static QuantumPoly scalar(int n, const Rational& c);
  static QuantumPoly from_uea(const UEAElement& a);
  static QuantumPoly from_weyl(int n, const WeylElement& w);
  static QuantumPoly u(int n) { return from_weyl(n, WeylElement::u()); }
  static QuantumPoly d(int n) { return from_weyl(n, WeylElement::d()); }
  static QuantumPoly eps(int n, unsigned power = 1);

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const QuantumKey& k, const Rational& c);

  /// The U(gl_n) coefficient of u^u_power D^d_power eps^eps_power.
  UEAElement coefficient(unsigned u_power, unsigned d_power, unsigned eps_power) const;

  QuantumPoly& operator+=(const QuantumPoly& other);
  QuantumPoly& operator-=(const QuantumPoly& other);
  QuantumPoly& operator*=(const Rational& c);

  friend QuantumPoly operator+(QuantumPoly a, const QuantumPoly& b) { return a += b; }
  friend QuantumPoly operator-(QuantumPoly a, const QuantumPoly& b) { return a -= b; }
  friend QuantumPoly operator-(QuantumPoly a) { return a *= Rational(-1); }
  friend QuantumPoly operator*(QuantumPoly a, const Rational& c) { return a *= c; }
  friend QuantumPoly operator*(const Rational& c, QuantumPoly a) { return a *= c; }
  friend QuantumPoly operator*(const QuantumPoly& a, const QuantumPoly& b);

  bool operator==(const QuantumPoly&) const = default;

  void require_same_rank(const QuantumPoly& other) const;

 private:
  int n_;
  Terms terms_;
};

/// Classical limit. Generators go to their linear coordinate functions
/// (F(i,j) -> x_ij - x_ji, E(i,j) -> x_ij), D -> lambda, u -> u, eps -> eps,
/// keeping only the terms of top filtration weight. The weight of a term is
/// (generator degree) - (u power); D and eps have weight 0. Both the gl_n
/// commutators and the Weyl correction D*u - u*D = -u^2 lower the weight, so
/// the map is multiplicative on top-weight parts.
CommPoly principal_symbol(const QuantumPoly& a);
CommPoly principal_symbol(const UEAElement& a);
CommPoly principal_symbol(int n, const WeylElement& w);

/// Filtration weight used by principal_symbol; throws on the zero element.
int top_weight(const QuantumPoly& a);

}  // namespace gtoda
