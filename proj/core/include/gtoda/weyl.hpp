#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gtoda/rational.hpp"

namespace gtoda {

/// Normal-ordered polynomial in u = 1/z and D = d/dz, every u-power to the
/// left of every D-power. The defining relation is D*u = u*D - u^2.
class WeylElement {
 public:
  /// (u-power, D-power)
  using Key = std::pair<unsigned, unsigned>;
  using Terms = std::map<Key, Rational>;

  WeylElement() = default;
  explicit WeylElement(Terms terms);

  static WeylElement scalar(const Rational& c);
  static WeylElement u(unsigned power = 1);
  static WeylElement d(unsigned power = 1);
  static WeylElement monomial(unsigned u_power, unsigned d_power, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(unsigned u_power, unsigned d_power) const;
  void add_term(const Key& k, const Rational& c);

  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator-=(const WeylElement& other);
  WeylElement& operator*=(const Rational& c);

  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  bool operator==(const WeylElement&) const = default;

 private:
  Terms terms_;
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);

/// D^d_power * u^u_power rewritten as sum_j c_j u^(u_power + j) D^(d_power - j).
/// Returns pairs (j, c_j); c_j = binom(d_power, j) * (-1)^j * rising(u_power, j).
std::vector<std::pair<unsigned, Rational>> reorder_d_past_u(unsigned d_power, unsigned u_power);

}  // namespace gtoda
