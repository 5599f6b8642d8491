#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gtoda/generators.hpp"
#include "gtoda/rational.hpp"

namespace gtoda {

/// Commutative polynomial over the coordinates x_ij of gl_n^* together with
/// the central formal variables lambda, eps and u (= 1/z).
///
/// Variable layout for rank n: x_ij -> (i-1)*n + (j-1), then lambda, eps, u.
class CommPoly {
 public:
  using Exponents = std::vector<std::uint16_t>;
  using Terms = std::map<Exponents, Rational>;

  explicit CommPoly(int n);
  CommPoly(int n, Terms terms);

  static int num_vars(int n) { return n * n + 3; }
  static int var_x(int n, int i, int j) { return (i - 1) * n + (j - 1); }
  static int var_lambda(int n) { return n * n; }
  static int var_eps(int n) { return n * n + 1; }
  static int var_u(int n) { return n * n + 2; }

  static CommPoly scalar(int n, const Rational& c);
  static CommPoly variable(int n, int var, unsigned power = 1);
  static CommPoly x(int n, int i, int j) { return variable(n, var_x(n, i, j)); }
  static CommPoly lambda(int n) { return variable(n, var_lambda(n)); }
  static CommPoly eps(int n) { return variable(n, var_eps(n)); }
  static CommPoly u(int n) { return variable(n, var_u(n)); }

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool involves(int var) const;
  unsigned degree_in(int var) const;
  /// Lowest exponent of var over all terms; 0 for the zero polynomial.
  unsigned min_degree_in(int var) const;

  void add_term(const Exponents& e, const Rational& c);

  CommPoly& operator+=(const CommPoly& other);
  CommPoly& operator-=(const CommPoly& other);
  CommPoly& operator*=(const Rational& c);

  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator-(CommPoly a) { return a *= Rational(-1); }
  friend CommPoly operator*(CommPoly a, const Rational& c) { return a *= c; }
  friend CommPoly operator*(const Rational& c, CommPoly a) { return a *= c; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);

  bool operator==(const CommPoly&) const = default;

  CommPoly derivative(int var) const;
  /// Coefficient of var^power, as a polynomial not involving var.
  CommPoly coefficient(int var, unsigned power) const;
  CommPoly substitute(int var, const Rational& value) const;
  /// Moves the exponent of every variable v onto target(v). Non-injective
  /// maps merge variables (x_12 -> x_21 turns x_12*x_21 into x_21^2).
  CommPoly rename_variables(const std::function<int(int)>& target) const;

  double evaluate(std::span<const double> values) const;

  void require_same_rank(const CommPoly& other) const;

 private:
  int n_;
  Terms terms_;
};

/// Human-readable rendering, e.g. "x11*x22 - x21^2 + lambda".
std::string to_string(const CommPoly& p);

/// Kirillov-Kostant bracket: {x_ab, x_cd} = delta_bc x_ad - delta_da x_cb,
/// extended by Leibniz; lambda, eps and u are central.
CommPoly poisson_bracket(const CommPoly& f, const CommPoly& g);

/// The linear coordinate function of a mixed generator:
/// F(i,j) -> x_ij - x_ji, E(i,j) -> x_ij.
CommPoly linear_form(int n, const MixedGenerator& g);

/// {X, f} for the linear function of X.
CommPoly adjoint_action(const MixedGenerator& x, const CommPoly& f);

}  // namespace gtoda
