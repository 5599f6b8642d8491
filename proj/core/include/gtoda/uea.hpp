#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gtoda/generators.hpp"
#include "gtoda/rational.hpp"

namespace gtoda {

/// Ordered monomial in the mixed PBW basis, stored as a nondecreasing word
/// of generator indices (g, g, h, ... with g <= h <= ...).
class PBWMonomial {
 public:
  PBWMonomial() = default;
  /// Throws std::invalid_argument unless the word is nondecreasing.
  explicit PBWMonomial(std::vector<GenIndex> word);

  const std::vector<GenIndex>& word() const { return word_; }
  std::size_t degree() const { return word_.size(); }
  bool empty() const { return word_.empty(); }

  /// Run-length view: strictly increasing generators with positive exponents.
  std::vector<std::pair<GenIndex, int>> factors() const;

  bool contains_f(const GeneratorTable& table) const {
    return !word_.empty() && word_.front() < table.f_count();
  }

  auto operator<=>(const PBWMonomial&) const = default;

 private:
  std::vector<GenIndex> word_;
};

/// Element of U(gl_n) in PBW normal form over the mixed basis.
class UEAElement {
 public:
  using Terms = std::map<PBWMonomial, Rational>;

  explicit UEAElement(int n) : n_(n) {}
  UEAElement(int n, Terms terms);

  static UEAElement scalar(int n, const Rational& c);
  static UEAElement generator(int n, const MixedGenerator& g);
  /// The raw matrix unit e_ij of gl_n, expanded in the mixed basis.
  static UEAElement raw(int n, int i, int j);
  /// Product of generators taken in the given (arbitrary) order.
  static UEAElement from_word(int n, std::span<const GenIndex> word);

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest PBW degree present; -1 for zero.
  int degree() const;
  Rational coefficient(const PBWMonomial& m) const;

  /// Adds c * m, dropping the entry if it cancels.
  void add_term(const PBWMonomial& m, const Rational& c);

  UEAElement& operator+=(const UEAElement& other);
  UEAElement& operator-=(const UEAElement& other);
  UEAElement& operator*=(const Rational& c);

  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator-(UEAElement a) { return a *= Rational(-1); }
  friend UEAElement operator*(UEAElement a, const Rational& c) { return a *= c; }
  friend UEAElement operator*(const Rational& c, UEAElement a) { return a *= c; }
  friend UEAElement operator*(const UEAElement& a, const UEAElement& b);

  bool operator==(const UEAElement& other) const = default;

  /// Throws std::invalid_argument if the ranks differ.
  void require_same_rank(const UEAElement& other) const;

 private:
  int n_;
  Terms terms_;
};

/// Human-readable rendering, e.g. "2*F(1,2)*E(2,1)^2 - E(1,1)".
std::string to_string(const UEAElement& a);

/// Normal-form product; throws std::invalid_argument on rank mismatch.
UEAElement nc_mul(const UEAElement& a, const UEAElement& b);

/// a*b - b*a in normal form.
UEAElement commutator(const UEAElement& a, const UEAElement& b);

/// ad_X(a) = [X, a].
UEAElement adjoint_action(const MixedGenerator& x, const UEAElement& a);

namespace detail {

/// Normal form of the product of two PBW monomials at rank n. The result is
/// memoized per thread.
const UEAElement::Terms& monomial_product(int n, const PBWMonomial& a, const PBWMonomial& b);

}  // namespace detail

}  // namespace gtoda
