#include <doctest.h>

#include "gtoda/lax.hpp"
#include "gtoda/spectral.hpp"

using namespace gtoda;

namespace {

CommPoly x(int n, int i, int j) { return CommPoly::x(n, i, j); }

const ClassicalFamily& classical(int n) {
  static std::map<int, ClassicalFamily> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, classical_family(n)).first;
  return it->second;
}

const QuantumFamily& quantum(int n) {
  static std::map<int, QuantumFamily> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, quantum_family(n, 4)).first;
  return it->second;
}

}  // namespace

TEST_CASE("classical characteristic polynomial") {
  const auto one = CommPoly::scalar(1, Rational(1));
  CHECK(classical_charpoly(1) == x(1, 1, 1) * CommPoly::u(1) + one - CommPoly::lambda(1));

  const int n = 2;
  const auto u = CommPoly::u(n), l = CommPoly::lambda(n), eps = CommPoly::eps(n);
  const auto expected = (x(n, 1, 1) * u - l) * (x(n, 2, 2) * u - l) -
                        (x(n, 1, 2) * u + CommPoly::scalar(n, Rational(1))) * (x(n, 2, 1) * u + eps);
  const auto p = classical_charpoly(n);
  CHECK(p == expected);
  const auto c = p.coefficient(CommPoly::var_eps(n), 1)
                     .coefficient(CommPoly::var_u(n), 0)
                     .coefficient(CommPoly::var_lambda(n), 0);
  CHECK(c == CommPoly::scalar(n, Rational(-1)));
}

TEST_CASE("classical family at n = 2") {
  const int n = 2;
  const auto& f = classical(n);
  CHECK(f.levels() == std::vector<int>{0, 1, 2});
  CHECK(f.leading_eps.at(2) == 1);
  CHECK(leading_part_at_unit_u(f, 1) == -x(n, 2, 1));
  CHECK(f.at(1, 1) == -x(n, 2, 1));
  CHECK(f.at(2, 0) == CommPoly::scalar(n, Rational(-1)));
  const auto l = CommPoly::lambda(n);
  CHECK(leading_part_at_unit_u(f, 0) == (x(n, 1, 1) - l) * (x(n, 2, 2) - l) - x(n, 1, 2) * x(n, 2, 1));
}

TEST_CASE("quantum characteristic polynomial") {
  const auto q1 = quantum_charpoly(1);
  CHECK(q1 == QuantumPoly::from_uea(UEAElement::raw(1, 1, 1)) * QuantumPoly::u(1) + QuantumPoly::scalar(1, 1) -
                  QuantumPoly::d(1));
  const auto q2 = quantum_charpoly(2);
  CHECK(q2.coefficient(1, 0, 0) == -UEAElement::raw(2, 2, 1));
  CHECK(principal_symbol(q2) == classical_charpoly(2));
  const auto& f = quantum(2);
  CHECK(f.at(1, 1) == -UEAElement::raw(2, 2, 1));
}

TEST_CASE("extract_family rejects a bad grading") {
  const int n = 2;
  // an eps^0 term at degree 0 breaks the eps^1 leading order of level 2
  const auto broken = classical_charpoly(n) + CommPoly::scalar(n, Rational(1));
  CHECK_THROWS_AS(extract_family(broken), GradingError);
  const auto too_high = classical_charpoly(n) + CommPoly::variable(n, CommPoly::var_u(n), 3);
  CHECK_THROWS_AS(extract_family(too_high), GradingError);
  CHECK_FALSE(grading_report(too_high).pass());
}

TEST_CASE("chopped minors") {
  const auto l2 = CommPoly::lambda(2);
  CHECK(delta_k(2, 1) == x(2, 2, 1));
  CHECK(delta_k(2, 0) == (x(2, 1, 1) - l2) * (x(2, 2, 2) - l2) - x(2, 2, 1) * x(2, 2, 1));
  const auto l3 = CommPoly::lambda(3);
  CHECK(delta_k(3, 1) == x(3, 2, 1) * x(3, 3, 2) - x(3, 3, 1) * (x(3, 2, 2) - l3));
  const auto coeffs = delta_coefficients(3, 1);
  CHECK(coeffs.size() == 2);
  CHECK(coeffs.at(1) == x(3, 3, 1));
  CHECK_THROWS(delta_k(3, 3));
}

TEST_CASE("symmetrized match") {
  const auto m1 = symmetrized_match(classical(2), 1);
  CHECK(m1.match);
  CHECK(m1.sign == -1);
  const auto m0 = symmetrized_match(classical(2), 0);
  CHECK(m0.match);
  CHECK(m0.sign == 1);
  const std::map<int, std::vector<int>> signs = {{2, {1, -1}}, {3, {1, 1, -1}}, {4, {1, -1, -1, 1}}};
  for (const auto& [n, expected] : signs) {
    for (int k = 0; k < n; ++k) {
      const auto m = symmetrized_match(classical(n), k);
      CHECK(m.match);
      CHECK(m.sign == expected[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("symmetrize") {
  const int n = 3;
  CHECK(symmetrize(x(n, 1, 3) * x(n, 3, 1)) == x(n, 3, 1) * x(n, 3, 1));
  CHECK(symmetrize(x(n, 2, 2) + CommPoly::lambda(n)) == x(n, 2, 2) + CommPoly::lambda(n));
}

TEST_CASE("classical commutativity") {
  CHECK(poisson_bracket(x(2, 1, 1) + x(2, 2, 2), x(2, 2, 1)).is_zero());
  for (int n = 2; n <= 4; ++n) {
    const auto r = pairwise_commutativity(classical(n));
    CHECK(r.pass());
    CHECK(r.checks.size() == classical(n).entries.size() * (classical(n).entries.size() - 1) / 2);
  }
}

TEST_CASE("quantum commutativity") {
  const auto& f2 = quantum(2);
  CHECK(commutator(f2.at(0, 0), f2.at(1, 1)).is_zero());
  for (int n = 2; n <= 3; ++n) CHECK(pairwise_commutativity(quantum(n), 4).pass());
}

TEST_CASE("a non-commuting family is reported") {
  QuantumFamily f;
  f.n = 2;
  f.mode = Mode::Quantum;
  f.entries.emplace(FamilyIndex{0, 0}, UEAElement::raw(2, 1, 2));
  f.entries.emplace(FamilyIndex{0, 1}, UEAElement::raw(2, 2, 1));
  const auto r = pairwise_commutativity(f);
  CHECK_FALSE(r.pass());
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].pair.has_value());
  CHECK_FALSE(r.checks[0].detail.empty());
}

TEST_CASE("grading") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(grading_report(classical_charpoly(n)).pass());
    CHECK(grading_report(quantum_charpoly(n, 4)).pass());
    for (int k = 0; k <= n; ++k) {
      CHECK(classical(n).leading_eps.at(k) == static_cast<unsigned>(k * (k - 1) / 2));
      for (int i : classical(n).indices(k)) {
        // entry (k, i) carries u^i lambda^(n-k-i): total degree n - k
        CHECK(i <= n - k);
      }
    }
  }
}

TEST_CASE("quantization") {
  for (int n = 1; n <= 3; ++n) {
    const auto r = quantization_report(classical(n), quantum(n), classical_charpoly(n), quantum_charpoly(n, 4));
    CHECK(r.pass());
  }
}

TEST_CASE("denominators lie in the Borel part") {
  const auto& f = quantum(3);
  CHECK(f.denominator(1) == UEAElement::raw(3, 3, 1));
  CHECK(f.denominator(2) == -UEAElement::raw(3, 3, 1));
  const auto& f4 = quantum(4);
  CHECK(f4.denominator(2) ==
        UEAElement::raw(4, 3, 2) * UEAElement::raw(4, 4, 1) - UEAElement::raw(4, 3, 1) * UEAElement::raw(4, 4, 2));
}
