#include <doctest.h>

#include <cmath>

#include "gtoda/determinant.hpp"
#include "gtoda/lax.hpp"

using namespace gtoda;

namespace {

CommPoly x(int n, int i, int j) { return CommPoly::x(n, i, j); }

}  // namespace

TEST_CASE("full Lax matrices") {
  CHECK(build_full_lax_quantum(1)(0, 0) == QuantumPoly::from_uea(UEAElement::raw(1, 1, 1)));
  const auto a = build_full_lax_quantum(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(a(i - 1, j - 1) == QuantumPoly::from_uea(UEAElement::raw(2, i, j)));
  CHECK(build_full_lax_quantum(3)(2, 0) == QuantumPoly::from_uea(UEAElement::raw(3, 3, 1)));
  CHECK(build_full_lax_classical(3)(0, 2) == x(3, 1, 3));
  CHECK_THROWS(build_full_lax_classical(0));
}

TEST_CASE("Borel Lax matrix") {
  const auto b2 = build_borel_lax(2);
  CHECK(b2(0, 0) == x(2, 1, 1));
  CHECK(b2(0, 1) == x(2, 2, 1));
  CHECK(b2(1, 0) == x(2, 2, 1));
  CHECK(b2(1, 1) == x(2, 2, 2));
  CHECK(build_borel_lax(1)(0, 0) == x(1, 1, 1));
  CHECK(build_borel_lax(3)(0, 2) == x(3, 3, 1));
  CHECK_THROWS(build_borel_lax(0));
}

TEST_CASE("Omega matrix") {
  for (int n = 1; n <= 5; ++n) {
    const auto om = build_omega(n).classical();
    int nonzero = 0;
    unsigned eps_sum = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const CommPoly& entry = om(i - 1, j - 1);
        if (entry.is_zero()) continue;
        ++nonzero;
        CHECK(j == n - i + 1);
        eps_sum += entry.degree_in(CommPoly::var_eps(n));
      }
    }
    CHECK(nonzero == n);
    CHECK(eps_sum == static_cast<unsigned>(n * (n - 1) / 2));
  }
  const auto om2 = build_omega(2).classical();
  CHECK(om2(0, 1) == CommPoly::scalar(2, Rational(1)));
  CHECK(om2(1, 0) == CommPoly::eps(2));
  CHECK(om2(0, 0).is_zero());
  const auto om3 = build_omega(3).classical();
  CHECK(om3(2, 0) == CommPoly::eps(3) * CommPoly::eps(3));
  CHECK(build_omega(1).classical()(0, 0) == CommPoly::scalar(1, Rational(1)));
  CHECK(build_omega(3).quantum()(1, 1) == QuantumPoly::eps(3));
}

TEST_CASE("chop examples") {
  const auto lambda2 = CommPoly::lambda(2);
  const auto c21 = chop(build_borel_lax(2), 1, lambda2);
  REQUIRE(c21.rows() == 1);
  CHECK(c21(0, 0) == x(2, 2, 1));
  const auto c0 = chop(build_borel_lax(2), 0, lambda2);
  CHECK(c0(0, 0) == x(2, 1, 1) - lambda2);
  CHECK(c0(0, 1) == x(2, 2, 1));
  const int n = 3;
  const auto lambda = CommPoly::lambda(n);
  const auto c31 = chop(build_borel_lax(n), 1, lambda);
  CHECK(c31(0, 0) == x(n, 2, 1));
  CHECK(c31(0, 1) == x(n, 2, 2) - lambda);
  CHECK(c31(1, 0) == x(n, 3, 1));
  CHECK(c31(1, 1) == x(n, 3, 2));
  CHECK_THROWS_AS(chop(build_borel_lax(3), 3, lambda), std::out_of_range);
  CHECK_THROWS_AS(chop(build_borel_lax(3), -1, lambda), std::out_of_range);
}

TEST_CASE("chopped minors have lambda-degree n - 2k") {
  for (int n = 1; n <= 5; ++n) {
    const auto lambda = CommPoly::lambda(n);
    for (int k = 0; 2 * k <= n && k < n; ++k) {
      const CommPoly d = det_commutative(chop(build_borel_lax(n), k, lambda));
      CHECK(d.degree_in(CommPoly::var_lambda(n)) == static_cast<unsigned>(n - 2 * k));
    }
  }
}

TEST_CASE("pencil entries") {
  const int n = 2;
  const auto cl = assemble_pencil(build_full_lax_classical(n));
  CHECK(cl(0, 1) == x(n, 1, 2) * CommPoly::u(n) + CommPoly::scalar(n, Rational(1)));
  CHECK(cl(1, 0) == x(n, 2, 1) * CommPoly::u(n) + CommPoly::eps(n));
  const auto q = assemble_pencil(build_full_lax_quantum(n));
  CHECK(q(0, 0) == QuantumPoly::from_uea(UEAElement::raw(n, 1, 1)) * QuantumPoly::u(n) - QuantumPoly::d(n));
}

TEST_CASE("symbol of the quantum pencil is the classical pencil") {
  for (int n = 1; n <= 4; ++n) {
    const auto q = assemble_pencil(build_full_lax_quantum(n));
    const auto c = assemble_pencil(build_full_lax_classical(n));
    for (std::size_t r = 0; r < q.rows(); ++r)
      for (std::size_t s = 0; s < q.cols(); ++s)
        if (!q(r, s).is_zero()) CHECK(principal_symbol(q(r, s)) == c(r, s));
  }
}

TEST_CASE("open chain Lax matrix") {
  OpenChainState s{{0, 0, 0}, {0, 0, 0}, 0};
  const auto l = build_open_lax(s, 0.7);
  for (int i = 0; i < 3; ++i) CHECK(l(i, i) == 0.0);
  CHECK(l(0, 1) == 1.0);
  CHECK(l(1, 0) == 1.0);
  CHECK(l(1, 2) == 1.0);
  CHECK(l(2, 1) == 1.0);
  CHECK(l(2, 0) == doctest::Approx(0.7));
  CHECK(l(0, 2) == 0.0);
  CHECK(build_open_lax(s, 0.0)(2, 0) == 0.0);

  s.p = {1, 2, 3};
  s.q = {0.4, -0.2, 1.0};
  const auto m = build_open_lax(s, 1.0);
  CHECK(m(0, 0) == -1.0);
  CHECK(m(1, 1) == -2.0);
  CHECK(m(2, 2) == -3.0);
  CHECK(m(0, 1) == doctest::Approx(std::exp(0.3)));
  CHECK(m(2, 0) == doctest::Approx(std::exp(0.3)));

  OpenChainState two{{0.2, 0.0}, {0, 0}, 0};
  const auto l2 = build_open_lax(two, 2.0);
  CHECK(l2(1, 0) == doctest::Approx(std::exp(0.1) + 2.0 * std::exp(-0.1)));
  CHECK(l2(0, 1) == doctest::Approx(std::exp(0.1)));
}
