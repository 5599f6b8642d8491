#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gtoda/lax.hpp"
#include "gtoda/toda_sim.hpp"

using namespace gtoda;

namespace {

OpenChainState random_chain(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  OpenChainState s;
  for (int k = 0; k < n; ++k) s.q.push_back(uni(rng));
  for (int k = 0; k < n; ++k) s.p.push_back(uni(rng));
  return s;
}

BorelPoint random_point(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-0.5, 0.5);
  BorelPoint p(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) p.at(i, j) = uni(rng);
  return p;
}

const VectorField harmonic = [](double, const std::vector<double>& y) { return std::vector<double>{y[1], -y[0]}; };

double harmonic_error(double dt) {
  const double period = 2 * std::numbers::pi;
  const auto traj = integrate_rk4({1.0, 0.0}, 0.0, harmonic, dt, period, 1000000);
  const auto& y = traj.states.back();
  return std::hypot(y[0] - std::cos(traj.times.back()), y[1] + std::sin(traj.times.back()));
}

}  // namespace

TEST_CASE("open chain vector field") {
  const auto d = open_toda_rhs(OpenChainState{{0, 0}, {0, 0}, 0});
  CHECK(d.q == std::vector<double>{0, 0});
  CHECK(d.p == std::vector<double>{-1, 1});

  const auto s = random_chain(5, 3);
  const auto ds = open_toda_rhs(s);
  double total = 0;
  for (double v : ds.p) total += v;
  CHECK(std::abs(total) < 1e-14);
  CHECK(ds.q == s.p);

  const auto far = open_toda_rhs(OpenChainState{{-60, 0, 60}, {1, 0, 0}, 0});
  CHECK(far.q == std::vector<double>{1, 0, 0});
  for (double v : far.p) CHECK(std::abs(v) < 1e-20);

  CHECK_THROWS_AS(open_toda_rhs(OpenChainState{{1000, 0}, {0, 0}, 0}), SimulationError);
}

TEST_CASE("RK4 basics") {
  const VectorField zero = [](double, const std::vector<double>& y) { return std::vector<double>(y.size(), 0.0); };
  const auto flat = integrate_rk4({1.5, -2.0}, 0.0, zero, 0.1, 2.0, 3);
  for (const auto& y : flat.states) CHECK(y == std::vector<double>{1.5, -2.0});
  CHECK(flat.times.back() == doctest::Approx(2.0));
  CHECK(flat.times.size() == 8);  // steps 0, 3, ..., 18 and the final step 20

  CHECK(harmonic_error(1e-3) < 1e-8);
  const double ratio = harmonic_error(2e-2) / harmonic_error(1e-2);
  CHECK(ratio > 14.0);
  CHECK(ratio < 18.0);

  CHECK_THROWS(integrate_rk4({1.0}, 0.0, zero, 0.0, 1.0));
  CHECK_THROWS(integrate_rk4({1.0}, 0.0, zero, 0.1, -1.0));
}

TEST_CASE("RK4 reports the last finite time") {
  // y' = y^2 blows up at t = 1
  const VectorField blow = [](double, const std::vector<double>& y) { return std::vector<double>{y[0] * y[0]}; };
  try {
    integrate_rk4({1.0}, 0.0, blow, 0.01, 2.0);
    FAIL("expected a SimulationError");
  } catch (const SimulationError& e) {
    CHECK(e.last_good_time() > 0.9);
    CHECK(e.last_good_time() < 1.05);
  }
}

TEST_CASE("characteristic polynomial coefficients") {
  OperatorMatrix<double> m(2, 2, 0.0);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  const auto c = charpoly_coefficients(m);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == 1.0);
  CHECK(c[1] == doctest::Approx(-5.0));
  CHECK(c[2] == doctest::Approx(-2.0));
}

TEST_CASE("open chain conserves the spectrum") {
  const auto s0 = random_chain(3, 7);
  const auto traj = integrate_open_chain(s0, 1e-3, 10.0, 100);
  for (double w : {0.0, 1.0}) {
    const auto rep = spectral_drift(traj, w);
    CHECK(rep.names.size() == 4);
    CHECK(rep.max_drift() < 1e-8);
    CHECK(rep.values.front() == spectral_drift({traj.front()}, w).values.front());
    // the trace is the total momentum
    CHECK(rep.max_relative_drift()[1] < 1e-12);
  }
  const double e0 = open_chain_energy(traj.front());
  for (const auto& s : traj) CHECK(std::abs(open_chain_energy(s) - e0) < 1e-8);
}

TEST_CASE("open chain time reversal") {
  const auto s0 = random_chain(4, 9);
  const auto forward = integrate_open_chain(s0, 1e-3, 5.0, 5000);
  OpenChainState back = forward.back();
  for (auto& p : back.p) p = -p;
  const auto backward = integrate_open_chain(back, 1e-3, 5.0, 5000);
  const auto& end = backward.back();
  double err = 0;
  for (std::size_t k = 0; k < s0.size(); ++k)
    err = std::max({err, std::abs(end.q[k] - s0.q[k]), std::abs(end.p[k] + s0.p[k])});
  const double one_way = spectral_drift(forward, 0.0).max_drift();
  CHECK(err <= 10 * one_way);
}

TEST_CASE("Kirillov-Kostant flows") {
  const int n = 2;
  const KKFlow f(CommPoly::x(n, 1, 1));
  BorelPoint p(n);
  p.at(1, 1) = 0.3;
  p.at(2, 1) = 0.7;
  p.at(2, 2) = -0.2;
  const auto d = f.rhs(p);
  CHECK(d.at(2, 1) == doctest::Approx(-0.7));
  CHECK(d.at(1, 1) == 0.0);

  const KKFlow trace(CommPoly::x(3, 1, 1) + CommPoly::x(3, 2, 2) + CommPoly::x(3, 3, 3));
  const auto dt = trace.rhs(random_point(3, 1));
  for (int i = 1; i <= 3; ++i) CHECK(dt.at(i, i) == 0.0);

  CHECK_THROWS(KKFlow(CommPoly::x(n, 1, 2)));
  CHECK_THROWS(KKFlow(CommPoly::lambda(n)));
}

TEST_CASE("generic Toda flow conserves the family") {
  for (int n = 2; n <= 3; ++n) {
    const KKFlow flow(delta_coefficient(n, 0, 1));
    const auto traj = integrate_kk_flow(flow, random_point(n, 5), 1e-3, 10.0, 100);
    const auto fam = invariant_drift(traj, generic_toda_invariants(n));
    CHECK(fam.max_drift() < 1e-6);
    const auto ham = invariant_drift(traj, {delta_coefficient(n, 0, 1)}, {"h"});
    CHECK(ham.max_drift() < 1e-8);
    const auto constant = invariant_drift(traj, {CommPoly::scalar(n, Rational(3))}, {"c"});
    CHECK(constant.max_drift() == 0.0);
  }
}

TEST_CASE("raw chopped-minor coefficients rescale along the flow") {
  const int n = 3;
  const KKFlow flow(delta_coefficient(n, 0, 1));
  const auto traj = integrate_kk_flow(flow, random_point(n, 5), 1e-3, 10.0, 100);
  const auto raw = invariant_drift(traj, delta_invariants(n));
  CHECK(raw.max_drift() > 1e-3);
  const CommPoly h = delta_coefficient(n, 0, 1);
  const CommPoly d11 = delta_coefficient(n, 1, 1);
  CHECK(poisson_bracket(h, d11) == d11 * (CommPoly::x(n, 3, 3) - CommPoly::x(n, 1, 1)));
}

TEST_CASE("invariant names and CSV trace") {
  const auto inv = generic_toda_invariants(3);
  std::vector<std::string> names;
  for (const auto& i : inv) names.push_back(i.name);
  CHECK(std::find(names.begin(), names.end(), "delta:0,1") != names.end());
  CHECK(std::find(names.begin(), names.end(), "delta:1,0/top") != names.end());

  const auto traj = integrate_open_chain(random_chain(3, 2), 1e-2, 0.1, 5);
  const auto rep = spectral_drift(traj, 0.0);
  std::vector<std::vector<double>> coords;
  for (const auto& s : traj) coords.push_back(s.q);
  std::ostringstream out;
  write_trace_csv(out, {"q0", "q1", "q2"}, coords, rep);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,q0,q1,q2,c0,c1,c2,c3");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == traj.size());
  const auto j = rep.to_json();
  CHECK(j.contains("invariants"));
  CHECK(j.contains("max_drift"));
}
