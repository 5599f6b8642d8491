#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gtoda/comm_poly.hpp"
#include "gtoda/matrix.hpp"
#include "gtoda/open_chain.hpp"

namespace gtoda {

/// Non-finite values during integration. last_good_time is the time of the
/// last state that was entirely finite.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(const std::string& what, double last_good_time)
      : std::runtime_error(what), last_good_time_(last_good_time) {}
  double last_good_time() const { return last_good_time_; }

 private:
  double last_good_time_;
};

/// (dq/dt, dp/dt) packed into a state; t is left at zero.
/// Throws SimulationError if an exponential overflows.
OpenChainState open_toda_rhs(const OpenChainState& s);

using VectorField = std::function<std::vector<double>(double t, const std::vector<double>& y)>;

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
};

/// Fixed-step classical RK4 over [t0, t0 + horizon], round(horizon / dt)
/// steps; keeps every stride-th state plus the last one.
Trajectory integrate_rk4(const std::vector<double>& y0, double t0, const VectorField& f, double dt,
                         double horizon, std::size_t stride = 1);

std::vector<OpenChainState> integrate_open_chain(const OpenChainState& s0, double dt, double horizon,
                                                 std::size_t stride = 1);

/// det(lambda - L) = sum_m c_m lambda^(n-m); returns c_0 = 1, c_1, ..., c_n.
std::vector<double> charpoly_coefficients(const OperatorMatrix<double>& l);

struct DriftReport {
  std::vector<std::string> names;
  std::vector<double> times;
  /// values[s][v]: invariant v at sample s
  std::vector<std::vector<double>> values;

  /// |v(t) - v(0)| / max(|v(0)|, 1), maximized over the samples.
  std::vector<double> max_relative_drift() const;
  double max_drift() const;
  nlohmann::json to_json() const;
};

DriftReport spectral_drift(const std::vector<OpenChainState>& trajectory, double w);

/// Point of b^*: coordinates x_ij, i >= j, stored in the CommPoly layout.
struct BorelPoint {
  int n = 0;
  std::vector<double> x;
  double t = 0.0;

  explicit BorelPoint(int rank = 0) : n(rank), x(static_cast<std::size_t>(rank * rank), 0.0) {}
  double& at(int i, int j) { return x.at(static_cast<std::size_t>((i - 1) * n + (j - 1))); }
  double at(int i, int j) const { return x.at(static_cast<std::size_t>((i - 1) * n + (j - 1))); }
};

/// Flat evaluator for a polynomial in the coordinates x_ij only.
class CompiledPoly {
 public:
  explicit CompiledPoly(const CommPoly& p);
  double operator()(const std::vector<double>& x) const;

 private:
  struct Term {
    double coefficient;
    std::vector<std::pair<int, int>> factors;
  };
  std::vector<Term> terms_;
};

/// dx_ij/dt = {H, x_ij}(x) for the lower coordinates. The brackets are
/// computed exactly once; H must involve only x_ij with i >= j.
class KKFlow {
 public:
  explicit KKFlow(const CommPoly& hamiltonian);
  int rank() const { return n_; }
  std::vector<double> operator()(const std::vector<double>& x) const;
  BorelPoint rhs(const BorelPoint& s) const;

 private:
  int n_;
  std::vector<std::pair<std::size_t, CompiledPoly>> components_;
};

std::vector<BorelPoint> integrate_kk_flow(const KKFlow& flow, const BorelPoint& s0, double dt, double horizon,
                                          std::size_t stride = 1);

DriftReport invariant_drift(const std::vector<BorelPoint>& trajectory, const std::vector<CommPoly>& invariants,
                            const std::vector<std::string>& names);

/// numerator / denominator, or the numerator alone.
struct Invariant {
  std::string name;
  CommPoly numerator;
  std::optional<CommPoly> denominator;
};

DriftReport invariant_drift(const std::vector<BorelPoint>& trajectory, const std::vector<Invariant>& invariants);

/// Delta_{k,i} for every k < n and every lambda power present, named "delta:k,i".
std::vector<Invariant> delta_invariants(int n);
/// The generic Toda family on b^*: Delta_{0,i}, and for k >= 1 the ratios
/// Delta_{k,i} / Delta_{k,top} (top = highest lambda power), named
/// "delta:k,i/top".
std::vector<Invariant> generic_toda_invariants(int n);

/// Delta_{k,i}: coefficient of lambda^i in the chopped minor of the symmetric
/// Borel matrix.
CommPoly delta_coefficient(int n, int k, int i);

/// CSV with columns t, coordinates..., invariants...
void write_trace_csv(std::ostream& out, const std::vector<std::string>& coordinate_names,
                     const std::vector<std::vector<double>>& coordinates, const DriftReport& report);

}  // namespace gtoda
