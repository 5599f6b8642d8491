#include "gtoda/toda_sim.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gtoda/lax.hpp"
#include "gtoda/spectral.hpp"

namespace gtoda {

namespace {

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

std::vector<double> axpy(const std::vector<double>& y, double h, const std::vector<double>& k) {
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + h * k[i];
  return out;
}

std::vector<double> pack(const OpenChainState& s) {
  std::vector<double> y = s.q;
  y.insert(y.end(), s.p.begin(), s.p.end());
  return y;
}

OpenChainState unpack(const std::vector<double>& y, double t) {
  const auto n = static_cast<std::ptrdiff_t>(y.size() / 2);
  return {std::vector<double>(y.begin(), y.begin() + n), std::vector<double>(y.begin() + n, y.end()), t};
}

}  // namespace

OpenChainState open_toda_rhs(const OpenChainState& s) {
  const std::size_t n = s.size();
  if (s.p.size() != n) throw std::invalid_argument("open chain state: |p| != |q|");
  OpenChainState d{s.p, std::vector<double>(n, 0.0), 0.0};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double f = std::exp(s.q[k] - s.q[k + 1]);
    if (!std::isfinite(f)) throw SimulationError("exponential overflow in the open chain force", s.t);
    d.p[k] -= f;
    d.p[k + 1] += f;
  }
  return d;
}

Trajectory integrate_rk4(const std::vector<double>& y0, double t0, const VectorField& f, double dt,
                         double horizon, std::size_t stride) {
  if (!(dt > 0.0) || !(horizon > 0.0)) throw std::invalid_argument("integrate: dt and horizon must be positive");
  if (stride == 0) throw std::invalid_argument("integrate: stride must be positive");
  if (!all_finite(y0)) throw SimulationError("non-finite initial state", t0);
  const auto steps = static_cast<std::size_t>(std::llround(horizon / dt));
  if (steps == 0) throw std::invalid_argument("integrate: horizon shorter than one step");

  Trajectory traj;
  traj.times.push_back(t0);
  traj.states.push_back(y0);
  std::vector<double> y = y0;
  for (std::size_t s = 1; s <= steps; ++s) {
    const double t = t0 + static_cast<double>(s - 1) * dt;
    const auto k1 = f(t, y);
    const auto k2 = f(t + dt / 2, axpy(y, dt / 2, k1));
    const auto k3 = f(t + dt / 2, axpy(y, dt / 2, k2));
    const auto k4 = f(t + dt, axpy(y, dt, k3));
    std::vector<double> next(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) next[i] = y[i] + dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    if (!all_finite(next))
      throw SimulationError("non-finite state at step " + std::to_string(s), t0 + static_cast<double>(s - 1) * dt);
    y = std::move(next);
    if (s % stride == 0 || s == steps) {
      traj.times.push_back(t0 + static_cast<double>(s) * dt);
      traj.states.push_back(y);
    }
  }
  return traj;
}

std::vector<OpenChainState> integrate_open_chain(const OpenChainState& s0, double dt, double horizon,
                                                 std::size_t stride) {
  const VectorField f = [](double t, const std::vector<double>& y) {
    return pack(open_toda_rhs(unpack(y, t)));
  };
  const Trajectory traj = integrate_rk4(pack(s0), s0.t, f, dt, horizon, stride);
  std::vector<OpenChainState> out;
  for (std::size_t i = 0; i < traj.times.size(); ++i) out.push_back(unpack(traj.states[i], traj.times[i]));
  return out;
}

std::vector<double> charpoly_coefficients(const OperatorMatrix<double>& l) {
  if (!l.is_square()) throw std::invalid_argument("charpoly: matrix must be square");
  const std::size_t n = l.rows();
  // Faddeev-LeVerrier
  std::vector<double> c{1.0};
  OperatorMatrix<double> m(n, n, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    OperatorMatrix<double> next(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) s += l(i, r) * m(r, j);
        next(i, j) = s + (i == j ? c.back() : 0.0);
      }
    }
    m = std::move(next);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < n; ++r) trace += l(i, r) * m(r, i);
    c.push_back(-trace / static_cast<double>(k));
  }
  return c;
}

std::vector<double> DriftReport::max_relative_drift() const {
  std::vector<double> out(names.size(), 0.0);
  if (values.empty()) return out;
  for (std::size_t v = 0; v < names.size(); ++v) {
    const double v0 = values.front()[v];
    const double scale = std::max(std::abs(v0), 1.0);
    for (const auto& row : values) out[v] = std::max(out[v], std::abs(row[v] - v0) / scale);
  }
  return out;
}

double DriftReport::max_drift() const {
  const auto d = max_relative_drift();
  return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
}

nlohmann::json DriftReport::to_json() const {
  nlohmann::json inv = nlohmann::json::object();
  const auto drift = max_relative_drift();
  for (std::size_t v = 0; v < names.size(); ++v) {
    inv[names[v]] = {{"initial", values.empty() ? 0.0 : values.front()[v]},
                     {"final", values.empty() ? 0.0 : values.back()[v]},
                     {"max_relative_drift", drift[v]}};
  }
  return {{"invariants", inv},
          {"max_drift", max_drift()},
          {"samples", times.size()},
          {"t_end", times.empty() ? 0.0 : times.back()}};
}

DriftReport spectral_drift(const std::vector<OpenChainState>& trajectory, double w) {
  DriftReport r;
  if (trajectory.empty()) return r;
  const std::size_t n = trajectory.front().size();
  for (std::size_t m = 0; m <= n; ++m) r.names.push_back("c" + std::to_string(m));
  for (const auto& s : trajectory) {
    r.times.push_back(s.t);
    r.values.push_back(charpoly_coefficients(build_open_lax(s, w)));
  }
  return r;
}

CompiledPoly::CompiledPoly(const CommPoly& p) {
  const int nx = p.rank() * p.rank();
  for (const auto& [e, c] : p.terms()) {
    Term t{c.get_d(), {}};
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (static_cast<int>(v) >= nx) throw std::invalid_argument("compiled polynomial involves lambda, eps or u");
      t.factors.emplace_back(static_cast<int>(v), e[v]);
    }
    terms_.push_back(std::move(t));
  }
}

double CompiledPoly::operator()(const std::vector<double>& x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coefficient;
    for (const auto& [var, pw] : t.factors) {
      const double b = x[static_cast<std::size_t>(var)];
      for (int k = 0; k < pw; ++k) v *= b;
    }
    sum += v;
  }
  return sum;
}

KKFlow::KKFlow(const CommPoly& h) : n_(h.rank()) {
  const int n = n_;
  for (int v : {CommPoly::var_lambda(n), CommPoly::var_eps(n), CommPoly::var_u(n)})
    if (h.involves(v)) throw std::invalid_argument("Hamiltonian must not involve lambda, eps or u");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (h.involves(CommPoly::var_x(n, i, j)))
        throw std::invalid_argument("Hamiltonian involves the upper coordinate x" + std::to_string(i) +
                                    std::to_string(j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      components_.emplace_back(static_cast<std::size_t>(CommPoly::var_x(n, i, j)),
                               CompiledPoly(poisson_bracket(h, CommPoly::x(n, i, j))));
}

std::vector<double> KKFlow::operator()(const std::vector<double>& x) const {
  std::vector<double> d(x.size(), 0.0);
  for (const auto& [slot, f] : components_) d[slot] = f(x);
  return d;
}

BorelPoint KKFlow::rhs(const BorelPoint& s) const {
  if (s.n != n_) throw std::invalid_argument("point rank does not match the flow");
  BorelPoint d(n_);
  d.x = (*this)(s.x);
  return d;
}

std::vector<BorelPoint> integrate_kk_flow(const KKFlow& flow, const BorelPoint& s0, double dt, double horizon,
                                          std::size_t stride) {
  if (s0.n != flow.rank()) throw std::invalid_argument("point rank does not match the flow");
  const VectorField f = [&flow](double, const std::vector<double>& y) { return flow(y); };
  const Trajectory traj = integrate_rk4(s0.x, s0.t, f, dt, horizon, stride);
  std::vector<BorelPoint> out;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    BorelPoint p(s0.n);
    p.x = traj.states[i];
    p.t = traj.times[i];
    out.push_back(std::move(p));
  }
  return out;
}

DriftReport invariant_drift(const std::vector<BorelPoint>& trajectory, const std::vector<CommPoly>& invariants,
                            const std::vector<std::string>& names) {
  if (names.size() != invariants.size()) throw std::invalid_argument("one name per invariant");
  std::vector<CompiledPoly> compiled;
  for (const auto& p : invariants) compiled.emplace_back(p);
  DriftReport r;
  r.names = names;
  for (const auto& s : trajectory) {
    r.times.push_back(s.t);
    std::vector<double> row;
    for (const auto& f : compiled) row.push_back(f(s.x));
    r.values.push_back(std::move(row));
  }
  return r;
}

DriftReport invariant_drift(const std::vector<BorelPoint>& trajectory, const std::vector<Invariant>& invariants) {
  std::vector<std::pair<CompiledPoly, std::optional<CompiledPoly>>> compiled;
  DriftReport r;
  for (const auto& inv : invariants) {
    compiled.emplace_back(CompiledPoly(inv.numerator),
                          inv.denominator ? std::optional<CompiledPoly>(CompiledPoly(*inv.denominator)) : std::nullopt);
    r.names.push_back(inv.name);
  }
  for (const auto& s : trajectory) {
    r.times.push_back(s.t);
    std::vector<double> row;
    for (const auto& [num, den] : compiled) row.push_back(den ? num(s.x) / (*den)(s.x) : num(s.x));
    r.values.push_back(std::move(row));
  }
  return r;
}

std::vector<Invariant> delta_invariants(int n) {
  std::vector<Invariant> out;
  for (int k = 0; k < n; ++k)
    for (auto& [p, c] : delta_coefficients(n, k))
      out.push_back({"delta:" + std::to_string(k) + "," + std::to_string(p), std::move(c), std::nullopt});
  return out;
}

std::vector<Invariant> generic_toda_invariants(int n) {
  std::vector<Invariant> out;
  for (int k = 0; k < n; ++k) {
    auto coeffs = delta_coefficients(n, k);
    if (coeffs.size() < 2 && k > 0) continue;
    const auto& [top, den] = *coeffs.rbegin();
    for (const auto& [p, c] : coeffs) {
      if (p == top) continue;
      const std::string name = "delta:" + std::to_string(k) + "," + std::to_string(p);
      if (k == 0)
        out.push_back({name, c, std::nullopt});
      else
        out.push_back({name + "/top", c, den});
    }
  }
  return out;
}

CommPoly delta_coefficient(int n, int k, int i) {
  if (i < 0) throw std::out_of_range("negative lambda power");
  return delta_k(n, k).coefficient(CommPoly::var_lambda(n), static_cast<unsigned>(i));
}

void write_trace_csv(std::ostream& out, const std::vector<std::string>& coordinate_names,
                     const std::vector<std::vector<double>>& coordinates, const DriftReport& report) {
  if (coordinates.size() != report.times.size()) throw std::invalid_argument("trace: sample count mismatch");
  out << "t";
  for (const auto& c : coordinate_names) out << ',' << c;
  for (const auto& c : report.names) out << ',' << c;
  out << '\n';
  const auto old = out.precision(17);
  for (std::size_t s = 0; s < report.times.size(); ++s) {
    out << report.times[s];
    for (double v : coordinates[s]) out << ',' << v;
    for (double v : report.values[s]) out << ',' << v;
    out << '\n';
  }
  out.precision(old);
}

}  // namespace gtoda
