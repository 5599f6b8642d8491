#include "gtoda/lax.hpp"

#include <cmath>

namespace gtoda {

namespace {

void require_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
}

}  // namespace

OperatorMatrix<CommPoly> build_full_lax_classical(int n) {
  require_rank(n);
  OperatorMatrix<CommPoly> a(n, n, CommPoly(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = CommPoly::x(n, i, j);
  return a;
}

OperatorMatrix<QuantumPoly> build_full_lax_quantum(int n) {
  require_rank(n);
  OperatorMatrix<QuantumPoly> a(n, n, QuantumPoly(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = QuantumPoly::from_uea(UEAElement::raw(n, i, j));
  return a;
}

OperatorMatrix<CommPoly> build_borel_lax(int n) {
  require_rank(n);
  OperatorMatrix<CommPoly> a(n, n, CommPoly(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      a(i - 1, j - 1) = CommPoly::x(n, i, j);
      a(j - 1, i - 1) = CommPoly::x(n, i, j);
    }
  }
  return a;
}

OmegaMatrix build_omega(int n) {
  require_rank(n);
  return OmegaMatrix{n};
}

OperatorMatrix<CommPoly> OmegaMatrix::classical() const {
  OperatorMatrix<CommPoly> m(n, n, CommPoly(n));
  for (int i = 1; i <= n; ++i) m(i - 1, n - i) = CommPoly::variable(n, CommPoly::var_eps(n), exponent(i));
  return m;
}

OperatorMatrix<QuantumPoly> OmegaMatrix::quantum() const {
  OperatorMatrix<QuantumPoly> m(n, n, QuantumPoly(n));
  for (int i = 1; i <= n; ++i) m(i - 1, n - i) = QuantumPoly::eps(n, exponent(i));
  return m;
}

OperatorMatrix<CommPoly> assemble_pencil(const OperatorMatrix<CommPoly>& a) {
  if (!a.is_square()) throw std::invalid_argument("pencil: matrix must be square");
  const int n = static_cast<int>(a.rows());
  const auto omega = build_omega(n).classical();
  const CommPoly u = CommPoly::u(n);
  const CommPoly lambda = CommPoly::lambda(n);
  OperatorMatrix<CommPoly> out(n, n, CommPoly(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = a(i, j) * u + omega(i, j);
      if (i == j) out(i, j) -= lambda;
    }
  }
  return out;
}

OperatorMatrix<QuantumPoly> assemble_pencil(const OperatorMatrix<QuantumPoly>& a) {
  if (!a.is_square()) throw std::invalid_argument("pencil: matrix must be square");
  const int n = static_cast<int>(a.rows());
  const auto omega = build_omega(n).quantum();
  const QuantumPoly u = QuantumPoly::u(n);
  const QuantumPoly d = QuantumPoly::d(n);
  OperatorMatrix<QuantumPoly> out(n, n, QuantumPoly(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = a(i, j) * u + omega(i, j);
      if (i == j) out(i, j) -= d;
    }
  }
  return out;
}

OperatorMatrix<double> build_open_lax(const OpenChainState& state, double w) {
  const std::size_t n = state.size();
  if (n < 2 || state.p.size() != n) throw std::invalid_argument("open Lax matrix needs n >= 2 and |p| = |q|");
  OperatorMatrix<double> l(n, n, 0.0);
  for (std::size_t k = 0; k < n; ++k) l(k, k) = -state.p[k];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double c = std::exp((state.q[k] - state.q[k + 1]) / 2.0);
    l(k, k + 1) = c;
    l(k + 1, k) = c;
  }
  l(n - 1, 0) += w * std::exp((state.q[n - 1] - state.q[0]) / 2.0);
  return l;
}

double open_chain_energy(const OpenChainState& s) {
  double h = 0.0;
  for (double p : s.p) h += 0.5 * p * p;
  for (std::size_t k = 0; k + 1 < s.q.size(); ++k) h += std::exp(s.q[k] - s.q[k + 1]);
  return h;
}

}  // namespace gtoda
