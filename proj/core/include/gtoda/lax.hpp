#pragma once

#include <cstddef>
#include <stdexcept>

#include "gtoda/comm_poly.hpp"
#include "gtoda/matrix.hpp"
#include "gtoda/open_chain.hpp"
#include "gtoda/quantum_poly.hpp"

namespace gtoda {

/// Full gl_n Lax matrix A = sum E_ij (x) e_ij.
OperatorMatrix<CommPoly> build_full_lax_classical(int n);
OperatorMatrix<QuantumPoly> build_full_lax_quantum(int n);

/// Symmetric Borel Lax matrix on b^*: A_ij = A_ji = x_ij for i >= j.
OperatorMatrix<CommPoly> build_borel_lax(int n);

/// Antidiagonal Omega_eps: entry (i, n-i+1) = eps^(i-1), 1-based.
struct OmegaMatrix {
  int n = 1;

  /// eps exponent at the 1-based position (i, n-i+1), i.e. i - 1.
  unsigned exponent(int i) const { return static_cast<unsigned>(i - 1); }
  bool nonzero(int i, int j) const { return j == n - i + 1; }

  OperatorMatrix<CommPoly> classical() const;
  OperatorMatrix<QuantumPoly> quantum() const;
};

OmegaMatrix build_omega(int n);

/// Forms A - lambda*Id and deletes the k rightmost columns and k top rows.
/// The result has rows k+1..n and columns 1..n-k of the original.
template <class R>
OperatorMatrix<R> chop(const OperatorMatrix<R>& a, int k, const R& lambda) {
  if (!a.is_square()) throw std::invalid_argument("chop: matrix must be square");
  const int n = static_cast<int>(a.rows());
  if (k < 0 || k > n - 1) throw std::out_of_range("chop: k must satisfy 0 <= k <= n-1");
  const std::size_t m = static_cast<std::size_t>(n - k);
  OperatorMatrix<R> out(m, m, zero_like(a(0, 0)));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const std::size_t orig_r = r + static_cast<std::size_t>(k);
      out(r, c) = a(orig_r, c);
      if (orig_r == c) out(r, c) -= lambda;
    }
  }
  return out;
}

/// Classical pencil: A_ij u + (Omega_eps)_ij - delta_ij lambda.
OperatorMatrix<CommPoly> assemble_pencil(const OperatorMatrix<CommPoly>& a);
/// Quantum pencil: A_ij u + (Omega_eps)_ij - delta_ij D.
OperatorMatrix<QuantumPoly> assemble_pencil(const OperatorMatrix<QuantumPoly>& a);

/// Open-chain Lax matrix L(w): diagonal -p_k, off-diagonals
/// c_k = exp((q_k - q_{k+1})/2), and corner (n,1) = w * exp((q_n - q_1)/2),
/// the wrap-around bond of the periodic chain. For n = 2 the corner and the
/// sub-diagonal share position (2,1), which then holds c_1 + w*exp((q_2-q_1)/2).
OperatorMatrix<double> build_open_lax(const OpenChainState& state, double w);

}  // namespace gtoda
