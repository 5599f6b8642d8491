#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gtoda/matrix.hpp"

namespace gtoda {

namespace detail {

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int inversions = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

template <class R>
void require_square(const OperatorMatrix<R>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) throw std::invalid_argument("determinant of an empty matrix");
}

// sum over sigma of sign(sigma) * B(rows[0], sigma(0)) * ... * B(rows[n-1], sigma(n-1)),
// factors in position order, sigma enumerated lexicographically by depth-first
// search so that prefix products are shared.
template <class R>
void row_ordered_sum(const OperatorMatrix<R>& m, const std::vector<std::size_t>& rows, std::size_t depth,
                     std::vector<bool>& used, int sign, const R& prefix, R& acc) {
  const std::size_t n = m.rows();
  if (depth == n) {
    if (sign > 0)
      acc += prefix;
    else
      acc -= prefix;
    return;
  }
  int smaller_unused = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) continue;
    // Placing c here creates one inversion per smaller column still unused.
    const int s = smaller_unused % 2 == 0 ? sign : -sign;
    used[c] = true;
    row_ordered_sum(m, rows, depth + 1, used, s, R(prefix * m(rows[depth], c)), acc);
    used[c] = false;
    ++smaller_unused;
  }
}

}  // namespace detail

/// Leibniz determinant for a commutative ring.
template <class R>
R det_commutative(const OperatorMatrix<R>& m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  R acc = zero_like(m(0, 0));
  for (const auto& p : detail::all_permutations(n)) {
    R term = m(0, p[0]);
    for (std::size_t r = 1; r < n; ++r) term = term * m(r, p[r]);
    if (detail::permutation_sign(p) > 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

/// Symmetrized noncommutative determinant
///   (1/n!) sum_{tau,sigma} sign(tau) sign(sigma) B(tau1,sigma1) ... B(taun,sigman)
/// with factors in row-position order. Row permutations tau may be split
/// across `workers` threads; partial sums are added back in tau order.
template <class R>
R det_nc_permsum(const OperatorMatrix<R>& m, unsigned workers = 1) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  const auto taus = detail::all_permutations(n);
  const R zero = zero_like(m(0, 0));

  auto run = [&](std::size_t begin, std::size_t end) {
    R acc = zero;
    std::vector<bool> used(n, false);
    for (std::size_t t = begin; t < end; ++t) {
      R part = zero;
      const int tau_sign = detail::permutation_sign(taus[t]);
      for (std::size_t c = 0; c < n; ++c) {
        used[c] = true;
        const int s = (c % 2 == 0) ? 1 : -1;
        detail::row_ordered_sum(m, taus[t], 1, used, s, m(taus[t][0], c), part);
        used[c] = false;
      }
      if (tau_sign > 0)
        acc += part;
      else
        acc -= part;
    }
    return acc;
  };

  R total = zero;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(taus.size())));
  if (workers == 1) {
    total = run(0, taus.size());
  } else {
    std::vector<std::future<R>> parts;
    const std::size_t chunk = (taus.size() + workers - 1) / workers;
    for (std::size_t b = 0; b < taus.size(); b += chunk)
      parts.push_back(std::async(std::launch::async, run, b, std::min(taus.size(), b + chunk)));
    for (auto& f : parts) total += f.get();
  }
  return total * (Rational(1) / detail::factorial(n));
}

/// Antisymmetrizer-trace determinant Tr_{1..n} A_n B_1 ... B_n, computed by
/// literally expanding the operator product on (C^n)^{(x)n}. Cost grows like
/// n^(2n+1); intended as an independent check of det_nc_permsum.
template <class R>
R det_nc_antisym(const OperatorMatrix<R>& m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  std::size_t dim = 1;
  for (std::size_t k = 0; k < n; ++k) dim *= n;
  const R zero = zero_like(m(0, 0));

  // digit k of a basis index is the state of tensor slot k
  std::vector<std::size_t> place(n, 1);
  for (std::size_t k = 1; k < n; ++k) place[k] = place[k - 1] * n;
  auto digit = [&](std::size_t idx, std::size_t k) { return (idx / place[k]) % n; };

  // op(I, J) as a sparse dense-row table; start with B_1.
  std::vector<std::vector<std::pair<std::size_t, R>>> op(dim);
  for (std::size_t in = 0; in < dim; ++in) {
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const std::size_t out = in - digit(in, 0) * place[0] + i1 * place[0];
      op[out].emplace_back(in, m(i1, digit(in, 0)));
    }
  }
  // op <- op * B_k: (op B_k)(I, J) = sum_K op(I, K) B_k(K, J), with
  // B_k(K, J) = L(k_k, j_k) when K and J agree off slot k.
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::vector<std::pair<std::size_t, R>>> next(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<R> row(dim, zero);
      std::vector<bool> touched(dim, false);
      for (const auto& [kk, coeff] : op[i]) {
        for (std::size_t jk = 0; jk < n; ++jk) {
          const std::size_t j = kk - digit(kk, k) * place[k] + jk * place[k];
          const R& entry = m(digit(kk, k), jk);
          row[j] += coeff * entry;
          touched[j] = true;
        }
      }
      for (std::size_t j = 0; j < dim; ++j)
        if (touched[j]) next[i].emplace_back(j, std::move(row[j]));
    }
    op = std::move(next);
  }

  // Tr(A_n op) = sum_{I,J} A_n(J, I) op(I, J), A_n e_I = (1/n!) sum_s sign(s) e_{I o s}.
  const auto perms = detail::all_permutations(n);
  R trace = zero;
  for (std::size_t i = 0; i < dim; ++i) {
    for (const auto& [j, coeff] : op[i]) {
      int weight = 0;
      for (const auto& s : perms) {
        bool match = true;
        for (std::size_t slot = 0; slot < n && match; ++slot) match = digit(j, slot) == digit(i, s[slot]);
        if (match) weight += detail::permutation_sign(s);
      }
      if (weight != 0) trace += coeff * Rational(weight);
    }
  }
  return trace * (Rational(1) / detail::factorial(n));
}

/// det(g M g^-1) == det(M) with the symmetrized determinant.
/// Throws std::domain_error when g is singular.
template <class R>
bool conjugation_check(const OperatorMatrix<R>& m, const OperatorMatrix<Rational>& g) {
  const auto g_inv = inverse(g);
  return det_nc_permsum(sandwich(g, m, g_inv)) == det_nc_permsum(m);
}

}  // namespace gtoda
