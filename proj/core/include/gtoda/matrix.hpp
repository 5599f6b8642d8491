#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gtoda/comm_poly.hpp"
#include "gtoda/quantum_poly.hpp"
#include "gtoda/rational.hpp"
#include "gtoda/uea.hpp"

namespace gtoda {

/// Additive identity in the same ring (and rank) as x.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline double zero_like(double) { return 0.0; }
inline CommPoly zero_like(const CommPoly& x) { return CommPoly(x.rank()); }
inline UEAElement zero_like(const UEAElement& x) { return UEAElement(x.rank()); }
inline QuantumPoly zero_like(const QuantumPoly& x) { return QuantumPoly(x.rank()); }

/// Dense rows x cols matrix with entries in one coefficient ring. Indices are
/// 0-based; the ring is fixed by the template argument (CommPoly for the
/// classical pencil, QuantumPoly for the quantum one, Rational or double for
/// numeric matrices).
template <class R>
class OperatorMatrix {
 public:
  using value_type = R;

  OperatorMatrix(std::size_t rows, std::size_t cols, const R& fill)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  R& operator()(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
  const R& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }

  const std::vector<R>& entries() const { return entries_; }

  bool operator==(const OperatorMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<R> entries_;
};

/// g * m * h for numeric g, h with exact rational entries.
template <class R>
OperatorMatrix<R> sandwich(const OperatorMatrix<Rational>& g, const OperatorMatrix<R>& m,
                           const OperatorMatrix<Rational>& h) {
  if (g.cols() != m.rows() || m.cols() != h.rows()) throw std::invalid_argument("sandwich: shape mismatch");
  const R zero = zero_like(m(0, 0));
  OperatorMatrix<R> gm(g.rows(), m.cols(), zero);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t k = 0; k < g.cols(); ++k)
        if (g(i, k) != 0) gm(i, j) += m(k, j) * g(i, k);
  OperatorMatrix<R> out(g.rows(), h.cols(), zero);
  for (std::size_t i = 0; i < gm.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      for (std::size_t k = 0; k < gm.cols(); ++k)
        if (h(k, j) != 0) out(i, j) += gm(i, k) * h(k, j);
  return out;
}

/// Exact inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
OperatorMatrix<Rational> inverse(const OperatorMatrix<Rational>& g);

OperatorMatrix<Rational> identity_matrix(std::size_t n);

}  // namespace gtoda
