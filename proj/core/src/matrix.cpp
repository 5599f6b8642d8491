#include "gtoda/matrix.hpp"

namespace gtoda {

OperatorMatrix<Rational> identity_matrix(std::size_t n) {
  OperatorMatrix<Rational> id(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

OperatorMatrix<Rational> inverse(const OperatorMatrix<Rational>& g) {
  if (!g.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = g.rows();
  OperatorMatrix<Rational> a = g;
  OperatorMatrix<Rational> inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace gtoda
