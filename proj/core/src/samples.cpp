#include "gtoda/samples.hpp"

#include <stdexcept>

namespace gtoda {

Rational SampleSource::rational(int bound) {
  Rational r(uniform(-bound, bound), uniform(1, bound));
  r.canonicalize();
  return r;
}

OperatorMatrix<Rational> SampleSource::invertible(std::size_t n) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    OperatorMatrix<Rational> g(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = rational();
    try {
      (void)inverse(g);
      return g;
    } catch (const std::domain_error&) {
    }
  }
  throw std::runtime_error("could not sample an invertible matrix");
}

UEAElement SampleSource::linear_element(int n) {
  const auto& table = generator_table(n);
  UEAElement out = UEAElement::scalar(n, rational());
  for (std::size_t g = 0; g < table.size(); ++g)
    if (uniform(0, 2) == 0) out += UEAElement::generator(n, table.generator(static_cast<GenIndex>(g))) * rational();
  return out;
}

OperatorMatrix<QuantumPoly> SampleSource::linear_matrix(int n, std::size_t size) {
  OperatorMatrix<QuantumPoly> m(size, size, QuantumPoly(n));
  for (auto r = 0u; r < size; ++r) {
    for (auto c = 0u; c < size; ++c) {
      QuantumPoly e = QuantumPoly::from_uea(linear_element(n));
      switch (uniform(0, 3)) {
        case 0: e = e * QuantumPoly::u(n); break;
        case 1: e += QuantumPoly::d(n) * rational(); break;
        case 2: e = e * QuantumPoly::eps(n); break;
        default: break;
      }
      m(r, c) = std::move(e);
    }
  }
  return m;
}

}  // namespace gtoda
