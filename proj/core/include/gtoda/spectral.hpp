#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtoda/comm_poly.hpp"
#include "gtoda/quantum_poly.hpp"
#include "gtoda/report.hpp"
#include "gtoda/uea.hpp"

namespace gtoda {

enum class Mode { Classical, Quantum };

std::string to_string(Mode m);

/// Raised when an expanded characteristic polynomial does not have the
/// expected (eps, degree) grading. Signals an implementation bug.
class GradingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integrals read off the eps-deformed characteristic polynomial.
///
/// Level k collects the terms of (u, lambda)-degree n-k (resp. (u, D)-degree
/// in the quantum case). Its lowest eps power must be k(k-1)/2; the
/// coefficient of u^i lambda^(n-k-i) at that eps power is entry (k, i).
/// Only nonzero entries are stored.
template <class Elem>
struct GradedFamily {
  int n = 0;
  Mode mode = Mode::Classical;
  std::map<FamilyIndex, Elem> entries;
  /// k -> lowest eps exponent seen at level k.
  std::map<int, unsigned> leading_eps;

  const Elem& at(int k, int i) const { return entries.at({k, i}); }
  bool contains(int k, int i) const { return entries.count({k, i}) != 0; }

  std::vector<int> levels() const {
    std::vector<int> out;
    for (const auto& [k, e] : leading_eps) out.push_back(k);
    return out;
  }

  /// Entry indices at level k, ascending in i.
  std::vector<int> indices(int k) const {
    std::vector<int> out;
    for (const auto& [key, e] : entries)
      if (key.first == k) out.push_back(key.second);
    return out;
  }

  /// The coefficient at the top lambda (or D) power of level k, i.e. the
  /// smallest u-exponent present. It is the leading coefficient of the
  /// chopped minor and lies in the Borel part.
  int top_index(int k) const {
    const auto idx = indices(k);
    if (idx.empty()) throw std::out_of_range("empty family level " + std::to_string(k));
    return idx.front();
  }
  const Elem& denominator(int k) const { return at(k, top_index(k)); }
};

using ClassicalFamily = GradedFamily<CommPoly>;
using QuantumFamily = GradedFamily<UEAElement>;

/// det(A u + Omega_eps - lambda Id) fully expanded.
CommPoly classical_charpoly(int n);
/// Symmetrized determinant of A u + Omega_eps - D Id in normal form.
QuantumPoly quantum_charpoly(int n, unsigned workers = 1);

ClassicalFamily extract_family(const CommPoly& charpoly);
QuantumFamily extract_family(const QuantumPoly& charpoly);

inline ClassicalFamily classical_family(int n) { return extract_family(classical_charpoly(n)); }
inline QuantumFamily quantum_family(int n, unsigned workers = 1) {
  return extract_family(quantum_charpoly(n, workers));
}

/// I_k^0(1, lambda) = sum_i I_{k,i} lambda^(n-k-i).
CommPoly leading_part_at_unit_u(const ClassicalFamily& family, int k);

/// Chopped minor of the symmetric Borel Lax matrix, a polynomial in the
/// lower coordinates x_ij (i >= j) and lambda.
CommPoly delta_k(int n, int k);

/// lambda-power -> coefficient of delta_k(n, k).
std::map<unsigned, CommPoly> delta_coefficients(int n, int k);

/// x_ij -> x_ji for i < j: the restriction of a function on gl_n^* to
/// symmetric matrices, identified with b^*.
CommPoly symmetrize(const CommPoly& f);

struct SymmetrizedMatch {
  bool match = false;
  int sign = 0;
};

/// Compares symmetrize(I_k^0(1, lambda)) with delta_k(n, k) up to an
/// overall sign read off the leading lambda coefficients.
SymmetrizedMatch symmetrized_match(const ClassicalFamily& family, int k);

/// All Poisson brackets {I_{k,i}, I_{m,j}} (pairs with (k,i) <= (m,j)).
Report pairwise_commutativity(const ClassicalFamily& family);
/// All commutators [QI_{k,i}, QI_{m,j}].
Report pairwise_commutativity(const QuantumFamily& family, unsigned workers = 1);

/// Leading eps exponent k(k-1)/2 and homogeneous degree n-k per level,
/// checked directly against the expanded polynomial.
Report grading_report(const CommPoly& charpoly);
Report grading_report(const QuantumPoly& charpoly);

/// principal_symbol(QI_{k,i}) == I_{k,i} for every entry, and the symbol of
/// the whole quantum polynomial equals the classical one.
Report quantization_report(const ClassicalFamily& classical, const QuantumFamily& quantum,
                           const CommPoly& classical_poly, const QuantumPoly& quantum_poly);

}  // namespace gtoda
