#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "gtoda/comm_poly.hpp"
#include "gtoda/report.hpp"
#include "gtoda/spectral.hpp"
#include "gtoda/uea.hpp"

namespace gtoda {

template <class Elem>
struct Split {
  Elem plus;
  Elem minus;
};

/// U(gl_n) = so_n U(gl_n) + U(b): plus keeps the monomials with no F factor.
Split<UEAElement> split(const UEAElement& a);
/// S(gl_n) = S(b) + so_n S(gl_n): plus is the restriction to symmetric
/// matrices, written in the lower coordinates.
Split<CommPoly> split(const CommPoly& f);

bool in_borel(const UEAElement& a);
/// True if f involves no upper coordinate x_ij, i < j.
bool in_borel(const CommPoly& f);

/// Basis E(i,j), i >= j, of the lower Borel subalgebra in PBW order.
std::vector<MixedGenerator> borel_basis(int n);

class CharacterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scalars with ad_X(a) = chi(X) a for every entry a of one family level.
struct Character {
  int k = 0;
  std::map<MixedGenerator, Rational> values;

  Rational operator()(const MixedGenerator& x) const {
    auto it = values.find(x);
    return it == values.end() ? Rational(0) : it->second;
  }
};

/// Throws CharacterError when some ad_X(a) is not proportional to a.
Character compute_character(const ClassicalFamily& family, int k);
Character compute_character(const QuantumFamily& family, int k);

/// Runs compute_character on every level and records proportionality, the
/// vanishing on strictly lower generators and integrality on the Cartan.
Report character_report(const ClassicalFamily& family);
Report character_report(const QuantumFamily& family);

/// b_1...b_s -> (b_1 + chi(b_1))...(b_s + chi(b_s)), extended linearly.
/// Throws std::invalid_argument if m has an F factor.
UEAElement eta_map(const UEAElement& m, const Character& chi);

/// Checks m a = a eta_k(m) for every entry a at level k and every monomial
/// m in the Borel generators of degree <= max_degree.
Report eta_relation_check(const QuantumFamily& family, const std::map<int, Character>& characters,
                          int max_degree);

/// a_+ eta_k(b_+) - b_+ eta_l(a_+) == 0 for every pair of family entries.
Report aks_identity_check(const QuantumFamily& family, const std::map<int, Character>& characters,
                          unsigned workers = 1);

struct ReducedFamily {
  int n = 0;
  /// (k, i) -> (QI_{k,i})_+
  std::map<FamilyIndex, UEAElement> numerators;
  /// k -> the coefficient at the top D power of level k
  std::map<int, UEAElement> denominators;
  std::map<int, Character> characters;
};

/// Throws CharacterError or std::logic_error (denominator outside U(b)).
ReducedFamily reduce(const QuantumFamily& family);

/// Denominator-free form of [a_+ c^-1, b_+ d^-1] = 0.
Report ratio_commutativity_check(const ReducedFamily& reduced, unsigned workers = 1);

/// For p = I_{k,i}_+, q = I_{k,top}_+, r = I_{m,j}_+, s = I_{m,top}_+ in S(b):
/// q s {p,r} - p s {q,r} - q r {p,s} + p r {q,s} == 0, i.e. {p/q, r/s} = 0.
Report classical_ratio_check(const ClassicalFamily& family);

/// Right Ore witness for s = c_{k_1} ... c_{k_r} and a in U(b):
/// s a' = a s' with s' = s and a' = eta_{k_r}(... eta_{k_1}(a)).
struct OreWitness {
  UEAElement s;
  UEAElement s_prime;
  UEAElement a_prime;
};

OreWitness ore_witness(const ReducedFamily& reduced, const std::vector<int>& levels, const UEAElement& a);

struct OreSample {
  std::vector<int> levels;
  UEAElement a;
};

/// Sample set: every Borel generator, every numerator and a few products,
/// against each single denominator and each product of two.
std::vector<OreSample> default_ore_samples(const ReducedFamily& reduced);
Report ore_condition_check(const ReducedFamily& reduced, const std::vector<OreSample>& samples);

/// Positive simple-root generators e_{l,l+1} for l = k+1 .. n-k-1.
std::vector<int> parabolic_roots(int n, int k);

/// ad_X(I_{k,i}) I_{k,j} - I_{k,i} ad_X(I_{k,j}) == 0 for X in the Borel basis
/// and the raw generators e_{l,l+1}, l in roots.
Report parabolic_invariance_check(const ClassicalFamily& family, int k, const std::vector<int>& roots);
inline Report parabolic_invariance_check(const ClassicalFamily& family, int k) {
  return parabolic_invariance_check(family, k, parabolic_roots(family.n, k));
}

}  // namespace gtoda
