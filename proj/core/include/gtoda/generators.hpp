#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gtoda {

/// Basis element of gl_n in the mixed basis used for PBW ordering.
///
///   F(i,j), i < j  : e_ij - e_ji   (spans so_n)
///   E(i,j), i >= j : e_ij          (spans the lower Borel subalgebra b)
///
/// Indices are 1-based. The raw upper generator e_ij (i < j) equals
/// F(i,j) + E(j,i).
struct MixedGenerator {
  enum class Kind : std::uint8_t { F, E };

  Kind kind = Kind::E;
  int i = 1;
  int j = 1;

  static MixedGenerator f(int i, int j) { return {Kind::F, i, j}; }
  static MixedGenerator e(int i, int j) { return {Kind::E, i, j}; }

  bool is_borel() const { return kind == Kind::E; }
  bool is_cartan() const { return kind == Kind::E && i == j; }

  auto operator<=>(const MixedGenerator&) const = default;
};

std::string to_string(const MixedGenerator& g);

using GenIndex = std::uint16_t;

/// Sparse integer combination of mixed generators.
using GenCombination = std::vector<std::pair<GenIndex, int>>;

/// Per-rank table of the mixed basis: global ordering (all F before all E,
/// lexicographic in (i,j) inside each group) and the structure constants
/// of gl_n re-expressed in that basis.
class GeneratorTable {
 public:
  explicit GeneratorTable(int n);

  int rank() const { return n_; }
  std::size_t size() const { return gens_.size(); }

  const MixedGenerator& generator(GenIndex idx) const { return gens_[idx]; }
  GenIndex index_of(const MixedGenerator& g) const;

  /// Mixed-basis expansion of the raw matrix unit e_ij.
  const GenCombination& raw(int i, int j) const { return raw_[(i - 1) * n_ + (j - 1)]; }

  /// [g, h] in the mixed basis.
  const GenCombination& bracket(GenIndex g, GenIndex h) const { return bracket_[g * gens_.size() + h]; }

  /// Number of F generators; indices [0, f_count) are F, the rest are E.
  std::size_t f_count() const { return static_cast<std::size_t>(n_ * (n_ - 1) / 2); }

 private:
  int n_;
  std::vector<MixedGenerator> gens_;
  std::vector<GenCombination> raw_;
  std::vector<GenCombination> bracket_;
};

/// Shared immutable table for rank n (built once, safe for concurrent use).
const GeneratorTable& generator_table(int n);

}  // namespace gtoda
