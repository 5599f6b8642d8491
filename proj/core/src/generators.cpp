#include "gtoda/generators.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gtoda {

std::string to_string(const MixedGenerator& g) {
  return std::string(g.kind == MixedGenerator::Kind::F ? "F" : "E") + "(" + std::to_string(g.i) + "," +
         std::to_string(g.j) + ")";
}

namespace {

void accumulate(std::map<GenIndex, int>& acc, const GenCombination& comb, int scale) {
  for (const auto& [g, c] : comb) acc[g] += scale * c;
}

GenCombination compact(const std::map<GenIndex, int>& acc) {
  GenCombination out;
  for (const auto& [g, c] : acc)
    if (c != 0) out.emplace_back(g, c);
  return out;
}

}  // namespace

GeneratorTable::GeneratorTable(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gens_.push_back(MixedGenerator::f(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) gens_.push_back(MixedGenerator::e(i, j));

  raw_.resize(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      auto& r = raw_[(i - 1) * n + (j - 1)];
      if (i >= j) {
        r.emplace_back(index_of(MixedGenerator::e(i, j)), 1);
      } else {
        r.emplace_back(index_of(MixedGenerator::f(i, j)), 1);
        r.emplace_back(index_of(MixedGenerator::e(j, i)), 1);
      }
    }
  }

  // Each mixed generator as a combination of raw units (a, b) -> coefficient.
  struct RawTerm {
    int a, b, c;
  };
  std::vector<std::vector<RawTerm>> as_raw(gens_.size());
  for (std::size_t idx = 0; idx < gens_.size(); ++idx) {
    const auto& g = gens_[idx];
    if (g.kind == MixedGenerator::Kind::F) {
      as_raw[idx] = {{g.i, g.j, 1}, {g.j, g.i, -1}};
    } else {
      as_raw[idx] = {{g.i, g.j, 1}};
    }
  }

  // [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb
  const std::size_t m = gens_.size();
  bracket_.resize(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      std::map<GenIndex, int> acc;
      for (const auto& s : as_raw[x]) {
        for (const auto& t : as_raw[y]) {
          const int c = s.c * t.c;
          if (s.b == t.a) accumulate(acc, raw(s.a, t.b), c);
          if (t.b == s.a) accumulate(acc, raw(t.a, s.b), -c);
        }
      }
      bracket_[x * m + y] = compact(acc);
    }
  }
}

GenIndex GeneratorTable::index_of(const MixedGenerator& g) const {
  if (g.i < 1 || g.j < 1 || g.i > n_ || g.j > n_) throw std::out_of_range("generator index out of range");
  if (g.kind == MixedGenerator::Kind::F) {
    if (g.i >= g.j) throw std::invalid_argument("F(i,j) requires i < j");
    // F block: row i contributes n - i entries.
    int pos = 0;
    for (int r = 1; r < g.i; ++r) pos += n_ - r;
    pos += g.j - g.i - 1;
    return static_cast<GenIndex>(pos);
  }
  if (g.i < g.j) throw std::invalid_argument("E(i,j) requires i >= j");
  const int pos = static_cast<int>(f_count()) + (g.i - 1) * g.i / 2 + (g.j - 1);
  return static_cast<GenIndex>(pos);
}

const GeneratorTable& generator_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GeneratorTable>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<GeneratorTable>(n);
  return *slot;
}

}  // namespace gtoda
