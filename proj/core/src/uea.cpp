#include "gtoda/uea.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace gtoda {

PBWMonomial::PBWMonomial(std::vector<GenIndex> word) : word_(std::move(word)) {
  if (!std::is_sorted(word_.begin(), word_.end()))
    throw std::invalid_argument("PBW monomial word must be nondecreasing");
}

std::vector<std::pair<GenIndex, int>> PBWMonomial::factors() const {
  std::vector<std::pair<GenIndex, int>> out;
  for (GenIndex g : word_) {
    if (!out.empty() && out.back().first == g)
      ++out.back().second;
    else
      out.emplace_back(g, 1);
  }
  return out;
}

namespace {

constexpr GenIndex kSeparator = 0xFFFF;

struct WordHash {
  std::size_t operator()(const std::vector<GenIndex>& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (GenIndex g : w) {
      h ^= g;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

void add_into(UEAElement::Terms& acc, const PBWMonomial& m, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

// Straightening engine for one rank. Node-based containers keep references
// returned from the caches valid while new entries are inserted.
class Straightener {
 public:
  explicit Straightener(int n) : table_(generator_table(n)) {}

  const UEAElement::Terms& times_generator(const PBWMonomial& m, GenIndex g) {
    if (m.empty() || m.word().back() <= g) {
      auto w = m.word();
      w.push_back(g);
      key_.assign(w.begin(), w.end());
      key_.push_back(kSeparator);
      if (auto it = append_cache_.find(key_); it != append_cache_.end()) return it->second;
      UEAElement::Terms t;
      t.emplace(PBWMonomial(std::move(w)), Rational(1));
      return append_cache_.emplace(key_, std::move(t)).first->second;
    }

    std::vector<GenIndex> key = m.word();
    key.push_back(kSeparator);
    key.push_back(g);
    if (auto it = gen_cache_.find(key); it != gen_cache_.end()) return it->second;

    // m = m' x with x > g:  m' x g = (m' g) x + m' [x, g]
    const GenIndex x = m.word().back();
    const PBWMonomial prefix(std::vector<GenIndex>(m.word().begin(), m.word().end() - 1));

    UEAElement::Terms result;
    const auto& left = times_generator(prefix, g);
    for (const auto& [t, c] : left) {
      for (const auto& [t2, c2] : times_generator(t, x)) add_into(result, t2, c * c2);
    }
    for (const auto& [h, c] : table_.bracket(x, g)) {
      for (const auto& [t2, c2] : times_generator(prefix, h)) add_into(result, t2, Rational(c) * c2);
    }
    return gen_cache_.emplace(std::move(key), std::move(result)).first->second;
  }

  const UEAElement::Terms& product(const PBWMonomial& a, const PBWMonomial& b) {
    std::vector<GenIndex> key = a.word();
    key.push_back(kSeparator);
    key.insert(key.end(), b.word().begin(), b.word().end());
    if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;

    UEAElement::Terms acc;
    if (a.empty() || b.empty() || a.word().back() <= b.word().front()) {
      std::vector<GenIndex> w = a.word();
      w.insert(w.end(), b.word().begin(), b.word().end());
      acc.emplace(PBWMonomial(std::move(w)), Rational(1));
    } else {
      acc.emplace(a, Rational(1));
      for (GenIndex g : b.word()) {
        UEAElement::Terms next;
        for (const auto& [t, c] : acc) {
          for (const auto& [t2, c2] : times_generator(t, g)) add_into(next, t2, c * c2);
        }
        acc = std::move(next);
      }
    }
    return product_cache_.emplace(std::move(key), std::move(acc)).first->second;
  }

 private:
  const GeneratorTable& table_;
  std::vector<GenIndex> key_;
  std::unordered_map<std::vector<GenIndex>, UEAElement::Terms, WordHash> append_cache_;
  std::unordered_map<std::vector<GenIndex>, UEAElement::Terms, WordHash> gen_cache_;
  std::unordered_map<std::vector<GenIndex>, UEAElement::Terms, WordHash> product_cache_;
};

Straightener& straightener(int n) {
  thread_local std::unordered_map<int, std::unique_ptr<Straightener>> engines;
  auto& slot = engines[n];
  if (!slot) slot = std::make_unique<Straightener>(n);
  return *slot;
}

}  // namespace

namespace detail {

const UEAElement::Terms& monomial_product(int n, const PBWMonomial& a, const PBWMonomial& b) {
  return straightener(n).product(a, b);
}

}  // namespace detail

UEAElement::UEAElement(int n, Terms terms) : n_(n), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

UEAElement UEAElement::scalar(int n, const Rational& c) {
  UEAElement out(n);
  out.add_term(PBWMonomial(), c);
  return out;
}

UEAElement UEAElement::generator(int n, const MixedGenerator& g) {
  UEAElement out(n);
  out.add_term(PBWMonomial({generator_table(n).index_of(g)}), Rational(1));
  return out;
}

UEAElement UEAElement::raw(int n, int i, int j) {
  UEAElement out(n);
  for (const auto& [g, c] : generator_table(n).raw(i, j)) out.add_term(PBWMonomial({g}), Rational(c));
  return out;
}

UEAElement UEAElement::from_word(int n, std::span<const GenIndex> word) {
  UEAElement acc = scalar(n, Rational(1));
  for (GenIndex g : word) acc = acc * UEAElement(n, Terms{{PBWMonomial({g}), Rational(1)}});
  return acc;
}

int UEAElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

Rational UEAElement::coefficient(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UEAElement::add_term(const PBWMonomial& m, const Rational& c) {
  if (c == 0) return;
  add_into(terms_, m, c);
}

void UEAElement::require_same_rank(const UEAElement& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("rank mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
}

UEAElement& UEAElement::operator+=(const UEAElement& other) {
  require_same_rank(other);
  for (const auto& [m, c] : other.terms_) add_into(terms_, m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& other) {
  require_same_rank(other);
  for (const auto& [m, c] : other.terms_) add_into(terms_, m, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) { return nc_mul(a, b); }

std::string to_string(const UEAElement& a) {
  if (a.is_zero()) return "0";
  const auto& table = generator_table(a.rank());
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    const Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (const auto& [g, e] : m.factors()) {
      if (!mono.empty()) mono += "*";
      mono += to_string(table.generator(g));
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

UEAElement nc_mul(const UEAElement& a, const UEAElement& b) {
  a.require_same_rank(b);
  UEAElement out(a.rank());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const Rational c = ca * cb;
      for (const auto& [m, v] : detail::monomial_product(a.rank(), ma, mb)) out.add_term(m, c * v);
    }
  }
  return out;
}

UEAElement commutator(const UEAElement& a, const UEAElement& b) { return nc_mul(a, b) - nc_mul(b, a); }

UEAElement adjoint_action(const MixedGenerator& x, const UEAElement& a) {
  return commutator(UEAElement::generator(a.rank(), x), a);
}

}  // namespace gtoda
