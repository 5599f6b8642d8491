#include "gtoda/weyl.hpp"

namespace gtoda {

WeylElement::WeylElement(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

WeylElement WeylElement::scalar(const Rational& c) { return monomial(0, 0, c); }
WeylElement WeylElement::u(unsigned power) { return monomial(power, 0); }
WeylElement WeylElement::d(unsigned power) { return monomial(0, power); }

WeylElement WeylElement::monomial(unsigned u_power, unsigned d_power, const Rational& c) {
  WeylElement out;
  out.add_term({u_power, d_power}, c);
  return out;
}

Rational WeylElement::coefficient(unsigned u_power, unsigned d_power) const {
  auto it = terms_.find({u_power, d_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::vector<std::pair<unsigned, Rational>> reorder_d_past_u(unsigned d_power, unsigned u_power) {
  // Leibniz: d^b (z^-a f) = sum_j binom(b,j) (d^j z^-a) d^(b-j) f and
  // d^j z^-a = (-1)^j a (a+1) ... (a+j-1) z^-(a+j).
  std::vector<std::pair<unsigned, Rational>> out;
  mpz_class binom = 1;
  mpz_class rising = 1;
  for (unsigned j = 0; j <= d_power; ++j) {
    if (j > 0) {
      binom = binom * (d_power - j + 1) / j;
      rising *= (u_power + j - 1);
    }
    if (rising == 0) break;
    mpz_class c = binom * rising;
    if (j % 2 == 1) c = -c;
    out.emplace_back(j, Rational(c));
  }
  return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) { return weyl_mul(a, b); }

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  WeylElement out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const Rational c = ca * cb;
      for (const auto& [j, cj] : reorder_d_past_u(ka.second, kb.first)) {
        out.add_term({ka.first + kb.first + j, ka.second - j + kb.second}, c * cj);
      }
    }
  }
  return out;
}

}  // namespace gtoda
