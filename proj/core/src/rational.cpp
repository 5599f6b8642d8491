#include "gtoda/rational.hpp"

#include <stdexcept>

namespace gtoda {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  const std::string num_text(text.substr(0, slash));
  const std::string den_text =
      slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1));

  mpz_class num, den;
  if (num.set_str(num_text, 10) != 0 || den.set_str(den_text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace gtoda
