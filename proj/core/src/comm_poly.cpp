#include "gtoda/comm_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gtoda {

namespace {

void add_into(CommPoly::Terms& acc, const CommPoly::Exponents& e, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

}  // namespace

CommPoly::CommPoly(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
}

CommPoly::CommPoly(int n, Terms terms) : CommPoly(n) {
  for (auto& [e, c] : terms) {
    if (e.size() != static_cast<std::size_t>(num_vars(n))) throw std::invalid_argument("exponent vector size");
    if (c != 0) terms_.emplace(e, c);
  }
}

CommPoly CommPoly::scalar(int n, const Rational& c) {
  CommPoly p(n);
  p.add_term(Exponents(num_vars(n), 0), c);
  return p;
}

CommPoly CommPoly::variable(int n, int var, unsigned power) {
  CommPoly p(n);
  Exponents e(num_vars(n), 0);
  e.at(var) = static_cast<std::uint16_t>(power);
  p.add_term(e, Rational(1));
  return p;
}

bool CommPoly::involves(int var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& kv) { return kv.first[var] != 0; });
}

unsigned CommPoly::degree_in(int var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[var]);
  return d;
}

unsigned CommPoly::min_degree_in(int var) const {
  if (terms_.empty()) return 0;
  unsigned d = ~0u;
  for (const auto& [e, c] : terms_) d = std::min<unsigned>(d, e[var]);
  return d;
}

void CommPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  add_into(terms_, e, c);
}

void CommPoly::require_same_rank(const CommPoly& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("rank mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
}

CommPoly& CommPoly::operator+=(const CommPoly& other) {
  require_same_rank(other);
  for (const auto& [e, c] : other.terms_) add_into(terms_, e, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& other) {
  require_same_rank(other);
  for (const auto& [e, c] : other.terms_) add_into(terms_, e, -c);
  return *this;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  a.require_same_rank(b);
  CommPoly out(a.rank());
  CommPoly::Exponents e(CommPoly::num_vars(a.rank()));
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

CommPoly CommPoly::derivative(int var) const {
  CommPoly out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

CommPoly CommPoly::coefficient(int var, unsigned power) const {
  CommPoly out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    Exponents d = e;
    d[var] = 0;
    out.add_term(d, c);
  }
  return out;
}

CommPoly CommPoly::substitute(int var, const Rational& value) const {
  CommPoly out(n_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    d[var] = 0;
    Rational scale = 1;
    for (unsigned k = 0; k < e[var]; ++k) scale *= value;
    out.add_term(d, c * scale);
  }
  return out;
}

CommPoly CommPoly::rename_variables(const std::function<int(int)>& target) const {
  CommPoly out(n_);
  for (const auto& [e, c] : terms_) {
    Exponents d(e.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] != 0) d.at(target(static_cast<int>(v))) += e[v];
    }
    out.add_term(d, c);
  }
  return out;
}

double CommPoly::evaluate(std::span<const double> values) const {
  if (values.size() != static_cast<std::size_t>(num_vars(n_))) throw std::invalid_argument("evaluation point size");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) t *= std::pow(values[v], e[v]);
    sum += t;
  }
  return sum;
}

std::string to_string(const CommPoly& p) {
  if (p.is_zero()) return "0";
  const int n = p.rank();
  auto var_name = [n](int v) -> std::string {
    if (v == CommPoly::var_lambda(n)) return "lambda";
    if (v == CommPoly::var_eps(n)) return "eps";
    if (v == CommPoly::var_u(n)) return "u";
    return "x" + std::to_string(v / n + 1) + std::to_string(v % n + 1);
  };
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<int>(v));
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
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

CommPoly poisson_bracket(const CommPoly& f, const CommPoly& g) {
  f.require_same_rank(g);
  const int n = f.rank();
  std::vector<CommPoly> df, dg;
  df.reserve(n * n);
  dg.reserve(n * n);
  for (int v = 0; v < n * n; ++v) {
    df.push_back(f.derivative(v));
    dg.push_back(g.derivative(v));
  }
  CommPoly out(n);
  // sum_{a,b,c,d} df_ab dg_cd (delta_bc x_ad - delta_da x_cb)
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      const CommPoly& fa = df[CommPoly::var_x(n, a, b)];
      if (fa.is_zero()) continue;
      for (int d = 1; d <= n; ++d) {
        const CommPoly& gb = dg[CommPoly::var_x(n, b, d)];
        if (!gb.is_zero()) out += fa * gb * CommPoly::x(n, a, d);
      }
      for (int c = 1; c <= n; ++c) {
        const CommPoly& gc = dg[CommPoly::var_x(n, c, a)];
        if (!gc.is_zero()) out -= fa * gc * CommPoly::x(n, c, b);
      }
    }
  }
  return out;
}

CommPoly linear_form(int n, const MixedGenerator& g) {
  if (g.kind == MixedGenerator::Kind::F) return CommPoly::x(n, g.i, g.j) - CommPoly::x(n, g.j, g.i);
  return CommPoly::x(n, g.i, g.j);
}

CommPoly adjoint_action(const MixedGenerator& x, const CommPoly& f) {
  return poisson_bracket(linear_form(f.rank(), x), f);
}

}  // namespace gtoda
