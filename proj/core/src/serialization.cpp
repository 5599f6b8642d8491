#include "gtoda/serialization.hpp"

#include <cstdio>
#include <stdexcept>

namespace gtoda {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed document: " + what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return obj.at(key);
}

int int_field(const json& v, const std::string& what) {
  if (!v.is_number_integer()) malformed(what + " must be an integer");
  return v.get<int>();
}

unsigned power_field(const json& spectral, const char* key) {
  if (!spectral.contains(key)) return 0;
  const int v = int_field(spectral.at(key), key);
  if (v < 0) malformed(std::string(key) + " exponent is negative");
  return static_cast<unsigned>(v);
}

Rational coefficient_field(const json& term) {
  const json& c = field(term, "coefficient");
  if (!c.is_string()) malformed("coefficient must be a \"p/q\" string");
  return rational_from_string(c.get<std::string>());
}

json term_json(const Rational& c, json generators, json spectral) {
  return {{"coefficient", to_string(c)}, {"generators", std::move(generators)}, {"spectral", std::move(spectral)}};
}

json generators_json(int n, const PBWMonomial& m) {
  const auto& table = generator_table(n);
  json out = json::array();
  for (const auto& [g, e] : m.factors()) {
    const auto& x = table.generator(g);
    out.push_back({x.kind == MixedGenerator::Kind::F ? "F" : "E", x.i, x.j, e});
  }
  return out;
}

PBWMonomial monomial_from_json(int n, const json& gens) {
  if (!gens.is_array()) malformed("generators must be an array");
  const auto& table = generator_table(n);
  std::vector<GenIndex> word;
  for (const auto& f : gens) {
    if (!f.is_array() || f.size() != 4 || !f[0].is_string()) malformed("generator factor must be [kind, i, j, exp]");
    const std::string kind = f[0].get<std::string>();
    const int i = int_field(f[1], "i"), j = int_field(f[2], "j"), e = int_field(f[3], "exponent");
    if (i < 1 || j < 1 || i > n || j > n || e < 1) malformed("generator index or exponent out of range");
    MixedGenerator g;
    if (kind == "F" && i < j)
      g = MixedGenerator::f(i, j);
    else if (kind == "E" && i >= j)
      g = MixedGenerator::e(i, j);
    else
      malformed("bad generator " + kind + "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    const GenIndex idx = table.index_of(g);
    if (!word.empty() && word.back() >= idx) malformed("generators not in normal order");
    word.insert(word.end(), static_cast<std::size_t>(e), idx);
  }
  return PBWMonomial(std::move(word));
}

template <class Elem>
json entries_json(const std::map<FamilyIndex, Elem>& entries) {
  json out = json::object();
  for (const auto& [idx, e] : entries) out[std::to_string(idx.first) + "," + std::to_string(idx.second)] = to_json(e);
  return out;
}

FamilyIndex parse_index(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) malformed("entry key \"" + key + "\" is not \"k,i\"");
  try {
    return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
  } catch (const std::exception&) {
    malformed("entry key \"" + key + "\" is not \"k,i\"");
  }
}

int parse_level(const std::string& key) {
  try {
    std::size_t used = 0;
    const int k = std::stoi(key, &used);
    if (used == key.size()) return k;
  } catch (const std::exception&) {
  }
  malformed("level key \"" + key + "\" is not an integer");
}

template <class Family, class Parse>
Family family_from_json(const json& doc, Mode mode, Parse parse) {
  Family f;
  f.n = int_field(field(doc, "n"), "n");
  if (f.n < 1) malformed("n must be positive");
  const std::string m = field(doc, "mode").get<std::string>();
  if (m != to_string(mode)) malformed("expected mode " + to_string(mode) + ", got " + m);
  f.mode = mode;
  for (const auto& [key, e] : field(doc, "leading_eps").items())
    f.leading_eps[parse_level(key)] = static_cast<unsigned>(int_field(e, "leading_eps"));
  for (const auto& [key, terms] : field(doc, "entries").items()) f.entries.emplace(parse_index(key), parse(f.n, terms));
  return f;
}

template <class Family>
json family_json(const Family& f) {
  json lead = json::object();
  for (const auto& [k, e] : f.leading_eps) lead[std::to_string(k)] = e;
  return {{"n", f.n}, {"mode", to_string(f.mode)}, {"leading_eps", lead}, {"entries", entries_json(f.entries)}};
}

template <class R>
json matrix_json(const OperatorMatrix<R>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

json to_json(const UEAElement& a) {
  json out = json::array();
  for (const auto& [m, c] : a.terms())
    out.push_back(term_json(c, generators_json(a.rank(), m), {{"u", 0}, {"D", 0}, {"eps", 0}}));
  return out;
}

json to_json(const QuantumPoly& p) {
  json out = json::array();
  for (const auto& [key, c] : p.terms()) {
    out.push_back(term_json(c, generators_json(p.rank(), key.gens),
                            {{"u", key.u_power}, {"D", key.d_power}, {"eps", key.eps_power}}));
  }
  return out;
}

json to_json(const CommPoly& p) {
  const int n = p.rank();
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json gens = json::array();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (const auto x = e[CommPoly::var_x(n, i, j)]; x > 0) gens.push_back({"x", i, j, x});
    out.push_back(term_json(c, std::move(gens),
                            {{"u", e[CommPoly::var_u(n)]},
                             {"lambda", e[CommPoly::var_lambda(n)]},
                             {"eps", e[CommPoly::var_eps(n)]}}));
  }
  return out;
}

UEAElement uea_from_json(int n, const json& terms) {
  if (!terms.is_array()) malformed("term list must be an array");
  UEAElement out(n);
  for (const auto& t : terms) {
    if (t.contains("spectral")) {
      const json& s = t.at("spectral");
      if (power_field(s, "u") || power_field(s, "D") || power_field(s, "eps"))
        malformed("spectral exponents in a U(gl_n) element");
    }
    out.add_term(monomial_from_json(n, field(t, "generators")), coefficient_field(t));
  }
  return out;
}

QuantumPoly quantum_poly_from_json(int n, const json& terms) {
  if (!terms.is_array()) malformed("term list must be an array");
  QuantumPoly out(n);
  for (const auto& t : terms) {
    const json& s = field(t, "spectral");
    QuantumKey key{monomial_from_json(n, field(t, "generators")), power_field(s, "u"), power_field(s, "D"),
                   power_field(s, "eps")};
    out.add_term(key, coefficient_field(t));
  }
  return out;
}

CommPoly comm_poly_from_json(int n, const json& terms) {
  if (!terms.is_array()) malformed("term list must be an array");
  CommPoly out(n);
  for (const auto& t : terms) {
    CommPoly::Exponents e(static_cast<std::size_t>(CommPoly::num_vars(n)), 0);
    for (const auto& f : field(t, "generators")) {
      if (!f.is_array() || f.size() != 4 || f[0] != "x") malformed("coordinate factor must be [\"x\", i, j, exp]");
      const int i = int_field(f[1], "i"), j = int_field(f[2], "j"), x = int_field(f[3], "exponent");
      if (i < 1 || j < 1 || i > n || j > n || x < 1) malformed("coordinate index or exponent out of range");
      e[CommPoly::var_x(n, i, j)] += static_cast<std::uint16_t>(x);
    }
    const json& s = field(t, "spectral");
    e[CommPoly::var_u(n)] = static_cast<std::uint16_t>(power_field(s, "u"));
    e[CommPoly::var_lambda(n)] = static_cast<std::uint16_t>(power_field(s, "lambda"));
    e[CommPoly::var_eps(n)] = static_cast<std::uint16_t>(power_field(s, "eps"));
    out.add_term(e, coefficient_field(t));
  }
  return out;
}

json to_json(const OperatorMatrix<CommPoly>& m) { return matrix_json(m); }
json to_json(const OperatorMatrix<QuantumPoly>& m) { return matrix_json(m); }

json to_json(const ClassicalFamily& f) { return family_json(f); }
json to_json(const QuantumFamily& f) { return family_json(f); }

ClassicalFamily classical_family_from_json(const json& doc) {
  return family_from_json<ClassicalFamily>(doc, Mode::Classical, comm_poly_from_json);
}

QuantumFamily quantum_family_from_json(const json& doc) {
  return family_from_json<QuantumFamily>(doc, Mode::Quantum, uea_from_json);
}

json to_json(const Character& chi) {
  json out = json::object();
  for (const auto& [x, v] : chi.values) out[to_string(x)] = to_string(v);
  return out;
}

Character character_from_json(int k, const json& doc) {
  Character chi;
  chi.k = k;
  for (const auto& [key, v] : doc.items()) {
    int i = 0, j = 0;
    char close = 0;
    if (std::sscanf(key.c_str(), "E(%d,%d%c", &i, &j, &close) != 3 || close != ')' || i < j)
      malformed("character key \"" + key + "\" is not a Borel generator");
    if (!v.is_string()) malformed("character value must be a \"p/q\" string");
    chi.values.emplace(MixedGenerator::e(i, j), rational_from_string(v.get<std::string>()));
  }
  return chi;
}

json to_json(const ReducedFamily& r) {
  json dens = json::object(), chars = json::object();
  for (const auto& [k, c] : r.denominators) dens[std::to_string(k)] = to_json(c);
  for (const auto& [k, chi] : r.characters) chars[std::to_string(k)] = to_json(chi);
  return {{"n", r.n}, {"numerators", entries_json(r.numerators)}, {"denominators", dens}, {"characters", chars}};
}

ReducedFamily reduced_family_from_json(const json& doc) {
  ReducedFamily r;
  r.n = int_field(field(doc, "n"), "n");
  if (r.n < 1) malformed("n must be positive");
  for (const auto& [key, terms] : field(doc, "numerators").items())
    r.numerators.emplace(parse_index(key), uea_from_json(r.n, terms));
  for (const auto& [key, terms] : field(doc, "denominators").items())
    r.denominators.emplace(parse_level(key), uea_from_json(r.n, terms));
  for (const auto& [key, v] : field(doc, "characters").items()) {
    const int k = parse_level(key);
    r.characters.emplace(k, character_from_json(k, v));
  }
  return r;
}

}  // namespace gtoda
