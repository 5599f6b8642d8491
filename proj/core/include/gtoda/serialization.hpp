#pragma once

#include <nlohmann/json.hpp>

#include "gtoda/aks.hpp"
#include "gtoda/comm_poly.hpp"
#include "gtoda/matrix.hpp"
#include "gtoda/quantum_poly.hpp"
#include "gtoda/spectral.hpp"
#include "gtoda/uea.hpp"

namespace gtoda {

using nlohmann::json;

/// Term lists. Every term is
///   {"coefficient": "p/q",
///    "generators": [[kind, i, j, exponent], ...],
///    "spectral": {"u": a, "D": b, "eps": c}}
/// with kind "F" or "E" for U(gl_n) and "x" for coordinates; classical terms
/// use "lambda" in place of "D".
json to_json(const UEAElement& a);
json to_json(const QuantumPoly& p);
json to_json(const CommPoly& p);

/// Inverse maps; throw std::invalid_argument on malformed input.
UEAElement uea_from_json(int n, const json& terms);
QuantumPoly quantum_poly_from_json(int n, const json& terms);
CommPoly comm_poly_from_json(int n, const json& terms);

json to_json(const OperatorMatrix<CommPoly>& m);
json to_json(const OperatorMatrix<QuantumPoly>& m);

/// {"n", "mode", "leading_eps": {"k": e}, "entries": {"k,i": terms}}
json to_json(const ClassicalFamily& f);
json to_json(const QuantumFamily& f);
ClassicalFamily classical_family_from_json(const json& doc);
QuantumFamily quantum_family_from_json(const json& doc);

json to_json(const Character& chi);
Character character_from_json(int k, const json& doc);

/// {"n", "numerators": {"k,i": terms}, "denominators": {"k": terms},
///  "characters": {"k": {"E(i,j)": "p/q"}}}
json to_json(const ReducedFamily& r);
ReducedFamily reduced_family_from_json(const json& doc);

}  // namespace gtoda
