#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "darkstate/hilbert.hpp"

namespace darkstate {

/// State file schema:
///   {"d": int, "n": int,
///    "terms": [{"labels": ["1/2","-1",...], "re": float, "im": float}, ...]}
/// Labels are exact rational strings so half-integers never pass through
/// floats. Only nonzero amplitudes are emitted.
nlohmann::json state_to_json(const StateVector& psi, double drop_below = 1e-14);
StateVector state_from_json(const nlohmann::json& j, bool normalize = false);

/// Density files carry the full matrix:
///   {"d": int, "n": int, "matrix": [[{"re":..,"im":..}, ...], ...]}
nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

/// "3/2" -> 3, "-1" -> -2 (doubled-label encoding). Throws on anything that
/// is not an integer or half-integer rational string.
int parse_twice_label(const std::string& s);
std::string format_twice_label(int twice);

}  // namespace darkstate
