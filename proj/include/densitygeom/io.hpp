#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "densitygeom/chamber.hpp"
#include "densitygeom/entropy.hpp"
#include "densitygeom/invariants.hpp"
#include "densitygeom/states.hpp"
#include "densitygeom/su_basis.hpp"

namespace densitygeom::io {

using nlohmann::json;

/// Rounds x to `digits` significant decimal digits.
double round_significant(double x, int digits);

/// Row-major array of [re, im] pairs.
json matrix_to_json(const ComplexMatrix& m, int digits = 12);
/// Accepts the row-major [re, im] array for an n x n matrix.
ComplexMatrix matrix_from_json(const json& entries, int n);

json basis_to_json(const BasisSet& basis, int digits = 12);

/// { "n": N, "entries": [[re, im], ...] }
json density_matrix_to_json(const DensityMatrix& rho, int digits = 12);
json density_matrix_to_json(const ComplexMatrix& rho, int digits = 12);

/// { "n": N, "components": [...] }
json coherence_to_json(const CoherenceVector& n, int digits = 12);
CoherenceVector coherence_from_json(const json& j);

/// { "partition": [...], "little_group": [...], "orbit_dim": d, "label": "..." }
json stratum_to_json(const StratumInfo& s);

/// { "n": N, "I": [1, I_2, ..., I_N] }
json casimirs_to_json(const CasimirSet& c, int digits = 12);

/// { "level": L, "polylines": [[[x, y, z], ...], ...] }
json contour_to_json(const ContourSet& c, int digits = 12);

json spectrum_to_json(const Spectrum& s, int digits = 12);

/// Header "x,y,z,eta".
std::string surface_to_csv(const std::vector<SurfaceSample>& rows, int digits = 6);
/// Header "polyline,x,y,z".
std::string contour_to_csv(const ContourSet& c, int digits = 6);

/// A parsed state input: either a full matrix or a bare list of eigenvalues.
struct StateInput {
  std::variant<ComplexMatrix, std::vector<double>> value;

  bool is_matrix() const { return std::holds_alternative<ComplexMatrix>(value); }
};

/// Object with "entries" (and optional "n") -> matrix; array of numbers ->
/// spectrum. Throws std::invalid_argument on any other shape.
StateInput parse_state(const json& j);

}  // namespace densitygeom::io
