#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "densitygeom/chamber.hpp"
#include "densitygeom/config.hpp"

namespace densitygeom {

/// Von Neumann entropy in nats.
struct EntropyValue {
  double nats = 0.0;

  double bits() const;
};

/// -sum mu ln mu with 0 ln 0 = 0; values below tol contribute nothing.
EntropyValue entropy(const Spectrum& s, double tol = kDefaultTolerances.positivity);

/// Entropy of raw probabilities; same conventions as entropy(Spectrum).
double entropy_nats(const std::vector<double>& probabilities,
                    double tol = kDefaultTolerances.positivity);

struct AngleCoords {
  double theta = 0.0;  ///< [0, pi]
  double phi = 0.0;    ///< [0, pi], ignored for N = 2
};

/// N = 2: (cos^2(theta/2), sin^2(theta/2)).
/// N = 3: (sin^2(theta/2) cos^2(phi/2), sin^2(theta/2) sin^2(phi/2), cos^2(theta/2)).
/// Throws std::invalid_argument for other N.
Spectrum angles_to_spectrum(int n_levels, const AngleCoords& angles);

/// Closed-form qubit entropy eta(theta).
EntropyValue entropy_from_angles(const AngleCoords& angles);

/// Barycentric point (x, y, z) of the N = 3 chamber x >= y >= z >= 0.
using ChamberPoint = std::array<double, 3>;

struct SurfaceSample {
  ChamberPoint point;
  double eta = 0.0;
};

/// Chamber triangle grid: O + (i/r)(P - O) + (j/r)(Q - O) for i + j <= r,
/// i.e. (r+1)(r+2)/2 rows, ordered by i then j.
std::vector<ChamberPoint> chamber_grid(int resolution);

/// Throws std::invalid_argument when resolution < 2.
std::vector<SurfaceSample> entropy_surface(int resolution);

struct ContourSet {
  double level = 0.0;
  std::vector<std::vector<ChamberPoint>> polylines;
  /// "O" or "P" when the level collapses to a single point, otherwise empty.
  std::optional<std::string> degenerate_point;
  /// max |eta - level| of the linearly interpolated crossings before the
  /// bisection pass; shrinks as the grid is refined.
  double max_interpolation_error = 0.0;

  std::size_t point_count() const;
  /// max |eta(p) - level| over all emitted points (0 for an empty set).
  double max_level_error() const;
};

/// Marching triangles over chamber_grid(resolution) with each crossing
/// refined by bisection along its grid edge. Levels outside (0, ln 3) give
/// an empty set. Throws std::invalid_argument when resolution < 2.
ContourSet isentropic_contours(double level, int resolution,
                               const Tolerances& tol = kDefaultTolerances);

struct ProfileSample {
  double t = 0.0;
  double eta = 0.0;
};

/// eta along (1-t) s1 + t s2 at `samples` evenly spaced t in [0, 1].
std::vector<ProfileSample> line_entropy_profile(const Spectrum& s1, const Spectrum& s2,
                                                int samples);

}  // namespace densitygeom
