#pragma once

#include <string>
#include <utility>
#include <vector>

#include "densitygeom/config.hpp"
#include "densitygeom/states.hpp"
#include "densitygeom/su_basis.hpp"

namespace densitygeom {

/// N eigenvalues on the probability simplex, in caller-chosen order.
/// The chamber representative is the descending order.
class Spectrum {
 public:
  /// Throws std::invalid_argument unless every value lies in [-tol, 1+tol]
  /// and the sum is within tol of 1.
  explicit Spectrum(std::vector<double> values, double tol = kDefaultTolerances.positivity);

  int n_levels() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  bool operator==(const Spectrum&) const = default;

 private:
  std::vector<double> values_;
};

/// Coordinates (a, b, ..., z) of the diagonal parametrization: the coherence
/// components in the N-1 diagonal generator slots.
struct SimplexCoords {
  int n_levels = 0;
  std::vector<double> coords;
};

/// Degeneracy structure of a spectrum and the orbit type it determines.
struct StratumInfo {
  enum class Kind { FixedPoint, Pure, Critical, Generic };

  std::vector<int> partition;             ///< block sizes, descending
  std::vector<std::string> little_group;  ///< "U(k)" per block
  int orbit_dim = 0;                      ///< N^2 - sum k_i^2
  Kind kind = Kind::Generic;

  std::string kind_name() const;
  /// e.g. "[2,1,1]".
  std::string partition_string() const;
  /// kind name followed by the partition, e.g. "pure [3,1]".
  std::string label() const;
  /// G/H form, e.g. "U(4)/[U(2)xU(1)^2]".
  std::string homogeneous_space() const;
};

/// Eigenvalues of rho, with values in [-tol, 0) clipped to zero and the result
/// renormalized to unit sum; sorted descending.
Spectrum spectrum_of(const DensityMatrix& rho, double tol = kDefaultTolerances.positivity);

SimplexCoords to_simplex_coords(const Spectrum& s);

/// Throws OutOfSimplex if any decoded value leaves [-tol, 1+tol].
Spectrum from_simplex_coords(const SimplexCoords& c, double tol = kDefaultTolerances.positivity);

Spectrum chamber_representative(const Spectrum& s);

/// Single-linkage clustering of the sorted spectrum: neighbours closer than
/// degeneracy_tol share a block.
StratumInfo classify(const Spectrum& s, double degeneracy_tol = kDefaultTolerances.degeneracy);

/// O, then Q_k = (1/k,...,1/k,0,...) for k = N-1 down to 2, then P.
std::vector<std::pair<std::string, Spectrum>> special_points(int n_levels);

/// Name used for the k-fold point Q_k in an N-level system.
std::string q_point_name(int k, int n_levels);

/// |n(diag s1) - n(diag s2)| with both spectra taken in the given order.
double coherence_distance(const Spectrum& s1, const Spectrum& s2, const BasisSet& basis);

/// Number of integer partitions p(N).
long long count_strata(int n_levels);

/// All partitions of n as descending part lists, in reverse lexicographic
/// order ([n] first, [1,...,1] last).
std::vector<std::vector<int>> integer_partitions(int n);

/// Stratum data implied by a degeneracy partition alone. [N] maps to the
/// fixed point, all-ones to generic, everything else to critical (a pure
/// state cannot be told apart from other [N-1,1] spectra without eigenvalues).
StratumInfo stratum_for_partition(std::vector<int> partition);

}  // namespace densitygeom
