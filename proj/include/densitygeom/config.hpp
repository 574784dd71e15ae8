#pragma once

namespace densitygeom {

/// Numerical tolerances shared by every module.
struct Tolerances {
  /// Algebraic identities (orthonormality, round trips, symmetric functions).
  double algebraic = 1e-12;
  /// Smallest eigenvalue still accepted as zero; also the Hermiticity and
  /// unit-trace slack for density matrices.
  double positivity = 1e-9;
  /// Gap below which neighbouring eigenvalues are merged into one block.
  double degeneracy = 1e-8;
  /// Maximum |eta - level| for an emitted contour vertex.
  double contour = 1e-3;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace densitygeom
