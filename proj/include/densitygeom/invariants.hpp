#pragma once

#include <vector>

#include "densitygeom/chamber.hpp"
#include "densitygeom/config.hpp"
#include "densitygeom/states.hpp"

namespace densitygeom {

/// Casimir invariants I_1..I_N: the elementary symmetric functions of the
/// spectrum, equivalently the characteristic polynomial coefficients.
struct CasimirSet {
  int n_levels = 0;
  std::vector<double> values;  ///< values[k-1] = I_k

  /// I_k for 0 <= k <= N, with I_0 = 1.
  double I(int k) const { return k == 0 ? 1.0 : values.at(static_cast<std::size_t>(k - 1)); }
};

CasimirSet casimirs_from_spectrum(const Spectrum& s);

/// Power traces Tr[rho^k] converted by Newton's identities.
CasimirSet casimirs_from_traces(const DensityMatrix& rho);

/// Elementary symmetric functions of arbitrary reals, e_0..e_n.
std::vector<double> elementary_symmetric(const std::vector<double>& x);

/// Newton's identities: power sums p_1..p_n -> e_0..e_n.
std::vector<double> newton_power_sums_to_elementary(const std::vector<double>& power_sums);

/// max-entry norm of rho^N - I_1 rho^{N-1} + I_2 rho^{N-2} - ... + (-1)^N I_N.
double characteristic_residual(const DensityMatrix& rho, const CasimirSet& c);

struct BoundaryStatus {
  bool is_boundary = false;  ///< at least one zero eigenvalue
  bool is_edge = false;      ///< at least two zero eigenvalues
};

BoundaryStatus boundary_vanishing(const Spectrum& s, double tol = kDefaultTolerances.positivity);

}  // namespace densitygeom
