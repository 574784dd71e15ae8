#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "densitygeom/config.hpp"
#include "densitygeom/su_basis.hpp"

namespace densitygeom {

/// Hermitian, unit-trace, positive semidefinite N x N matrix.
///
/// Construction validates all three conditions against the positivity
/// tolerance and stores the Hermitized matrix (M + M^dagger) / 2.
class DensityMatrix {
 public:
  /// Throws InvalidState on failure; the exception carries the smallest
  /// eigenvalue of the Hermitized input.
  explicit DensityMatrix(const ComplexMatrix& entries, double tol = kDefaultTolerances.positivity);

  static DensityMatrix maximally_mixed(int n_levels);
  static DensityMatrix diagonal(const Eigen::VectorXd& probabilities,
                                double tol = kDefaultTolerances.positivity);
  /// |psi><psi| for a nonzero ket; the ket is normalized first.
  static DensityMatrix pure(const Eigen::VectorXcd& ket);

  int n_levels() const noexcept { return static_cast<int>(rho_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return rho_; }

  /// Eigenvalues of the stored matrix, ascending, as returned by the solver.
  Eigen::VectorXd eigenvalues() const;

 private:
  struct Trusted {};
  DensityMatrix(ComplexMatrix entries, Trusted) : rho_(std::move(entries)) {}

  ComplexMatrix rho_;
};

/// Real components n_i of rho = (1/N)(I + sqrt(N(N-1)/2) n . lambda).
struct CoherenceVector {
  int n_levels = 0;
  Eigen::VectorXd components;

  double norm() const { return components.norm(); }
};

/// sqrt(N(N-1)/2): the factor that puts pure states on the unit sphere.
double coherence_scale(int n_levels);

/// n_i = Tr[rho l_i] / sqrt(2(N-1)/N). Throws std::invalid_argument on a
/// dimension mismatch.
CoherenceVector encode(const DensityMatrix& rho, const BasisSet& basis);

/// Outcome of decode: the reconstructed matrix and whether it is a state.
struct DecodeResult {
  ComplexMatrix matrix;
  double min_eigenvalue = 0.0;
  bool in_state_body = false;

  /// The decoded DensityMatrix; throws InvalidState when in_state_body is false.
  DensityMatrix state() const;
};

/// rho = (1/N)(I + sqrt(N(N-1)/2) sum n_i l_i). Positivity violations are
/// reported in the result, never repaired.
DecodeResult decode(const CoherenceVector& n, const BasisSet& basis,
                    double tol = kDefaultTolerances.positivity);

/// ||rho^2 - rho||_max < tol.
bool is_pure(const DensityMatrix& rho, double tol = kDefaultTolerances.positivity);

/// U rho U^dagger. Throws std::invalid_argument when U is not unitary to tol
/// or has the wrong size.
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& unitary,
                        double tol = kDefaultTolerances.positivity);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal folded back into Q.
ComplexMatrix random_unitary(int n_levels, std::mt19937_64& rng);

/// Flat-Dirichlet spectrum conjugated by a Haar unitary. Deterministic in seed.
DensityMatrix random_density_matrix(int n_levels, std::uint64_t seed);

/// Outer product of a Haar-random unit ket.
DensityMatrix random_pure_state(int n_levels, std::uint64_t seed);

}  // namespace densitygeom
