#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace densitygeom {

using ComplexMatrix = Eigen::MatrixXcd;

/// Orthonormal generalized Gell-Mann basis of traceless Hermitian N x N
/// matrices, normalized so that Tr[l_i l_j] = 2 delta_ij.
///
/// Ordering (zero-based):
///   [0, P)        symmetric pairs  E_jk + E_kj, row-major over j < k
///   [P, 2P)       antisymmetric    -i E_jk + i E_kj, same pair order
///   [2P, N^2-1)   diagonal, the k-th proportional to diag(1,..,1,-k,0,..,0)
/// with P = N(N-1)/2. For N = 2 this is (sigma_x, sigma_y, sigma_z).
class BasisSet {
 public:
  /// Throws std::invalid_argument when n_levels < 2.
  explicit BasisSet(int n_levels);

  int n_levels() const noexcept { return n_; }
  std::size_t size() const noexcept { return matrices_.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return matrices_[i]; }
  const std::vector<ComplexMatrix>& matrices() const noexcept { return matrices_; }

  /// Index of the symmetric generator on the pair (j, k), j < k.
  std::size_t symmetric_index(int j, int k) const;
  /// Index of the antisymmetric generator on the pair (j, k), j < k.
  std::size_t antisymmetric_index(int j, int k) const;
  /// Index of the k-th diagonal generator, 1 <= k <= N-1.
  std::size_t diagonal_index(int k) const;

  /// Diagonal of the k-th diagonal generator as a real vector.
  Eigen::VectorXd diagonal_generator(int k) const;

 private:
  std::size_t pair_offset(int j, int k) const;

  int n_;
  std::vector<ComplexMatrix> matrices_;
};

BasisSet build_basis(int n_levels);

/// Largest N for which dense structure constants are built; the tensors hold
/// (N^2-1)^3 doubles each (~250k at N = 8).
inline constexpr int kMaxStructureConstantLevels = 8;

/// f_ijk = Tr([l_i, l_j] l_k) / 4i and d_ijk = Tr({l_i, l_j} l_k) / 4,
/// dense and zero-based.
class StructureConstants {
 public:
  StructureConstants(std::size_t dim, std::vector<double> f, std::vector<double> d)
      : dim_(dim), f_(std::move(f)), d_(std::move(d)) {}

  std::size_t dim() const noexcept { return dim_; }
  double f(std::size_t i, std::size_t j, std::size_t k) const { return f_[index(i, j, k)]; }
  double d(std::size_t i, std::size_t j, std::size_t k) const { return d_[index(i, j, k)]; }

  /// Largest imaginary part seen while evaluating the traces.
  double max_imaginary() const noexcept { return max_imag_; }
  void set_max_imaginary(double v) noexcept { max_imag_ = v; }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dim_ + j) * dim_ + k;
  }

  std::size_t dim_;
  std::vector<double> f_;
  std::vector<double> d_;
  double max_imag_ = 0.0;
};

/// Throws std::invalid_argument when basis.n_levels() exceeds
/// kMaxStructureConstantLevels.
StructureConstants structure_constants(const BasisSet& basis);

/// max_ij |Tr[l_i l_j] - 2 delta_ij|.
double orthonormality_defect(const BasisSet& basis);

}  // namespace densitygeom
