#include "densitygeom/su_basis.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace densitygeom {

using cd = std::complex<double>;

BasisSet::BasisSet(int n_levels) : n_(n_levels) {
  if (n_levels < 2) {
    throw std::invalid_argument("basis needs n_levels >= 2, got " + std::to_string(n_levels));
  }
  const int n = n_levels;
  matrices_.reserve(static_cast<std::size_t>(n * n - 1));

  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      matrices_.push_back(std::move(m));
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(j, k) = cd(0.0, -1.0);
      m(k, j) = cd(0.0, 1.0);
      matrices_.push_back(std::move(m));
    }
  }
  for (int k = 1; k < n; ++k) {
    matrices_.push_back(diagonal_generator(k).cast<cd>().asDiagonal());
  }
}

std::size_t BasisSet::pair_offset(int j, int k) const {
  if (j < 0 || k >= n_ || j >= k) {
    throw std::out_of_range("pair index requires 0 <= j < k < N");
  }
  // pairs before row j: sum_{r<j} (N-1-r)
  const int before = j * (2 * n_ - j - 1) / 2;
  return static_cast<std::size_t>(before + (k - j - 1));
}

std::size_t BasisSet::symmetric_index(int j, int k) const { return pair_offset(j, k); }

std::size_t BasisSet::antisymmetric_index(int j, int k) const {
  return static_cast<std::size_t>(n_ * (n_ - 1) / 2) + pair_offset(j, k);
}

std::size_t BasisSet::diagonal_index(int k) const {
  if (k < 1 || k >= n_) throw std::out_of_range("diagonal generator index requires 1 <= k < N");
  return static_cast<std::size_t>(n_ * (n_ - 1) + k - 1);
}

Eigen::VectorXd BasisSet::diagonal_generator(int k) const {
  if (k < 1 || k >= n_) throw std::out_of_range("diagonal generator index requires 1 <= k < N");
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n_);
  const double norm = std::sqrt(2.0 / (k * (k + 1.0)));
  d.head(k).setConstant(norm);
  d(k) = -k * norm;
  return d;
}

BasisSet build_basis(int n_levels) { return BasisSet(n_levels); }

namespace {

// Tr[A B] without forming the product.
cd trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.array() * b.transpose().array()).sum();
}

}  // namespace

StructureConstants structure_constants(const BasisSet& basis) {
  if (basis.n_levels() > kMaxStructureConstantLevels) {
    throw std::invalid_argument("dense structure constants are limited to N <= " +
                                std::to_string(kMaxStructureConstantLevels));
  }
  const std::size_t dim = basis.size();
  std::vector<double> f(dim * dim * dim, 0.0);
  std::vector<double> d(dim * dim * dim, 0.0);
  double max_imag = 0.0;

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const ComplexMatrix ab = basis[i] * basis[j];
      const ComplexMatrix ba = basis[j] * basis[i];
      const ComplexMatrix comm = ab - ba;
      const ComplexMatrix anti = ab + ba;
      for (std::size_t k = 0; k < dim; ++k) {
        const cd fv = trace_product(comm, basis[k]) / cd(0.0, 4.0);
        const cd dv = trace_product(anti, basis[k]) / 4.0;
        max_imag = std::max({max_imag, std::abs(fv.imag()), std::abs(dv.imag())});
        f[(i * dim + j) * dim + k] = fv.real();
        d[(i * dim + j) * dim + k] = dv.real();
      }
    }
  }
  StructureConstants sc(dim, std::move(f), std::move(d));
  sc.set_max_imaginary(max_imag);
  return sc;
}

double orthonormality_defect(const BasisSet& basis) {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double target = i == j ? 2.0 : 0.0;
      worst = std::max(worst, std::abs(trace_product(basis[i], basis[j]) - target));
    }
  }
  return worst;
}

}  // namespace densitygeom
