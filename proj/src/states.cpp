#include "densitygeom/states.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "densitygeom/errors.hpp"

namespace densitygeom {

using cd = std::complex<double>;

namespace {

ComplexMatrix hermitized(const ComplexMatrix& m) { return (m + m.adjoint()) / 2.0; }

double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& entries, double tol) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    throw std::invalid_argument("density matrix must be square and non-empty");
  }
  const double skew = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  ComplexMatrix h = hermitized(entries);
  const double lowest = min_eigenvalue(h);
  if (skew > tol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (max |M - M^dagger| = " << skew << ")";
    throw InvalidState(msg.str(), lowest);
  }
  const double trace = h.trace().real();
  if (std::abs(trace - 1.0) > tol) {
    std::ostringstream msg;
    msg << "trace is " << trace << ", expected 1";
    throw InvalidState(msg.str(), lowest);
  }
  if (lowest < -tol) {
    std::ostringstream msg;
    msg << "matrix is not positive semidefinite (min eigenvalue " << lowest << ")";
    throw InvalidState(msg.str(), lowest);
  }
  rho_ = std::move(h);
}

DensityMatrix DensityMatrix::maximally_mixed(int n_levels) {
  if (n_levels < 1) throw std::invalid_argument("n_levels must be positive");
  return DensityMatrix(ComplexMatrix::Identity(n_levels, n_levels) / static_cast<double>(n_levels),
                       Trusted{});
}

DensityMatrix DensityMatrix::diagonal(const Eigen::VectorXd& probabilities, double tol) {
  return DensityMatrix(ComplexMatrix(probabilities.cast<cd>().asDiagonal()), tol);
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& ket) {
  const double norm = ket.norm();
  if (norm == 0.0) throw std::invalid_argument("ket must be nonzero");
  const Eigen::VectorXcd psi = ket / norm;
  return DensityMatrix(hermitized(psi * psi.adjoint()), Trusted{});
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double coherence_scale(int n_levels) {
  return std::sqrt(n_levels * (n_levels - 1.0) / 2.0);
}

CoherenceVector encode(const DensityMatrix& rho, const BasisSet& basis) {
  const int n = rho.n_levels();
  if (basis.n_levels() != n) {
    throw std::invalid_argument("basis has N = " + std::to_string(basis.n_levels()) +
                                " but state has N = " + std::to_string(n));
  }
  const double denom = std::sqrt(2.0 * (n - 1.0) / n);
  CoherenceVector out{n, Eigen::VectorXd(static_cast<Eigen::Index>(basis.size()))};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const cd tr = (rho.matrix().array() * basis[i].transpose().array()).sum();
    out.components(static_cast<Eigen::Index>(i)) = tr.real() / denom;
  }
  return out;
}

DecodeResult decode(const CoherenceVector& n, const BasisSet& basis, double tol) {
  const int levels = basis.n_levels();
  if (n.components.size() != static_cast<Eigen::Index>(basis.size())) {
    throw std::invalid_argument("coherence vector has " + std::to_string(n.components.size()) +
                                " components, basis expects " + std::to_string(basis.size()));
  }
  if (n.n_levels != 0 && n.n_levels != levels) {
    throw std::invalid_argument("coherence vector and basis disagree on N");
  }
  ComplexMatrix sum = ComplexMatrix::Zero(levels, levels);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    sum += n.components(static_cast<Eigen::Index>(i)) * basis[i];
  }
  DecodeResult out;
  out.matrix = (ComplexMatrix::Identity(levels, levels) + coherence_scale(levels) * sum) /
               static_cast<double>(levels);
  out.matrix = hermitized(out.matrix);
  out.min_eigenvalue = min_eigenvalue(out.matrix);
  out.in_state_body = out.min_eigenvalue >= -tol;
  return out;
}

DensityMatrix DecodeResult::state() const {
  if (!in_state_body) {
    std::ostringstream msg;
    msg << "coherence vector lies outside the state body (min eigenvalue " << min_eigenvalue
        << ")";
    throw InvalidState(msg.str(), min_eigenvalue);
  }
  return DensityMatrix(matrix);
}

bool is_pure(const DensityMatrix& rho, double tol) {
  const ComplexMatrix& m = rho.matrix();
  return (m * m - m).cwiseAbs().maxCoeff() < tol;
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& unitary, double tol) {
  const int n = rho.n_levels();
  if (unitary.rows() != n || unitary.cols() != n) {
    throw std::invalid_argument("unitary has the wrong size");
  }
  const double defect =
      (unitary * unitary.adjoint() - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > tol) {
    std::ostringstream msg;
    msg << "matrix is not unitary (max |U U^dagger - I| = " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  return DensityMatrix(hermitized(unitary * rho.matrix() * unitary.adjoint()), tol);
}

ComplexMatrix random_unitary(int n_levels, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(n_levels, n_levels);
  for (Eigen::Index j = 0; j < z.cols(); ++j) {
    for (Eigen::Index i = 0; i < z.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = cd(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n_levels, n_levels);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n_levels; ++k) {
    const double mag = std::abs(r(k, k));
    const cd phase = mag > 0.0 ? r(k, k) / mag : cd(1.0, 0.0);
    q.col(k) *= phase;
  }
  return q;
}

DensityMatrix random_density_matrix(int n_levels, std::uint64_t seed) {
  if (n_levels < 2) throw std::invalid_argument("n_levels must be >= 2");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd p(n_levels);
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = expo(rng);
  p /= p.sum();
  const ComplexMatrix u = random_unitary(n_levels, rng);
  const ComplexMatrix rho = u * p.cast<cd>().asDiagonal() * u.adjoint();
  return DensityMatrix(hermitized(rho));
}

DensityMatrix random_pure_state(int n_levels, std::uint64_t seed) {
  if (n_levels < 2) throw std::invalid_argument("n_levels must be >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd ket(n_levels);
  for (Eigen::Index i = 0; i < ket.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    ket(i) = cd(re, im);
  }
  return DensityMatrix::pure(ket);
}

}  // namespace densitygeom
