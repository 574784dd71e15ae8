#pragma once

#include <stdexcept>
#include <string>

namespace densitygeom {

/// A matrix or vector that lies outside the state body (negative eigenvalue,
/// wrong trace, non-Hermitian).
class InvalidState : public std::runtime_error {
 public:
  InvalidState(const std::string& what, double min_eigenvalue)
      : std::runtime_error(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Simplex coordinates that decode to values outside [0, 1].
class OutOfSimplex : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace densitygeom
