#include "densitygeom/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace densitygeom {

std::vector<double> elementary_symmetric(const std::vector<double>& x) {
  // Coefficients of prod (1 + x_i t), built one factor at a time.
  std::vector<double> e(x.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += x[i] * e[k - 1];
  }
  return e;
}

std::vector<double> newton_power_sums_to_elementary(const std::vector<double>& power_sums) {
  const std::size_t n = power_sums.size();
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double acc = 0.0;
    double sign = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
      acc += sign * e[k - i] * power_sums[i - 1];
      sign = -sign;
    }
    e[k] = acc / static_cast<double>(k);
  }
  return e;
}

CasimirSet casimirs_from_spectrum(const Spectrum& s) {
  const std::vector<double> e = elementary_symmetric(s.values());
  return CasimirSet{s.n_levels(), std::vector<double>(e.begin() + 1, e.end())};
}

CasimirSet casimirs_from_traces(const DensityMatrix& rho) {
  const int n = rho.n_levels();
  std::vector<double> traces;
  traces.reserve(static_cast<std::size_t>(n));
  ComplexMatrix power = rho.matrix();
  for (int k = 1; k <= n; ++k) {
    traces.push_back(power.trace().real());
    if (k < n) power = power * rho.matrix();
  }
  const std::vector<double> e = newton_power_sums_to_elementary(traces);
  return CasimirSet{n, std::vector<double>(e.begin() + 1, e.end())};
}

double characteristic_residual(const DensityMatrix& rho, const CasimirSet& c) {
  const int n = rho.n_levels();
  if (c.n_levels != n || c.values.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("Casimir set does not match the state dimension");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix acc = id;
  double sign = -1.0;
  for (int k = 1; k <= n; ++k) {
    acc = acc * rho.matrix() + sign * c.I(k) * id;
    sign = -sign;
  }
  return acc.cwiseAbs().maxCoeff();
}

BoundaryStatus boundary_vanishing(const Spectrum& s, double tol) {
  const auto zeros = std::count_if(s.values().begin(), s.values().end(),
                                   [tol](double v) { return v <= tol; });
  return BoundaryStatus{zeros >= 1, zeros >= 2};
}

}  // namespace densitygeom
