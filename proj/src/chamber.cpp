#include "densitygeom/chamber.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "densitygeom/errors.hpp"

namespace densitygeom {

Spectrum::Spectrum(std::vector<double> values, double tol) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("spectrum must be non-empty");
  double sum = 0.0;
  for (double v : values_) {
    if (!std::isfinite(v) || v < -tol || v > 1.0 + tol) {
      std::ostringstream msg;
      msg << "spectrum value " << v << " outside [0, 1]";
      throw std::invalid_argument(msg.str());
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol) {
    std::ostringstream msg;
    msg << "spectrum sums to " << sum << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
}

std::string StratumInfo::kind_name() const {
  switch (kind) {
    case Kind::FixedPoint: return "fixed-point";
    case Kind::Pure: return "pure";
    case Kind::Critical: return "critical";
    case Kind::Generic: return "generic";
  }
  return "unknown";
}

std::string StratumInfo::partition_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(partition[i]);
  }
  return out + "]";
}

std::string StratumInfo::label() const { return kind_name() + " " + partition_string(); }

std::string StratumInfo::homogeneous_space() const {
  const int n = std::accumulate(partition.begin(), partition.end(), 0);
  const std::string group = "U(" + std::to_string(n) + ")";
  // block size -> multiplicity, largest block first
  std::map<int, int, std::greater<>> counts;
  for (int k : partition) ++counts[k];
  std::vector<std::string> factors;
  for (const auto& [k, mult] : counts) {
    std::string f = "U(" + std::to_string(k) + ")";
    if (mult > 1) f += "^" + std::to_string(mult);
    factors.push_back(f);
  }
  if (factors.size() == 1) return group + "/" + factors.front();
  std::string joined;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) joined += "x";
    joined += factors[i];
  }
  return group + "/[" + joined + "]";
}

Spectrum spectrum_of(const DensityMatrix& rho, double tol) {
  const Eigen::VectorXd ev = rho.eigenvalues();
  std::vector<double> values(ev.data(), ev.data() + ev.size());
  double sum = 0.0;
  for (double& v : values) {
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  for (double& v : values) v /= sum;
  std::sort(values.begin(), values.end(), std::greater<>());
  return Spectrum(std::move(values), tol);
}

namespace {

// Diagonal of the k-th diagonal generator, normalized to Tr[g^2] = 2.
double diagonal_entry(int k, int i) {
  const double norm = std::sqrt(2.0 / (k * (k + 1.0)));
  if (i < k) return norm;
  if (i == k) return -k * norm;
  return 0.0;
}

}  // namespace

SimplexCoords to_simplex_coords(const Spectrum& s) {
  const int n = s.n_levels();
  SimplexCoords out{n, std::vector<double>(static_cast<std::size_t>(std::max(n - 1, 0)), 0.0)};
  if (n < 2) return out;
  const double denom = std::sqrt(2.0 * (n - 1.0) / n);
  for (int k = 1; k < n; ++k) {
    double acc = 0.0;
    for (int i = 0; i <= k; ++i) acc += s[static_cast<std::size_t>(i)] * diagonal_entry(k, i);
    out.coords[static_cast<std::size_t>(k - 1)] = acc / denom;
  }
  return out;
}

Spectrum from_simplex_coords(const SimplexCoords& c, double tol) {
  const int n = c.n_levels;
  if (n < 1 || c.coords.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("simplex coordinates need exactly N-1 entries");
  }
  const double scale = std::sqrt(n * (n - 1.0) / 2.0);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = std::max(i, 1); k < n; ++k) {
      acc += c.coords[static_cast<std::size_t>(k - 1)] * diagonal_entry(k, i);
    }
    values[static_cast<std::size_t>(i)] = (1.0 + scale * acc) / n;
  }
  for (double v : values) {
    if (v < -tol || v > 1.0 + tol) {
      std::ostringstream msg;
      msg << "simplex coordinates decode to eigenvalue " << v << " outside [0, 1]";
      throw OutOfSimplex(msg.str());
    }
  }
  return Spectrum(std::move(values), tol);
}

Spectrum chamber_representative(const Spectrum& s) {
  std::vector<double> values = s.values();
  std::sort(values.begin(), values.end(), std::greater<>());
  // Already validated; skip the checks by using an infinite tolerance.
  return Spectrum(std::move(values), std::numeric_limits<double>::infinity());
}

StratumInfo stratum_for_partition(std::vector<int> partition) {
  if (partition.empty()) throw std::invalid_argument("partition must be non-empty");
  std::sort(partition.begin(), partition.end(), std::greater<>());
  StratumInfo info;
  int n = 0;
  int squares = 0;
  for (int k : partition) {
    if (k < 1) throw std::invalid_argument("partition parts must be positive");
    n += k;
    squares += k * k;
    info.little_group.push_back("U(" + std::to_string(k) + ")");
  }
  info.orbit_dim = n * n - squares;
  if (partition.size() == 1) {
    info.kind = StratumInfo::Kind::FixedPoint;
  } else if (static_cast<int>(partition.size()) == n) {
    info.kind = StratumInfo::Kind::Generic;
  } else {
    info.kind = StratumInfo::Kind::Critical;
  }
  info.partition = std::move(partition);
  return info;
}

StratumInfo classify(const Spectrum& s, double degeneracy_tol) {
  std::vector<double> sorted = s.values();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<int> blocks{1};
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1] - sorted[i] <= degeneracy_tol) {
      ++blocks.back();
    } else {
      blocks.push_back(1);
    }
  }

  StratumInfo info = stratum_for_partition(std::move(blocks));
  if (info.kind != StratumInfo::Kind::FixedPoint && sorted.front() >= 1.0 - degeneracy_tol) {
    info.kind = StratumInfo::Kind::Pure;
  }
  return info;
}

std::string q_point_name(int k, int n_levels) {
  if (k == 2) return "Q_A";
  if (k == 3) return "Q_F";
  if (k == n_levels - 1) return "Q_cell";
  return "Q_" + std::to_string(k);
}

std::vector<std::pair<std::string, Spectrum>> special_points(int n_levels) {
  if (n_levels < 2) throw std::invalid_argument("special points need n_levels >= 2");
  const auto n = static_cast<std::size_t>(n_levels);
  std::vector<std::pair<std::string, Spectrum>> out;
  out.emplace_back("O", Spectrum(std::vector<double>(n, 1.0 / n_levels)));
  for (int k = n_levels - 1; k >= 2; --k) {
    std::vector<double> v(n, 0.0);
    std::fill_n(v.begin(), k, 1.0 / k);
    out.emplace_back(q_point_name(k, n_levels), Spectrum(std::move(v)));
  }
  std::vector<double> p(n, 0.0);
  p[0] = 1.0;
  out.emplace_back("P", Spectrum(std::move(p)));
  return out;
}

double coherence_distance(const Spectrum& s1, const Spectrum& s2, const BasisSet& basis) {
  if (s1.n_levels() != s2.n_levels() || s1.n_levels() != basis.n_levels()) {
    throw std::invalid_argument("coherence_distance needs spectra and basis of the same N");
  }
  auto diag = [](const Spectrum& s) {
    return Eigen::Map<const Eigen::VectorXd>(s.values().data(),
                                             static_cast<Eigen::Index>(s.values().size()));
  };
  const CoherenceVector a = encode(DensityMatrix::diagonal(diag(s1)), basis);
  const CoherenceVector b = encode(DensityMatrix::diagonal(diag(s2)), basis);
  return (a.components - b.components).norm();
}

long long count_strata(int n_levels) {
  if (n_levels < 0) throw std::invalid_argument("count_strata needs n_levels >= 0");
  // p(n) by adding parts of size 1, 2, ..., n in turn.
  std::vector<long long> p(static_cast<std::size_t>(n_levels) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n_levels; ++part) {
    for (int total = part; total <= n_levels; ++total) {
      p[static_cast<std::size_t>(total)] += p[static_cast<std::size_t>(total - part)];
    }
  }
  return p[static_cast<std::size_t>(n_levels)];
}

namespace {

void extend_partitions(int remaining, int max_part, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
  if (n < 1) throw std::invalid_argument("integer_partitions needs n >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  extend_partitions(n, n, prefix, out);
  return out;
}

}  // namespace densitygeom
