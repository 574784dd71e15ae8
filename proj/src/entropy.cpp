#include "densitygeom/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace densitygeom {

namespace {

double neg_xlogx(double x) { return x > 0.0 && x < 1.0 ? -x * std::log(x) : 0.0; }

double chamber_entropy(const ChamberPoint& p, double tol) {
  return entropy_nats({p[0], p[1], p[2]}, tol);
}

}  // namespace

double EntropyValue::bits() const { return nats / std::numbers::ln2; }

double entropy_nats(const std::vector<double>& probabilities, double tol) {
  // Summing in sorted order makes the result exactly permutation invariant.
  std::vector<double> sorted = probabilities;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double eta = 0.0;
  for (double mu : sorted) {
    if (mu > tol) eta += neg_xlogx(mu);
  }
  return eta;
}

EntropyValue entropy(const Spectrum& s, double tol) { return {entropy_nats(s.values(), tol)}; }

Spectrum angles_to_spectrum(int n_levels, const AngleCoords& angles) {
  const double c2 = std::pow(std::cos(angles.theta / 2.0), 2);
  const double s2 = std::pow(std::sin(angles.theta / 2.0), 2);
  if (n_levels == 2) return Spectrum({c2, s2});
  if (n_levels == 3) {
    const double cp2 = std::pow(std::cos(angles.phi / 2.0), 2);
    const double sp2 = std::pow(std::sin(angles.phi / 2.0), 2);
    return Spectrum({s2 * cp2, s2 * sp2, c2});
  }
  throw std::invalid_argument("angle parametrization exists only for N = 2 and N = 3");
}

EntropyValue entropy_from_angles(const AngleCoords& angles) {
  const double c2 = std::pow(std::cos(angles.theta / 2.0), 2);
  const double s2 = std::pow(std::sin(angles.theta / 2.0), 2);
  return {neg_xlogx(c2) + neg_xlogx(s2)};
}

std::vector<ChamberPoint> chamber_grid(int resolution) {
  if (resolution < 2) throw std::invalid_argument("grid resolution must be >= 2");
  constexpr double third = 1.0 / 3.0;
  // O = (1/3,1/3,1/3), P = (1,0,0), Q = (1/2,1/2,0)
  constexpr ChamberPoint to_p{2.0 / 3.0, -third, -third};
  constexpr ChamberPoint to_q{1.0 / 6.0, 1.0 / 6.0, -third};
  std::vector<ChamberPoint> out;
  out.reserve(static_cast<std::size_t>((resolution + 1) * (resolution + 2) / 2));
  for (int i = 0; i <= resolution; ++i) {
    const double fi = static_cast<double>(i) / resolution;
    for (int j = 0; i + j <= resolution; ++j) {
      const double fj = static_cast<double>(j) / resolution;
      ChamberPoint p{};
      for (std::size_t c = 0; c < 3; ++c) p[c] = third + fi * to_p[c] + fj * to_q[c];
      out.push_back(p);
    }
  }
  return out;
}

std::vector<SurfaceSample> entropy_surface(int resolution) {
  const std::vector<ChamberPoint> grid = chamber_grid(resolution);
  std::vector<SurfaceSample> out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out[k] = {grid[k], chamber_entropy(grid[k], kDefaultTolerances.positivity)};
  }
  return out;
}

std::size_t ContourSet::point_count() const {
  std::size_t n = 0;
  for (const auto& line : polylines) n += line.size();
  return n;
}

double ContourSet::max_level_error() const {
  double worst = 0.0;
  for (const auto& line : polylines) {
    for (const auto& p : line) {
      worst = std::max(worst, std::abs(chamber_entropy(p, kDefaultTolerances.positivity) - level));
    }
  }
  return worst;
}

namespace {

using EdgeKey = std::pair<std::size_t, std::size_t>;

EdgeKey edge_key(std::size_t a, std::size_t b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

ChamberPoint lerp(const ChamberPoint& a, const ChamberPoint& b, double t) {
  return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])};
}

// Root of eta - level on the segment from `hi` (eta >= level) to `lo`
// (eta < level): linear interpolation first, then bisection on the bracket.
ChamberPoint refine_crossing(const ChamberPoint& hi, double eta_hi, const ChamberPoint& lo,
                             double eta_lo, double level, double tol, double& interp_error) {
  double t_hi = 0.0;
  double t_lo = 1.0;
  const double guess = (eta_hi - level) / (eta_hi - eta_lo);
  const double f_guess = chamber_entropy(lerp(hi, lo, guess), tol) - level;
  interp_error = std::max(interp_error, std::abs(f_guess));
  if (f_guess >= 0.0) {
    t_hi = guess;
  } else {
    t_lo = guess;
  }
  for (int iter = 0; iter < 200 && t_lo - t_hi > 1e-15; ++iter) {
    const double mid = 0.5 * (t_hi + t_lo);
    if (chamber_entropy(lerp(hi, lo, mid), tol) - level >= 0.0) {
      t_hi = mid;
    } else {
      t_lo = mid;
    }
  }
  const ChamberPoint a = lerp(hi, lo, t_hi);
  const ChamberPoint b = lerp(hi, lo, t_lo);
  const double fa = std::abs(chamber_entropy(a, tol) - level);
  const double fb = std::abs(chamber_entropy(b, tol) - level);
  return fa <= fb ? a : b;
}

}  // namespace

ContourSet isentropic_contours(double level, int resolution, const Tolerances& tol) {
  if (resolution < 2) throw std::invalid_argument("contour resolution must be >= 2");
  ContourSet out;
  out.level = level;
  const double max_level = std::log(3.0);
  if (level <= 0.0 || level >= max_level) {
    if (std::abs(level - max_level) <= tol.algebraic) out.degenerate_point = "O";
    if (std::abs(level) <= tol.algebraic) out.degenerate_point = "P";
    return out;
  }

  const std::vector<ChamberPoint> grid = chamber_grid(resolution);
  std::vector<double> eta(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) eta[k] = chamber_entropy(grid[k], tol.positivity);

  // Row i holds resolution + 1 - i points.
  std::vector<std::size_t> row_start(static_cast<std::size_t>(resolution) + 2, 0);
  for (int i = 0; i <= resolution; ++i) {
    row_start[static_cast<std::size_t>(i) + 1] =
        row_start[static_cast<std::size_t>(i)] + static_cast<std::size_t>(resolution + 1 - i);
  }
  auto at = [&](int i, int j) { return row_start[static_cast<std::size_t>(i)] + static_cast<std::size_t>(j); };

  std::map<EdgeKey, ChamberPoint> crossings;
  std::vector<std::pair<EdgeKey, EdgeKey>> segments;

  auto crossing_on = [&](std::size_t a, std::size_t b) -> const EdgeKey {
    const EdgeKey key = edge_key(a, b);
    if (!crossings.contains(key)) {
      const bool a_hi = eta[a] >= level;
      const std::size_t hi = a_hi ? a : b;
      const std::size_t lo = a_hi ? b : a;
      crossings.emplace(key, refine_crossing(grid[hi], eta[hi], grid[lo], eta[lo], level,
                                             tol.positivity, out.max_interpolation_error));
    }
    return key;
  };

  auto march = [&](std::size_t a, std::size_t b, std::size_t c) {
    const std::size_t tri[3] = {a, b, c};
    std::vector<EdgeKey> hits;
    for (int e = 0; e < 3; ++e) {
      const std::size_t u = tri[e];
      const std::size_t v = tri[(e + 1) % 3];
      if ((eta[u] >= level) != (eta[v] >= level)) hits.push_back(crossing_on(u, v));
    }
    if (hits.size() == 2) segments.emplace_back(hits[0], hits[1]);
  };

  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; i + j < resolution; ++j) {
      march(at(i, j), at(i + 1, j), at(i, j + 1));
      if (i + j + 1 < resolution) march(at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
    }
  }

  // Chain segments through shared crossings: open curves first (starting from
  // the smallest boundary crossing), then closed loops.
  std::map<EdgeKey, std::vector<std::size_t>> incident;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    incident[segments[s].first].push_back(s);
    incident[segments[s].second].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);

  auto walk = [&](EdgeKey start) {
    std::vector<ChamberPoint> line{crossings.at(start)};
    EdgeKey current = start;
    for (;;) {
      std::size_t next_seg = segments.size();
      for (std::size_t s : incident[current]) {
        if (!used[s]) {
          next_seg = s;
          break;
        }
      }
      if (next_seg == segments.size()) break;
      used[next_seg] = true;
      const auto& seg = segments[next_seg];
      current = seg.first == current ? seg.second : seg.first;
      const ChamberPoint& p = crossings.at(current);
      const ChamberPoint& last = line.back();
      const double gap = std::abs(p[0] - last[0]) + std::abs(p[1] - last[1]) + std::abs(p[2] - last[2]);
      if (gap > 1e-14) line.push_back(p);
    }
    out.polylines.push_back(std::move(line));
  };

  for (const auto& [key, segs] : incident) {
    if (segs.size() == 1 && !used[segs.front()]) walk(key);
  }
  for (const auto& [key, segs] : incident) {
    if (std::any_of(segs.begin(), segs.end(), [&](std::size_t s) { return !used[s]; })) walk(key);
  }
  return out;
}

std::vector<ProfileSample> line_entropy_profile(const Spectrum& s1, const Spectrum& s2,
                                                int samples) {
  if (s1.n_levels() != s2.n_levels()) {
    throw std::invalid_argument("profile endpoints must have the same N");
  }
  if (samples < 2) throw std::invalid_argument("profile needs at least 2 samples");
  std::vector<ProfileSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  std::vector<double> mix(s1.values().size());
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / (samples - 1);
    for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = (1.0 - t) * s1[i] + t * s2[i];
    out.push_back({t, entropy_nats(mix)});
  }
  return out;
}

}  // namespace densitygeom
