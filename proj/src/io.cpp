#include "densitygeom/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace densitygeom::io {

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

namespace {

std::string format_csv(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, round_significant(x, digits));
  return buf;
}

json real_array(const std::vector<double>& v, int digits) {
  json out = json::array();
  for (double x : v) out.push_back(round_significant(x, digits));
  return out;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m, int digits) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out.push_back({round_significant(m(i, j).real(), digits),
                     round_significant(m(i, j).imag(), digits)});
    }
  }
  return out;
}

ComplexMatrix matrix_from_json(const json& entries, int n) {
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("matrix entries must be a row-major array of N*N [re, im] pairs");
  }
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const json& e = entries[static_cast<std::size_t>(i * n + j)];
      if (e.is_number()) {
        m(i, j) = e.get<double>();
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(i, j) = {e[0].get<double>(), e[1].get<double>()};
      } else {
        throw std::invalid_argument("matrix entry must be [re, im]");
      }
    }
  }
  return m;
}

json basis_to_json(const BasisSet& basis, int digits) {
  json out = json::array();
  for (const auto& m : basis.matrices()) out.push_back(matrix_to_json(m, digits));
  return out;
}

json density_matrix_to_json(const ComplexMatrix& rho, int digits) {
  return {{"n", rho.rows()}, {"entries", matrix_to_json(rho, digits)}};
}

json density_matrix_to_json(const DensityMatrix& rho, int digits) {
  return density_matrix_to_json(rho.matrix(), digits);
}

json coherence_to_json(const CoherenceVector& n, int digits) {
  std::vector<double> c(n.components.data(), n.components.data() + n.components.size());
  return {{"n", n.n_levels}, {"components", real_array(c, digits)}};
}

CoherenceVector coherence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("components")) {
    throw std::invalid_argument("coherence vector JSON needs \"n\" and \"components\"");
  }
  const int n = j.at("n").get<int>();
  const auto comps = j.at("components").get<std::vector<double>>();
  if (n < 2 || comps.size() != static_cast<std::size_t>(n * n - 1)) {
    throw std::invalid_argument("coherence vector must have N^2 - 1 components");
  }
  CoherenceVector out{n, Eigen::VectorXd(static_cast<Eigen::Index>(comps.size()))};
  for (std::size_t i = 0; i < comps.size(); ++i) {
    out.components(static_cast<Eigen::Index>(i)) = comps[i];
  }
  return out;
}

json stratum_to_json(const StratumInfo& s) {
  return {{"partition", s.partition},
          {"little_group", s.little_group},
          {"orbit_dim", s.orbit_dim},
          {"label", s.label()}};
}

json casimirs_to_json(const CasimirSet& c, int digits) {
  return {{"n", c.n_levels}, {"I", real_array(c.values, digits)}};
}

json contour_to_json(const ContourSet& c, int digits) {
  json lines = json::array();
  for (const auto& line : c.polylines) {
    json pts = json::array();
    for (const auto& p : line) pts.push_back(real_array({p[0], p[1], p[2]}, digits));
    lines.push_back(std::move(pts));
  }
  json out = {{"level", round_significant(c.level, digits)}, {"polylines", std::move(lines)}};
  if (c.degenerate_point) out["degenerate_point"] = *c.degenerate_point;
  return out;
}

json spectrum_to_json(const Spectrum& s, int digits) { return real_array(s.values(), digits); }

std::string surface_to_csv(const std::vector<SurfaceSample>& rows, int digits) {
  std::ostringstream os;
  os << "x,y,z,eta\n";
  for (const auto& r : rows) {
    os << format_csv(r.point[0], digits) << ',' << format_csv(r.point[1], digits) << ','
       << format_csv(r.point[2], digits) << ',' << format_csv(r.eta, digits) << '\n';
  }
  return os.str();
}

std::string contour_to_csv(const ContourSet& c, int digits) {
  std::ostringstream os;
  os << "polyline,x,y,z\n";
  for (std::size_t k = 0; k < c.polylines.size(); ++k) {
    for (const auto& p : c.polylines[k]) {
      os << k << ',' << format_csv(p[0], digits) << ',' << format_csv(p[1], digits) << ','
         << format_csv(p[2], digits) << '\n';
    }
  }
  return os.str();
}

StateInput parse_state(const json& j) {
  if (j.is_array() && !j.empty() &&
      std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_number(); })) {
    return StateInput{j.get<std::vector<double>>()};
  }
  if (j.is_object() && j.contains("entries")) {
    const json& entries = j.at("entries");
    if (!entries.is_array()) throw std::invalid_argument("\"entries\" must be an array");
    int n = 0;
    if (j.contains("n")) {
      n = j.at("n").get<int>();
    } else {
      n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(entries.size()))));
    }
    if (n < 1) throw std::invalid_argument("\"n\" must be positive");
    return StateInput{matrix_from_json(entries, n)};
  }
  throw std::invalid_argument(
      "expected a density matrix {\"n\", \"entries\"} or a bare list of eigenvalues");
}

}  // namespace densitygeom::io
