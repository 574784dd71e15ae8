#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "densitygeom/densitygeom.hpp"
#include "densitygeom/io.hpp"

namespace densitygeom::cli {

namespace {

using nlohmann::json;

constexpr int kJsonDigits = 12;
constexpr int kCsvDigits = 6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StateError : std::runtime_error {
  StateError(const std::string& what, std::optional<double> min_eig)
      : std::runtime_error(what), min_eigenvalue(min_eig) {}
  std::optional<double> min_eigenvalue;
};

struct Config {
  std::string out_path;
  std::string format;  // empty: command default
  double tol_alg = kDefaultTolerances.algebraic;
  double tol_pos = kDefaultTolerances.positivity;
  double tol_deg = kDefaultTolerances.degeneracy;
  std::string log_base = "nats";
  std::uint64_t seed = 0;

  Tolerances tolerances() const {
    Tolerances t;
    t.algebraic = tol_alg;
    t.positivity = tol_pos;
    t.degeneracy = tol_deg;
    return t;
  }

  std::string format_or(const std::string& fallback) const {
    return format.empty() ? fallback : format;
  }

  double entropy_in_base(double nats) const {
    return log_base == "bits" ? nats / std::numbers::ln2 : nats;
  }
};

double round12(double x) { return io::round_significant(x, kJsonDigits); }

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path);
  if (!file) throw IoError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  if (file.bad()) throw IoError("failed reading '" + path + "'");
  return buf.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("input is not valid JSON: ") + e.what());
  }
}

io::StateInput read_state(const std::string& path, std::istream& in) {
  const json j = parse_json(read_input(path, in));
  try {
    return io::parse_state(j);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

DensityMatrix to_density(const io::StateInput& input, double tol) {
  try {
    if (input.is_matrix()) return DensityMatrix(std::get<ComplexMatrix>(input.value), tol);
    const Spectrum s(std::get<std::vector<double>>(input.value), tol);
    return DensityMatrix::diagonal(
        Eigen::Map<const Eigen::VectorXd>(s.values().data(),
                                          static_cast<Eigen::Index>(s.values().size())),
        tol);
  } catch (const InvalidState& e) {
    throw StateError(e.what(), e.min_eigenvalue());
  } catch (const std::invalid_argument& e) {
    throw StateError(e.what(), std::nullopt);
  }
}

Spectrum to_spectrum(const io::StateInput& input, double tol) {
  if (input.is_matrix()) return spectrum_of(to_density(input, tol), tol);
  try {
    return Spectrum(std::get<std::vector<double>>(input.value), tol);
  } catch (const std::invalid_argument& e) {
    throw StateError(e.what(), std::nullopt);
  }
}

Spectrum parse_spectrum_list(const std::string& text, double tol) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("cannot parse '" + item + "' as a number");
    }
  }
  try {
    return Spectrum(std::move(values), tol);
  } catch (const std::invalid_argument& e) {
    throw StateError(e.what(), std::nullopt);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json casimir_report(const Spectrum& s) { return io::casimirs_to_json(casimirs_from_spectrum(s)); }

// ---------------------------------------------------------------------------

std::string cmd_basis(int n) {
  if (n < 2) throw UsageError("--n must be >= 2");
  return dump(io::basis_to_json(build_basis(n), kJsonDigits));
}

std::string cmd_encode(const Config& cfg, const std::string& input, std::istream& in) {
  const DensityMatrix rho = to_density(read_state(input, in), cfg.tol_pos);
  const BasisSet basis(rho.n_levels());
  return dump(io::coherence_to_json(encode(rho, basis), kJsonDigits));
}

std::string cmd_decode(const Config& cfg, const std::string& input, std::istream& in) {
  CoherenceVector n;
  try {
    n = io::coherence_from_json(parse_json(read_input(input, in)));
  } catch (const json::exception& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const DecodeResult r = decode(n, BasisSet(n.n_levels), cfg.tol_pos);
  if (!r.in_state_body) {
    std::ostringstream msg;
    msg << "coherence vector lies outside the state body";
    throw StateError(msg.str(), r.min_eigenvalue);
  }
  return dump(io::density_matrix_to_json(r.matrix, kJsonDigits));
}

std::string cmd_classify(const Config& cfg, const std::string& input, std::istream& in) {
  const io::StateInput state = read_state(input, in);
  const Spectrum s = chamber_representative(to_spectrum(state, cfg.tol_pos));
  const StratumInfo info = classify(s, cfg.tol_deg);
  const BoundaryStatus boundary = boundary_vanishing(s, cfg.tol_pos);
  json report = {
      {"n", s.n_levels()},
      {"spectrum", io::spectrum_to_json(s)},
      {"stratum", io::stratum_to_json(info)},
      {"homogeneous_space", info.homogeneous_space()},
      {"casimirs", casimir_report(s)},
      {"entropy", round12(cfg.entropy_in_base(entropy(s, cfg.tol_pos).nats))},
      {"entropy_unit", cfg.log_base},
      {"boundary", {{"is_boundary", boundary.is_boundary}, {"is_edge", boundary.is_edge}}},
  };
  if (state.is_matrix()) {
    const DensityMatrix rho = to_density(state, cfg.tol_pos);
    report["pure"] = is_pure(rho, cfg.tol_pos);
  } else {
    report["pure"] = info.kind == StratumInfo::Kind::Pure;
  }
  return dump(report);
}

std::string cmd_casimirs(const Config& cfg, const std::string& input, std::istream& in) {
  const io::StateInput state = read_state(input, in);
  const Spectrum s = to_spectrum(state, cfg.tol_pos);
  json report = casimir_report(s);
  if (state.is_matrix()) {
    const DensityMatrix rho = to_density(state, cfg.tol_pos);
    const CasimirSet traces = casimirs_from_traces(rho);
    report["I_from_traces"] = io::casimirs_to_json(traces).at("I");
    report["characteristic_residual"] = round12(characteristic_residual(rho, traces));
  }
  if (cfg.format_or("json") == "csv") {
    std::ostringstream os;
    os << "k,I\n";
    const CasimirSet c = casimirs_from_spectrum(s);
    for (int k = 1; k <= c.n_levels; ++k) {
      os << k << ',' << io::round_significant(c.I(k), kCsvDigits) << '\n';
    }
    return os.str();
  }
  return dump(report);
}

std::string cmd_entropy(const Config& cfg, const std::string& input, std::istream& in) {
  const Spectrum s = to_spectrum(read_state(input, in), cfg.tol_pos);
  const double value = cfg.entropy_in_base(entropy(s, cfg.tol_pos).nats);
  if (cfg.format_or("json") == "csv") {
    std::ostringstream os;
    os << "entropy\n" << io::round_significant(value, kCsvDigits) << '\n';
    return os.str();
  }
  return dump({{"entropy", round12(value)}, {"unit", cfg.log_base}});
}

std::string cmd_surface(const Config& cfg, int resolution) {
  if (resolution < 2) throw UsageError("--res must be >= 2");
  const auto rows = entropy_surface(resolution);
  if (cfg.format_or("csv") == "csv") return io::surface_to_csv(rows, kCsvDigits);
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({round12(r.point[0]), round12(r.point[1]), round12(r.point[2]), round12(r.eta)});
  }
  return dump({{"columns", {"x", "y", "z", "eta"}}, {"rows", std::move(arr)}});
}

std::string cmd_contour(const Config& cfg, double level, int resolution, std::ostream& err) {
  if (resolution < 2) throw UsageError("--res must be >= 2");
  Tolerances tol = cfg.tolerances();
  const ContourSet c = isentropic_contours(level, resolution, tol);
  if (c.polylines.empty()) {
    err << "warning: level " << level << " is outside (0, ln 3); contour is empty";
    if (c.degenerate_point) err << " (degenerates to the single point " << *c.degenerate_point << ")";
    err << '\n';
  }
  err << "points: " << c.point_count() << "\n"
      << "max |eta - level|: " << c.max_level_error() << "\n"
      << "max |eta - level| before bisection: " << c.max_interpolation_error << '\n';
  if (cfg.format_or("json") == "csv") return io::contour_to_csv(c, kCsvDigits);
  return dump(io::contour_to_json(c, kJsonDigits));
}

std::string cmd_profile(const Config& cfg, const std::string& from, const std::string& to,
                        int samples) {
  if (samples < 2) throw UsageError("--samples must be >= 2");
  const Spectrum a = parse_spectrum_list(from, cfg.tol_pos);
  const Spectrum b = parse_spectrum_list(to, cfg.tol_pos);
  if (a.n_levels() != b.n_levels()) throw UsageError("--from and --to must have the same length");
  const auto profile = line_entropy_profile(a, b, samples);
  if (cfg.format_or("json") == "csv") {
    std::ostringstream os;
    os << "t,eta\n";
    for (const auto& p : profile) {
      os << io::round_significant(p.t, kCsvDigits) << ','
         << io::round_significant(cfg.entropy_in_base(p.eta), kCsvDigits) << '\n';
    }
    return os.str();
  }
  json arr = json::array();
  for (const auto& p : profile) {
    arr.push_back({{"t", round12(p.t)}, {"eta", round12(cfg.entropy_in_base(p.eta))}});
  }
  return dump({{"unit", cfg.log_base}, {"profile", std::move(arr)}});
}

std::string cmd_tables(const Config& cfg, int n) {
  if (n < 2 || n > 8) throw UsageError("--n must be between 2 and 8");
  const BasisSet basis(n);
  const auto points = special_points(n);

  json pts = json::array();
  for (const auto& [name, s] : points) {
    const StratumInfo info = classify(s, cfg.tol_deg);
    pts.push_back({{"name", name},
                   {"spectrum", io::spectrum_to_json(s)},
                   {"entropy", round12(cfg.entropy_in_base(entropy(s).nats))},
                   {"casimirs", io::casimirs_to_json(casimirs_from_spectrum(s)).at("I")},
                   {"stratum", io::stratum_to_json(info)}});
  }

  json distances = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      distances.push_back({{"from", points[i].first},
                           {"to", points[j].first},
                           {"length", round12(coherence_distance(points[i].second,
                                                                 points[j].second, basis))}});
    }
  }

  json census = json::array();
  for (const auto& partition : integer_partitions(n)) {
    const StratumInfo info = stratum_for_partition(partition);
    census.push_back({{"partition", info.partition},
                      {"little_group", info.little_group},
                      {"orbit_dim", info.orbit_dim},
                      {"homogeneous_space", info.homogeneous_space()}});
  }

  return dump({{"n", n},
               {"entropy_unit", cfg.log_base},
               {"special_points", std::move(pts)},
               {"distances", std::move(distances)},
               {"strata_count", count_strata(n)},
               {"strata", std::move(census)}});
}

std::string cmd_sample(const Config& cfg, int n, bool pure) {
  if (n < 2) throw UsageError("--n must be >= 2");
  const DensityMatrix rho = pure ? random_pure_state(n, cfg.seed) : random_density_matrix(n, cfg.seed);
  return dump(io::density_matrix_to_json(rho, kJsonDigits));
}

void write_output(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + cfg.out_path + "'");
  file << text;
  if (!file) throw IoError("failed writing '" + cfg.out_path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Geometry of finite-dimensional density matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--out", cfg.out_path, "Write data to this file instead of stdout");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol-alg", cfg.tol_alg, "Algebraic tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-pos", cfg.tol_pos, "Positivity tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-deg", cfg.tol_deg, "Degeneracy tolerance")->check(CLI::PositiveNumber);
  app.add_option("--log-base", cfg.log_base, "Entropy unit")
      ->check(CLI::IsMember({"nats", "bits"}));
  app.add_option("--seed", cfg.seed, "Random seed");

  int n = 0;
  std::string input;
  int resolution = 200;
  double level = 0.0;
  std::string from;
  std::string to;
  int samples = 101;
  bool pure = false;

  auto* basis = app.add_subcommand("basis", "Export the orthonormal traceless basis as JSON");
  basis->add_option("--n", n, "Number of levels")->required();

  auto* enc = app.add_subcommand("encode", "Density matrix or spectrum -> coherence vector");
  enc->add_option("input", input, "State JSON file ('-' for stdin)");

  auto* dec = app.add_subcommand("decode", "Coherence vector -> density matrix");
  dec->add_option("input", input, "Coherence vector JSON file ('-' for stdin)");

  auto* cls = app.add_subcommand("classify", "Spectrum, stratum, Casimirs and entropy of a state");
  cls->add_option("input", input, "State JSON file ('-' for stdin)");

  auto* cas = app.add_subcommand("casimirs", "Casimir invariants I_1..I_N of a state");
  cas->add_option("input", input, "State JSON file ('-' for stdin)");

  auto* ent = app.add_subcommand("entropy", "Von Neumann entropy of a state");
  ent->add_option("input", input, "State JSON file ('-' for stdin)");

  auto* srf = app.add_subcommand("surface", "Entropy over the N = 3 chamber grid");
  srf->add_option("--res", resolution, "Subdivisions per chamber edge");

  auto* con = app.add_subcommand("contour", "Isentropic line over the N = 3 chamber");
  con->add_option("--level", level, "Entropy level in nats")->required();
  con->add_option("--res", resolution, "Subdivisions per chamber edge");

  auto* prof = app.add_subcommand("profile", "Entropy along a segment between two spectra");
  prof->add_option("--from", from, "Comma-separated start spectrum")->required();
  prof->add_option("--to", to, "Comma-separated end spectrum")->required();
  prof->add_option("--samples", samples, "Number of samples");

  auto* tab = app.add_subcommand("tables", "Special points, distances and strata census");
  tab->add_option("--n", n, "Number of levels")->required();

  auto* smp = app.add_subcommand("sample", "Random density matrix");
  smp->add_option("--n", n, "Number of levels")->required();
  smp->add_flag("--pure", pure, "Sample a pure state instead");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    std::string text;
    if (basis->parsed()) text = cmd_basis(n);
    else if (enc->parsed()) text = cmd_encode(cfg, input, in);
    else if (dec->parsed()) text = cmd_decode(cfg, input, in);
    else if (cls->parsed()) text = cmd_classify(cfg, input, in);
    else if (cas->parsed()) text = cmd_casimirs(cfg, input, in);
    else if (ent->parsed()) text = cmd_entropy(cfg, input, in);
    else if (srf->parsed()) text = cmd_surface(cfg, resolution);
    else if (con->parsed()) text = cmd_contour(cfg, level, resolution, err);
    else if (prof->parsed()) text = cmd_profile(cfg, from, to, samples);
    else if (tab->parsed()) text = cmd_tables(cfg, n);
    else if (smp->parsed()) text = cmd_sample(cfg, n, pure);
    write_output(cfg, text, out);
    return kSuccess;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StateError& e) {
    err << "invalid state: " << e.what();
    if (e.min_eigenvalue) err << " (min eigenvalue " << *e.min_eigenvalue << ")";
    err << '\n';
    return kInvalidState;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace densitygeom::cli
