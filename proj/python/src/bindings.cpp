#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "densitygeom/densitygeom.hpp"
#include "densitygeom/io.hpp"

namespace py = pybind11;
using namespace densitygeom;

namespace {

py::array_t<double> tensor(const StructureConstants& sc, bool symmetric) {
  const auto dim = static_cast<py::ssize_t>(sc.dim());
  py::array_t<double> out({dim, dim, dim});
  auto view = out.mutable_unchecked<3>();
  for (py::ssize_t i = 0; i < dim; ++i) {
    for (py::ssize_t j = 0; j < dim; ++j) {
      for (py::ssize_t k = 0; k < dim; ++k) {
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(j);
        const auto uk = static_cast<std::size_t>(k);
        view(i, j, k) = symmetric ? sc.d(ui, uj, uk) : sc.f(ui, uj, uk);
      }
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Geometry of finite-dimensional density matrices (C++ core)";
  m.attr("__version__") = "0.1.0";

  py::register_exception<InvalidState>(m, "InvalidState", PyExc_ValueError);
  py::register_exception<OutOfSimplex>(m, "OutOfSimplex", PyExc_ValueError);

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("algebraic", &Tolerances::algebraic)
      .def_readwrite("positivity", &Tolerances::positivity)
      .def_readwrite("degeneracy", &Tolerances::degeneracy)
      .def_readwrite("contour", &Tolerances::contour);

  // su_basis
  py::class_<BasisSet>(m, "BasisSet")
      .def(py::init<int>(), py::arg("n_levels"))
      .def_property_readonly("n_levels", &BasisSet::n_levels)
      .def("__len__", &BasisSet::size)
      .def("__getitem__",
           [](const BasisSet& b, std::size_t i) {
             if (i >= b.size()) throw py::index_error();
             return b[i];
           })
      .def_property_readonly("matrices", &BasisSet::matrices)
      .def("symmetric_index", &BasisSet::symmetric_index)
      .def("antisymmetric_index", &BasisSet::antisymmetric_index)
      .def("diagonal_index", &BasisSet::diagonal_index);
  m.def("build_basis", &build_basis, py::arg("n_levels"));
  m.def("orthonormality_defect", &orthonormality_defect);
  m.def(
      "structure_constants",
      [](const BasisSet& b) {
        const StructureConstants sc = structure_constants(b);
        return py::make_tuple(tensor(sc, false), tensor(sc, true));
      },
      py::arg("basis"), "Returns (f, d) as dense (D, D, D) arrays, D = N^2 - 1.");

  // states
  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<const ComplexMatrix&, double>(), py::arg("entries"),
           py::arg("tol") = kDefaultTolerances.positivity)
      .def_static("maximally_mixed", &DensityMatrix::maximally_mixed)
      .def_static("diagonal", &DensityMatrix::diagonal, py::arg("probabilities"),
                  py::arg("tol") = kDefaultTolerances.positivity)
      .def_static("pure", &DensityMatrix::pure, py::arg("ket"))
      .def_property_readonly("n_levels", &DensityMatrix::n_levels)
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def("eigenvalues", &DensityMatrix::eigenvalues);

  py::class_<CoherenceVector>(m, "CoherenceVector")
      .def(py::init([](int n, Eigen::VectorXd c) { return CoherenceVector{n, std::move(c)}; }),
           py::arg("n_levels"), py::arg("components"))
      .def_readonly("n_levels", &CoherenceVector::n_levels)
      .def_readonly("components", &CoherenceVector::components)
      .def("norm", &CoherenceVector::norm);

  py::class_<DecodeResult>(m, "DecodeResult")
      .def_readonly("matrix", &DecodeResult::matrix)
      .def_readonly("min_eigenvalue", &DecodeResult::min_eigenvalue)
      .def_readonly("in_state_body", &DecodeResult::in_state_body)
      .def("state", &DecodeResult::state);

  m.def("encode", &encode, py::arg("rho"), py::arg("basis"));
  m.def("decode", &decode, py::arg("n"), py::arg("basis"),
        py::arg("tol") = kDefaultTolerances.positivity);
  m.def("is_pure", &is_pure, py::arg("rho"), py::arg("tol") = kDefaultTolerances.positivity);
  m.def("conjugate", &conjugate, py::arg("rho"), py::arg("unitary"),
        py::arg("tol") = kDefaultTolerances.positivity);
  m.def("random_density_matrix", &random_density_matrix, py::arg("n_levels"), py::arg("seed"));
  m.def("random_pure_state", &random_pure_state, py::arg("n_levels"), py::arg("seed"));

  // chamber
  py::class_<Spectrum>(m, "Spectrum")
      .def(py::init<std::vector<double>, double>(), py::arg("values"),
           py::arg("tol") = kDefaultTolerances.positivity)
      .def_property_readonly("n_levels", &Spectrum::n_levels)
      .def_property_readonly("values", &Spectrum::values)
      .def("__len__", [](const Spectrum& s) { return s.values().size(); })
      .def("__repr__", [](const Spectrum& s) {
        return "Spectrum(" + py::repr(py::cast(s.values())).cast<std::string>() + ")";
      });
  py::implicitly_convertible<py::list, Spectrum>();

  py::class_<SimplexCoords>(m, "SimplexCoords")
      .def(py::init([](int n, std::vector<double> c) { return SimplexCoords{n, std::move(c)}; }),
           py::arg("n_levels"), py::arg("coords"))
      .def_readonly("n_levels", &SimplexCoords::n_levels)
      .def_readonly("coords", &SimplexCoords::coords);

  py::class_<StratumInfo>(m, "StratumInfo")
      .def_readonly("partition", &StratumInfo::partition)
      .def_readonly("little_group", &StratumInfo::little_group)
      .def_readonly("orbit_dim", &StratumInfo::orbit_dim)
      .def_property_readonly("kind", &StratumInfo::kind_name)
      .def_property_readonly("label", &StratumInfo::label)
      .def_property_readonly("homogeneous_space", &StratumInfo::homogeneous_space);

  m.def("spectrum_of", &spectrum_of, py::arg("rho"),
        py::arg("tol") = kDefaultTolerances.positivity);
  m.def("to_simplex_coords", &to_simplex_coords, py::arg("spectrum"));
  m.def("from_simplex_coords", &from_simplex_coords, py::arg("coords"),
        py::arg("tol") = kDefaultTolerances.positivity);
  m.def("chamber_representative", &chamber_representative, py::arg("spectrum"));
  m.def("classify", &classify, py::arg("spectrum"),
        py::arg("degeneracy_tol") = kDefaultTolerances.degeneracy);
  m.def("special_points", &special_points, py::arg("n_levels"));
  m.def("coherence_distance", &coherence_distance, py::arg("s1"), py::arg("s2"), py::arg("basis"));
  m.def("count_strata", &count_strata, py::arg("n_levels"));
  m.def("integer_partitions", &integer_partitions, py::arg("n"));

  // invariants
  py::class_<CasimirSet>(m, "CasimirSet")
      .def_readonly("n_levels", &CasimirSet::n_levels)
      .def_readonly("values", &CasimirSet::values)
      .def("I", &CasimirSet::I, py::arg("k"));
  py::class_<BoundaryStatus>(m, "BoundaryStatus")
      .def_readonly("is_boundary", &BoundaryStatus::is_boundary)
      .def_readonly("is_edge", &BoundaryStatus::is_edge);

  m.def("casimirs_from_spectrum", &casimirs_from_spectrum, py::arg("spectrum"));
  m.def("casimirs_from_traces", &casimirs_from_traces, py::arg("rho"));
  m.def("characteristic_residual", &characteristic_residual, py::arg("rho"), py::arg("casimirs"));
  m.def("boundary_vanishing", &boundary_vanishing, py::arg("spectrum"),
        py::arg("tol") = kDefaultTolerances.positivity);

  // entropy
  py::class_<AngleCoords>(m, "AngleCoords")
      .def(py::init([](double theta, double phi) { return AngleCoords{theta, phi}; }),
           py::arg("theta"), py::arg("phi") = 0.0)
      .def_readwrite("theta", &AngleCoords::theta)
      .def_readwrite("phi", &AngleCoords::phi);
  py::class_<ContourSet>(m, "ContourSet")
      .def_readonly("level", &ContourSet::level)
      .def_readonly("polylines", &ContourSet::polylines)
      .def_readonly("degenerate_point", &ContourSet::degenerate_point)
      .def_readonly("max_interpolation_error", &ContourSet::max_interpolation_error)
      .def("point_count", &ContourSet::point_count)
      .def("max_level_error", &ContourSet::max_level_error);

  m.def(
      "entropy", [](const Spectrum& s, double tol) { return entropy(s, tol).nats; },
      py::arg("spectrum"), py::arg("tol") = kDefaultTolerances.positivity,
      "Von Neumann entropy in nats.");
  m.def("angles_to_spectrum", &angles_to_spectrum, py::arg("n_levels"), py::arg("angles"));
  m.def(
      "entropy_from_angles", [](const AngleCoords& a) { return entropy_from_angles(a).nats; },
      py::arg("angles"));
  m.def(
      "entropy_surface",
      [](int resolution) {
        const auto rows = entropy_surface(resolution);
        py::array_t<double> out({static_cast<py::ssize_t>(rows.size()), py::ssize_t{4}});
        auto view = out.mutable_unchecked<2>();
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const auto i = static_cast<py::ssize_t>(r);
          view(i, 0) = rows[r].point[0];
          view(i, 1) = rows[r].point[1];
          view(i, 2) = rows[r].point[2];
          view(i, 3) = rows[r].eta;
        }
        return out;
      },
      py::arg("resolution"), "Rows of (x, y, z, eta) over the N = 3 chamber.");
  m.def(
      "isentropic_contours",
      [](double level, int resolution) { return isentropic_contours(level, resolution); },
      py::arg("level"), py::arg("resolution") = 200);
  m.def(
      "line_entropy_profile",
      [](const Spectrum& a, const Spectrum& b, int samples) {
        std::vector<std::pair<double, double>> out;
        for (const auto& p : line_entropy_profile(a, b, samples)) out.emplace_back(p.t, p.eta);
        return out;
      },
      py::arg("s1"), py::arg("s2"), py::arg("samples"));
}
