// Python bindings for the core operations. Matrices cross the boundary as
// complex numpy arrays via the Eigen caster.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "offdiag/families.hpp"
#include "offdiag/phases.hpp"
#include "offdiag/random.hpp"
#include "offdiag/scenario.hpp"
#include "offdiag/transport.hpp"
#include "offdiag/twophoton.hpp"

namespace py = pybind11;
using namespace offdiag;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Off-diagonal geometric phases for unitarily transported mixed states";

  py::register_exception<Error>(m, "OffdiagError");

  py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
      .def_readonly("eigenvalues", &SpectralDecomposition::eigenvalues)
      .def_readonly("eigenvectors", &SpectralDecomposition::eigenvectors);

  py::class_<DensityOperator>(m, "DensityOperator")
      .def_property_readonly("matrix", &DensityOperator::matrix)
      .def_property_readonly("rank", &DensityOperator::rank)
      .def_property_readonly("dim", &DensityOperator::dim)
      .def_property_readonly(
          "eigenvalues",
          [](const DensityOperator& rho) { return rho.spectrum().eigenvalues; })
      .def_property_readonly(
          "eigenvectors",
          [](const DensityOperator& rho) { return rho.spectrum().eigenvectors; })
      .def("power", &DensityOperator::power, py::arg("p"), py::arg("q"));

  py::class_<OrthogonalFamily>(m, "OrthogonalFamily")
      .def_readonly("members", &OrthogonalFamily::members)
      .def_readonly("basis", &OrthogonalFamily::basis)
      .def_readonly("shift", &OrthogonalFamily::shift)
      .def_readonly("lambdas", &OrthogonalFamily::lambdas)
      .def("__len__", &OrthogonalFamily::size);

  py::class_<PhaseResult>(m, "PhaseResult")
      .def_readonly("raw_trace", &PhaseResult::raw_trace)
      .def_readonly("tolerance_used", &PhaseResult::tolerance_used)
      .def_readonly("determinate", &PhaseResult::determinate)
      .def_readonly("phase_factor", &PhaseResult::phase_factor)
      .def_readonly("argument", &PhaseResult::argument)
      .def("__repr__", [](const PhaseResult& r) {
        return r.determinate
                   ? "PhaseResult(determinate, arg=" + std::to_string(r.argument) + ")"
                   : std::string("PhaseResult(indeterminate)");
      });

  py::class_<UnitaryPath>(m, "UnitaryPath")
      .def_readonly("s", &UnitaryPath::s)
      .def_readonly("unitaries", &UnitaryPath::unitaries)
      .def_property_readonly("final_unitary",
                             [](const UnitaryPath& p) { return p.final_unitary(); });

  py::class_<QubitScanPoint>(m, "QubitScanPoint")
      .def_readonly("eta", &QubitScanPoint::eta)
      .def_readonly("alpha", &QubitScanPoint::alpha)
      .def_readonly("lambda1", &QubitScanPoint::lambda1)
      .def_readonly("t1", &QubitScanPoint::t1)
      .def_readonly("t2", &QubitScanPoint::t2)
      .def_readonly("t12", &QubitScanPoint::t12);

  py::class_<FlaggedUnitary>(m, "FlaggedUnitary")
      .def_readonly("matrix", &FlaggedUnitary::matrix)
      .def_readonly("special", &FlaggedUnitary::special);

  py::class_<PermutationCoefficient>(m, "PermutationCoefficient")
      .def_readonly("sequence", &PermutationCoefficient::sequence)
      .def_readonly("value", &PermutationCoefficient::value);

  py::class_<PolarizationEnsemble>(m, "PolarizationEnsemble")
      .def_readonly("r", &PolarizationEnsemble::r);

  py::class_<TwoPhotonState>(m, "TwoPhotonState")
      .def_readonly("amplitudes", &TwoPhotonState::amplitudes);

  py::enum_<ChiRole>(m, "ChiRole")
      .value("us", ChiRole::us)
      .value("vs", ChiRole::vs)
      .value("ua", ChiRole::ua)
      .value("va", ChiRole::va);

  py::class_<MeasurementConfig>(m, "MeasurementConfig")
      .def(py::init<>())
      .def_readwrite("us", &MeasurementConfig::us)
      .def_readwrite("vs", &MeasurementConfig::vs)
      .def_readwrite("ua", &MeasurementConfig::ua)
      .def_readwrite("va", &MeasurementConfig::va)
      .def_readwrite("chi_role", &MeasurementConfig::chi_role);

  py::enum_<RecipeTarget>(m, "RecipeTarget")
      .value("gamma1_rho1", RecipeTarget::gamma1_rho1)
      .value("gamma1_rho2", RecipeTarget::gamma1_rho2)
      .value("gamma2", RecipeTarget::gamma2);

  py::class_<FringeScan>(m, "FringeScan")
      .def_readonly("chis", &FringeScan::chis)
      .def_readonly("intensities", &FringeScan::intensities)
      .def_readonly("fourier", &FringeScan::fourier)
      .def_readonly("visibility", &FringeScan::visibility)
      .def_readonly("extracted_arg", &FringeScan::extracted_arg)
      .def_readonly("tolerance_used", &FringeScan::tolerance_used);

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", &Rng::uniform)
      .def("gaussian", &Rng::gaussian)
      .def("poisson", &Rng::poisson, py::arg("mean"));

  // linalg
  m.def("hermitian_eig", &hermitian_eig, py::arg("matrix"));
  m.def("psd_power", &psd_power, py::arg("matrix"), py::arg("p"), py::arg("q"));
  m.def("unitary_exp", &unitary_exp, py::arg("generator"), py::arg("t"));
  m.def("ordered_exp", &ordered_exp, py::arg("generator"), py::arg("s_end"),
        py::arg("steps") = kDefaultSteps);
  m.def("trace_product", &trace_product, py::arg("factors"));

  // states
  m.def("make_density", &make_density, py::arg("matrix"));
  m.def("shift_unitary", &shift_unitary, py::arg("basis"));
  m.def("generate_family", &generate_family, py::arg("rho1"));
  m.def("are_orthogonal", &are_orthogonal, py::arg("rho_a"), py::arg("rho_b"),
        py::arg("u"));
  m.def("max_same_group_overlap", &max_same_group_overlap, py::arg("rho"),
        py::arg("u"));
  m.def("interference_profile", &interference_profile, py::arg("rho"),
        py::arg("u"), py::arg("chi"));

  // transport
  m.def("project_parallel", &project_parallel, py::arg("generator"),
        py::arg("basis"));
  m.def("transport_path", &transport_path, py::arg("generator"),
        py::arg("basis"), py::arg("s_end"), py::arg("steps") = kDefaultSteps);
  m.def("transport_defect", &transport_defect, py::arg("path"),
        py::arg("basis"));

  // phases
  m.def("phi", &phi, py::arg("z"), py::arg("tol") = kPhaseTol);
  m.def("gamma_pure", &gamma_pure, py::arg("u"), py::arg("projectors"),
        py::arg("tol") = kPhaseTol);
  m.def("gamma_mixed", &gamma_mixed, py::arg("u"), py::arg("rhos"),
        py::arg("tol") = kPhaseTol);

  // families
  m.def("qubit_traces", &qubit_traces, py::arg("eta"), py::arg("alpha"),
        py::arg("lambda1"));
  m.def("su2_unitary", &su2_unitary, py::arg("eta"), py::arg("alpha"),
        py::arg("offdiag_phase") = 0.0);
  m.def("diagonal_unitary", &diagonal_unitary, py::arg("phases"),
        py::arg("basis") = Matrix());
  m.def("permutation_unitary", &permutation_unitary, py::arg("phases"),
        py::arg("basis") = Matrix());
  m.def("diagonal_trace", &diagonal_trace, py::arg("u_d"), py::arg("family"),
        py::arg("sequence"));
  m.def("f_coefficient", &f_coefficient, py::arg("family"), py::arg("u_p"),
        py::arg("sequence"));
  m.def("spherical_polygon_solid_angle", &spherical_polygon_solid_angle,
        py::arg("waypoints"));
  m.def("bloch_vector", &bloch_vector, py::arg("state"));

  // two-photon
  m.def("make_ensemble", &make_ensemble, py::arg("r"));
  m.def("purify", &purify, py::arg("ensemble"));
  m.def("rotation_unitary", &rotation_unitary, py::arg("beta"),
        py::arg("theta"));
  m.def("polarization_flip", &polarization_flip);
  m.def("coincidence_intensity", &coincidence_intensity, py::arg("state"),
        py::arg("config"), py::arg("chi"));
  m.def("recipe", &recipe, py::arg("target"), py::arg("beta"),
        py::arg("theta"));
  m.def("run_fringe", &run_fringe, py::arg("state"), py::arg("config"),
        py::arg("samples"), py::arg("tol") = kPhaseTol);
  m.def("run_fringe_noisy", &run_fringe_noisy, py::arg("state"),
        py::arg("config"), py::arg("samples"), py::arg("mean_pairs"),
        py::arg("rng"), py::arg("tol") = kPhaseTol);

  // random instances
  m.def("random_hermitian", &random_hermitian, py::arg("n"), py::arg("rng"));
  m.def("random_density", &random_density, py::arg("n"), py::arg("rng"));
  m.def("random_unitary", &random_unitary, py::arg("n"), py::arg("rng"));
  m.def("random_spectrum", &random_spectrum, py::arg("n"), py::arg("rng"));
}
