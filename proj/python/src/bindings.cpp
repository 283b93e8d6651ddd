// Python bindings for the negativity-bound library: states, the two
// entanglement conditions, every bound certificate, the pattern search, and
// the spin-boson model.

#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "negabound/bounds.hpp"
#include "negabound/dicke.hpp"
#include "negabound/search.hpp"
#include "negabound/verify.hpp"

namespace py = pybind11;
using namespace negabound;

PYBIND11_MODULE(_negabound, m) {
  m.doc() = "Exact negativity, entanglement conditions, and certified lower bounds";
  m.attr("__version__") = "0.1.0";

  // --- linear algebra / indexing ------------------------------------------
  py::class_<BipartiteIndex>(m, "BipartiteIndex")
      .def(py::init(&BipartiteIndex::make), py::arg("dim_a"), py::arg("dim_b"))
      .def_readonly("dim_a", &BipartiteIndex::dim_a)
      .def_readonly("dim_b", &BipartiteIndex::dim_b)
      .def("total", &BipartiteIndex::total)
      .def("min_dim", &BipartiteIndex::min_dim)
      .def(py::self == py::self)
      .def("__repr__", [](const BipartiteIndex& idx) {
        return "BipartiteIndex(" + std::to_string(idx.dim_a) + ", " + std::to_string(idx.dim_b) +
               ")";
      });

  py::enum_<Subsystem>(m, "Subsystem").value("A", Subsystem::A).value("B", Subsystem::B);

  m.def("kron", &kron, py::arg("a"), py::arg("b"));
  m.def("partial_transpose", &partial_transpose, py::arg("rho"), py::arg("idx"));
  m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("idx"), py::arg("keep"));
  m.def("trace_norm", &trace_norm, py::arg("h"));
  m.def("operator_norm", &operator_norm, py::arg("m"));

  // --- states ---------------------------------------------------------------
  py::class_<BipartiteState>(m, "BipartiteState")
      .def_static("make", &BipartiteState::make, py::arg("idx"), py::arg("rho"))
      .def_readonly("idx", &BipartiteState::idx)
      .def_readonly("rho", &BipartiteState::rho);

  py::class_<PureState>(m, "PureState")
      .def_static("make", &PureState::make, py::arg("idx"), py::arg("amplitudes"))
      .def_readonly("idx", &PureState::idx)
      .def_readonly("amplitudes", &PureState::amplitudes)
      .def("density", &PureState::density);

  py::class_<SchmidtData>(m, "SchmidtData")
      .def_readonly("idx", &SchmidtData::idx)
      .def_readonly("coefficients", &SchmidtData::coefficients)
      .def_readonly("basis_a", &SchmidtData::basis_a)
      .def_readonly("basis_b", &SchmidtData::basis_b)
      .def("reconstruct", &SchmidtData::reconstruct);

  m.def("negativity_exact", py::overload_cast<const BipartiteState&>(&negativity_exact),
        py::arg("state"));
  m.def("negativity_exact", py::overload_cast<const PureState&>(&negativity_exact),
        py::arg("state"));
  m.def("schmidt", &schmidt, py::arg("state"));
  m.def("negativity_pure", &negativity_pure, py::arg("schmidt_data"));
  m.def("make_bell_like", &make_bell_like, py::arg("lambda0"));
  m.def("make_noisy", &make_noisy, py::arg("lambda0"), py::arg("p"));
  m.def("make_four_qubit", &make_four_qubit, py::arg("lambdas"));
  m.def("make_max_entangled", &make_max_entangled, py::arg("n"));
  m.def("random_pure", &random_pure, py::arg("idx"), py::arg("seed"));
  m.def("random_mixed", &random_mixed, py::arg("idx"), py::arg("rank"), py::arg("seed"));

  // --- entanglement conditions ---------------------------------------------
  py::enum_<Condition>(m, "Condition")
      .value("first", Condition::First)
      .value("second", Condition::Second);

  py::class_<LocalOperator>(m, "LocalOperator")
      .def(py::init([](Subsystem side, Matrix matrix) {
             return LocalOperator{side, std::move(matrix)};
           }),
           py::arg("side"), py::arg("matrix"))
      .def_readonly("side", &LocalOperator::side)
      .def_readonly("matrix", &LocalOperator::matrix);

  py::class_<RankOnePair>(m, "RankOnePair")
      .def_static("make", &RankOnePair::make, py::arg("eta0"), py::arg("eta1"), py::arg("xi0"),
                  py::arg("xi1"))
      .def_readonly("eta0", &RankOnePair::eta0)
      .def_readonly("eta1", &RankOnePair::eta1)
      .def_readonly("xi0", &RankOnePair::xi0)
      .def_readonly("xi1", &RankOnePair::xi1);

  py::class_<KappaReport>(m, "KappaReport")
      .def_readonly("condition", &KappaReport::condition)
      .def_readonly("kappa", &KappaReport::kappa)
      .def_readonly("mean_op", &KappaReport::mean_op)
      .def_readonly("mean_AdABdB", &KappaReport::mean_AdABdB)
      .def_readonly("mean_AdA", &KappaReport::mean_AdA)
      .def_readonly("mean_BdB", &KappaReport::mean_BdB)
      .def_readonly("alpha", &KappaReport::alpha)
      .def_readonly("a_diag", &KappaReport::a_diag)
      .def("consistent", &KappaReport::consistent, py::arg("tol") = 1e-10);

  m.def("expectation", &expectation, py::arg("state"), py::arg("op_a"), py::arg("op_b"));
  m.def("rank_one", &rank_one, py::arg("pair"));
  m.def("kappa_first",
        py::overload_cast<const BipartiteState&, const LocalOperator&, const LocalOperator&>(
            &kappa_first),
        py::arg("state"), py::arg("a"), py::arg("b"));
  m.def("kappa_first", py::overload_cast<const BipartiteState&, const RankOnePair&>(&kappa_first),
        py::arg("state"), py::arg("pair"));
  m.def("kappa_second",
        py::overload_cast<const BipartiteState&, const LocalOperator&, const LocalOperator&>(
            &kappa_second),
        py::arg("state"), py::arg("a"), py::arg("b"));
  m.def("kappa_second",
        py::overload_cast<const BipartiteState&, const RankOnePair&>(&kappa_second),
        py::arg("state"), py::arg("pair"));

  py::class_<NamedOperatorPair>(m, "NamedOperatorPair")
      .def_readonly("name", &NamedOperatorPair::name)
      .def_readonly("a", &NamedOperatorPair::a)
      .def_readonly("b", &NamedOperatorPair::b)
      .def_readonly("pair", &NamedOperatorPair::pair);

  m.def("four_qubit_operator_sets", &four_qubit_operator_sets);
  m.def("sigma_minus_pair", &sigma_minus_pair);
  m.def("sigma_plus_pair", &sigma_plus_pair);
  m.def("x_basis_pair", &x_basis_pair);

  // --- bounds -----------------------------------------------------------------
  py::enum_<BoundMethod>(m, "BoundMethod")
      .value("first_qubit", BoundMethod::FirstQubit)
      .value("first_improved", BoundMethod::FirstImproved)
      .value("multi_block", BoundMethod::MultiBlock)
      .value("second_method", BoundMethod::SecondMethod)
      .value("second_qubit", BoundMethod::SecondQubit)
      .value("schmidt_known", BoundMethod::SchmidtKnown);

  py::class_<BoundCertificate>(m, "BoundCertificate")
      .def_readonly("method", &BoundCertificate::method)
      .def_readonly("lower_bound", &BoundCertificate::lower_bound)
      .def_readonly("applicable", &BoundCertificate::applicable)
      .def_readonly("inputs", &BoundCertificate::inputs)
      .def_readonly("notes", &BoundCertificate::notes)
      .def(py::self == py::self)
      .def("__repr__", [](const BoundCertificate& c) {
        return "BoundCertificate(" + to_string(c.method) +
               ", lower_bound=" + std::to_string(c.lower_bound) +
               ", applicable=" + (c.applicable ? std::string("True") : std::string("False")) + ")";
      });

  py::class_<ProjectorPair>(m, "ProjectorPair")
      .def_static("make", &ProjectorPair::make, py::arg("p_a"), py::arg("p_b"))
      .def_readonly("p_a", &ProjectorPair::p_a)
      .def_readonly("p_b", &ProjectorPair::p_b);

  m.def("projector_from_pair", &projector_from_pair, py::arg("pair"));
  m.def("bound_first_qubit", &bound_first_qubit, py::arg("kappa"));
  m.def("bound_first_improved", &bound_first_improved, py::arg("kappa"), py::arg("a"));
  m.def("pinched_norms", &pinched_norms, py::arg("state"), py::arg("projectors"));
  m.def("bound_multi_block", &bound_multi_block, py::arg("kappas"));
  m.def("bound_second_method", &bound_second_method, py::arg("kappa"), py::arg("x"), py::arg("y"));
  m.def("bound_second_method_quadratic", &bound_second_method_quadratic, py::arg("kappa"),
        py::arg("x"), py::arg("y"));
  m.def("bound_second_zero_x", &bound_second_zero_x, py::arg("kappa"), py::arg("y"));
  m.def("bound_second_qubit", &bound_second_qubit, py::arg("kappa"), py::arg("alpha"),
        py::arg("assume_negative_branch") = false);
  m.def("bound_schmidt_known",
        py::overload_cast<Complex>(&bound_schmidt_known), py::arg("mean_AdB"));
  m.def("bound_schmidt_known",
        py::overload_cast<const BipartiteState&, const LocalOperator&, const LocalOperator&>(
            &bound_schmidt_known),
        py::arg("state"), py::arg("a"), py::arg("b"));
  m.def("schmidt_partition_operators", &schmidt_partition_operators, py::arg("schmidt_data"),
        py::arg("k"));

  // --- search -----------------------------------------------------------------
  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("method", &SearchConfig::method)
      .def_readwrite("restarts", &SearchConfig::restarts)
      .def_readwrite("max_iters", &SearchConfig::max_iters)
      .def_readwrite("step_init", &SearchConfig::step_init)
      .def_readwrite("step_min", &SearchConfig::step_min)
      .def_readwrite("seed", &SearchConfig::seed);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("best_pair", &SearchResult::best_pair)
      .def_readonly("best_report", &SearchResult::best_report)
      .def_readonly("best_certificate", &SearchResult::best_certificate)
      .def_readonly("restart_best", &SearchResult::restart_best);

  m.def("pair_parameter_count", &pair_parameter_count, py::arg("idx"));
  m.def("parameterize_pair", &parameterize_pair, py::arg("idx"), py::arg("params"));
  m.def("evaluate_bound", &evaluate_bound, py::arg("state"), py::arg("pair"), py::arg("method"));
  m.def("evaluate_report", &evaluate_report, py::arg("state"), py::arg("pair"), py::arg("method"));
  m.def("optimize", &optimize, py::arg("state"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  // --- spin-boson model ---------------------------------------------------------
  py::class_<DickeModel>(m, "DickeModel")
      .def_static("make", &DickeModel::make, py::arg("j"), py::arg("n_max"),
                  py::arg("omega") = 1.0, py::arg("g") = 0.2)
      .def_readonly("j", &DickeModel::j)
      .def_readonly("n_max", &DickeModel::n_max)
      .def_readonly("omega", &DickeModel::omega)
      .def_readonly("g", &DickeModel::g)
      .def("spin_dim", &DickeModel::spin_dim)
      .def("field_dim", &DickeModel::field_dim)
      .def("index", &DickeModel::index);

  py::enum_<SchmidtVectorStatus>(m, "SchmidtVectorStatus")
      .value("confirmed", SchmidtVectorStatus::Confirmed)
      .value("indeterminate", SchmidtVectorStatus::Indeterminate)
      .value("failed", SchmidtVectorStatus::Failed);

  py::class_<SchmidtVectorEntry>(m, "SchmidtVectorEntry")
      .def_readonly("s", &SchmidtVectorEntry::s)
      .def_readonly("spin_level", &SchmidtVectorEntry::spin_level)
      .def_readonly("boson_level", &SchmidtVectorEntry::boson_level)
      .def_readonly("status", &SchmidtVectorEntry::status)
      .def_readonly("overlap_a", &SchmidtVectorEntry::overlap_a)
      .def_readonly("overlap_b", &SchmidtVectorEntry::overlap_b)
      .def_readonly("coefficient", &SchmidtVectorEntry::coefficient);

  py::class_<SchmidtVectorReport>(m, "SchmidtVectorReport")
      .def_readonly("time", &SchmidtVectorReport::time)
      .def_readonly("evolved", &SchmidtVectorReport::evolved)
      .def_readonly("schmidt_data", &SchmidtVectorReport::schmidt_data)
      .def_readonly("entries", &SchmidtVectorReport::entries)
      .def("confirmed_count", &SchmidtVectorReport::confirmed_count);

  py::class_<DickeBoundResult>(m, "DickeBoundResult")
      .def_readonly("certificate", &DickeBoundResult::certificate)
      .def_readonly("k_used", &DickeBoundResult::k_used)
      .def_readonly("check", &DickeBoundResult::check);

  m.def("sector_dim", &sector_dim, py::arg("model"), py::arg("excitation"));
  m.def("build_hamiltonian_sector", &build_hamiltonian_sector, py::arg("model"),
        py::arg("excitation"));
  m.def("build_hamiltonian_full", &build_hamiltonian_full, py::arg("model"));
  m.def("excitation_expectation", &excitation_expectation, py::arg("model"), py::arg("state"));
  m.def("spin_field_basis_state", &spin_field_basis_state, py::arg("model"), py::arg("l"),
        py::arg("n"));
  m.def("make_two_level_initial", &make_two_level_initial, py::arg("model"), py::arg("c0"),
        py::arg("c1"), py::arg("l1"), py::arg("l2"));
  m.def("evolve", &evolve, py::arg("model"), py::arg("initial"), py::arg("t"));
  m.def("schmidt_vector_check", &schmidt_vector_check, py::arg("model"), py::arg("c0"),
        py::arg("c1"), py::arg("l1"), py::arg("l2"), py::arg("t"));
  m.def("dicke_schmidt_bound", &dicke_schmidt_bound, py::arg("model"), py::arg("c0"),
        py::arg("c1"), py::arg("l1"), py::arg("l2"), py::arg("t"), py::arg("k") = 0);

  // --- verification suites -------------------------------------------------------
  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("name", &SuiteResult::name)
      .def_readonly("checks", &SuiteResult::checks)
      .def_readonly("failures", &SuiteResult::failures)
      .def_readonly("failure_details", &SuiteResult::failure_details)
      .def_readonly("elapsed_seconds", &SuiteResult::elapsed_seconds)
      .def("passed", &SuiteResult::passed);

  m.def("suite_names", &suite_names);
  m.def("run_suite", &run_suite, py::arg("name"), py::call_guard<py::gil_scoped_release>());
}
