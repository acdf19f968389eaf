#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fbmcusum/changepoint.hpp"
#include "fbmcusum/cli.hpp"
#include "fbmcusum/cusum.hpp"
#include "fbmcusum/estimators.hpp"
#include "fbmcusum/fgn.hpp"
#include "fbmcusum/gamma.hpp"
#include "fbmcusum/ks.hpp"
#include "fbmcusum/montecarlo.hpp"

namespace py = pybind11;
using namespace fbmcusum;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cusum tests for changes in the Hurst exponent or volatility of fractional Brownian motion";
  m.attr("__version__") = kToolVersion;

  py::register_exception<DegenerateDataError>(m, "DegenerateDataError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::enum_<Order>(m, "Order").value("FIRST", Order::First).value("SECOND", Order::Second);
  py::enum_<Glue>(m, "Glue")
      .value("INDEPENDENT_PIECES", Glue::IndependentPieces)
      .value("APPENDED_INCREMENTS", Glue::AppendedIncrements);
  py::enum_<Kernel>(m, "Kernel")
      .value("BARTLETT", Kernel::Bartlett)
      .value("TRUNCATED_FLAT", Kernel::TruncatedFlat)
      .value("ALL_LAGS_LITERAL", Kernel::AllLagsLiteral);
  py::enum_<Verdict>(m, "Verdict")
      .value("HURST_INCREASE", Verdict::HurstIncrease)
      .value("HURST_DECREASE", Verdict::HurstDecrease)
      .value("VOLATILITY_CHANGE", Verdict::VolatilityChange)
      .value("INCONCLUSIVE", Verdict::Inconclusive);
  py::enum_<Scenario>(m, "Scenario").value("SIZE", Scenario::Size).value("POWER", Scenario::Power);

  py::class_<HurstParams>(m, "HurstParams")
      .def(py::init<double, double>(), py::arg("hurst") = 0.5, py::arg("sigma") = 1.0)
      .def_readwrite("hurst", &HurstParams::hurst)
      .def_readwrite("sigma", &HurstParams::sigma)
      .def("__repr__", [](const HurstParams& p) {
        return "HurstParams(hurst=" + std::to_string(p.hurst) + ", sigma=" + std::to_string(p.sigma) + ")";
      });

  py::class_<ChangeSpec>(m, "ChangeSpec")
      .def(py::init<double, HurstParams, HurstParams, Glue>(), py::arg("theta"), py::arg("pre"), py::arg("post"),
           py::arg("glue") = Glue::IndependentPieces)
      .def_readwrite("theta", &ChangeSpec::theta)
      .def_readwrite("pre", &ChangeSpec::pre)
      .def_readwrite("post", &ChangeSpec::post)
      .def_readwrite("glue", &ChangeSpec::glue)
      .def("break_index", &ChangeSpec::break_index, py::arg("n"));

  py::class_<Seed>(m, "Seed")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("key") = 0, py::arg("stream") = 0)
      .def_readwrite("key", &Seed::key)
      .def_readwrite("stream", &Seed::stream);

  py::class_<SamplePath>(m, "SamplePath")
      .def_static("from_levels", &SamplePath::from_levels, py::arg("levels"))
      .def_static("from_increments",
                  [](const std::vector<double>& inc) { return SamplePath::from_increments(inc); },
                  py::arg("increments"))
      .def_property_readonly("n", &SamplePath::n)
      .def_property_readonly("delta", &SamplePath::delta)
      .def_property_readonly("values", &SamplePath::values)
      .def("scaled", &SamplePath::scaled, py::arg("c"))
      .def("__len__", [](const SamplePath& p) { return p.values().size(); });

  py::class_<LrvConfig>(m, "LrvConfig")
      .def(py::init([](Kernel kernel, std::optional<std::size_t> bandwidth) { return LrvConfig{kernel, bandwidth}; }),
           py::arg("kernel") = Kernel::Bartlett, py::arg("bandwidth") = py::none())
      .def_readwrite("kernel", &LrvConfig::kernel)
      .def_readwrite("bandwidth", &LrvConfig::bandwidth);

  py::class_<CusumResult>(m, "CusumResult")
      .def_readonly("statistic", &CusumResult::statistic)
      .def_readonly("trace", &CusumResult::trace)
      .def_readonly("argmax_index", &CusumResult::argmax_index)
      .def_readonly("long_run_sd", &CusumResult::long_run_sd)
      .def_readonly("order", &CusumResult::order)
      .def_readonly("n", &CusumResult::n)
      .def_readonly("p_value", &CusumResult::p_value)
      .def_readonly("reject_at", &CusumResult::reject_at)
      .def("rejects", &CusumResult::rejects, py::arg("alpha"));

  py::class_<HurstEstimate>(m, "HurstEstimate")
      .def_readonly("hurst", &HurstEstimate::hurst)
      .def_readonly("n", &HurstEstimate::n)
      .def("in_range", &HurstEstimate::in_range);

  py::class_<GammaSeries>(m, "GammaSeries")
      .def_readonly("hurst", &GammaSeries::hurst)
      .def_readonly("value", &GammaSeries::value)
      .def_readonly("truncation_lag", &GammaSeries::truncation_lag)
      .def_readonly("tail_bound", &GammaSeries::tail_bound);

  py::class_<BreakEstimate>(m, "BreakEstimate")
      .def(py::init<double, std::size_t, Order>(), py::arg("theta_hat"), py::arg("index"),
           py::arg("order") = Order::First)
      .def_readonly("theta_hat", &BreakEstimate::theta_hat)
      .def_readonly("index", &BreakEstimate::index)
      .def_readonly("order", &BreakEstimate::order);

  py::class_<DiscriminationConfig>(m, "DiscriminationConfig")
      .def(py::init<double>(), py::arg("delta") = 0.3)
      .def_readwrite("delta", &DiscriminationConfig::delta)
      .def("upper", &DiscriminationConfig::upper)
      .def("lower", &DiscriminationConfig::lower);

  py::class_<ChangeDiagnosis>(m, "ChangeDiagnosis")
      .def_readonly("q_ratio", &ChangeDiagnosis::q_ratio)
      .def_readonly("verdict", &ChangeDiagnosis::verdict)
      .def_readonly("sigma_ratio_estimate", &ChangeDiagnosis::sigma_ratio_estimate)
      .def_readonly("zero_denominator", &ChangeDiagnosis::zero_denominator);

  py::class_<BlockResult>(m, "BlockResult")
      .def_readonly("start", &BlockResult::start)
      .def_readonly("length", &BlockResult::length)
      .def_readonly("test", &BlockResult::test)
      .def_readonly("hurst", &BlockResult::hurst)
      .def_readonly("degenerate", &BlockResult::degenerate)
      .def_readonly("error", &BlockResult::error);

  py::class_<BlockScan>(m, "BlockScan")
      .def_readonly("blocks", &BlockScan::blocks)
      .def_readonly("alpha", &BlockScan::alpha)
      .def_readonly("rejected", &BlockScan::rejected)
      .def_readonly("tested", &BlockScan::tested)
      .def("non_rejection_fraction", &BlockScan::non_rejection_fraction);

  py::class_<McExperiment>(m, "McExperiment")
      .def(py::init<>())
      .def_readwrite("scenario", &McExperiment::scenario)
      .def_readwrite("null_params", &McExperiment::null_params)
      .def_readwrite("alt_spec", &McExperiment::alt_spec)
      .def_readwrite("n", &McExperiment::n)
      .def_readwrite("reps", &McExperiment::reps)
      .def_readwrite("order", &McExperiment::order)
      .def_readwrite("lrv", &McExperiment::lrv)
      .def_readwrite("alpha_grid", &McExperiment::alpha_grid)
      .def_readwrite("master_seed", &McExperiment::master_seed);

  py::class_<McReport>(m, "McReport")
      .def_readonly("statistics", &McReport::statistics)
      .def_readonly("argmax_indices", &McReport::argmax_indices)
      .def_readonly("percentiles", &McReport::percentiles)
      .def_readonly("coverage", &McReport::coverage)
      .def_readonly("rejection_rate", &McReport::rejection_rate)
      .def_readonly("degenerate", &McReport::degenerate)
      .def_property_readonly("median", [](const McReport& r) { return r.summary.median; });

  m.def("fgn_autocorrelation", &fgn_autocorrelation, py::arg("hurst"), py::arg("lag"));
  m.def("sample_fgn", &sample_fgn, py::arg("params"), py::arg("n"), py::arg("seed"));
  m.def("sample_path", &sample_path, py::arg("params"), py::arg("n"), py::arg("seed"));
  m.def("sample_path_with_change", &sample_path_with_change, py::arg("spec"), py::arg("n"), py::arg("seed"));

  m.def("increments", [](const SamplePath& p, Order o) { return increments(p, o).values; }, py::arg("path"),
        py::arg("order") = Order::First);
  m.def("hurst_known_sigma", &hurst_known_sigma, py::arg("path"));
  m.def("hurst_qv_ratio", &hurst_qv_ratio, py::arg("path"));
  m.def("sigma_plugin", &sigma_plugin, py::arg("path"), py::arg("hurst"));

  m.def("ks_cdf", &ks_cdf, py::arg("x"));
  m.def("ks_quantile", &ks_quantile, py::arg("p"));
  m.def("gamma_series", &gamma_series, py::arg("hurst"), py::arg("tol") = 1e-12);
  m.def("long_run_variance",
        [](const std::vector<double>& dev, const LrvConfig& cfg) { return long_run_variance(dev, cfg); },
        py::arg("deviations"), py::arg("config") = LrvConfig{});

  m.def("cusum_from_squares",
        [](const std::vector<double>& squares, Order order, const LrvConfig& cfg) {
          return cusum_from_squares(squares, order, cfg);
        },
        py::arg("squares"), py::arg("order") = Order::First, py::arg("config") = LrvConfig{});
  m.def("cusum_statistic", &cusum_statistic, py::arg("path"), py::arg("order") = Order::First,
        py::arg("config") = LrvConfig{});
  m.def("run_test", &run_test, py::arg("path"), py::arg("alpha") = 0.05, py::arg("order") = Order::First,
        py::arg("config") = LrvConfig{});

  m.def("estimate_break", &estimate_break, py::arg("result"));
  m.def("discriminate", &discriminate, py::arg("path"), py::arg("break_estimate"),
        py::arg("config") = DiscriminationConfig{});
  m.def("block_scan", &block_scan, py::arg("series"), py::arg("block_len"), py::arg("alpha") = 0.05,
        py::arg("order") = Order::First, py::arg("config") = LrvConfig{});

  m.def("run_experiment", &run_experiment, py::arg("experiment"), py::arg("parallelism") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("ks_fit_distance", &ks_fit_distance, py::arg("report"));

  m.def("read_series",
        [](const std::string& path, bool increments) {
          return read_series(path, increments ? DataKind::Increments : DataKind::Levels);
        },
        py::arg("path"), py::arg("increments") = false);
}
