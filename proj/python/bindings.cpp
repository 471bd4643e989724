#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tenpara/figure.hpp"
#include "tenpara/io.hpp"
#include "tenpara/paraproduct.hpp"
#include "tenpara/random_field.hpp"
#include "tenpara/ring.hpp"
#include "tenpara/verify.hpp"
#include "tenpara/wavelet1d.hpp"

namespace py = pybind11;
using namespace tenpara;

namespace {

UnitGridField field_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& array) {
    if (array.ndim() != 2) throw ShapeError("expected a 2D array");
    const auto rows = static_cast<std::size_t>(array.shape(0));
    const auto cols = static_cast<std::size_t>(array.shape(1));
    const int lx = level_of_length(rows);
    const int ly = level_of_length(cols);
    std::vector<double> values(array.data(), array.data() + rows * cols);
    return UnitGridField(lx, ly, std::move(values));
}

py::array_t<double> array_from_field(const UnitGridField& field) {
    py::array_t<double> out({field.rows(), field.cols()});
    std::copy(field.values().begin(), field.values().end(), out.mutable_data());
    return out;
}

py::array_t<double> array_from_block(const std::vector<double>& block, int j, int jp) {
    py::array_t<double> out({std::int64_t{1} << j, std::int64_t{1} << jp});
    std::copy(block.begin(), block.end(), out.mutable_data());
    return out;
}

Nonlinearity resolve_nonlinearity(const py::object& spec) {
    if (py::isinstance<py::str>(spec)) return Nonlinearity::by_name(spec.cast<std::string>());
    const py::tuple t = spec.cast<py::tuple>();
    if (t.size() != 3) {
        throw std::domain_error("nonlinearity must be a name or a (A, A', A'') callable triple");
    }
    auto wrap = [](py::object fn) {
        return [fn = std::move(fn)](double u) { return fn(u).cast<double>(); };
    };
    return Nonlinearity("custom", wrap(t[0]), wrap(t[1]), wrap(t[2]));
}

py::dict fit_to_dict(const DecayFit& fit) {
    py::dict d;
    d["valid"] = fit.valid;
    d["slope"] = fit.slope;
    d["intercept_log2"] = fit.intercept_log2;
    d["r_squared"] = fit.r_squared;
    return d;
}

} // namespace

PYBIND11_MODULE(_tenpara, m) {
    m.doc() = "Multiscale tensor paraproduct decomposition of nonlinear compositions";

    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<LevelError>(m, "LevelError", PyExc_ValueError);
    py::register_exception<EvalError>(m, "EvalError", PyExc_ArithmeticError);
    py::register_exception<IoError>(m, "IoError", PyExc_IOError);

    py::class_<TensorCoeffPyramid>(m, "TensorCoeffPyramid")
        .def_property_readonly("max_level_x", &TensorCoeffPyramid::max_level_x)
        .def_property_readonly("max_level_y", &TensorCoeffPyramid::max_level_y)
        .def(
            "block",
            [](const TensorCoeffPyramid& p, const std::string& kind, int j, int jp) {
                return array_from_block(p.block(operator_kind_from_name(kind), j, jp), j, jp);
            },
            py::arg("kind"), py::arg("j"), py::arg("jp"),
            "Coefficient block (2^j x 2^j') for one family: scaling_scaling, "
            "scaling_wavelet, wavelet_scaling or wavelet_wavelet");

    py::class_<DecayReport>(m, "DecayReport")
        .def_property_readonly("all_zero", [](const DecayReport& r) { return r.all_zero; })
        .def_property_readonly("fit", [](const DecayReport& r) { return fit_to_dict(r.fit); })
        .def(
            "sup",
            [](const DecayReport& r, const std::string& kind, int j, int jp) {
                return r.sup(operator_kind_from_name(kind), j, jp);
            },
            py::arg("kind"), py::arg("j"), py::arg("jp"));

    py::class_<Decomposition>(m, "Decomposition")
        .def_property_readonly("approx",
                               [](const Decomposition& d) { return array_from_field(d.approx); })
        .def_property_readonly("residual",
                               [](const Decomposition& d) { return array_from_field(d.residual); })
        .def_property_readonly("nonlinear",
                               [](const Decomposition& d) { return array_from_field(d.nonlinear); })
        .def_property_readonly("input",
                               [](const Decomposition& d) { return array_from_field(d.input); })
        .def_property_readonly("nonlinearity_name",
                               [](const Decomposition& d) { return d.nonlinearity_name; })
        .def_property_readonly("scales", [](const Decomposition& d) {
            return py::make_tuple(d.scales.n_x, d.scales.n_y);
        });

    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("alpha", &ResidualReport::alpha)
        .def_readonly("residual_linf", &ResidualReport::residual_linf)
        .def_readonly("input_norm_alpha", &ResidualReport::input_norm_alpha)
        .def_readonly("residual_norm_2alpha", &ResidualReport::residual_norm_2alpha)
        .def_readonly("norm_ratio", &ResidualReport::norm_ratio)
        .def_readonly("ratio_applicable", &ResidualReport::ratio_applicable)
        .def_property_readonly("decay_fit", [](const ResidualReport& r) {
            return fit_to_dict(r.residual_decay.fit);
        });

    m.def(
        "generate_ring",
        [](double alpha, double radius, int grid_level) {
            return array_from_field(generate_ring(RingFieldSpec{alpha, radius, grid_level}));
        },
        py::arg("alpha"), py::arg("radius") = 0.3, py::arg("grid_level") = 9);

    m.def(
        "random_field",
        [](int level_x, int level_y, double holder_alpha, std::uint64_t seed) {
            return array_from_field(random_field(level_x, level_y, holder_alpha, seed));
        },
        py::arg("level_x"), py::arg("level_y"), py::arg("holder_alpha"), py::arg("seed"));

    m.def(
        "analyze_1d",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& values) {
            const CoeffPyramid1D p = analyze_1d(values.cast<std::vector<double>>());
            py::dict d;
            py::list scaling, detail;
            for (const auto& level : p.scaling) scaling.append(py::cast(level));
            for (const auto& level : p.detail) detail.append(py::cast(level));
            d["max_level"] = p.max_level;
            d["scaling"] = scaling;
            d["detail"] = detail;
            return d;
        },
        py::arg("values"), "Full 1D Haar analysis; returns scaling/detail levels 0..max_level");

    m.def(
        "synthesize_1d",
        [](const py::dict& pyramid, int level) {
            CoeffPyramid1D p;
            p.max_level = pyramid["max_level"].cast<int>();
            p.scaling = pyramid["scaling"].cast<std::vector<std::vector<double>>>();
            p.detail = pyramid["detail"].cast<std::vector<std::vector<double>>>();
            return synthesize_1d(p, level);
        },
        py::arg("pyramid"), py::arg("level"));

    m.def(
        "project",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& values, int j) {
            const auto v = values.cast<std::vector<double>>();
            return project_P(v, j);
        },
        py::arg("values"), py::arg("j"), "Block-mean projection P^j of a 1D sample vector");

    m.def(
        "detail",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& values, int j) {
            const auto v = values.cast<std::vector<double>>();
            return detail_Q(v, j);
        },
        py::arg("values"), py::arg("j"), "Detail operator Q^j = P^(j+1) - P^j");

    m.def(
        "tensor_analyze",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& field, int n, int np) {
            return tensor_analyze(field_from_array(field), n, np);
        },
        py::arg("field"), py::arg("max_level_x"), py::arg("max_level_y"));

    m.def(
        "tensor_synthesize",
        [](const TensorCoeffPyramid& pyramid, int level_x, int level_y) {
            return array_from_field(tensor_synthesize(pyramid, level_x, level_y));
        },
        py::arg("pyramid"), py::arg("level_x"), py::arg("level_y"));

    m.def(
        "apply_operator",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& field, int j, int jp,
           const std::string& kind) {
            return array_from_field(
                apply_operator(field_from_array(field), j, jp, operator_kind_from_name(kind)));
        },
        py::arg("field"), py::arg("j"), py::arg("jp"), py::arg("kind"));

    m.def(
        "decompose",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& field, const py::object& nonlinearity,
           int n, int np, bool keep_terms) {
            return decompose(field_from_array(field), resolve_nonlinearity(nonlinearity),
                             ScaleRange{n, np}, keep_terms);
        },
        py::arg("field"), py::arg("nonlinearity"), py::arg("n"), py::arg("np"),
        py::arg("keep_terms") = false);

    m.def(
        "residual_report",
        [](const Decomposition& dec, double alpha, int analysis_level_x, int analysis_level_y) {
            return residual_report(dec, alpha, analysis_level_x, analysis_level_y);
        },
        py::arg("decomposition"), py::arg("alpha"), py::arg("analysis_level_x") = -1,
        py::arg("analysis_level_y") = -1);

    m.def(
        "decay_report",
        [](const TensorCoeffPyramid& pyramid) { return decay_report(pyramid); },
        py::arg("pyramid"));

    m.def(
        "estimate_alpha",
        [](const DecayReport& report, double offset) {
            const HolderEstimate est = estimate_alpha(report, offset);
            py::dict d;
            d["alpha_hat"] = est.alpha_hat;
            d["norm_value"] = est.norm_value;
            d["offset"] = est.exponent_offset;
            return d;
        },
        py::arg("report"), py::arg("offset") = 0.5);

    m.def(
        "mixed_holder_norm",
        [](const TensorCoeffPyramid& pyramid, double alpha, double offset) {
            return mixed_holder_norm(pyramid, alpha, offset);
        },
        py::arg("pyramid"), py::arg("alpha"), py::arg("offset") = 0.5);

    m.def(
        "direct_mixed_holder_quotients",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& field, double alpha,
           std::int64_t samples) {
            return direct_mixed_holder_quotients(field_from_array(field), alpha, samples);
        },
        py::arg("field"), py::arg("alpha"), py::arg("sample_count") = 100000);

    m.def(
        "telescoping_mixed_sum",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& field, const py::object& nonlinearity,
           int n, int np) {
            const TelescopeResult tel = telescoping_mixed_sum(
                field_from_array(field), resolve_nonlinearity(nonlinearity), ScaleRange{n, np});
            py::dict d;
            d["sum"] = array_from_field(tel.sum);
            d["collapse"] = array_from_field(tel.collapse());
            d["collapse_error"] = tel.collapse_error;
            return d;
        },
        py::arg("field"), py::arg("nonlinearity"), py::arg("n"), py::arg("np"));

    m.def(
        "residual_integral_form",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& field, const py::object& nonlinearity,
           int n, int np, int quad_order) {
            return array_from_field(residual_integral_form(
                field_from_array(field), resolve_nonlinearity(nonlinearity), ScaleRange{n, np},
                quad_order));
        },
        py::arg("field"), py::arg("nonlinearity"), py::arg("n"), py::arg("np"),
        py::arg("quad_order") = 8);

    m.def(
        "write_tpmx",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& field, const std::string& path) {
            write_tpmx(field_from_array(field), path);
        },
        py::arg("field"), py::arg("path"));

    m.def(
        "read_tpmx", [](const std::string& path) { return array_from_field(read_tpmx(path)); },
        py::arg("path"));

    m.def(
        "write_pgm",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& field, const std::string& path) {
            write_pgm(field_from_array(field), path);
        },
        py::arg("field"), py::arg("path"));

    m.def("run_figure", &run_figure, py::arg("output_dir"), py::arg("grid_level") = 9);

    m.def(
        "run_verify",
        [](const std::string& suite, int size, std::uint64_t seed, int quad_order) {
            const VerifyReport report = run_verify(suite, size, seed, quad_order);
            py::list checks;
            for (const CheckResult& c : report.checks) {
                py::dict d;
                d["suite"] = c.suite;
                d["name"] = c.name;
                d["value"] = c.value;
                d["threshold"] = c.threshold;
                d["pass"] = c.pass;
                checks.append(d);
            }
            py::dict out;
            out["all_pass"] = report.all_pass();
            out["checks"] = checks;
            return out;
        },
        py::arg("suite"), py::arg("size") = 32, py::arg("seed") = 7, py::arg("quad_order") = 8);
}
