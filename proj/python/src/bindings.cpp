// SPDX-License-Identifier: Apache-2.0
//
// Python bindings. Complex Eigen matrices map to numpy complex128 arrays;
// structured data (scenes, paths, configs) crosses the boundary as JSON text.

#include <optional>
#include <string>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "twinsense/channel.hpp"
#include "twinsense/csense.hpp"
#include "twinsense/harness.hpp"
#include "twinsense/learn.hpp"
#include "twinsense/precoding.hpp"
#include "twinsense/raytrace.hpp"
#include "twinsense/scene.hpp"

namespace py = pybind11;
using namespace twinsense;

namespace
{

precoding::Codebook as_codebook(const CMatrix &vectors) { return {vectors, "custom"}; }

harness::ExperimentConfig config_with(const std::string &path, std::optional<std::uint64_t> seed,
                                      std::optional<std::string> out)
{
    auto cfg = harness::load_config(path);
    if (seed)
        cfg.seed = *seed;
    if (out)
        cfg.output_dir = *out;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Digital-twin assisted learned beam prediction (C++ core)";
    m.attr("__version__") = TWINSENSE_PY_VERSION;

    auto base = py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

    // scene
    m.def(
        "validate_scene", [](const std::string &text) {
            return scene::validate_scene(scene::scene_from_json(nlohmann::json::parse(text)));
        },
        py::arg("scene_json"), "List of validation errors for a scene given as JSON text.");
    m.def(
        "perturb_scene",
        [](const std::string &text, double error_m, bool drop_foliage, std::uint64_t seed) {
            const auto s = scene::scene_from_json(nlohmann::json::parse(text));
            return scene::scene_to_json(scene::perturb_scene(s, {error_m, drop_foliage, seed})).dump();
        },
        py::arg("scene_json"), py::arg("building_error_m"), py::arg("drop_foliage") = false, py::arg("seed") = 0);
    m.def(
        "user_grid",
        [](const std::string &text) {
            const auto users = scene::generate_user_grid(scene::scene_from_json(nlohmann::json::parse(text)));
            RMatrix out(static_cast<Eigen::Index>(users.size()), 3);
            for (std::size_t i = 0; i < users.size(); ++i)
                out.row(static_cast<Eigen::Index>(i)) << users[i].x, users[i].y, users[i].z;
            return out;
        },
        py::arg("scene_json"), "User positions as an (n, 3) array.");

    // raytrace
    m.def(
        "trace_paths",
        [](const std::string &text, double x, double y, double z, int max_order) {
            rt::RayConfig cfg;
            cfg.max_order = max_order;
            const Vec3 user{x, y, z};
            const auto s = scene::scene_from_json(nlohmann::json::parse(text));
            return rt::paths_to_json(user, rt::trace_paths(s, user, cfg)).dump();
        },
        py::arg("scene_json"), py::arg("x"), py::arg("y"), py::arg("z"), py::arg("max_order") = 4);

    // channel
    m.def("array_response", &channel::array_response, py::arg("angle_rad"), py::arg("n_antennas"));

    // precoding
    m.def(
        "dft_codebook", [](int n) { return precoding::dft_codebook(n).vectors; }, py::arg("n"));
    m.def(
        "label_beam", [](const CVector &h, const CMatrix &cb) { return precoding::label_beam(h, as_codebook(cb)); },
        py::arg("h"), py::arg("codebook"));
    m.def("spectral_efficiency", &precoding::spectral_efficiency, py::arg("H"), py::arg("F"), py::arg("W"),
          py::arg("snr"));
    m.def(
        "exhaustive_search",
        [](const CMatrix &H, const CMatrix &tx, const CMatrix &rx, double snr, int streams, int tx_rf, int rx_rf) {
            const auto r = precoding::exhaustive_search(H, as_codebook(tx), as_codebook(rx), snr, streams, tx_rf, rx_rf);
            return py::make_tuple(r.tx, r.rx, r.rate);
        },
        py::arg("H"), py::arg("tx_codebook"), py::arg("rx_codebook"), py::arg("snr"), py::arg("streams"),
        py::arg("tx_rf"), py::arg("rx_rf"));

    // csense
    m.def(
        "sensing_operator",
        [](const CMatrix &P, const CMatrix &Q, double power) {
            csense::MeasurementMatrix mm;
            mm.P = P;
            mm.Q = Q;
            mm.power = power;
            return csense::sensing_operator(mm);
        },
        py::arg("P"), py::arg("Q"), py::arg("power") = 1.0);
    m.def(
        "grid_dictionary", [](int n_grid, int n_t, int n_r) { return csense::grid_dictionary(n_grid, n_t, n_r).A_D; },
        py::arg("n_grid"), py::arg("n_t"), py::arg("n_r") = 1);
    m.def(
        "omp",
        [](const CVector &y, const CMatrix &psi, int sparsity, double tol) {
            const auto r = csense::omp(y, psi, sparsity, tol);
            return py::make_tuple(r.z, r.support, r.residual_norm);
        },
        py::arg("y"), py::arg("psi"), py::arg("sparsity"), py::arg("residual_tol") = 1e-9);

    // learn
    py::class_<learn::PredictorModel>(m, "PredictorModel")
        .def_readonly("P_enc", &learn::PredictorModel::P_enc)
        .def_property_readonly("n_t", [](const learn::PredictorModel &p) { return p.meta.n_t; })
        .def_property_readonly("m_t", [](const learn::PredictorModel &p) { return p.meta.m_t; })
        .def_property_readonly("codebook_size", [](const learn::PredictorModel &p) { return p.meta.k; })
        .def("forward", &learn::forward, py::arg("h"), "Beam probabilities for one channel.")
        .def(
            "encode", [](const learn::PredictorModel &p, const CVector &h) { return learn::encode(p, h); },
            py::arg("h"))
        .def(
            "predict",
            [](const learn::PredictorModel &p, const CMatrix &channels) {
                const RMatrix probs = learn::forward_batch(p, channels);
                std::vector<int> out(static_cast<std::size_t>(probs.cols()));
                for (Eigen::Index c = 0; c < probs.cols(); ++c)
                    probs.col(c).maxCoeff(&out[static_cast<std::size_t>(c)]);
                return out;
            },
            py::arg("channels"), "Predicted beam index per column of an N_t x B matrix.");
    m.def("init_model", &learn::init_model, py::arg("n_t"), py::arg("m_t"), py::arg("h1"), py::arg("h2"),
          py::arg("k"), py::arg("seed"));
    m.def("load_checkpoint", &learn::load_checkpoint, py::arg("path"));
    m.def(
        "beam_pattern",
        [](const CMatrix &P, const std::vector<double> &angles) { return learn::beam_pattern(P, angles); },
        py::arg("P"), py::arg("angles_rad"));
    m.def("project_constant_modulus", &learn::project_constant_modulus, py::arg("P"));

    // harness commands, mirroring the command line tool
    m.def(
        "generate",
        [](const std::string &config, std::optional<std::uint64_t> seed, std::optional<std::string> out) {
            harness::cmd_generate(config_with(config, seed, out));
        },
        py::arg("config"), py::arg("seed") = py::none(), py::arg("out") = py::none());
    m.def(
        "sweep",
        [](const std::string &config, std::optional<std::uint64_t> seed, std::optional<std::string> out) {
            return harness::cmd_sweep(config_with(config, seed, out)).csv;
        },
        py::arg("config"), py::arg("seed") = py::none(), py::arg("out") = py::none());
    m.def(
        "refine",
        [](const std::string &config, std::optional<std::uint64_t> seed, std::optional<std::string> out) {
            return harness::cmd_refine(config_with(config, seed, out)).csv;
        },
        py::arg("config"), py::arg("seed") = py::none(), py::arg("out") = py::none());
    m.def(
        "pattern",
        [](const std::string &config, std::optional<std::uint64_t> seed, std::optional<std::string> out) {
            return harness::cmd_pattern(config_with(config, seed, out), std::nullopt, std::nullopt);
        },
        py::arg("config"), py::arg("seed") = py::none(), py::arg("out") = py::none());
    m.def(
        "baseline",
        [](const std::string &config, std::optional<std::uint64_t> seed, std::optional<std::string> out) {
            return harness::cmd_baseline(config_with(config, seed, out)).csv;
        },
        py::arg("config"), py::arg("seed") = py::none(), py::arg("out") = py::none());
}
