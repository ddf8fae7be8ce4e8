#include "xiknot/coloring.hpp"
#include "xiknot/diagram.hpp"
#include "xiknot/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace xiknot;

namespace {

Diagram diagram_of(const std::string& path) { return build_diagram(load_scene_file(path)); }

// Exact values cross the boundary as canonical strings ("a" or "a/b"); the
// python package turns them into Fractions.
std::string xi_report(const std::string& problem_path, const std::string& provider) {
    ProblemInput in = load_problem_file(problem_path);
    if (provider.empty()) return report_json(compute_xi(in));
    if (provider == "computed") {
        ComputedBlockProvider prov(in.scenes);
        return report_json(compute_xi(in, prov));
    }
    if (provider.rfind("table:", 0) == 0) {
        TableBlockProvider prov = TableBlockProvider::load_file(provider.substr(6));
        return report_json(compute_xi(in, prov));
    }
    throw ProblemError("provider must be 'computed' or 'table:<path>'");
}

std::vector<std::vector<std::string>> block_of(const std::string& scene_path,
                                               const std::string& curve,
                                               const std::string& pushoff) {
    ComputedBlockProvider prov({load_scene_file(scene_path)});
    const Mat<Rat> b = prov.block(curve, pushoff);
    std::vector<std::vector<std::string>> out;
    for (int i = 0; i < b.r; ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < b.c; ++j) row.push_back(to_string(b(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_xiknot, m) {
    m.doc() = "exact linking in dihedral branched covers and the xi ribbon obstruction";

    py::register_exception<SceneError>(m, "SceneError");
    py::register_exception<ProblemError>(m, "ProblemError");

    m.def("xi_report_json", &xi_report, py::arg("problem_path"), py::arg("provider") = "",
          "full xi report as a JSON document");

    m.def(
        "lists_text",
        [](const std::string& scene_path, const std::string& component) {
            Diagram d = diagram_of(scene_path);
            return gauss_lists_text(d, d.component_index(component));
        },
        py::arg("scene_path"), py::arg("component") = "alpha",
        "underpass lists of one component, one parenthesized list per line");

    m.def("linking_block", &block_of, py::arg("scene_path"), py::arg("curve"), py::arg("pushoff"),
          "3x3 matrix of linking numbers between labelled lifts, entries as strings");

    m.def(
        "cover_h1",
        [](const std::string& scene_path) {
            CoverComplex cov{LevelComplex(diagram_of(scene_path))};
            std::vector<std::string> out;
            for (const Int& f : cov.h1_factors()) out.push_back(to_string(f));
            return out;
        },
        py::arg("scene_path"),
        "invariant factors of the branched cover's first homology (empty = trivial)");

    m.def(
        "coloring_classes",
        [](const std::string& scene_path) { return coloring_classes(diagram_of(scene_path)); },
        py::arg("scene_path"),
        "one representative coloring per affine-relabelling class");

    m.def(
        "cover_signature",
        [](int p, long long sigma_x, long long e_b, const std::string& xi) {
            return to_string(cover_signature(p, Int(sigma_x), Int(e_b), Rat(xi)));
        },
        py::arg("p"), py::arg("sigma_x"), py::arg("e_b"), py::arg("xi"),
        "p*sigma(X) - (p-1)/4 * e(B) - xi, exactly");

    m.def(
        "ribbon_verdict",
        [](const std::string& xi, int p) { return ribbon_verdict(Rat(xi), p); },
        py::arg("xi"), py::arg("p") = 3);
}
