#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semihom/io.hpp"
#include "semihom/oracle.hpp"

namespace py = pybind11;
using namespace semihom;

namespace {

std::vector<std::vector<std::string>> matrix_strings(const RatMatrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = m(r, c).str();
    return rows;
}

// The complex whose homology detects weak equivalences for the module's kind.
ChainComplex detecting_complex(const DiagramModule& x) {
    switch (x.kind()) {
    case Kind::ssimp: return restrict(Functor::u_delta, x);
    case Kind::scube: return restrict(Functor::u_square, x);
    case Kind::aug_ssimp: return augmented_chain(x);
    default: return to_complex(x);
    }
}

std::map<int, std::size_t> homology_dims(const DiagramModule& x) {
    auto h = homology(detecting_complex(x));
    std::map<int, std::size_t> out;
    for (int n = h.lower; n <= h.upper; ++n)
        out[n] = h.dim(n);
    return out;
}

std::map<int, std::size_t> tor_dims(const DiagramModule& x, const std::string& coeff) {
    auto t = tor(x, parse_coefficient(coeff));
    std::map<int, std::size_t> out;
    for (int n = t.lower; n <= t.upper; ++n)
        out[n] = t.dim(n);
    return out;
}

std::map<int, std::size_t> module_dims(const DiagramModule& x) {
    std::map<int, std::size_t> out;
    for (int n = x.min_degree(); n <= x.truncation(); ++n)
        out[n] = x.dim(n);
    return out;
}

py::tuple induce_module(const std::string& along, const DiagramModule& m) {
    auto r = induce(parse_functor(along), m);
    return py::make_tuple(r.module, py::make_tuple(r.window_lower, r.window_upper));
}

std::string weq_json(const std::string& map_text) {
    auto f = map_from_json(nlohmann::json::parse(map_text));
    auto v = check_weak_equivalence(f);
    nlohmann::json j{{"holds", v.holds}, {"agree", v.agree}, {"window", {v.lower, v.upper}}, {"witness", v.witness}};
    for (const auto& [name, value] : v.conditions)
        j["conditions"][name] = value;
    return j.dump();
}

std::string battery_json(std::uint64_t seed, int truncation, unsigned threads) {
    CorpusSpec spec;
    spec.seed = seed;
    spec.truncation = truncation;
    check_spec(spec, 8);
    return report_to_json(run_battery(spec, threads)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact homology of semisimplicial, semicubical and augmented modules";

    py::register_exception<ModuleError>(m, "ModuleError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<TransportError>(m, "TransportError", PyExc_ValueError);
    py::register_exception<CategoryError>(m, "CategoryError", PyExc_ValueError);

    py::class_<DiagramModule>(m, "Module")
        .def_property_readonly("kind", [](const DiagramModule& x) { return to_string(x.kind()); })
        .def_property_readonly("truncation", &DiagramModule::truncation)
        .def_property_readonly("dims", &module_dims)
        .def("action", [](const DiagramModule& x, const std::string& token) {
            return matrix_strings(x.action(GeneratorId::parse(token)));
        })
        .def("to_json", &dump_module)
        .def("__eq__", [](const DiagramModule& a, const DiagramModule& b) { return a == b; })
        .def("__repr__", [](const DiagramModule& x) {
            return "<Module " + to_string(x.kind()) + " truncation " + std::to_string(x.truncation()) + ">";
        });

    m.def("parse_module", [](const std::string& text) { return parse_module(text); }, py::arg("text"));
    m.def("representable", [](const std::string& kind, int c, int truncation) {
        return representable(parse_kind(kind), c, truncation);
    }, py::arg("kind"), py::arg("c"), py::arg("truncation"));
    m.def("zero", [](const std::string& kind, int truncation) {
        return DiagramModule::zero(parse_kind(kind), truncation);
    }, py::arg("kind"), py::arg("truncation"));
    m.def("direct_sum", py::overload_cast<const DiagramModule&, const DiagramModule&>(&direct_sum));
    m.def("homology", &homology_dims, "Homology dimensions of the detecting complex, by degree.");
    m.def("restrict_v", &restrict_v);
    m.def("induce", &induce_module, py::arg("along"), py::arg("module"));
    m.def("tor", &tor_dims, py::arg("module"), py::arg("coefficient"));
    m.def("weak_equivalence_json", &weq_json, py::arg("map_json"));
    m.def("counterexample_json", [] { return report_to_json(run_counterexample()).dump(); });
    m.def("battery_json", &battery_json, py::arg("seed") = 1, py::arg("truncation") = 5, py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
}
