// Python bindings.  Every structured result crosses the boundary as the same
// JSON document the CLI prints (schema 1); the Python package decodes it.
// UsageError maps to ValueError, ConsistencyError to fg.ConsistencyError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fg/blocks.hpp"
#include "fg/cache.hpp"
#include "fg/category.hpp"
#include "fg/characters.hpp"
#include "fg/errors.hpp"
#include "fg/json_io.hpp"
#include "fg/verify.hpp"
#include "fg/weylgroup.hpp"

namespace py = pybind11;
using namespace fg;

namespace {

BlockId block_arg(const std::string& algebra, const std::string& block) { return parse_block(parse_algebra(algebra), block); }

std::string block_list(const std::string& algebra, const std::string& block, const std::string& c_min, const std::string& c_max) {
    const BlockId b = block_arg(algebra, block);
    json arr = json::array();
    for (const auto& bw : weights_of_block(b, parse_rational(c_min), parse_rational(c_max))) arr.push_back(block_weight_json(bw));
    return dump(json{{"block", block_json(b)}, {"weights", std::move(arr)}, {"schema", kSchemaVersion}});
}

Weight block_lambda(const std::string& algebra, const std::string& block, const std::string& c) {
    return block_weight(block_arg(algebra, block), parse_rational(c)).lambda;
}

std::string character(const std::string& algebra, const std::string& block, const std::string& c, const std::string& method,
                      bool with_terms) {
    return compute_character_document(block_lambda(algebra, block, c), method, with_terms);
}

std::string weight_character(const std::string& algebra, const std::string& weight, const std::string& method, bool with_terms) {
    return compute_character_document(parse_weight(parse_algebra(algebra), weight), method, with_terms);
}

std::string quiver(const std::string& algebra, const std::string& block, const std::string& c_max, const std::string& format) {
    const BlockQuiver q = build_quiver(block_arg(algebra, block), parse_rational(c_max));
    if (format == "dot") return quiver_dot(q);
    if (format != "json") throw UsageError("format must be json or dot");
    return dump(quiver_json(q));
}

std::string projectives(const std::string& algebra, const std::string& block, const std::string& c_max) {
    const BlockQuiver q = build_quiver(block_arg(algebra, block), parse_rational(c_max));
    std::vector<ProjectiveStructure> ps;
    for (const auto& v : q.vertices) ps.push_back(projective(v));
    return dump(projectives_json(ps));
}

py::tuple verify(const std::string& suite) {
    const Report r = run_verify(suite);
    return py::make_tuple(r.pass(), r.text());
}

}  // namespace

PYBIND11_MODULE(_fg, m) {
    m.doc() = "Blocks, characters and category-level data for the Lie superalgebras F(4) and G(3)";

    static py::exception<ConsistencyError> consistency(m, "ConsistencyError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const UsageError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ConsistencyError& e) {
            py::set_error(consistency, e.what());
        }
    });

    m.attr("SCHEMA") = kSchemaVersion;
    m.def("weyl_order", [](const std::string& a) { return weyl_group(parse_algebra(a)).elements.size(); }, py::arg("algebra"));
    m.def("root_system", [](const std::string& a) { return dump(root_system_json(root_system(parse_algebra(a)))); },
          py::arg("algebra"));
    m.def("is_dominant", [](const std::string& a, const std::string& w) { return is_dominant_coordinates(parse_weight(parse_algebra(a), w)); },
          py::arg("algebra"), py::arg("weight"));
    m.def("is_dominant_kac", [](const std::string& a, const std::string& w) { return is_dominant_kac(parse_weight(parse_algebra(a), w)); },
          py::arg("algebra"), py::arg("weight"));
    m.def("atypicality", [](const std::string& a, const std::string& w) { return atypicality(parse_weight(parse_algebra(a), w)); },
          py::arg("algebra"), py::arg("weight"));
    m.def("block_of", [](const std::string& a, const std::string& w) { return block_of(parse_weight(parse_algebra(a), w)).to_string(); },
          py::arg("algebra"), py::arg("weight"));
    m.def("blocks_list", &block_list, py::arg("algebra"), py::arg("block"), py::arg("c_min") = "-3", py::arg("c_max") = "6");
    m.def("character", &character, py::arg("algebra"), py::arg("block"), py::arg("c"), py::arg("method") = "direct",
          py::arg("with_terms") = true);
    m.def("weight_character", &weight_character, py::arg("algebra"), py::arg("weight"), py::arg("method") = "direct",
          py::arg("with_terms") = true);
    m.def("sdim", [](const std::string& a, const std::string& b, const std::string& c) {
              return simple_character(block_lambda(a, b, c)).sdim;
          },
          py::arg("algebra"), py::arg("block"), py::arg("c"));
    m.def("quiver", &quiver, py::arg("algebra"), py::arg("block"), py::arg("c_max") = "6", py::arg("format") = "json");
    m.def("relations", [](const std::string& a, const std::string& b, const std::string& hi) {
              return dump(relations_json(emit_relations(block_arg(a, b), parse_rational(hi))));
          },
          py::arg("algebra"), py::arg("block"), py::arg("c_max") = "6");
    m.def("bwb", [](const std::string& a, const std::string& b, const std::string& hi) {
              return dump(bwb_json(bwb_table(block_arg(a, b), parse_rational(hi))));
          },
          py::arg("algebra"), py::arg("block"), py::arg("c_max") = "6");
    m.def("projectives", &projectives, py::arg("algebra"), py::arg("block"), py::arg("c_max") = "6");
    m.def("translate", [](const std::string& a, const std::string& b, const std::string& hi) {
              return dump(translation_json(translation_map(block_arg(a, b), parse_rational(hi))));
          },
          py::arg("algebra"), py::arg("source"), py::arg("c_max") = "6");
    m.def("verify", &verify, py::arg("suite") = "all");
}
