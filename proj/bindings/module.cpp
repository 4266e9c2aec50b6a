#include "gausslink/carter.hpp"
#include "gausslink/codec.hpp"
#include "gausslink/errors.hpp"
#include "gausslink/grouptools.hpp"
#include "gausslink/invariants.hpp"
#include "gausslink/wirtinger.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

namespace py = pybind11;
using namespace gausslink;

namespace {

FiniteGroupTable group_by_name(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'Z')) {
        const int n = std::stoi(name.substr(1));
        if (name[0] == 'S') return FiniteGroupTable::symmetric(n);
        return FiniteGroupTable::cyclic(n);
    }
    throw std::invalid_argument("unknown group '" + name + "' (use S1..S5 or Z1..Z6)");
}

py::dict genus_report_dict(const GaussParagraph& p) {
    const GenusReport report = genus_report(p);
    py::list components;
    for (const GenusComponent& gc : report.components) {
        py::list faces;
        for (const auto& face : gc.complex.faces)
            faces.append(face_cycle_text(gc.component.paragraph, face));
        py::dict comp;
        comp["paragraph"] = serialize(gc.component.paragraph);
        comp["euler_characteristic"] = gc.complex.euler_characteristic;
        comp["genus"] = gc.complex.genus;
        comp["faces"] = faces;
        components.append(comp);
    }
    py::dict out;
    out["components"] = components;
    out["total_genus"] = report.total_genus;
    out["planar"] = report.planar;
    return out;
}

py::dict graph_summary_dict(const WirtingerPresentation& p) {
    const PresentationGraph g = build_graph(p);
    py::list components;
    for (int c = 0; c < g.component_count; ++c) {
        py::dict comp;
        comp["vertices"] = g.component_vertices[static_cast<size_t>(c)];
        comp["edges"] = g.component_edges[static_cast<size_t>(c)];
        comp["euler_characteristic"] = g.component_chi[static_cast<size_t>(c)];
        components.append(comp);
    }
    py::dict out;
    out["components"] = components;
    out["abelianization_rank"] = abelianization_rank(p);
    out["realizable"] = is_realizable(p);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gauss paragraph planarity and virtual link group toolkit";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_RuntimeError);

    py::class_<GaussParagraph>(m, "GaussParagraph")
        .def_property_readonly("crossing_count", &GaussParagraph::crossing_count)
        .def_property_readonly("word_count", &GaussParagraph::word_count)
        .def("sign", &GaussParagraph::sign, py::arg("crossing"))
        .def("__str__", [](const GaussParagraph& p) { return serialize(p); })
        .def("__eq__", [](const GaussParagraph& a, const GaussParagraph& b) { return a == b; })
        .def("to_json", [](const GaussParagraph& p) { return to_json(p).dump(); });

    py::class_<GaussCode>(m, "GaussCode")
        .def_property_readonly("index_count", &GaussCode::index_count)
        .def("__len__", &GaussCode::size)
        .def("__str__", [](const GaussCode& w) { return serialize(w); })
        .def("__eq__", [](const GaussCode& a, const GaussCode& b) { return a == b; })
        .def("to_json", [](const GaussCode& w) { return to_json(w).dump(); });

    py::class_<WirtingerPresentation>(m, "WirtingerPresentation")
        .def_property_readonly("generator_count", &WirtingerPresentation::generator_count)
        .def_property_readonly("relator_count", &WirtingerPresentation::relator_count)
        .def_property_readonly("generators", &WirtingerPresentation::generators)
        .def("__str__", [](const WirtingerPresentation& p) { return serialize(p); })
        .def("__eq__", [](const WirtingerPresentation& a, const WirtingerPresentation& b) { return a == b; })
        .def("to_json", [](const WirtingerPresentation& p) { return to_json(p).dump(); });

    py::class_<GaussDiagram>(m, "GaussDiagram")
        .def_property_readonly("circle_count", &GaussDiagram::circle_count)
        .def_property_readonly("arrow_count", &GaussDiagram::arrow_count);

    m.def("parse_paragraph", [](const std::string& text) { return parse_paragraph(text).paragraph; },
          py::arg("text"), "Parse a Gauss paragraph; labels renumber to 1..n in ascending order.");
    m.def("parse_code", [](const std::string& text) { return parse_code(text).code; }, py::arg("text"),
          "Parse a Gauss code such as '1+ 2- 1- 2+'.");
    m.def("parse_presentation", [](const std::string& text) { return parse_presentation(text); },
          py::arg("text"), "Parse a Wirtinger presentation, e.g. 'gens a b; rel a = b^-1 a b;'.");

    m.def("split_components", [](const GaussParagraph& p) {
        std::vector<GaussParagraph> parts;
        for (ParagraphComponent& comp : split_components(p))
            parts.push_back(std::move(comp.paragraph));
        return parts;
    });

    m.def("genus_report", &genus_report_dict, py::arg("paragraph"),
          "Per-component genus, Euler characteristic, and face cycles.");
    m.def("is_planar_carter", &is_planar_carter, py::arg("paragraph"));
    m.def("is_planar_criterion", &is_planar_criterion, py::arg("paragraph"));

    m.def("paragraph_to_code", &paragraph_to_code, py::arg("paragraph"));
    m.def("alpha", &alpha, py::arg("code"), py::arg("i"));
    m.def("beta", &beta, py::arg("code"), py::arg("i"), py::arg("j"));
    m.def("is_planar_code", &is_planar_code, py::arg("code"));
    m.def("invariant_table", [](const GaussCode& w) {
        const InvariantTable t = invariant_table(w);
        py::list beta_rows;
        for (int i = 0; i < t.index_count; ++i) {
            py::list row;
            for (int j = 0; j < t.index_count; ++j)
                row.append(t.beta[static_cast<size_t>(i * t.index_count + j)]);
            beta_rows.append(row);
        }
        py::dict out;
        out["alpha"] = t.alpha;
        out["beta"] = beta_rows;
        return out;
    });

    m.def("paragraph_to_diagram", &paragraph_to_diagram, py::arg("paragraph"));
    m.def("diagram_to_paragraph", &diagram_to_paragraph, py::arg("diagram"));
    m.def("group_of_diagram", &group_of_diagram, py::arg("diagram"));
    m.def("group", [](const GaussParagraph& p) { return group_of_diagram(paragraph_to_diagram(p)); },
          py::arg("paragraph"), "Wirtinger presentation of the paragraph's link group.");

    m.def("graph_summary", &graph_summary_dict, py::arg("presentation"));
    m.def("is_realizable", &is_realizable, py::arg("presentation"));
    m.def("abelianization_rank", &abelianization_rank, py::arg("presentation"));
    m.def("to_cyclic_form", [](const WirtingerPresentation& p) { return to_cyclic_form(p); },
          py::arg("presentation"));
    m.def("to_simple_form", [](const WirtingerPresentation& p) {
        CanonicalForm form = to_simple_form(p);
        return py::make_tuple(std::move(form.presentation), std::move(form.classes));
    }, py::arg("presentation"), "Returns (presentation, class cycles).");
    m.def("realize", [](const WirtingerPresentation& p) { return realize(p); }, py::arg("presentation"));
    m.def("realize_paragraph", [](const WirtingerPresentation& p) { return diagram_to_paragraph(realize(p)); },
          py::arg("presentation"));

    m.def("count_homomorphisms", [](const WirtingerPresentation& p, const std::string& group) {
        return count_homomorphisms(p, group_by_name(group));
    }, py::arg("presentation"), py::arg("group"), "Exact homomorphism count into S1..S5 or Z1..Z6.");
}
