#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobtsct/render.hpp"

namespace py = pybind11;
using namespace frobtsct;

namespace {

FrobSpec make_spec(long p, long m, const std::string& fusion_case) {
    return validate_spec(p, m, fusion_from_name(fusion_case));
}

std::string render(long p, long m, const std::string& fusion_case, const std::string& target,
                   const std::string& format, long oracle_cap) {
    FrobSpec spec = make_spec(p, m, fusion_case);
    if (target == "chartab") {
        CharTable X = irr_frobenius(spec);
        if (format == "json") return json_string(document_json("chartab", spec, chartab_json(X)));
        if (format == "csv") return chartab_csv(X);
        return chartab_latex(X);
    }
    if (target == "dec") {
        DecMatrix dec = decomposition_matrix(spec, 1);
        if (format == "json") return json_string(document_json("dec", spec, dec_json(dec)));
        if (format == "csv") return dec_csv(dec);
        return dec_latex(dec);
    }
    if (target == "proj") {
        CharTable X = irr_frobenius(spec);
        CharTable proj = projective_table(decomposition_matrix(spec, 1), restrict_to_p_regular(X));
        if (format == "json") return json_string(document_json("proj", spec, chartab_json(proj)));
        if (format == "csv") return chartab_csv(proj);
        return chartab_latex(proj);
    }
    if (target == "tsct") {
        TSCT t = build_tsct(spec);
        if (format == "json") return json_string(document_json("tsct", spec, tsct_json(t)));
        if (format == "csv") return tsct_csv(t);
        return tsct_latex(t);
    }
    if (target == "verify") {
        Report rep = verify_spec_report(spec, oracle_cap);
        if (format == "json") return json_string(document_json("verify", spec, report_json(rep)));
        return report_text(rep);
    }
    throw std::invalid_argument("unknown target: " + target);
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "trivial source character tables of (C_p x C_p) : C_m Frobenius groups";

    py::class_<Cyclotomic>(mod, "Cyclotomic")
        .def(py::init<long>(), py::arg("value"))
        .def_static("zeta", &Cyclotomic::zeta, py::arg("n"), py::arg("k"))
        .def_static("parse", [](const std::string& s) { return Cyclotomic::parse(s); }, py::arg("atom"))
        .def("conductor", &Cyclotomic::conductor)
        .def("reduced", &Cyclotomic::reduced)
        .def("conjugate", &Cyclotomic::conjugate)
        .def("galois", &Cyclotomic::galois, py::arg("j"))
        .def("is_zero", &Cyclotomic::is_zero)
        .def("is_rational", &Cyclotomic::is_rational)
        .def("is_integral", &Cyclotomic::is_integral)
        .def("to_atom", &Cyclotomic::to_atom)
        .def("__repr__", [](const Cyclotomic& x) { return x.to_atom(); })
        .def("__add__", [](const Cyclotomic& a, const Cyclotomic& b) { return a + b; })
        .def("__sub__", [](const Cyclotomic& a, const Cyclotomic& b) { return a - b; })
        .def("__mul__", [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; })
        .def("__neg__", [](const Cyclotomic& a) { return -a; })
        .def("__eq__", [](const Cyclotomic& a, const Cyclotomic& b) { return a == b; })
        .def("__ne__", [](const Cyclotomic& a, const Cyclotomic& b) { return a != b; });

    mod.def("render", &render, py::arg("p"), py::arg("m"), py::arg("case"), py::arg("target"),
            py::arg("format") = "json", py::arg("oracle_cap") = 2000,
            "render a table or verification report; mirrors the command-line tool");

    mod.def(
        "verify_ok",
        [](long p, long m, const std::string& fusion_case, long oracle_cap) {
            return verify_spec_report(make_spec(p, m, fusion_case), oracle_cap).ok();
        },
        py::arg("p"), py::arg("m"), py::arg("case"), py::arg("oracle_cap") = 2000);

    mod.attr("__version__") = "1.0.0";
}
