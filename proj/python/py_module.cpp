#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/error.hpp"
#include "mmmcalc/gysin.hpp"
#include "mmmcalc/io.hpp"
#include "mmmcalc/loop.hpp"
#include "mmmcalc/suites.hpp"
#include "mmmcalc/symmetric.hpp"
#include "mmmcalc/weyl.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> poly_strings(const std::vector<mmm::Poly>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(mmm::print_poly(p));
    return out;
}

std::vector<std::string> rational_strings(const std::vector<mmm::Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(mmm::to_string(r));
    return out;
}

std::vector<std::string> kernel_basis(int n, int degree, bool closed_form) {
    const mmm::SubspaceSpec s = closed_form ? mmm::closed_form_kernel(n, degree)
                                            : mmm::kernel_intersection(n, degree);
    return poly_strings(s.basis);
}

bool kernel_compare(int n, int degree) {
    return mmm::same_subspace(mmm::kernel_intersection(n, degree),
                              mmm::closed_form_kernel(n, degree));
}

std::string kappa_of(const std::string& bundle_json, const std::string& cls) {
    const mmm::ProjectiveBundle P(mmm::parse_bundle_json(bundle_json));
    const mmm::RingPtr dom = mmm::so_ring(P.fibre_dim());
    return mmm::print_poly(P.kappa(mmm::parse_poly(cls, *dom)));
}

std::vector<std::string> kappa_kernel(const std::string& bundle_json, int degree,
                                      const std::string& domain) {
    mmm::require(domain == "pont" || domain == "full", "domain must be 'pont' or 'full'");
    const mmm::ProjectiveBundle P(mmm::parse_bundle_json(bundle_json));
    const mmm::KappaDomain dom =
        domain == "pont" ? mmm::KappaDomain::pont : mmm::KappaDomain::full;
    return poly_strings(mmm::kappa_table(P, degree, dom).kernel());
}

py::dict ch_pushforward_dict(int m, int trunc) {
    const mmm::ChPushforwardReport rep = mmm::ch_pushforward(m, trunc);
    std::string matching = "none";
    if (rep.matches_single && rep.matches_double)
        matching = "both";
    else if (rep.matches_single)
        matching = "single-factorial";
    else if (rep.matches_double)
        matching = "double-factorial";
    py::dict d;
    d["m"] = rep.m;
    d["trunc"] = rep.trunc;
    d["pipeline"] = rational_strings(rep.pipeline);
    d["series_product"] = rational_strings(rep.series_product);
    d["closed_single_factorial"] = rational_strings(rep.closed_single);
    d["closed_double_factorial"] = rational_strings(rep.closed_double);
    d["matches_series"] = rep.matches_series;
    d["matching_closed_form"] = matching;
    d["all_nonzero"] = rep.all_nonzero;
    return d;
}

py::dict holo_dict(int r, int m, int trunc) {
    const mmm::HoloReport rep = mmm::composite_pushforward_holomorphic(r, m, trunc);
    py::dict d;
    d["m"] = rep.m;
    d["r"] = rep.r;
    d["trunc"] = rep.trunc;
    d["proj_gysin_ok"] = rep.proj_gysin_ok;
    d["pullback_killed"] = rep.pullback_killed;
    d["transitivity_ok"] = rep.transitivity_ok;
    d["composite"] = rational_strings(rep.composite);
    d["expected"] = rational_strings(rep.expected);
    d["matches_expected"] = rep.matches_expected;
    d["nonzero_through_5"] = rep.nonzero_through_5;
    return d;
}

std::string trg_of(const std::string& algebra_json, const std::string& expr, int iterate) {
    const mmm::RingPtr alg = mmm::parse_ring_json(algebra_json);
    const mmm::Poly cls = mmm::parse_poly(expr, *alg);
    if (iterate == 1) {
        const mmm::LoopAlgebra L = mmm::make_loop(alg);
        return mmm::print_poly(mmm::trg(L, cls));
    }
    const mmm::IteratedLoop chain = mmm::make_iterated_loop(alg, iterate);
    return mmm::print_poly(mmm::iterate_trg(chain, cls));
}

std::vector<std::string> weyl_kernel(int d) {
    return poly_strings(mmm::kernel_via_weyl(d).basis);
}

bool weyl_matches_gysin(int d) {
    const mmm::KappaTable t =
        mmm::kappa_table(mmm::cp2_over_bsu3(), 4 * d + 4, mmm::KappaDomain::full);
    return mmm::same_poly_span(mmm::kernel_via_weyl(d).basis, t.kernel());
}

py::dict run_suite_dict(const std::string& name) {
    const mmm::SuiteReport rep = mmm::run_suite(name);
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict jc;
        jc["claim"] = c.claim;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        checks.append(jc);
    }
    py::dict d;
    d["name"] = rep.name;
    d["pass"] = rep.all_pass();
    d["checks"] = checks;
    return d;
}

std::string normalize(const std::string& ring_json, const std::string& expr) {
    const mmm::RingPtr ring = mmm::parse_ring_json(ring_json);
    return mmm::print_poly(mmm::parse_poly(expr, *ring));
}

std::string l_class(int d, int m) {
    return mmm::print_poly(
        mmm::l_class_component(static_cast<size_t>(d), static_cast<size_t>(m)));
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact rational characteristic-class pushforward engine";

    py::register_exception<mmm::Error>(mod, "MmmError", PyExc_ValueError);

    mod.def("l_class", &l_class, py::arg("d"), py::arg("m"),
            "Degree-4d component of the signature sequence in m Pontrjagin generators");
    mod.def("kernel", &kernel_basis, py::arg("n"), py::arg("degree"),
            py::arg("closed_form") = false,
            "Basis of the restriction-kernel intersection (or its closed form)");
    mod.def("kernel_compare", &kernel_compare, py::arg("n"), py::arg("degree"),
            "Whether the computed kernel equals the closed form");
    mod.def("kappa", &kappa_of, py::arg("bundle_json"), py::arg("cls"),
            "Pushforward of a vertical characteristic class, as text");
    mod.def("kappa_kernel", &kappa_kernel, py::arg("bundle_json"), py::arg("degree"),
            py::arg("domain") = "pont", "Kernel basis of the pushforward on one graded piece");
    mod.def("ch_pushforward", &ch_pushforward_dict, py::arg("m"), py::arg("trunc") = 8,
            "Coefficients of the pushed-forward vertical Chern character");
    mod.def("holo", &holo_dict, py::arg("r") = 20, py::arg("m") = 2, py::arg("trunc") = 5,
            "Composite pushforward over the product of projective spaces");
    mod.def("trg", &trg_of, py::arg("algebra_json"), py::arg("expr"), py::arg("iterate") = 1,
            "Transgression (optionally iterated) of a class of a free algebra");
    mod.def("weyl_kernel", &weyl_kernel, py::arg("d"),
            "Kernel basis of the averaged torus-restriction map in degree 4d+4");
    mod.def("weyl_matches_gysin", &weyl_matches_gysin, py::arg("d"),
            "Whether the averaged kernel equals the pushforward-table kernel");
    mod.def("run_suite", &run_suite_dict, py::arg("name"), "Run one verification suite");
    mod.def("suite_names", [] { return mmm::suite_names(); }, "Canonical suite list");
    mod.def("normalize", &normalize, py::arg("ring_json"), py::arg("expr"),
            "Parse an expression over a ring and print its normal form");
}
