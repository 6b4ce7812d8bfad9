#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/error.hpp"
#include "mmmcalc/gysin.hpp"
#include "mmmcalc/io.hpp"
#include "mmmcalc/loop.hpp"
#include "mmmcalc/suites.hpp"
#include "mmmcalc/weyl.hpp"

namespace {

using nlohmann::json;

json coordinate_json(const mmm::Vec& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(mmm::to_string(r));
    return out;
}

json subspace_json(const mmm::SubspaceSpec& s) {
    const std::vector<mmm::Poly> monos = mmm::pont_basis(s.n, s.degree);
    json out;
    out["n"] = s.n;
    out["degree"] = s.degree;
    out["dimension"] = s.basis.size();
    out["monomials"] = json::array();
    for (const auto& m : monos) out["monomials"].push_back(mmm::print_poly(m));
    out["basis"] = json::array();
    for (const auto& p : s.basis) {
        json e;
        e["text"] = mmm::print_poly(p);
        e["coordinates"] = coordinate_json(mmm::coordinates(p, monos));
        out["basis"].push_back(e);
    }
    return out;
}

void subspace_text(std::ostream& os, const std::string& label, const mmm::SubspaceSpec& s) {
    os << label << ": dimension " << s.basis.size() << "\n";
    for (const auto& p : s.basis) os << "  " << mmm::print_poly(p) << "\n";
}

void emit(const std::string& format, const json& j, const std::string& text) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string rational_list(const std::vector<mmm::Rational>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + mmm::to_string(v[i]);
    return out;
}

json rationals_json(const std::vector<mmm::Rational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(mmm::to_string(r));
    return out;
}

int cmd_kernel(int n, int degree, bool oracle, bool closed, bool compare,
               const std::string& format) {
    const bool predicted_only = oracle || closed;
    json j;
    std::string text;
    int rc = 0;
    if (compare) {
        const mmm::SubspaceSpec a = mmm::kernel_intersection(n, degree);
        const mmm::SubspaceSpec b = mmm::closed_form_kernel(n, degree);
        const bool same = mmm::same_subspace(a, b);
        j["computed"] = subspace_json(a);
        j["predicted"] = subspace_json(b);
        j["same_span"] = same;
        std::ostringstream os;
        subspace_text(os, "computed kernel", a);
        subspace_text(os, "predicted kernel", b);
        os << "same span: " << (same ? "yes" : "no") << "\n";
        text = os.str();
        rc = same ? 0 : 1;
    } else {
        const mmm::SubspaceSpec s =
            predicted_only ? mmm::closed_form_kernel(n, degree) : mmm::kernel_intersection(n, degree);
        j = subspace_json(s);
        std::ostringstream os;
        subspace_text(os, predicted_only ? "predicted kernel" : "computed kernel", s);
        text = os.str();
    }
    emit(format, j, text);
    return rc;
}

int cmd_kappa(const std::string& bundle_path, const std::string& expr,
              const std::string& format) {
    const mmm::BundleSpec spec = mmm::parse_bundle_json(mmm::read_file(bundle_path));
    const mmm::ProjectiveBundle P(spec);
    const mmm::RingPtr dom = mmm::so_ring(P.fibre_dim());
    const mmm::Poly cls = mmm::parse_poly(expr, *dom);
    const mmm::Poly out = P.kappa(cls);
    json j;
    j["fiber_dim"] = P.fibre_dim();
    j["class"] = mmm::print_poly(cls);
    j["kappa"] = mmm::print_poly(out);
    emit(format, j, "kappa = " + mmm::print_poly(out) + "\n");
    return 0;
}

int cmd_kappa_kernel(const std::string& bundle_path, int n, int degree,
                     const std::string& domain, const std::string& format) {
    const mmm::BundleSpec spec = mmm::parse_bundle_json(mmm::read_file(bundle_path));
    const mmm::ProjectiveBundle P(spec);
    mmm::require(P.fibre_dim() == n,
                 "kappa-kernel: --fiber-dim " + std::to_string(n) + " does not match the bundle (" +
                     std::to_string(P.fibre_dim()) + ")");
    const mmm::KappaDomain dom =
        domain == "pont" ? mmm::KappaDomain::pont : mmm::KappaDomain::full;
    const mmm::KappaTable table = mmm::kappa_table(P, degree, dom);
    const std::vector<mmm::Poly> kernel = table.kernel();
    json j;
    j["n"] = n;
    j["degree"] = degree;
    j["domain"] = domain;
    j["dimension"] = kernel.size();
    j["monomials"] = json::array();
    for (const auto& m : table.domain_basis) j["monomials"].push_back(mmm::print_poly(m));
    j["basis"] = json::array();
    std::ostringstream os;
    os << "kernel dimension " << kernel.size() << "\n";
    for (const auto& p : kernel) {
        json e;
        e["text"] = mmm::print_poly(p);
        e["coordinates"] = coordinate_json(mmm::coordinates(p, table.domain_basis));
        j["basis"].push_back(e);
        os << "  " << mmm::print_poly(p) << "\n";
    }
    emit(format, j, os.str());
    return 0;
}

int cmd_ch_pushforward(int m, int trunc, const std::string& format) {
    const mmm::ChPushforwardReport rep = mmm::ch_pushforward(m, trunc);
    std::string matching = "none";
    if (rep.matches_single && rep.matches_double)
        matching = "both";
    else if (rep.matches_single)
        matching = "single-factorial";
    else if (rep.matches_double)
        matching = "double-factorial";
    json j;
    j["m"] = rep.m;
    j["trunc"] = rep.trunc;
    j["pipeline"] = rationals_json(rep.pipeline);
    j["series_product"] = rationals_json(rep.series_product);
    j["closed_single_factorial"] = rationals_json(rep.closed_single);
    j["closed_double_factorial"] = rationals_json(rep.closed_double);
    j["matches_series"] = rep.matches_series;
    j["matching_closed_form"] = matching;
    j["all_nonzero"] = rep.all_nonzero;
    std::ostringstream os;
    os << "a_p (pipeline): " << rational_list(rep.pipeline) << "\n"
       << "series product: " << rational_list(rep.series_product) << "\n"
       << "matches series: " << (rep.matches_series ? "yes" : "no") << "\n"
       << "matching closed form: " << matching << "\n";
    emit(format, j, os.str());
    return rep.matches_series ? 0 : 1;
}

int cmd_holo(int m, int trunc, int r, const std::string& format) {
    const mmm::HoloReport rep = mmm::composite_pushforward_holomorphic(r, m, trunc);
    json j;
    j["m"] = rep.m;
    j["r"] = rep.r;
    j["trunc"] = rep.trunc;
    j["proj_gysin_ok"] = rep.proj_gysin_ok;
    j["pullback_killed"] = rep.pullback_killed;
    j["transitivity_ok"] = rep.transitivity_ok;
    j["composite"] = rationals_json(rep.composite);
    j["expected"] = rationals_json(rep.expected);
    j["matches_expected"] = rep.matches_expected;
    j["nonzero_through_5"] = rep.nonzero_through_5;
    std::ostringstream os;
    os << "first-stage pushforward of u^l is l x^(2l-1): "
       << (rep.proj_gysin_ok ? "yes" : "no") << "\n"
       << "pullbacks annihilated: " << (rep.pullback_killed ? "yes" : "no") << "\n"
       << "transitivity: " << (rep.transitivity_ok ? "yes" : "no") << "\n"
       << "composite coefficients: " << rational_list(rep.composite) << "\n"
       << "expected l * a_l:       " << rational_list(rep.expected) << "\n";
    emit(format, j, os.str());
    const bool ok = rep.proj_gysin_ok && rep.pullback_killed && rep.transitivity_ok &&
                    rep.matches_expected;
    return ok ? 0 : 1;
}

int cmd_trg(const std::string& algebra_path, const std::string& expr, int iterate,
            const std::string& format) {
    const mmm::RingPtr alg = mmm::parse_ring_json(mmm::read_file(algebra_path));
    const mmm::Poly cls = mmm::parse_poly(expr, *alg);
    mmm::Poly out{alg->table()};
    if (iterate == 1) {
        const mmm::LoopAlgebra L = mmm::make_loop(alg);
        out = mmm::trg(L, cls);
    } else {
        const mmm::IteratedLoop chain = mmm::make_iterated_loop(alg, iterate);
        out = mmm::iterate_trg(chain, cls);
    }
    json j;
    j["expr"] = mmm::print_poly(cls);
    j["iterate"] = iterate;
    j["trg"] = mmm::print_poly(out);
    emit(format, j, "trg = " + mmm::print_poly(out) + "\n");
    return 0;
}

int cmd_weyl_kernel(int d, bool compare_gysin, const std::string& format) {
    const mmm::SubspaceSpec kw = mmm::kernel_via_weyl(d);
    json j;
    j["d"] = d;
    j["degree"] = kw.degree;
    j["dimension"] = kw.basis.size();
    j["basis"] = json::array();
    std::ostringstream os;
    os << "kernel via averaging: dimension " << kw.basis.size() << "\n";
    for (const auto& p : kw.basis) {
        j["basis"].push_back(mmm::print_poly(p));
        os << "  " << mmm::print_poly(p) << "\n";
    }
    int rc = 0;
    if (compare_gysin) {
        const mmm::KappaTable table =
            mmm::kappa_table(mmm::cp2_over_bsu3(), 4 * d + 4, mmm::KappaDomain::full);
        const bool same = mmm::same_poly_span(kw.basis, table.kernel());
        j["matches_gysin"] = same;
        os << "matches pushforward kernel: " << (same ? "yes" : "no") << "\n";
        rc = same ? 0 : 1;
    }
    emit(format, j, os.str());
    return rc;
}

int cmd_verify(const std::string& suite, const std::string& format) {
    std::vector<mmm::SuiteReport> reports;
    if (suite.empty())
        for (const auto& name : mmm::suite_names()) reports.push_back(mmm::run_suite(name));
    else
        reports.push_back(mmm::run_suite(suite));
    std::cout << (format == "json" ? mmm::render_json(reports) : mmm::render_text(reports));
    for (const auto& rep : reports)
        if (!rep.all_pass()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characteristic-class pushforward calculator"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int n = 4, degree = 8, d = 1, m = 2;
    int trunc_ch = -1, trunc_holo = -1, rr = 20, iterate = 1;
    bool oracle = false, closed = false, compare = false, compare_gysin = false;
    std::string bundle_path, algebra_path, expr, domain = "pont", suite;

    CLI::App* kernel = app.add_subcommand(
        "kernel", "Kernel of the truncated restriction maps inside the Pontrjagin ring");
    kernel->add_option("--fiber-dim", n, "Fibre dimension n")->required();
    kernel->add_option("--degree", degree, "Topological degree")->required();
    CLI::Option* o_oracle =
        kernel->add_flag("--oracle", oracle, "Print the predicted closed-form basis");
    CLI::Option* o_closed =
        kernel->add_flag("--closed-form", closed, "Print the predicted closed-form basis");
    kernel->add_flag("--compare", compare, "Compute both and compare spans")
        ->excludes(o_oracle)
        ->excludes(o_closed);

    CLI::App* kappa = app.add_subcommand("kappa", "Apply the pushforward of a vertical "
                                                  "characteristic class for a bundle file");
    kappa->add_option("--bundle", bundle_path, "Bundle JSON file")->required();
    kappa->add_option("--class", expr, "Class over chi, p4, p8, ...")->required();

    CLI::App* kk = app.add_subcommand("kappa-kernel",
                                      "Kernel of the pushforward map on one graded piece");
    kk->add_option("--bundle", bundle_path, "Bundle JSON file")->required();
    kk->add_option("--fiber-dim", n, "Fibre dimension n")->required();
    kk->add_option("--degree", degree, "Topological degree")->required();
    kk->add_option("--domain", domain, "Domain ring")
        ->check(CLI::IsMember({"pont", "full"}))
        ->required();

    CLI::App* chp = app.add_subcommand(
        "ch-pushforward", "Coefficients of the pushed-forward vertical Chern character");
    chp->add_option("--m", m, "Fibre complex dimension")->required();
    chp->add_option("--trunc", trunc_ch, "Truncation order (default 8 or MMM_TRUNC)");

    CLI::App* holo = app.add_subcommand(
        "holo", "Composite pushforward over the product of projective spaces");
    holo->add_option("--m", m, "Fibre complex dimension")->required();
    holo->add_option("--trunc", trunc_holo, "Truncation order (default 5 or MMM_TRUNC)");
    holo->add_option("--r", rr, "Power truncating the base projective space")
        ->capture_default_str();

    CLI::App* trg = app.add_subcommand("trg", "Transgression of a class of a free algebra");
    trg->add_option("--algebra", algebra_path, "Algebra JSON file")->required();
    trg->add_option("--expr", expr, "Class over the algebra generators")->required();
    trg->add_option("--iterate", iterate, "Iterate the transgression (1..3)")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();

    CLI::App* weyl = app.add_subcommand(
        "weyl-kernel", "Kernel of the averaged torus-restriction map in degree 4d+4");
    weyl->add_option("--d", d, "Degree parameter d")->required();
    weyl->add_flag("--compare-gysin", compare_gysin,
                   "Also compare with the pushforward-table kernel");

    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", suite, "Suite name (default: all)")
        ->check(CLI::IsMember(mmm::suite_names()));

    try {
        app.parse(argc, argv);
        if (kernel->parsed()) return cmd_kernel(n, degree, oracle, closed, compare, format);
        if (kappa->parsed()) return cmd_kappa(bundle_path, expr, format);
        if (kk->parsed()) return cmd_kappa_kernel(bundle_path, n, degree, domain, format);
        if (chp->parsed())
            return cmd_ch_pushforward(
                m, trunc_ch >= 0 ? trunc_ch : mmm::default_depth(8), format);
        if (holo->parsed())
            return cmd_holo(m, trunc_holo >= 0 ? trunc_holo : mmm::default_depth(5), rr, format);
        if (trg->parsed()) return cmd_trg(algebra_path, expr, iterate, format);
        if (weyl->parsed()) return cmd_weyl_kernel(d, compare_gysin, format);
        if (verify->parsed()) return cmd_verify(suite, format);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const mmm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
