#include "mmmcalc/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/error.hpp"
#include "mmmcalc/gysin.hpp"
#include "mmmcalc/io.hpp"
#include "mmmcalc/loop.hpp"
#include "mmmcalc/symmetric.hpp"
#include "mmmcalc/weyl.hpp"

namespace mmm {

int default_depth(int fallback) {
    const char* env = std::getenv("MMM_TRUNC");
    if (env == nullptr || *env == '\0') return fallback;
    const std::string s(env);
    require(s.find_first_not_of("0123456789") == std::string::npos,
            "MMM_TRUNC must be a positive integer");
    require(s.size() <= 2, "MMM_TRUNC is out of range");
    const int v = std::stoi(s);
    require(v >= 1 && v <= 16, "MMM_TRUNC must be between 1 and 16");
    return v;
}

namespace {

void check(SuiteReport& r, std::string claim, bool pass, std::string detail = "") {
    r.checks.push_back({std::move(claim), pass, std::move(detail)});
}

std::string rational_list(const std::vector<Rational>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
    return out;
}

// Deterministic pseudorandom homogeneous polynomials for identity checks.
class RandomPolys {
public:
    explicit RandomPolys(std::uint32_t seed) : rng_(seed) {}

    Poly over(const RingPresentation& ring, int max_degree, int terms = 3) {
        std::vector<int> degrees;
        for (int d = 0; d <= max_degree; d += 2)
            if (!ring.basis(d).empty()) degrees.push_back(d);
        require(!degrees.empty(), "random poly: no populated degree in range");
        std::uniform_int_distribution<size_t> dpick(0, degrees.size() - 1);
        const std::vector<Monomial> monos = ring.basis(degrees[dpick(rng_)]);
        Poly out = ring.zero();
        for (int k = 0; k < terms; ++k) {
            std::uniform_int_distribution<size_t> mpick(0, monos.size() - 1);
            std::uniform_int_distribution<int> coef(-9, 9);
            int c = coef(rng_);
            if (c == 0) c = 1;
            out.add_term(monos[mpick(rng_)], Rational(c));
        }
        return out;
    }

private:
    std::mt19937 rng_;
};

Poly signature_component(size_t d, const RingPresentation& target) {
    return rename_into(l_class_component(d, 2), target);
}

SuiteReport suite_lclass() {
    SuiteReport r{"lclass", {}};
    const int dmax = std::max(4, default_depth(4));

    const Poly l1 = l_class_component(1, 1);
    const Poly p4 = Poly::generator(l1.table(), 0);
    check(r, "degree-4 component of the signature sequence is p4/3",
          l1 == Rational(1, 3) * p4, "L = " + print_poly(l1));

    const RingPtr r2 = pont_ring(4);
    const Poly l2 = rename_into(l_class_component(2, 2), *r2);
    const Poly want2 = Rational(7, 45) * r2->gen("p8") - Rational(1, 45) * pow(r2->gen("p4"), 2);
    check(r, "degree-8 component is (7 p8 - p4^2)/45", l2 == want2, "L = " + print_poly(l2));

    const RingPtr r3 = pont_ring(6);
    const Poly l3 = rename_into(l_class_component(3, 3), *r3);
    const Poly want3 =
        (Rational(62) * r3->gen("p12") - Rational(13) * r3->gen("p4") * r3->gen("p8") +
         Rational(2) * pow(r3->gen("p4"), 3)) *
        Rational(1, 945);
    check(r, "degree-12 component is (62 p12 - 13 p4 p8 + 2 p4^3)/945", l3 == want3,
          "L = " + print_poly(l3));

    for (int d = 1; d <= dmax; ++d) {
        const Poly ld = l_class_component(static_cast<size_t>(d), static_cast<size_t>(d));
        Rational pairing(0);
        for (const auto& [mono, c] : ld.terms()) {
            Rational v = c;
            for (size_t k = 0; k < mono.size(); ++k)
                for (int e = 0; e < mono[k]; ++e)
                    v *= Rational(binomial(2 * d + 1, static_cast<long long>(k) + 1));
            pairing += v;
        }
        check(r,
              "degree-" + std::to_string(4 * d) +
                  " component pairs to 1 on the fundamental class of CP^" + std::to_string(2 * d),
              pairing == 1, "pairing = " + to_string(pairing));
    }
    return r;
}

SuiteReport suite_prop52() {
    SuiteReport r{"prop52", {}};
    const int trunc = default_depth(5);
    for (int m = 2; m <= 5; ++m) {
        const ChPushforwardReport rep = ch_pushforward(m, trunc);
        const std::string tag = " (m = " + std::to_string(m) + ")";
        check(r,
              "pushforward of the vertical Chern character matches the series "
              "(2 cos sqrt(u) + m - 1) * sum_l (-u)^l/(m+2l)!" +
                  tag,
              rep.matches_series, "a_p = " + rational_list(rep.pipeline));
        check(r, "all coefficients a_0..a_" + std::to_string(trunc) + " are nonzero" + tag,
              rep.all_nonzero);
        check(r, "a_0 equals (m+1)/m!" + tag,
              !rep.pipeline.empty() && rep.pipeline[0] == Rational(m + 1) / Rational(factorial(
                                                              static_cast<unsigned>(m))));
        check(r,
              "the closed form with single factorials (m+2k)! reproduces the table and the "
              "double-factorial reading does not" +
                  tag,
              rep.matches_single && !rep.matches_double,
              "single: " + rational_list(rep.closed_single) +
                  "; double: " + rational_list(rep.closed_double));
    }
    return r;
}

SuiteReport suite_thm18() {
    SuiteReport r{"thm18", {}};
    const int dmax = default_depth(4);
    const ProjectiveBundle P = cp2_over_bsu3();
    const RingPtr so4 = so_ring(4);

    const Poly kchi = P.kappa(so4->gen("chi"));
    check(r, "kappa of the Euler class is the fibre Euler number 3",
          kchi == P.base()->constant(Rational(3)), "kappa(chi) = " + print_poly(kchi));

    for (int d = 1; d <= dmax; ++d) {
        const int degree = 4 * d + 4;
        const std::string tag = " (degree " + std::to_string(degree) + ")";

        KappaTable tp = kappa_table(P, degree, KappaDomain::pont);
        const Poly lp = signature_component(static_cast<size_t>(d) + 1, *tp.domain_ring);
        check(r, "Pontrjagin kernel is exactly the span of the signature component" + tag,
              same_poly_span(tp.kernel(), {lp}));

        KappaTable tf = kappa_table(P, degree, KappaDomain::full);
        const std::vector<Poly> ker = tf.kernel();
        const Poly binom =
            so4->reduce(pow(so4->gen("p4") - so4->gen("chi"), static_cast<unsigned>(d) + 1));
        // The kernel grows with the degree: the domain has dimension d + 2
        // while the target is spanned by the monomials c4^a c6^b with
        // 2a + 3b = 2d, so two-dimensionality only holds in degree 8.
        check(r, "full kernel is two-dimensional" + tag, ker.size() == 2,
              "dim = " + std::to_string(ker.size()) + " (domain " +
                  std::to_string(tf.domain_basis.size()) + ", target " +
                  std::to_string(tf.target_basis.size()) + ", matrix rank " +
                  std::to_string(tf.domain_basis.size() - ker.size()) + ")");
        check(r, "full kernel contains (p4 - chi)^" + std::to_string(d + 1) + tag,
              poly_in_span(ker, binom));
        check(r, "full kernel contains the signature component" + tag,
              poly_in_span(ker, signature_component(static_cast<size_t>(d) + 1, *so4)));

        if (d == 1) {
            const Poly c4 = P.base()->gen("c4");
            const bool frozen = tf.apply(pow(so4->gen("p4"), 2)) == Rational(-21) * c4 &&
                                tf.apply(so4->gen("p8")) == Rational(-3) * c4 &&
                                tf.apply(so4->gen("p4") * so4->gen("chi")) == Rational(-12) * c4;
            check(r, "degree-8 values on p4^2, p8, p4*chi are -21 c4, -3 c4, -12 c4", frozen);
        }
    }
    return r;
}

SuiteReport suite_weyl_compare() {
    SuiteReport r{"weyl-compare", {}};
    const int dmax = default_depth(4);
    const TorusModel T = torus_model();
    const ProjectiveBundle P = cp2_over_bsu3();

    for (int d = 1; d <= dmax; ++d) {
        const std::string tag = " (d = " + std::to_string(d) + ")";
        const Mat w = weyl_matrix(d);
        KappaTable tf = kappa_table(P, 4 * d + 4, KappaDomain::full);
        const Mat tr = cw_transport(tf);

        bool eq = w.size() == tr.size();
        for (size_t i = 0; eq && i < w.size(); ++i) {
            eq = w[i].size() == tr[i].size();
            for (size_t j = 0; eq && j < w[i].size(); ++j) eq = w[i][j] == Rational(2) * tr[i][j];
        }
        check(r,
              "averaged torus restriction matrix equals twice the root-transported "
              "pushforward table" +
                  tag,
              eq);

        const SubspaceSpec kw = kernel_via_weyl(d);
        check(r, "kernel via averaging equals the pushforward kernel" + tag,
              same_poly_span(kw.basis, tf.kernel()),
              "dim = " + std::to_string(kw.basis.size()));
        const RingPtr so4 = tf.domain_ring;
        const Poly binom =
            so4->reduce(pow(so4->gen("p4") - so4->gen("chi"), static_cast<unsigned>(d) + 1));
        check(r,
              "averaged kernel contains (p4 - chi)^" + std::to_string(d + 1) +
                  " and the signature component" + tag,
              poly_in_span(kw.basis, binom) &&
                  poly_in_span(kw.basis,
                               signature_component(static_cast<size_t>(d) + 1, *so4)));

        // Two image counts that bracket the kernel growth: with free z
        // variables the averaged powers span a d-dimensional space, while on
        // the torus the relation s2 = s1^2 collapses them onto the invariant
        // monomials s1^a s3^b with a + 3b = d.
        const int invariant_count = d / 3 + 1;
        check(r,
              "averaged image has dimension " + std::to_string(d) +
                  " over free z variables and " + std::to_string(invariant_count) +
                  " on the torus" + tag,
              formal_image_dimension(d) == d && image_dimension(T, d) == invariant_count,
              "free = " + std::to_string(formal_image_dimension(d)) +
                  ", torus = " + std::to_string(image_dimension(T, d)));
    }

    bool indep = true;
    for (int d = 2; d <= 6; ++d) indep = indep && formal_power_sum_independent(d);
    check(r,
          "with free z variables the power sum s_d avoids the span of s1^(d-j) s_j "
          "for d = 2..6",
          indep);

    const int bmax = std::max(8, dmax);
    bool dets = true;
    std::string vals;
    for (int d = 1; d <= bmax; ++d) {
        const Rational dt = binomial_matrix_det(d);
        dets = dets && (dt == 1 || dt == -1);
        vals += (d > 1 ? ", " : "") + to_string(dt);
    }
    check(r, "binomial matrices through size " + std::to_string(bmax + 1) +
                 " have determinant +1 or -1",
          dets, "det = " + vals);
    return r;
}

SuiteReport suite_lemma31() {
    SuiteReport r{"lemma31", {}};
    const int degmax = 4 * default_depth(6);
    for (const int n : {4, 6, 8, 7, 9}) {
        for (int degree = ((n + 3) / 4) * 4; degree <= degmax; degree += 4) {
            const SubspaceSpec a = kernel_intersection(n, degree);
            const SubspaceSpec b = closed_form_kernel(n, degree);
            check(r,
                  "restriction-kernel intersection matches the closed form (n = " +
                      std::to_string(n) + ", degree " + std::to_string(degree) + ")",
                  same_subspace(a, b), "dimension = " + std::to_string(a.basis.size()) +
                                           ", expected " + std::to_string(b.basis.size()));
        }
    }
    return r;
}

SuiteReport suite_transgression() {
    SuiteReport r{"transgression", {}};
    const int dmax = default_depth(4);
    const RingPtr src = su_ring(3);
    const LoopAlgebra L = make_loop(src);

    bool closed_ok = true;
    for (int deg = 2; deg <= 20 && closed_ok; deg += 2)
        for (const Monomial& mono : src->basis(deg)) {
            const Poly p = Poly::term(src->table(), mono, Rational(1));
            closed_ok = closed_ok && trg(L, p) == trg_monomial_closed(L, mono);
            if (!closed_ok) break;
        }
    check(r, "recursive product rule agrees with the closed monomial expansion through degree 20",
          closed_ok);

    check(r, "transgression is injective on every graded piece through degree 24",
          trg_injectivity_check(L, 24));

    const ProjectiveBundle P = cp2_over_bsu3();
    bool kernels_ok = true;
    bool lcols_ok = true;
    for (int d = 1; d <= dmax; ++d) {
        const int degree = 4 * d + 4;
        for (const KappaDomain dom : {KappaDomain::pont, KappaDomain::full}) {
            const KappaTable looped = loop_kappa(kappa_table(P, degree, dom));
            const Poly l =
                signature_component(static_cast<size_t>(d) + 1, *looped.domain_ring);
            lcols_ok = lcols_ok && looped.apply(l).is_zero();
            if (dom == KappaDomain::pont)
                kernels_ok = kernels_ok && same_poly_span(looped.kernel(), {l});
        }
    }
    check(r,
          "looped tables through d = " + std::to_string(dmax) +
              " have exactly the signature span as kernel",
          kernels_ok);
    check(r, "the signature column of every looped table vanishes identically", lcols_ok);

    const IteratedLoop chain = make_iterated_loop(src, 3);
    const Poly t3 = iterate_trg(chain, pow(src->gen("c4"), 2));
    check(r, "threefold iterated transgression drops degree 8 to 5 and stays nonzero",
          !t3.is_zero() && t3.is_homogeneous(5));
    return r;
}

SuiteReport suite_gysin_axioms() {
    SuiteReport r{"gysin-axioms", {}};
    const int count = 100;
    const ProjectiveBundle P = cp2_over_bsu3();
    RandomPolys rand(0xA5A5u);

    bool ok = true;
    for (int i = 0; i < count; ++i) {
        const Poly x = rand.over(*P.total(), 12);
        const Poly y = rand.over(*P.base(), 10);
        ok = ok && P.gysin(x * P.pullback(y)) == P.gysin(x) * y;
    }
    check(r, "pushforward is linear over the base on 100 pseudorandom pairs", ok);

    const bool norm = P.gysin(P.total()->one()).is_zero() && P.gysin(P.z(1)).is_zero() &&
                      P.gysin(P.z(2)) == P.base()->one();
    check(r, "normalization: 1, z, z^2 push to 0, 0, 1", norm);

    ok = true;
    for (int i = 0; i < count; ++i) ok = ok && P.gysin(P.pullback(rand.over(*P.base(), 12))).is_zero();
    check(r, "pushforward annihilates pullbacks on 100 pseudorandom classes", ok);

    ok = true;
    for (int i = 0; i < count; ++i) {
        const Poly y = rand.over(*P.base(), 12);
        ok = ok && P.transfer(P.pullback(y)) == Rational(3) * y;
    }
    check(r, "transfer after pullback multiplies by the fibre Euler number 3 on 100 "
             "pseudorandom classes",
          ok);

    const ProductBundle prod(cp2_over_bsu3(), cpm_over_su2_plus_trivial(2));
    ok = true;
    for (int i = 0; i < count; ++i) {
        const Poly xa = rand.over(*prod.first().total(), 10);
        const Poly xb = rand.over(*prod.second().total(), 10);
        ok = ok && prod.gysin(prod.embed_total(xa, xb)) ==
                       prod.embed_base(prod.first().gysin(xa), prod.second().gysin(xb));
    }
    check(r, "pushforward of a product splits across the factors on 100 pseudorandom pairs", ok);

    // Base change along u -> x^2 + z x into Q[x, z]/(x^21, z^2).
    const ProjectiveBundle flat = cpm_over_su2_plus_trivial(2);
    const TablePtr xt = make_table({{"x", 2}});
    const RingPtr cpr = RingPresentation::quotient_ring(xt, {Poly::generator(xt, 0, 21)});
    const ProjectiveBundle proj(BundleSpec{cpr, 2, {}}, "z");
    const RingPtr two = proj.total();
    const Poly u2 = two->reduce(two->gen("x", 2) + two->gen("z") * two->gen("x"));
    const ProjectiveBundle pulled(BundleSpec{two, 3, {two->zero(), u2}}, "w");
    const std::vector<Poly> totmap{pulled.pullback(u2), pulled.total()->gen("w")};
    const std::vector<Poly> basemap{u2};
    ok = true;
    for (int i = 0; i < count; ++i) {
        const Poly x = rand.over(*flat.total(), 14);
        const Poly lhs = pulled.gysin(substitute(x, totmap, *pulled.total()));
        const Poly rhs = substitute(flat.gysin(x), basemap, *two);
        ok = ok && lhs == rhs;
    }
    check(r, "pushforward commutes with base change along u -> x^2 + z*x on 100 pseudorandom "
             "classes",
          ok);

    // Transitivity on a two-stage tower of projective bundles: the joint
    // z^2 w coordinate equals the two-step pushforward.
    const RingPtr tot1 = P.total();
    const ProjectiveBundle stage2(
        BundleSpec{tot1, 2, {P.z(1), P.pullback(P.base()->gen("c4"))}}, "w");
    const size_t nbase = P.base()->table()->size();
    auto joint = [&](const Poly& x) {
        const Poly red = stage2.total()->reduce(x);
        Poly out{P.base()->table()};
        for (const auto& [mono, c] : red.terms()) {
            if (mono[nbase] != 2 || mono[nbase + 1] != 1) continue;
            out.add_term(Monomial(mono.begin(), mono.begin() + static_cast<long>(nbase)), c);
        }
        return out;
    };
    ok = true;
    for (int i = 0; i < count; ++i) {
        const Poly x = rand.over(*stage2.total(), 16);
        ok = ok && joint(x) == P.gysin(stage2.gysin(x));
    }
    check(r, "pushforward along a two-stage tower composes transitively on 100 pseudorandom "
             "classes",
          ok);

    const RingPtr p8r = pont_ring(8);
    ok = true;
    for (int degree = 8; degree <= 16; degree += 4)
        for (const Monomial& mono : p8r->basis(degree)) {
            const Poly cls = Poly::term(p8r->table(), mono, Rational(1));
            ok = ok && prod.kappa_via_restriction(cls) == prod.kappa(cls);
        }
    check(r, "product pushforward factors through the truncated restriction on all Pontrjagin "
             "monomials of degree 8..16",
          ok);
    return r;
}

SuiteReport suite_vanishing() {
    SuiteReport r{"vanishing", {}};
    const int kmax = std::max(2, default_depth(6));
    const ProjectiveBundle P = cp2_over_bsu3();

    const Poly k1 = P.kappa(l_class_component(1, 2));
    check(r, "kappa of the degree-4 signature component is the fibre signature 1",
          k1 == P.base()->one(), "value = " + print_poly(k1));

    bool vanish = true;
    Poly total = P.kappa(l_class_component(0, 2)) + k1;
    std::string detail;
    for (int k = 2; k <= kmax; ++k) {
        const Poly kk = P.kappa(l_class_component(static_cast<size_t>(k), 2));
        vanish = vanish && kk.is_zero();
        total += kk;
        detail += (k > 2 ? ", " : "") + print_poly(kk);
    }
    check(r,
          "kappa kills the signature components in degrees 8 through " + std::to_string(4 * kmax),
          vanish, "values = " + detail);
    check(r,
          "pushforward of the total signature class is 1 through degree " +
              std::to_string(4 * kmax),
          total == P.base()->one(), "total = " + print_poly(total));
    return r;
}

SuiteReport suite_holo() {
    SuiteReport r{"holo", {}};
    const int trunc = std::max(6, default_depth(6));
    const int rr = std::max(20, 2 * trunc + 2);
    const HoloReport h = composite_pushforward_holomorphic(rr, 2, trunc);

    check(r,
          "first-stage pushforward sends u^l to l x^(2l-1) for l <= " + std::to_string(trunc) +
              " at r = " + std::to_string(rr),
          h.proj_gysin_ok);
    check(r, "second-stage pushforward annihilates pulled-back classes", h.pullback_killed);
    check(r, "joint coefficient extraction agrees with the two-step pushforward",
          h.transitivity_ok);
    check(r, "composite coefficients equal l * a_l for l = 1.." + std::to_string(trunc),
          h.matches_expected,
          "composite = " + rational_list(h.composite) + "; l*a_l = " + rational_list(h.expected));
    check(r, "composite coefficients are nonzero for l = 1..5", h.nonzero_through_5);
    return r;
}

}  // namespace

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lclass",        "prop52",       "thm18",
                                                "weyl-compare",  "lemma31",      "transgression",
                                                "gysin-axioms",  "vanishing",    "holo"};
    return names;
}

SuiteReport run_suite(const std::string& name) {
    if (name == "lclass") return suite_lclass();
    if (name == "prop52") return suite_prop52();
    if (name == "thm18") return suite_thm18();
    if (name == "weyl-compare") return suite_weyl_compare();
    if (name == "lemma31") return suite_lemma31();
    if (name == "transgression") return suite_transgression();
    if (name == "gysin-axioms") return suite_gysin_axioms();
    if (name == "vanishing") return suite_vanishing();
    if (name == "holo") return suite_holo();
    throw Error("unknown suite '" + name + "'");
}

std::string render_text(const std::vector<SuiteReport>& reports) {
    std::string out;
    size_t passed = 0, total = 0;
    for (const auto& rep : reports) {
        out += "suite " + rep.name + "\n";
        for (size_t i = 0; i < rep.checks.size(); ++i) {
            const CheckResult& c = rep.checks[i];
            out += std::string("  [") + (c.pass ? "PASS" : "FAIL") + "] " + rep.name + "." +
                   std::to_string(i + 1) + ": " + c.claim + "\n";
            if (!c.detail.empty()) out += "         " + c.detail + "\n";
            ++total;
            if (c.pass) ++passed;
        }
    }
    out += "result: " + std::to_string(passed) + "/" + std::to_string(total) +
           " checks passed\n";
    return out;
}

std::string render_json(const std::vector<SuiteReport>& reports) {
    nlohmann::json j;
    j["suites"] = nlohmann::json::array();
    bool all = true;
    for (const auto& rep : reports) {
        nlohmann::json js;
        js["name"] = rep.name;
        js["pass"] = rep.all_pass();
        js["checks"] = nlohmann::json::array();
        for (size_t i = 0; i < rep.checks.size(); ++i) {
            const CheckResult& c = rep.checks[i];
            nlohmann::json jc;
            jc["id"] = rep.name + "." + std::to_string(i + 1);
            jc["claim"] = c.claim;
            jc["pass"] = c.pass;
            jc["detail"] = c.detail;
            js["checks"].push_back(jc);
        }
        all = all && rep.all_pass();
        j["suites"].push_back(js);
    }
    j["pass"] = all;
    return j.dump(2) + "\n";
}

}  // namespace mmm
