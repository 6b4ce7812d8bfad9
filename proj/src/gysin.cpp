#include "mmmcalc/gysin.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "mmmcalc/error.hpp"
#include "mmmcalc/symmetric.hpp"

namespace mmm {

namespace {

// c_{2k} name -> k, alongside chi; the shared naming of so_ring/pont_ring.
bool parse_pont_name(const std::string& name, int& k) {
    if (name.size() < 2 || name[0] != 'p') return false;
    for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    int deg = std::stoi(name.substr(1));
    if (deg % 4 != 0 || deg == 0) return false;
    k = deg / 4;
    return true;
}

Poly strip_generator(const Poly& p, const TablePtr& target, size_t gen, int expect) {
    Poly out{target};
    for (const auto& [mono, c] : p.terms()) {
        if (mono[gen] != expect) continue;
        Monomial small;
        small.reserve(mono.size() - 1);
        for (size_t i = 0; i < mono.size(); ++i)
            if (i != gen) small.push_back(mono[i]);
        out.add_term(small, c);
    }
    return out;
}

}  // namespace

ProjectiveBundle::ProjectiveBundle(BundleSpec spec, const std::string& z_name)
    : spec_(std::move(spec)), veuler_(Poly(make_table({}))) {
    require(spec_.base != nullptr, "projective bundle needs a base ring");
    require(spec_.rank >= 1, "projective bundle needs positive rank");
    const RingPresentation& base = *spec_.base;
    require(static_cast<int>(spec_.chern.size()) <= spec_.rank,
            "more Chern classes than the rank allows");
    while (static_cast<int>(spec_.chern.size()) < spec_.rank)
        spec_.chern.push_back(base.zero());
    for (int i = 0; i < spec_.rank; ++i) {
        const Poly& c = spec_.chern[static_cast<size_t>(i)];
        require(same_table(c.table(), base.table()), "Chern class over a different ring");
        require(c.is_zero() || c.is_homogeneous(2 * (i + 1)),
                "Chern class " + std::to_string(i + 1) + " has the wrong degree");
    }

    std::vector<Generator> gens;
    for (size_t i = 0; i < base.gen_count(); ++i) gens.push_back((*base.table())[i]);
    require(!base.table()->index_of(z_name).has_value(),
            "base ring already uses the name '" + z_name + "'");
    gens.push_back({z_name, 2});
    TablePtr table = make_table(std::move(gens));
    zidx_ = table->size() - 1;

    auto lift = [&](const Poly& p, int zpow) {
        Poly out{table};
        for (const auto& [mono, c] : p.terms()) {
            Monomial big(table->size(), 0);
            std::copy(mono.begin(), mono.end(), big.begin());
            big[zidx_] = zpow;
            out.add_term(big, c);
        }
        return out;
    };

    std::vector<RewriteRule> rules;
    for (const RewriteRule& r : base.rules())
        rules.push_back({r.gen, r.power, lift(r.replacement, 0)});
    Poly repl{table};
    for (int i = 1; i <= spec_.rank; ++i)
        repl -= lift(spec_.chern[static_cast<size_t>(i - 1)], spec_.rank - i);
    rules.push_back({zidx_, spec_.rank, repl});
    total_ = RingPresentation::from_rules(table, std::move(rules));

    // c_{2j}(T_v) from the root shift v_i -> v_i + z of q*V (x) L^dual.
    const int mm = m();
    for (int j = 1; j <= mm; ++j) {
        Poly cj = total_->zero();
        for (int i = 0; i <= j; ++i) {
            Poly ci = (i == 0) ? total_->one() : lift(spec_.chern[static_cast<size_t>(i - 1)], 0);
            cj += Rational(binomial(spec_.rank - i, j - i)) * ci * z(j - i);
        }
        vchern_.push_back(total_->reduce(cj));
    }
    // The full rank-(m+1) top class reproduces the defining relation.
    Poly top = total_->zero();
    for (int i = 0; i <= spec_.rank; ++i) {
        Poly ci = (i == 0) ? total_->one() : lift(spec_.chern[static_cast<size_t>(i - 1)], 0);
        top += ci * z(spec_.rank - i);
    }
    require(total_->reduce(top).is_zero(),
            "vertical tangent data is inconsistent with the defining relation");

    // p_{4k} of the realification via the conjugate-pair convention, with the
    // sign pinned by p_4(T CP^2) = 3 h^2.
    for (int k = 1; k <= mm; ++k) {
        Poly pk = total_->zero();
        for (int a = 0; a <= 2 * k; ++a) {
            const int b = 2 * k - a;
            if (a > mm || b > mm) continue;
            Poly ca = (a == 0) ? total_->one() : vchern_[static_cast<size_t>(a - 1)];
            Poly cb = (b == 0) ? total_->one() : vchern_[static_cast<size_t>(b - 1)];
            Rational sign((a + k) % 2 == 0 ? 1 : -1);
            pk += sign * ca * cb;
        }
        vpont_.push_back(total_->reduce(pk));
    }
    veuler_ = (mm >= 1) ? vchern_.back() : total_->one();
    if (mm >= 1)
        require(total_->reduce(veuler_ * veuler_ - vpont_.back()).is_zero(),
                "Euler class square does not match the top Pontrjagin class");
}

Poly ProjectiveBundle::pullback(const Poly& x) const {
    require(same_table(x.table(), spec_.base->table()), "pullback input is not a base class");
    Poly out{total_->table()};
    for (const auto& [mono, c] : x.terms()) {
        Monomial big(total_->table()->size(), 0);
        std::copy(mono.begin(), mono.end(), big.begin());
        out.add_term(big, c);
    }
    return out;
}

Poly ProjectiveBundle::to_base(const Poly& x) const {
    Poly p = total_->reduce(x);
    for (const auto& [mono, c] : p.terms())
        require(mono[zidx_] == 0, "class does not come from the base");
    return strip_generator(p, spec_.base->table(), zidx_, 0);
}

Poly ProjectiveBundle::gysin(const Poly& x) const {
    require(same_table(x.table(), total_->table()), "pushforward input is not a total class");
    return strip_generator(total_->reduce(x), spec_.base->table(), zidx_, m());
}

Poly ProjectiveBundle::transfer(const Poly& x) const {
    return gysin(veuler_ * x);
}

Poly ProjectiveBundle::evaluate_vertical(const Poly& cls) const {
    const GeneratorTable& t = *cls.table();
    std::vector<Poly> images;
    for (size_t i = 0; i < t.size(); ++i) {
        int k = 0;
        if (t[i].name == "chi")
            images.push_back(veuler_);
        else if (parse_pont_name(t[i].name, k))
            images.push_back(k <= m() ? vpont_[static_cast<size_t>(k - 1)] : total_->zero());
        else
            throw Error("evaluate_vertical: unknown characteristic class '" + t[i].name + "'");
    }
    return substitute(cls, images, *total_);
}

Poly ProjectiveBundle::evaluate_vertical_chern(const Poly& cls) const {
    require(cls.table()->size() == static_cast<size_t>(m()),
            "elementary Chern expression needs exactly m generators");
    return substitute(cls, vchern_, *total_);
}

Poly KappaTable::apply(const Poly& cls) const {
    const Vec v = coordinates(domain_ring->reduce(cls), domain_basis);
    Poly out = target_ring->zero();
    for (size_t r = 0; r < matrix.size(); ++r) {
        Rational acc(0);
        for (size_t c = 0; c < v.size(); ++c) acc += matrix[r][c] * v[c];
        out += acc * target_basis[r];
    }
    return out;
}

std::vector<Poly> KappaTable::kernel() const {
    std::vector<Poly> out;
    for (const Vec& v : nullspace(matrix, domain_basis.size())) {
        Poly p = domain_ring->zero();
        for (size_t j = 0; j < v.size(); ++j) p += v[j] * domain_basis[j];
        out.push_back(p);
    }
    return out;
}

KappaTable kappa_table(const ProjectiveBundle& P, int degree, KappaDomain domain) {
    KappaTable T;
    T.n = P.fibre_dim();
    T.degree = degree;
    T.domain = domain;
    T.domain_ring = (domain == KappaDomain::pont) ? pont_ring(T.n) : so_ring(T.n);
    for (const Monomial& mono : T.domain_ring->basis(degree))
        T.domain_basis.push_back(Poly::term(T.domain_ring->table(), mono, Rational(1)));
    T.target_ring = P.base();
    if (degree >= T.n)
        for (const Monomial& mono : T.target_ring->basis(degree - T.n))
            T.target_basis.push_back(Poly::term(T.target_ring->table(), mono, Rational(1)));
    T.matrix.assign(T.target_basis.size(), Vec(T.domain_basis.size(), Rational(0)));
    for (size_t c = 0; c < T.domain_basis.size(); ++c) {
        const Vec col = coordinates(P.kappa(T.domain_basis[c]), T.target_basis);
        for (size_t r = 0; r < col.size(); ++r) T.matrix[r][c] = col[r];
    }
    return T;
}

Poly sphere_bundle_gysin(int m, const Poly& x) {
    RingPtr so = so_ring(2 * m);
    require(same_table(x.table(), so->table()), "input is not a class over H*(BSO(2m))");
    const Poly p = so->reduce(x);
    return Rational(2) * strip_generator(p, pont_ring(2 * m + 1)->table(), so->table()->size() - 1, 1);
}

ProductBundle::ProductBundle(ProjectiveBundle a, ProjectiveBundle b)
    : a_(std::move(a)),
      b_(std::move(b)),
      total_(tensor_product(*a_.total(), *b_.total(), "", "'")),
      base_(tensor_product(*a_.base(), *b_.base(), "", "'")) {}

Poly ProductBundle::embed_total(const Poly& xa, const Poly& xb) const {
    return total_.ring->reduce(embed_left(total_, xa) * embed_right(total_, xb));
}

Poly ProductBundle::embed_base(const Poly& ya, const Poly& yb) const {
    return base_.ring->reduce(embed_left(base_, ya) * embed_right(base_, yb));
}

Poly ProductBundle::gysin(const Poly& x) const {
    const Poly p = total_.ring->reduce(x);
    const size_t na = a_.base()->table()->size();
    const size_t nb = b_.base()->table()->size();
    const size_t z1 = na;                 // z of the left factor
    const size_t z2 = total_.split + nb;  // z of the right factor
    Poly out{base_.ring->table()};
    for (const auto& [mono, c] : p.terms()) {
        if (mono[z1] != a_.m() || mono[z2] != b_.m()) continue;
        Monomial small;
        small.reserve(na + nb);
        for (size_t i = 0; i < na; ++i) small.push_back(mono[i]);
        for (size_t i = 0; i < nb; ++i) small.push_back(mono[total_.split + i]);
        out.add_term(small, c);
    }
    return out;
}

Poly ProductBundle::kappa(const Poly& cls) const {
    const GeneratorTable& t = *cls.table();
    const int m1 = a_.m(), m2 = b_.m();
    std::vector<Poly> images;
    for (size_t i = 0; i < t.size(); ++i) {
        int k = 0;
        if (t[i].name == "chi") {
            images.push_back(embed_total(a_.vertical_euler(), b_.vertical_euler()));
        } else if (parse_pont_name(t[i].name, k)) {
            Poly sum = total_.ring->zero();
            for (int i1 = std::max(0, k - m2); i1 <= std::min(k, m1); ++i1) {
                const int i2 = k - i1;
                Poly left = (i1 == 0) ? a_.total()->one()
                                      : a_.vertical_pont()[static_cast<size_t>(i1 - 1)];
                Poly right = (i2 == 0) ? b_.total()->one()
                                       : b_.vertical_pont()[static_cast<size_t>(i2 - 1)];
                sum += embed_total(left, right);
            }
            images.push_back(sum);
        } else {
            throw Error("product kappa: unknown characteristic class '" + t[i].name + "'");
        }
    }
    return gysin(substitute(cls, images, *total_.ring));
}

Poly ProductBundle::kappa_via_restriction(const Poly& cls) const {
    const int n1 = a_.fibre_dim(), n2 = b_.fibre_dim();
    RingPtr pl = pont_ring(n1), pr = pont_ring(n2);
    const TensorRing t = whitney_target(n1, n2);
    const Poly r = whitney_restriction(t, n1, n2, cls);
    Poly out{base_.ring->table()};
    for (const auto& [mono, c] : r.terms()) {
        Monomial lm(mono.begin(), mono.begin() + static_cast<long>(t.split));
        Monomial rm(mono.begin() + static_cast<long>(t.split), mono.end());
        const Poly ka = a_.kappa(Poly::term(pl->table(), lm, Rational(1)));
        const Poly kb = b_.kappa(Poly::term(pr->table(), rm, Rational(1)));
        out += c * embed_base(ka, kb);
    }
    return out;
}

ChPushforwardReport ch_pushforward(int m, int trunc) {
    require(m >= 2, "ch_pushforward: fibre dimension must be at least 2");
    require(trunc >= 0, "ch_pushforward: truncation must be nonnegative");
    ChPushforwardReport rep;
    rep.m = m;
    rep.trunc = trunc;

    ProjectiveBundle P = cpm_over_su2_plus_trivial(m);
    const RingPtr& base = P.base();
    for (int p = 0; p <= trunc; ++p) {
        const size_t d = static_cast<size_t>(m + 2 * p);
        const Poly chd = character_component(CharKind::chern, d, static_cast<size_t>(m), true);
        const Poly val = P.gysin(P.evaluate_vertical_chern(chd));
        Monomial up(1, p);
        rep.pipeline.push_back(val.coeff(up));
        require(val == rep.pipeline.back() * Poly::term(base->table(), up, Rational(1)) ||
                    (val.is_zero() && rep.pipeline.back() == 0),
                "ch_pushforward: value is not a multiple of u^p");
    }

    // (2cos(sqrt u) + (m-1)) * sum_l (-u)^l / (m+2l)! as truncated series.
    for (int p = 0; p <= trunc; ++p) {
        Rational acc(0);
        for (int l = 0; l <= p; ++l) {
            const int k = p - l;
            Rational A = Rational(2 * ((l % 2 == 0) ? 1 : -1)) / Rational(factorial(2 * l));
            if (l == 0) A += Rational(m - 1);
            const Rational B = Rational((k % 2 == 0) ? 1 : -1) / Rational(factorial(m + 2 * k));
            acc += A * B;
        }
        rep.series_product.push_back(acc);
    }

    for (int p = 0; p <= trunc; ++p) {
        Rational single = Rational(m - 1) / Rational(factorial(m + 2 * p));
        Rational twice = single;
        for (int k = 0; k <= p; ++k) {
            const int l = p - k;
            single += Rational(2) / Rational(factorial(m + 2 * k) * factorial(2 * l));
            twice += Rational(2) / Rational(double_factorial(m + 2 * k) * factorial(2 * l));
        }
        const Rational sign((p % 2 == 0) ? 1 : -1);
        rep.closed_single.push_back(sign * single);
        rep.closed_double.push_back(sign * twice);
    }

    rep.matches_series = rep.pipeline == rep.series_product;
    rep.matches_single = rep.pipeline == rep.closed_single;
    rep.matches_double = rep.pipeline == rep.closed_double;
    rep.all_nonzero =
        std::all_of(rep.pipeline.begin(), rep.pipeline.end(), [](const Rational& a) { return a != 0; });
    return rep;
}

HoloReport composite_pushforward_holomorphic(int r, int m, int trunc) {
    require(m >= 2, "holomorphic composite: fibre dimension must be at least 2");
    require(trunc >= 1, "holomorphic composite: truncation must be positive");
    require(r >= 2 * trunc, "holomorphic composite: ambient projective space too small");
    HoloReport rep;
    rep.m = m;
    rep.r = r;
    rep.trunc = trunc;

    TablePtr xt = make_table({{"x", 2}});
    RingPtr cpr = RingPresentation::quotient_ring(xt, {Poly::generator(xt, 0, r + 1)});

    ProjectiveBundle proj({cpr, 2, {}}, "z");
    const RingPtr& two = proj.total();  // Q[x, z]/(x^{r+1}, z^2)
    const Poly x1 = two->gen("x"), zz = two->gen("z");
    const Poly u = two->reduce(x1 * x1 + zz * x1);

    std::vector<Poly> chern{two->zero(), u};
    ProjectiveBundle q({two, m + 1, chern}, "w");

    // proj pushforward of u^l.
    rep.proj_gysin_ok = true;
    for (int l = 0; l <= trunc; ++l) {
        const Poly lhs = proj.gysin(pow(u, static_cast<unsigned>(l)));
        Poly rhs = cpr->zero();
        if (l >= 1) rhs = Rational(l) * cpr->reduce(cpr->gen("x", 2 * l - 1));
        if (!(lhs == rhs)) rep.proj_gysin_ok = false;
    }

    // ch(T^proj) = 1 + 2z dies under the q-round trip.
    const Poly tproj = Rational(2) * zz;
    rep.pullback_killed = q.gysin(q.pullback(two->one())).is_zero() &&
                          q.gysin(q.pullback(tproj)).is_zero();

    const ChPushforwardReport flat = ch_pushforward(m, trunc);
    const size_t widx = q.total()->table()->index_of("w").value();
    const size_t zidx = q.total()->table()->index_of("z").value();
    rep.transitivity_ok = true;
    for (int l = 1; l <= trunc; ++l) {
        const size_t d = static_cast<size_t>(m + 2 * l);
        const Poly chd = character_component(CharKind::chern, d, static_cast<size_t>(m), true);
        // ch_{2d}(T^q) carries the whole composite component: the q-pullback
        // part ch_{2d}(q* T^proj) vanishes for d >= 2 since (2z)^2 = 0.
        const Poly vert = q.total()->reduce(q.evaluate_vertical_chern(chd));

        const Poly stepwise = proj.gysin(q.gysin(vert));

        // One-shot: the z w^m coordinate of the reduced class.
        Poly joint{cpr->table()};
        for (const auto& [mono, c] : vert.terms()) {
            if (mono[widx] != m || mono[zidx] != 1) continue;
            joint.add_term(Monomial{mono[0]}, c);
        }
        if (!(joint == stepwise)) rep.transitivity_ok = false;

        rep.composite.push_back(stepwise.coeff(Monomial{2 * l - 1}));
        rep.expected.push_back(Rational(l) * flat.pipeline[static_cast<size_t>(l)]);
    }
    rep.matches_expected = rep.composite == rep.expected;
    rep.nonzero_through_5 = true;
    for (int l = 1; l <= std::min(trunc, 5); ++l)
        if (rep.composite[static_cast<size_t>(l - 1)] == 0) rep.nonzero_through_5 = false;
    return rep;
}

ProjectiveBundle cp2_over_bsu3() {
    RingPtr su = su_ring(3);
    return ProjectiveBundle({su, 3, {su->zero(), su->gen("c4"), su->gen("c6")}});
}

ProjectiveBundle cpm_over_su2_plus_trivial(int m) {
    require(m >= 1, "fibre dimension must be positive");
    RingPtr base = RingPresentation::free_ring({{"u", 4}});
    std::vector<Poly> chern{base->zero(), base->gen("u")};
    return ProjectiveBundle({base, m + 1, chern});
}

ProjectiveBundle trivial_cpm(int m) {
    require(m >= 0, "fibre dimension must be nonnegative");
    RingPtr point = RingPresentation::free_ring({});
    return ProjectiveBundle({point, m + 1, {}});
}

}  // namespace mmm
