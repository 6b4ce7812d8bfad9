#include "mmmcalc/loop.hpp"

#include <map>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/error.hpp"
#include "mmmcalc/linalg.hpp"

namespace mmm {

LoopAlgebra make_loop(const RingPtr& source) {
    require(source != nullptr, "make_loop: missing source ring");
    require(source->rules().empty(), "make_loop: source ring must be free");
    const GeneratorTable& t = *source->table();
    std::vector<Generator> gens;
    for (size_t i = 0; i < t.size(); ++i) {
        require(t[i].degree >= 2, "make_loop: generator '" + t[i].name + "' has degree < 2");
        gens.push_back(t[i]);
    }
    auto taken = [&gens](const std::string& name) {
        for (const Generator& g : gens)
            if (g.name == name) return true;
        return false;
    };
    for (size_t i = 0; i < t.size(); ++i) {
        std::string tname = "t_" + t[i].name;
        // Iterated loops reuse generator names; primes keep them distinct.
        while (taken(tname)) tname += "'";
        gens.push_back({tname, t[i].degree - 1});
    }
    return LoopAlgebra{source, RingPresentation::free_ring(std::move(gens)), t.size()};
}

Poly eta_pullback(const LoopAlgebra& L, const Poly& p) {
    Poly out = L.target->zero();
    for (const auto& [mono, c] : p.terms()) {
        Monomial big(L.target->table()->size(), 0);
        for (size_t i = 0; i < mono.size(); ++i) big[L.y_index(i)] = mono[i];
        out.add_term(big, c);
    }
    return out;
}

namespace {

// trg on the single-generator power x_i^e.
Poly trg_power(const LoopAlgebra& L, size_t i, int e) {
    const GeneratorTable& src = *L.source->table();
    Poly t = L.target->gen(L.t_index(i));
    if (src.odd(i)) return t;  // e is 1 on an odd generator
    return Rational(e) * L.target->gen(L.y_index(i), e - 1) * t;
}

Poly trg_term(const LoopAlgebra& L, const Monomial& mono, const Rational& coef) {
    const GeneratorTable& src = *L.source->table();
    size_t first = mono.size();
    for (size_t i = 0; i < mono.size(); ++i)
        if (mono[i] > 0) {
            first = i;
            break;
        }
    if (first == mono.size()) return L.target->zero();  // constants transgress to zero

    Monomial rest = mono;
    rest[first] = 0;
    const int e = mono[first];
    const int head_deg = src[first].degree * e;

    Poly head_eta = L.target->gen(L.y_index(first), e);
    Poly rest_poly = Poly::term(L.source->table(), rest, Rational(1));
    Poly out = Rational(head_deg % 2 == 0 ? 1 : -1) * head_eta *
               trg_term(L, rest, Rational(1));
    out += trg_power(L, first, e) * eta_pullback(L, rest_poly);
    return coef * out;
}

}  // namespace

Poly trg(const LoopAlgebra& L, const Poly& p) {
    require(same_table(p.table(), L.source->table()), "trg: input is not a source class");
    Poly out = L.target->zero();
    for (const auto& [mono, c] : p.terms()) out += trg_term(L, mono, c);
    return out;
}

Poly trg_monomial_closed(const LoopAlgebra& L, const Monomial& mono) {
    const GeneratorTable& src = *L.source->table();
    Poly out = L.target->zero();
    for (size_t i = 0; i < mono.size(); ++i) {
        require(!src.odd(i), "closed transgression formula needs an all-even source");
        if (mono[i] == 0) continue;
        Monomial big(L.target->table()->size(), 0);
        for (size_t j = 0; j < mono.size(); ++j) big[L.y_index(j)] = mono[j];
        big[L.y_index(i)] -= 1;
        big[L.t_index(i)] = 1;
        out.add_term(big, Rational(mono[i]));
    }
    return out;
}

bool trg_injectivity_check(const LoopAlgebra& L, int max_degree) {
    const GeneratorTable& src = *L.source->table();
    for (size_t i = 0; i < src.size(); ++i)
        require(!src.odd(i), "injectivity check needs an all-even source");
    for (int d = 1; d <= max_degree; ++d) {
        const std::vector<Monomial> domain = L.source->basis(d);
        if (domain.empty()) continue;
        std::vector<Poly> images;
        for (const Monomial& mono : domain) images.push_back(trg_term(L, mono, Rational(1)));
        std::map<Monomial, size_t> index;
        for (const Poly& im : images)
            for (const auto& [mono, c] : im.terms()) index.emplace(mono, index.size());
        Mat rows(index.size(), Vec(domain.size(), Rational(0)));
        for (size_t j = 0; j < images.size(); ++j)
            for (const auto& [mono, c] : images[j].terms()) rows[index.at(mono)][j] = c;
        if (!nullspace(rows, domain.size()).empty()) return false;
    }
    return true;
}

IteratedLoop make_iterated_loop(const RingPtr& source, int r) {
    require(r >= 1 && r <= 3, "iterated transgression supports r = 1..3");
    const GeneratorTable& t = *source->table();
    for (size_t i = 0; i < t.size(); ++i)
        require(t[i].degree > r,
                "iterated transgression: generator '" + t[i].name + "' too low for r");
    IteratedLoop chain;
    RingPtr cur = source;
    for (int k = 0; k < r; ++k) {
        chain.stages.push_back(make_loop(cur));
        cur = chain.stages.back().target;
    }
    return chain;
}

Poly iterate_trg(const IteratedLoop& chain, const Poly& p) {
    Poly cur = p;
    for (const LoopAlgebra& L : chain.stages) cur = trg(L, cur);
    return cur;
}

Poly lambda_extend(const Poly& w, const std::vector<Poly>& images,
                   const RingPresentation& target) {
    return substitute(w, images, target);
}

KappaTable loop_kappa(const KappaTable& T) {
    require(T.target_ring != nullptr && T.target_ring->rules().empty(),
            "loop table needs a free target ring");
    const LoopAlgebra L = make_loop(T.target_ring);

    KappaTable out;
    out.n = T.n + 1;
    out.degree = T.degree;
    out.domain = KappaDomain::pont;
    out.domain_ring = pont_ring(out.n);
    for (const Monomial& mono : out.domain_ring->basis(out.degree))
        out.domain_basis.push_back(Poly::term(out.domain_ring->table(), mono, Rational(1)));
    out.target_ring = L.target;
    if (out.degree >= out.n)
        for (const Monomial& mono : out.target_ring->basis(out.degree - out.n))
            out.target_basis.push_back(Poly::term(out.target_ring->table(), mono, Rational(1)));
    out.matrix.assign(out.target_basis.size(), Vec(out.domain_basis.size(), Rational(0)));
    for (size_t c = 0; c < out.domain_basis.size(); ++c) {
        const Poly restricted = rename_into(out.domain_basis[c], *T.domain_ring);
        const Poly value = trg(L, T.apply(restricted));
        const Vec col = coordinates(value, out.target_basis);
        for (size_t r = 0; r < col.size(); ++r) out.matrix[r][c] = col[r];
    }
    return out;
}

}  // namespace mmm
