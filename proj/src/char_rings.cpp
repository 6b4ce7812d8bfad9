#include "mmmcalc/char_rings.hpp"

#include <map>
#include <tuple>
#include <utility>

#include "mmmcalc/error.hpp"
#include "mmmcalc/symmetric.hpp"

namespace mmm {

namespace {

int left_degree(const TensorRing& t, const Monomial& mono) {
    int d = 0;
    for (size_t i = 0; i < t.split; ++i) d += mono[i] * (*t.ring->table())[i].degree;
    return d;
}

int right_degree(const TensorRing& t, const Monomial& mono) {
    int d = 0;
    for (size_t i = t.split; i < mono.size(); ++i) d += mono[i] * (*t.ring->table())[i].degree;
    return d;
}

Monomial right_part(const TensorRing& t, const Monomial& mono) {
    return Monomial(mono.begin() + static_cast<long>(t.split), mono.end());
}

Monomial left_part(const TensorRing& t, const Monomial& mono) {
    return Monomial(mono.begin(), mono.begin() + static_cast<long>(t.split));
}

// Per right-factor degree block: the monomial basis of Pont^dr(n2), its
// index map, and the functionals cutting out the Hirzebruch quotient.
struct RightBlock {
    std::vector<Monomial> basis;
    std::map<Monomial, size_t> index;
    std::vector<Vec> functionals;
};

RightBlock make_right_block(int n2, int dr) {
    RightBlock b;
    for (const auto& q : pont_basis(n2, dr)) b.basis.push_back(q.terms().begin()->first);
    for (size_t i = 0; i < b.basis.size(); ++i) b.index.emplace(b.basis[i], i);
    Poly l = l_class_component(static_cast<size_t>(dr / 4), static_cast<size_t>(n2 / 2));
    Mat lrow(1, Vec(b.basis.size(), Rational(0)));
    for (size_t i = 0; i < b.basis.size(); ++i) lrow[0][i] = l.coeff(b.basis[i]);
    b.functionals = nullspace(lrow, b.basis.size());
    return b;
}

}  // namespace

RingPtr so_ring(int n) {
    require(n >= 2, "so_ring: fibre dimension must be at least 2");
    const int m = n / 2;
    std::vector<Generator> gens;
    for (int i = 1; i <= m; ++i) gens.push_back({"p" + std::to_string(4 * i), 4 * i});
    if (n % 2 == 1) return RingPresentation::free_ring(std::move(gens));
    gens.push_back({"chi", 2 * m});
    TablePtr table = make_table(gens);
    // chi^2 = p_{4m}
    Monomial head(table->size(), 0);
    head.back() = 2;
    Monomial pm(table->size(), 0);
    pm[static_cast<size_t>(m - 1)] = 1;
    Poly rel = Poly::term(table, head, Rational(1)) - Poly::term(table, pm, Rational(1));
    return RingPresentation::quotient_ring(table, {rel});
}

RingPtr su_ring(int n) {
    require(n >= 2, "su_ring: rank must be at least 2");
    std::vector<Generator> gens;
    for (int k = 2; k <= n; ++k) gens.push_back({"c" + std::to_string(2 * k), 2 * k});
    return RingPresentation::free_ring(std::move(gens));
}

RingPtr pont_ring(int n) {
    require(n >= 2, "pont_ring: fibre dimension must be at least 2");
    return elementary_ring(static_cast<size_t>(n / 2), 4);
}

std::vector<Poly> pont_basis(int n, int degree) {
    if (degree == 0) return {pont_ring(n)->one()};
    if (degree < 0 || degree % 4 != 0) return {};
    const RingPtr r = pont_ring(n);
    std::vector<Poly> out;
    for (const Monomial& m : r->basis(degree)) out.push_back(Poly::term(r->table(), m, Rational(1)));
    return out;
}

Vec coordinates(const Poly& p, const std::vector<Poly>& monomial_basis) {
    Vec v(monomial_basis.size(), Rational(0));
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < monomial_basis.size(); ++i) {
        require(monomial_basis[i].terms().size() == 1, "coordinates: basis entry is not a monomial");
        index.emplace(monomial_basis[i].terms().begin()->first, i);
    }
    for (const auto& [mono, c] : p.terms()) {
        auto it = index.find(mono);
        require(it != index.end(), "coordinates: polynomial has support outside the basis");
        v[it->second] = c;
    }
    return v;
}

Poly rename_into(const Poly& p, const RingPresentation& target) {
    const GeneratorTable& src = *p.table();
    std::vector<size_t> where(src.size());
    for (size_t i = 0; i < src.size(); ++i) {
        auto idx = target.table()->index_of(src[i].name);
        require(idx.has_value(), "rename_into: target lacks generator '" + src[i].name + "'");
        require((*target.table())[*idx].degree == src[i].degree,
                "rename_into: degree mismatch on '" + src[i].name + "'");
        where[i] = *idx;
    }
    Poly out = target.zero();
    for (const auto& [mono, c] : p.terms()) {
        Monomial big(target.table()->size(), 0);
        for (size_t i = 0; i < mono.size(); ++i) big[where[i]] += mono[i];
        out.add_term(big, c);
    }
    return target.reduce(out);
}

namespace {

Mat poly_rows(const std::vector<Poly>& polys, const std::map<Monomial, size_t>& index) {
    Mat rows(polys.size(), Vec(index.size(), Rational(0)));
    for (size_t i = 0; i < polys.size(); ++i)
        for (const auto& [mono, c] : polys[i].terms()) rows[i][index.at(mono)] = c;
    return rows;
}

}  // namespace

bool same_poly_span(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::map<Monomial, size_t> index;
    for (const auto& list : {a, b})
        for (const auto& p : list)
            for (const auto& [mono, c] : p.terms()) index.emplace(mono, index.size());
    return same_span(poly_rows(a, index), poly_rows(b, index), index.size());
}

bool poly_in_span(const std::vector<Poly>& span, const Poly& p) {
    std::map<Monomial, size_t> index;
    for (const auto& q : span)
        for (const auto& [mono, c] : q.terms()) index.emplace(mono, index.size());
    for (const auto& [mono, c] : p.terms()) index.emplace(mono, index.size());
    return in_span(poly_rows(span, index), poly_rows({p}, index)[0]);
}

TensorRing whitney_target(int n1, int n2) {
    return tensor_product(*pont_ring(n1), *pont_ring(n2), "", "'");
}

Poly whitney_image(const TensorRing& t, int n1, int n2, const Poly& x) {
    const int m1 = n1 / 2;
    const int m2 = n2 / 2;
    const int mtot = (n1 + n2) / 2;
    require(static_cast<int>(x.table()->size()) == mtot, "whitney_image: generator count mismatch");
    std::vector<Poly> images;
    for (int k = 1; k <= mtot; ++k) {
        Poly sum{t.ring->table()};
        for (int i = std::max(0, k - m2); i <= std::min(k, m1); ++i) {
            const int j = k - i;
            Monomial mono(t.ring->table()->size(), 0);
            if (i > 0) mono[static_cast<size_t>(i - 1)] = 1;
            if (j > 0) mono[t.split + static_cast<size_t>(j - 1)] = 1;
            sum.add_term(mono, Rational(1));
        }
        images.push_back(sum);
    }
    return substitute(x, images, *t.ring);
}

Poly sigma_truncate(const TensorRing& t, int n1, int n2, const Poly& x) {
    Poly out{t.ring->table()};
    for (const auto& [mono, c] : x.terms())
        if (left_degree(t, mono) >= n1 && right_degree(t, mono) >= n2) out.add_term(mono, c);
    return out;
}

Poly whitney_restriction(const TensorRing& t, int n1, int n2, const Poly& x) {
    return sigma_truncate(t, n1, n2, whitney_image(t, n1, n2, x));
}

Poly tilde_restriction(const TensorRing& t, int n1, int n2, const Poly& x) {
    require(n2 % 2 == 1, "tilde_restriction: second factor must be odd-dimensional");
    Poly r = whitney_restriction(t, n1, n2, x);
    // Eliminate, within every (left monomial, right degree) block, the
    // component along the Hirzebruch element of the right factor.
    std::map<std::pair<Monomial, int>, std::map<Monomial, Rational>> groups;
    for (const auto& [mono, c] : r.terms())
        groups[{left_part(t, mono), right_degree(t, mono)}][right_part(t, mono)] = c;
    std::map<int, Poly> lcache;
    Poly out{t.ring->table()};
    for (auto& [key, rhs] : groups) {
        const auto& [lm, dr] = key;
        auto lit = lcache.find(dr);
        if (lit == lcache.end())
            lit = lcache.emplace(dr, l_class_component(static_cast<size_t>(dr / 4),
                                                       static_cast<size_t>(n2 / 2))).first;
        const Poly& l = lit->second;
        // Pivot: the leading monomial of the Hirzebruch component.
        const Monomial pivot = l.terms().rbegin()->first;
        const Rational lp = l.terms().rbegin()->second;
        Rational lambda(0);
        auto pit = rhs.find(pivot);
        if (pit != rhs.end()) lambda = pit->second / lp;
        for (const auto& [rm, c] : rhs) {
            Rational adj = c - lambda * l.coeff(rm);
            if (adj == 0) continue;
            Monomial full = lm;
            full.insert(full.end(), rm.begin(), rm.end());
            out.add_term(full, adj);
        }
        if (lambda != 0)
            for (const auto& [rm, lc] : l.terms()) {
                if (rhs.count(rm)) continue;
                Monomial full = lm;
                full.insert(full.end(), rm.begin(), rm.end());
                out.add_term(full, -lambda * lc);
            }
    }
    return out;
}

SubspaceSpec make_subspace(int n, int degree, std::vector<Poly> basis) {
    if (!basis.empty()) {
        std::map<Monomial, size_t> index;
        for (const auto& p : basis)
            for (const auto& [mono, c] : p.terms()) index.emplace(mono, index.size());
        require(rank(poly_rows(basis, index), index.size()) == basis.size(),
                "make_subspace: basis is dependent");
    }
    return SubspaceSpec{n, degree, std::move(basis)};
}

bool same_subspace(const SubspaceSpec& a, const SubspaceSpec& b) {
    if (a.n != b.n || a.degree != b.degree) return false;
    return same_poly_span(a.basis, b.basis);
}

Mat restriction_rows(int n1, int n2, const std::vector<Poly>& domain, bool quotient_l) {
    const TensorRing t = whitney_target(n1, n2);
    const size_t N = domain.size();
    std::vector<Poly> images;
    for (const auto& x : domain) images.push_back(whitney_restriction(t, n1, n2, x));

    if (!quotient_l) {
        std::map<Monomial, size_t> rowindex;
        for (const auto& im : images)
            for (const auto& [mono, c] : im.terms()) rowindex.emplace(mono, rowindex.size());
        Mat mat(rowindex.size(), Vec(N, Rational(0)));
        for (size_t j = 0; j < N; ++j)
            for (const auto& [mono, c] : images[j].terms()) mat[rowindex.at(mono)][j] = c;
        return mat;
    }

    require(n2 % 2 == 1, "restriction_rows: quotient needs an odd second factor");
    std::map<int, RightBlock> blocks;
    // (left monomial, right degree) -> right-coordinate columns.
    std::map<std::pair<Monomial, int>, Mat> groups;
    for (size_t j = 0; j < N; ++j)
        for (const auto& [mono, c] : images[j].terms()) {
            const int dr = right_degree(t, mono);
            auto bit = blocks.find(dr);
            if (bit == blocks.end()) bit = blocks.emplace(dr, make_right_block(n2, dr)).first;
            auto& g = groups[{left_part(t, mono), dr}];
            if (g.empty()) g.assign(bit->second.basis.size(), Vec(N, Rational(0)));
            g[bit->second.index.at(right_part(t, mono))][j] = c;
        }
    Mat mat;
    for (const auto& [key, g] : groups)
        for (const auto& phi : blocks.at(key.second).functionals) {
            Vec row(N, Rational(0));
            for (size_t i = 0; i < phi.size(); ++i) {
                if (phi[i] == 0) continue;
                for (size_t j = 0; j < N; ++j) row[j] += phi[i] * g[i][j];
            }
            mat.push_back(std::move(row));
        }
    return mat;
}

SubspaceSpec kernel_intersection(int n, int degree) {
    require(n >= 2, "kernel_intersection: fibre dimension must be at least 2");
    if (n % 2 == 1)
        require(n >= 7, "kernel_intersection: odd fibre dimension must be at least 7");
    if (degree < n || degree % 4 != 0) return SubspaceSpec{n, degree, {}};

    std::vector<Poly> domain = pont_basis(n, degree);
    if (domain.empty()) return SubspaceSpec{n, degree, {}};

    Mat stacked;
    const int m = n / 2;
    if (n % 2 == 0) {
        for (int m1 = 1; m1 < m; ++m1) {
            Mat rows = restriction_rows(2 * m1, n - 2 * m1, domain, false);
            stacked.insert(stacked.end(), rows.begin(), rows.end());
        }
    } else {
        for (int m1 = 1; m1 <= m; ++m1) {
            const int n2 = n - 2 * m1;
            if (n2 < 3) continue;  // the point factor carries no constraints
            Mat rows = restriction_rows(2 * m1, n2, domain, true);
            stacked.insert(stacked.end(), rows.begin(), rows.end());
        }
    }

    std::vector<Vec> kernel = nullspace(stacked, domain.size());
    std::vector<Poly> basis;
    for (const auto& v : kernel) {
        Poly p{domain.front().table()};
        for (size_t j = 0; j < domain.size(); ++j) p += v[j] * domain[j];
        basis.push_back(p);
    }
    return make_subspace(n, degree, std::move(basis));
}

SubspaceSpec closed_form_kernel(int n, int degree) {
    require(n >= 2, "closed_form_kernel: fibre dimension must be at least 2");
    if (n % 2 == 1)
        require(n >= 7, "closed_form_kernel: odd fibre dimension must be at least 7");
    if (degree < n || degree % 4 != 0) return SubspaceSpec{n, degree, {}};
    const size_t d = static_cast<size_t>(degree / 4);
    const size_t m = static_cast<size_t>(n / 2);
    std::vector<Poly> basis{power_sum(d, m, 4)};
    if (n % 2 == 1) basis.push_back(l_class_component(d, m));
    return make_subspace(n, degree, std::move(basis));
}

}  // namespace mmm
