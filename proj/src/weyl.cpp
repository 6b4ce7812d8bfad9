#include "mmmcalc/weyl.hpp"

#include <map>

#include "mmmcalc/error.hpp"
#include "mmmcalc/symmetric.hpp"

namespace mmm {

namespace {

// Coordinate rows of polynomials against the union of their monomials.
Mat monomial_rows(const std::vector<Poly>& polys, size_t* ncols) {
    std::map<Monomial, size_t> index;
    for (const auto& p : polys)
        for (const auto& [mono, c] : p.terms()) index.emplace(mono, index.size());
    Mat rows;
    for (const auto& p : polys) {
        Vec row(index.size(), Rational(0));
        for (const auto& [mono, c] : p.terms()) row[index.at(mono)] = c;
        rows.push_back(std::move(row));
    }
    *ncols = index.size();
    return rows;
}

}  // namespace

TorusModel torus_model() {
    TorusModel T;
    T.ring = RingPresentation::free_ring({{"x1", 2}, {"x2", 2}});
    const Poly x1 = T.x1();
    const Poly x2 = T.x2();
    const Poly x3 = T.x3();
    T.action = {
        {x1, x2},  // identity
        {x2, x1},  // swap x1 x2
        {x3, x2},  // swap x1 x3
        {x1, x3},  // swap x2 x3
        {x2, x3},  // x1 -> x2 -> x3 -> x1
        {x3, x1},  // x1 -> x3 -> x2 -> x1
    };
    return T;
}

Poly phi_average(const TorusModel& T, const Poly& p) {
    require(same_table(p.table(), T.ring->table()), "phi_average: class over a different ring");
    Poly out = T.ring->zero();
    for (const auto& images : T.action) out += substitute(p, images, *T.ring);
    for (const auto& images : T.action)
        require(substitute(out, images, *T.ring) == out, "phi_average: sum is not invariant");
    return out;
}

std::vector<Poly> z_basis(const TorusModel& T) {
    const Poly x1 = T.x1();
    const Poly x2 = T.x2();
    const Poly x3 = T.x3();
    std::vector<Poly> z{(x2 - x1) * (x3 - x1), (x1 - x2) * (x3 - x2), (x1 - x3) * (x2 - x3)};
    for (const auto& images : T.action)
        for (const auto& zi : z) {
            Poly im = substitute(zi, images, *T.ring);
            require(im == z[0] || im == z[1] || im == z[2],
                    "z_basis: the action does not permute z1, z2, z3");
        }
    return z;
}

Poly s_power(const TorusModel& T, int i) {
    require(i >= 0, "s_power: exponent must be nonnegative");
    Poly out = T.ring->zero();
    for (const auto& zi : z_basis(T)) out += pow(zi, static_cast<unsigned>(i));
    return out;
}

std::pair<Poly, Poly> chi_p4_images(const TorusModel& T) {
    const std::vector<Poly> z = z_basis(T);
    const Poly chi = z[0];
    const Poly p4 = z[0] + (z[0] + z[1] + z[2]);
    // The vertical tangent bundle at the identity coset has the two weights
    // x2 - x1 and x3 - x1: their product is the Euler class and the sum of
    // their squares the degree-four Pontrjagin class.
    const Poly a = T.x2() - T.x1();
    const Poly b = T.x3() - T.x1();
    require(chi == a * b, "chi_p4_images: Euler image disagrees with the weight product");
    require(p4 == a * a + b * b, "chi_p4_images: p4 image disagrees with the weight squares");
    return {chi, p4};
}

std::vector<Poly> su3_cw_images(const TorusModel& T) {
    const Poly x1 = T.x1();
    const Poly x2 = T.x2();
    const Poly x3 = T.x3();
    return {x1 * x2 + x1 * x3 + x2 * x3, x1 * x2 * x3};
}

Mat binomial_matrix(int d) {
    require(d >= 0, "binomial_matrix: size parameter must be nonnegative");
    const size_t n = static_cast<size_t>(d) + 1;
    Mat m(n, Vec(n, Rational(0)));
    for (int j = 0; j <= d; ++j) {
        for (int k = 0; k <= d; ++k)
            m[static_cast<size_t>(j)][static_cast<size_t>(k)] = Rational(binomial(d - k, j));
    }
    return m;
}

Rational binomial_matrix_det(int d) { return det(binomial_matrix(d)); }

int image_dimension(const TorusModel& T, int d) {
    require(d >= 0, "image_dimension: degree parameter must be nonnegative");
    const std::vector<Poly> z = z_basis(T);
    const auto [chi, p4] = chi_p4_images(T);
    std::vector<Poly> s(static_cast<size_t>(d) + 1, T.ring->zero());
    for (int i = 0; i <= d; ++i) s[static_cast<size_t>(i)] = s_power(T, i);
    std::vector<Poly> images;
    for (int k = 0; k <= d; ++k) {
        Poly av = phi_average(T, pow(chi, static_cast<unsigned>(k)) *
                                     pow(p4, static_cast<unsigned>(d - k)));
        // The average of z1^k (z1 + s1)^(d-k) expands binomially: the sum of
        // the invariants s1 splits off and the average of z1^i is 2 s_i.
        Poly expect = T.ring->zero();
        for (int j = 0; j <= d - k; ++j)
            expect += Rational(2 * binomial(d - k, j)) *
                      (pow(s[1], static_cast<unsigned>(j)) * s[static_cast<size_t>(d - j)]);
        require(av == expect, "image_dimension: average disagrees with the binomial expansion");
        images.push_back(std::move(av));
    }
    size_t ncols = 0;
    Mat rows = monomial_rows(images, &ncols);
    return static_cast<int>(rank(rows, ncols));
}

FormalZModel formal_z_model() {
    FormalZModel F;
    F.ring = RingPresentation::free_ring({{"z1", 4}, {"z2", 4}, {"z3", 4}});
    const Poly z1 = F.ring->gen("z1");
    const Poly z2 = F.ring->gen("z2");
    const Poly z3 = F.ring->gen("z3");
    F.action = {
        {z1, z2, z3}, {z2, z1, z3}, {z3, z2, z1},
        {z1, z3, z2}, {z2, z3, z1}, {z3, z1, z2},
    };
    return F;
}

Poly formal_average(const FormalZModel& F, const Poly& p) {
    require(same_table(p.table(), F.ring->table()),
            "formal_average: class over a different ring");
    Poly out = F.ring->zero();
    for (const auto& images : F.action) out += substitute(p, images, *F.ring);
    return out;
}

Poly formal_s_power(const FormalZModel& F, int i) {
    require(i >= 0, "formal_s_power: exponent must be nonnegative");
    Poly out = F.ring->zero();
    for (size_t g = 0; g < 3; ++g)
        out += pow(Poly::generator(F.ring->table(), g), static_cast<unsigned>(i));
    return out;
}

int formal_image_dimension(int d) {
    require(d >= 0, "formal_image_dimension: degree parameter must be nonnegative");
    const FormalZModel F = formal_z_model();
    const Poly z1 = F.ring->gen("z1");
    const Poly s1 = formal_s_power(F, 1);
    std::vector<Poly> images;
    for (int k = 0; k <= d; ++k)
        images.push_back(formal_average(
            F, pow(z1, static_cast<unsigned>(k)) * pow(z1 + s1, static_cast<unsigned>(d - k))));
    size_t ncols = 0;
    Mat rows = monomial_rows(images, &ncols);
    return static_cast<int>(rank(rows, ncols));
}

bool formal_power_sum_independent(int d) {
    require(d >= 2, "formal_power_sum_independent: needs d >= 2");
    const FormalZModel F = formal_z_model();
    const Poly s1 = formal_s_power(F, 1);
    std::vector<Poly> span{pow(s1, static_cast<unsigned>(d))};
    for (int j = 1; j < d; ++j)
        span.push_back(pow(s1, static_cast<unsigned>(d - j)) * formal_s_power(F, j));
    return !poly_in_span(span, formal_s_power(F, d));
}

ChiDecomposition decompose_so4(const Poly& x) {
    const RingPtr so4 = so_ring(4);
    require(same_table(x.table(), so4->table()), "decompose_so4: expected a class over H*(BSO(4))");
    const Poly xr = so4->reduce(x);
    require(!xr.is_zero(), "decompose_so4: class must be nonzero");
    const auto deg = xr.homogeneous_degree();
    require(deg.has_value(), "decompose_so4: class must be homogeneous");
    require(*deg >= 4 && *deg % 4 == 0, "decompose_so4: degree must be a positive multiple of 4");
    const size_t dplus1 = static_cast<size_t>(*deg / 4);

    const Poly l = rename_into(l_class_component(dplus1, 2), *so4);
    Monomial ppow(so4->table()->size(), 0);
    ppow[0] = static_cast<int>(dplus1);
    const Rational a = xr.coeff(ppow) / l.coeff(ppow);
    const Poly rest = so4->reduce(xr - a * l);

    static const RingPtr fr = RingPresentation::free_ring({{"p4", 4}, {"chi", 4}});
    // Clear the relation chi^2 = p8 by sending p8 to chi^2, then strip one
    // factor of chi; on the remainder every monomial carries one.
    const std::vector<Poly> to_free{fr->gen("p4"), pow(fr->gen("chi"), 2), fr->gen("chi")};
    const Poly image = substitute(rest, to_free, *fr);
    Poly F = fr->zero();
    for (const auto& [mono, c] : image.terms()) {
        require(mono[1] >= 1, "decompose_so4: remainder is not divisible by the Euler class");
        Monomial m2 = mono;
        --m2[1];
        F.add_term(m2, c);
    }
    require(so4->reduce(a * l + rename_into(fr->gen("chi") * F, *so4)) == xr,
            "decompose_so4: decomposition does not reassemble");
    return {a, F};
}

Mat weyl_matrix(int d) {
    require(d >= 1, "weyl_matrix: degree parameter must be positive");
    const TorusModel T = torus_model();
    const auto [chi_im, p4_im] = chi_p4_images(T);
    const RingPtr so4 = so_ring(4);
    const std::vector<Monomial> cols = so4->basis(4 * d + 4);
    const std::vector<Monomial> rows = T.ring->basis(4 * d);
    std::map<Monomial, size_t> ridx;
    for (size_t r = 0; r < rows.size(); ++r) ridx.emplace(rows[r], r);

    Mat out(rows.size(), Vec(cols.size(), Rational(0)));
    const std::vector<Poly> to_torus{p4_im, chi_im};  // free-ring order: p4, chi
    for (size_t c = 0; c < cols.size(); ++c) {
        const ChiDecomposition dec =
            decompose_so4(Poly::term(so4->table(), cols[c], Rational(1)));
        if (dec.F.is_zero()) continue;
        const Poly averaged = phi_average(T, substitute(dec.F, to_torus, *T.ring));
        for (const auto& [mono, coef] : averaged.terms()) out[ridx.at(mono)][c] = coef;
    }
    return out;
}

SubspaceSpec kernel_via_weyl(int d) {
    const RingPtr so4 = so_ring(4);
    const int degree = 4 * d + 4;
    const std::vector<Monomial> monos = so4->basis(degree);
    std::vector<Poly> basis;
    for (const Vec& v : nullspace(weyl_matrix(d), monos.size())) {
        Poly p = so4->zero();
        for (size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], v[i]);
        basis.push_back(std::move(p));
    }
    return make_subspace(4, degree, std::move(basis));
}

Mat cw_transport(const KappaTable& T) {
    require(T.target_ring->table()->size() == 2 &&
                T.target_ring->table()->index_of("c4").has_value() &&
                T.target_ring->table()->index_of("c6").has_value(),
            "cw_transport: target ring must be H*(BSU(3))");
    const TorusModel M = torus_model();
    const std::vector<Poly> weights = su3_cw_images(M);
    std::vector<Poly> images(2, M.ring->zero());
    images[*T.target_ring->table()->index_of("c4")] = weights[0];
    images[*T.target_ring->table()->index_of("c6")] = weights[1];

    const std::vector<Monomial> rows = M.ring->basis(T.degree - T.n);
    std::map<Monomial, size_t> ridx;
    for (size_t r = 0; r < rows.size(); ++r) ridx.emplace(rows[r], r);

    Mat out(rows.size(), Vec(T.domain_basis.size(), Rational(0)));
    for (size_t t = 0; t < T.target_basis.size(); ++t) {
        const Poly cw = substitute(T.target_basis[t], images, *M.ring);
        for (size_t c = 0; c < T.domain_basis.size(); ++c) {
            const Rational& coef = T.matrix[t][c];
            if (coef == 0) continue;
            for (const auto& [mono, q] : cw.terms()) out.at(ridx.at(mono)).at(c) += coef * q;
        }
    }
    return out;
}

}  // namespace mmm
