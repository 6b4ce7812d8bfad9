#include "mmmcalc/linalg.hpp"

#include <algorithm>

#include <boost/integer/common_factor_rt.hpp>

#include "mmmcalc/error.hpp"

namespace mmm {

namespace {

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

// Clear denominators row by row; zero rows are dropped.
IMat integerize(const Mat& rows, size_t ncols) {
    IMat out;
    for (const auto& row : rows) {
        require(row.size() == ncols, "linalg: ragged matrix");
        Int l = 1;
        bool nonzero = false;
        for (const auto& x : row) {
            if (x != 0) nonzero = true;
            l = boost::integer::lcm(l, denominator(x));
        }
        if (!nonzero) continue;
        IVec irow(ncols);
        for (size_t j = 0; j < ncols; ++j)
            irow[j] = numerator(row[j]) * (l / denominator(row[j]));
        out.push_back(std::move(irow));
    }
    return out;
}

struct Echelon {
    IMat rows;                  // fraction-free row echelon form
    std::vector<size_t> lead;   // pivot column of each row, increasing
};

// Fraction-free Gaussian elimination (Bareiss one-step division).
Echelon echelon(IMat m, size_t ncols) {
    Echelon e;
    size_t r = 0;
    Int prev = 1;
    for (size_t c = 0; c < ncols && r < m.size(); ++c) {
        size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < m.size(); ++i) {
            for (size_t j = c + 1; j < ncols; ++j) {
                Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                require(t % prev == 0, "linalg: Bareiss divisibility");
                m[i][j] = t / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        e.lead.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

}  // namespace

Vec primitive_normalize(const Vec& v) {
    Int l = 1;
    for (const auto& x : v) l = boost::integer::lcm(l, denominator(x));
    Int g = 0;
    for (const auto& x : v) g = boost::integer::gcd(g, Int(numerator(x) * (l / denominator(x))));
    if (g == 0) return Vec(v.size(), Rational(0));
    int sign = 1;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0) sign = -1;
        break;
    }
    Vec out(v.size());
    for (size_t j = 0; j < v.size(); ++j)
        out[j] = Rational(numerator(v[j]) * (l / denominator(v[j])) * sign / g);
    return out;
}

std::vector<Vec> nullspace(const Mat& rows, size_t ncols) {
    Echelon e = echelon(integerize(rows, ncols), ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : e.lead) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(ncols, Rational(0));
        v[f] = 1;
        // Back-substitute through the echelon rows, bottom up.
        for (size_t ri = e.rows.size(); ri-- > 0;) {
            size_t c = e.lead[ri];
            if (c > f) continue;
            Rational acc = 0;
            for (size_t j = c + 1; j <= f; ++j)
                if (v[j] != 0) acc += Rational(e.rows[ri][j]) * v[j];
            v[c] = -acc / Rational(e.rows[ri][c]);
        }
        basis.push_back(primitive_normalize(v));
    }
    return basis;
}

size_t rank(const Mat& rows, size_t ncols) {
    return echelon(integerize(rows, ncols), ncols).rows.size();
}

Rational det(const Mat& m) {
    const size_t n = m.size();
    for (const auto& row : m) require(row.size() == n, "linalg: det of non-square matrix");
    if (n == 0) return 1;
    Int denom = 1;
    IMat im;
    {
        Mat copy = m;
        im = integerize(copy, n);
        if (im.size() < n) return 0;
        // Track the denominator cleared from each row.
        im.clear();
        for (const auto& row : m) {
            Int l = 1;
            for (const auto& x : row) l = boost::integer::lcm(l, denominator(x));
            denom *= l;
            IVec irow(n);
            for (size_t j = 0; j < n; ++j)
                irow[j] = numerator(row[j]) * (l / denominator(row[j]));
            im.push_back(std::move(irow));
        }
    }
    int sign = 1;
    Int prev = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && im[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(im[c], im[piv]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i) {
            for (size_t j = c + 1; j < n; ++j) {
                Int t = im[c][c] * im[i][j] - im[i][c] * im[c][j];
                require(t % prev == 0, "linalg: Bareiss divisibility");
                im[i][j] = t / prev;
            }
            im[i][c] = 0;
        }
        prev = im[c][c];
    }
    return Rational(im[n - 1][n - 1] * sign) / Rational(denom);
}

bool in_span(const Mat& rows, const Vec& v) {
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return true;
    size_t ncols = v.size();
    size_t r = rank(rows, ncols);
    Mat ext = rows;
    ext.push_back(v);
    return rank(ext, ncols) == r;
}

bool same_span(const Mat& a, const Mat& b, size_t ncols) {
    size_t ra = rank(a, ncols);
    size_t rb = rank(b, ncols);
    if (ra != rb) return false;
    Mat joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    return rank(joint, ncols) == ra;
}

}  // namespace mmm
