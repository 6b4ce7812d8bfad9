#include "mmmcalc/rational.hpp"

#include <cctype>

namespace mmm {

std::string to_string(const Rational& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view s) {
    require(!s.empty(), "empty rational literal");
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '+' || t.front() == '-'))
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    // boost's integer parser rejects a leading '+'.
    auto to_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '+')
            t.remove_prefix(1);
        return Int(std::string(t));
    };
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        require(is_int(s), "bad rational literal '" + std::string(s) + "'");
        return to_int(s);
    }
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    require(is_int(num) && is_int(den),
            "bad rational literal '" + std::string(s) + "'");
    Int d = to_int(den);
    require(d != 0, "zero denominator in '" + std::string(s) + "'");
    return Rational(to_int(num), d);
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Int double_factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = n; i > 1; i -= 2)
        r *= i;
    return r;
}

Int binomial(long long n, long long k) {
    require(n >= 0, "binomial needs n >= 0");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is C(n-k+i, i) * i! / i! at each step
    }
    return r;
}

std::vector<Rational> bernoulli_upto(unsigned k) {
    std::vector<Rational> b;
    b.reserve(k + 1);
    b.push_back(1);
    for (unsigned m = 1; m <= k; ++m) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  solve for B_m.
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * b[j];
        b.push_back(-acc / Rational(m + 1));
    }
    return b;
}

Rational bernoulli(unsigned k) {
    return bernoulli_upto(k).back();
}

}  // namespace mmm
