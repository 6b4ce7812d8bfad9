#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmmcalc/rational.hpp"

namespace mmm {

// A graded generator. Parity is the parity of the degree: odd-degree
// generators anticommute and square to zero.
struct Generator {
    std::string name;
    int degree = 0;  // >= 1
};

class GeneratorTable {
public:
    explicit GeneratorTable(std::vector<Generator> gens);

    size_t size() const { return gens_.size(); }
    const Generator& operator[](size_t i) const { return gens_[i]; }
    std::optional<size_t> index_of(std::string_view name) const;
    bool odd(size_t i) const { return gens_[i].degree % 2 != 0; }
    bool operator==(const GeneratorTable& o) const;

private:
    std::vector<Generator> gens_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

TablePtr make_table(std::vector<Generator> gens);
bool same_table(const TablePtr& a, const TablePtr& b);

// Exponent vector indexed like the table; odd generators carry exponent 0/1.
using Monomial = std::vector<int>;

int monomial_degree(const GeneratorTable& t, const Monomial& m);

// Graded monomial order: total degree first, ties broken by exponents scanned
// from the last generator down (later table positions weigh more). Every
// rewrite rule head must exceed its replacement monomials in this order.
bool monomial_less(const GeneratorTable& t, const Monomial& a, const Monomial& b);

// Homogeneous-by-construction is not enforced; polynomials are plain linear
// combinations of monomials with nonzero rational coefficients.
class Poly {
public:
    explicit Poly(TablePtr table);  // zero

    static Poly constant(TablePtr table, const Rational& c);
    static Poly generator(TablePtr table, size_t index, int power = 1);
    static Poly term(TablePtr table, Monomial m, const Rational& c);

    const TablePtr& table() const { return table_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Rational coeff(const Monomial& m) const;
    // Coefficient of the constant (all-exponents-zero) monomial.
    Rational constant_coeff() const;

    // Max degree over terms; -1 for the zero polynomial.
    int degree() const;
    // Degree when every term agrees; nullopt otherwise. Zero is homogeneous
    // of every degree.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous(int d) const;
    Poly graded_component(int d) const;
    // Drop all terms of degree > d.
    Poly truncate_above(int d) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    Poly& operator*=(const Rational& c);

    bool operator==(const Poly& o) const;

    // Internal: accumulate c on monomial m, erasing on cancellation.
    void add_term(const Monomial& m, const Rational& c);

private:
    TablePtr table_;
    std::map<Monomial, Rational> terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Rational& c);
Poly operator*(const Rational& c, const Poly& a);

// Graded-commutative product with Koszul signs; odd squares vanish.
Poly operator*(const Poly& a, const Poly& b);
Poly pow(const Poly& a, unsigned n);

// Sign picked up when the product of two exponent vectors is interleaved back
// into table order: -1 per transposition of odd generators. Returns 0 when an
// odd generator would square.
int koszul_sign(const GeneratorTable& t, const Monomial& a, const Monomial& b);

}  // namespace mmm
