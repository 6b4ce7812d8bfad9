#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mmmcalc/poly.hpp"

namespace mmm {

// head = gen^power rewrites to `replacement`. The head generator has even
// degree, the replacement is homogeneous of the head's degree and smaller in
// the monomial order, so rewriting terminates with a unique normal form.
struct RewriteRule {
    size_t gen = 0;
    int power = 1;
    Poly replacement;
};

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

// Graded-commutative ring presented by a triangular rewrite system: at most
// one rule per generator, each head a pure power. Normal-form monomials (the
// ones no head divides) form a linear basis.
class RingPresentation {
public:
    static RingPtr free_ring(std::vector<Generator> gens);
    // Each relation R is read as R = 0: its leading monomial must be a pure
    // power of a generator not used by another rule; the rule sends the head
    // to the rest, scaled so the head coefficient is 1.
    static RingPtr quotient_ring(std::vector<Generator> gens, std::vector<Poly> relations);
    static RingPtr quotient_ring(TablePtr table, std::vector<Poly> relations);
    // Rules already in head/replacement form; validated on construction.
    static RingPtr from_rules(TablePtr table, std::vector<RewriteRule> rules);

    const TablePtr& table() const { return table_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    size_t gen_count() const { return table_->size(); }

    // Smallest head power on this generator, if any rule has it as head.
    std::optional<int> head_power(size_t gen) const;

    bool is_normal(const Monomial& m) const;
    Poly reduce(Poly p) const;

    Poly zero() const { return Poly(table_); }
    Poly one() const { return Poly::constant(table_, 1); }
    Poly constant(const Rational& c) const { return Poly::constant(table_, c); }
    Poly gen(size_t i, int power = 1) const { return Poly::generator(table_, i, power); }
    Poly gen(std::string_view name, int power = 1) const;

    // Normal-form monomials of the given degree, descending in the monomial
    // order. This is a basis of the degree-`degree` graded piece.
    std::vector<Monomial> basis(int degree) const;

private:
    RingPresentation(TablePtr table, std::vector<RewriteRule> rules);

    TablePtr table_;
    std::vector<RewriteRule> rules_;
};

// Applies the ring map sending generator i to images[i] and reduces in the
// target. Nonzero images must be homogeneous of the generator's degree (parity
// included); the zero image is always allowed.
Poly substitute(const Poly& p, const std::vector<Poly>& images, const RingPresentation& target);

// A tensor product realized as one presentation on the disjoint union of the
// two generator tables (left factor first). Bidegrees are recovered from the
// split position.
struct TensorRing {
    RingPtr ring;
    size_t split = 0;  // generators [0, split) come from the left factor

    std::pair<int, int> bidegree(const Monomial& m) const;
};

TensorRing tensor_product(const RingPresentation& left, const RingPresentation& right,
                          const std::string& left_suffix = "",
                          const std::string& right_suffix = "'");

Poly embed_left(const TensorRing& t, const Poly& p);
Poly embed_right(const TensorRing& t, const Poly& p);

// Keep only terms whose left and right degrees are both positive.
Poly kunneth_positive_part(const TensorRing& t, const Poly& p);

}  // namespace mmm
