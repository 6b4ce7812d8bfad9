#pragma once

#include <vector>

#include "mmmcalc/gysin.hpp"
#include "mmmcalc/ring.hpp"

namespace mmm {

// The free model for the cohomology of a free loop space: each source
// generator x contributes an evaluation image y of the same degree and a
// transgression image t_x one degree lower with flipped parity. The target
// table lists all y's first, then all t's.
struct LoopAlgebra {
    RingPtr source;  // free ring
    RingPtr target;  // free ring on doubled generators
    size_t count = 0;

    size_t y_index(size_t i) const { return i; }
    size_t t_index(size_t i) const { return count + i; }
};

// Requires a free source with every generator of degree >= 2, so that the
// t-generators keep positive degree.
LoopAlgebra make_loop(const RingPtr& source);

// The evaluation pullback: x_i -> y_i.
Poly eta_pullback(const LoopAlgebra& L, const Poly& p);

// The transgression: degree -1, zero on constants, t_i on generators, and
// trg(ab) = (-1)^{|a|} eta(a) trg(b) + trg(a) eta(b) on products.
Poly trg(const LoopAlgebra& L, const Poly& p);

// Direct expansion sum_i m_i y_1^{m_1} .. y_i^{m_i - 1} t_i .. y_n^{m_n};
// valid as written for all-even sources.
Poly trg_monomial_closed(const LoopAlgebra& L, const Monomial& mono);

// True when trg has trivial kernel on every reduced graded piece of the
// source up to max_degree. Requires an all-even source.
bool trg_injectivity_check(const LoopAlgebra& L, int max_degree);

// r-fold iterated transgression (r = 1..3): chain loop algebras and apply
// trg through each. Requires every source generator degree > r.
struct IteratedLoop {
    std::vector<LoopAlgebra> stages;
    const RingPtr& final_target() const { return stages.back().target; }
};

IteratedLoop make_iterated_loop(const RingPtr& source, int r);
Poly iterate_trg(const IteratedLoop& chain, const Poly& p);

// The unique multiplicative extension of a generatorwise map: substitution
// into the target with Koszul signs.
Poly lambda_extend(const Poly& w, const std::vector<Poly>& images,
                   const RingPresentation& target);

// Table for the looped bundle: fibre dimension rises by one, the domain
// becomes the Pontrjagin ring of n+1 (the vertical tangent gains a trivial
// line), and every value passes through the transgression. Requires a free
// target ring on T.
KappaTable loop_kappa(const KappaTable& T);

}  // namespace mmm
