#include "lashlab/contfrac.hpp"

#include <iterator>
#include <stdexcept>

namespace lashlab {

Slope cf_eval(const ContinuedFraction& cf) {
    if (cf.coeffs.empty())
        throw std::invalid_argument("cf_eval: coefficient sequence must be non-empty");
    // Work on raw pairs (n, d) meaning n/d, without reducing at every step.
    // u_1 = r_1, then u_k = r_k - 1/u_{k-1}, finally -1/u_n.  The pair update
    // (n, d) -> (r*n - d, n) realizes r - 1/(n/d) and never produces (0, 0)
    // from a valid state, so intermediate infinities need no special case.
    Int n = cf.coeffs.back();
    Int d = 1;
    for (auto it = std::next(cf.coeffs.rbegin()); it != cf.coeffs.rend(); ++it) {
        Int next_n = *it * n - d;
        d = n;
        n = std::move(next_n);
    }
    return Slope(-d, n);
}

namespace {

// Alternating-nonnegative expansion of p/q > 0.  Undoes the twist sequence:
// the inverse word phi_lambda^{b_1} phi_mu^{-b_2} ... phi_lambda^{b_n} must
// carry (p, q) to (1, 0), so we run a Euclidean reduction that alternates
// between the two coordinate moves, steering to keep both coordinates
// non-negative.  Quotients are collected first-applied-first, i.e. b_n first.
std::vector<Int> alternating_quotients(Int p, Int q) {
    std::vector<Int> bs;
    while (true) {
        // lambda step: (p, q) -> (p, q - b p)
        bs.push_back(q / p);
        q -= bs.back() * p;
        if (q == 0)
            break;  // (1, 0) reached: coprimality forces p == 1 here
        // mu step: (p, q) -> (p - b q, q); when q == 1 a full reduction would
        // zero p, so stop one short and let the next lambda step finish
        Int b = (q == 1) ? Int(p - 1) : Int(p / q);
        bs.push_back(b);
        p -= b * q;
    }
    return bs;
}

// Negative (Hirzebruch-Jung style) expansion t = c_k - 1/(c_{k-1} - ...) of a
// rational t = n/d with d >= 1, emitting head coefficient first.
std::vector<Int> negative_cf(Int n, Int d) {
    std::vector<Int> cs;
    while (d != 1) {
        Int c = n / d;
        if (c * d < n)
            ++c;  // truncation rounded down; take the ceiling
        cs.push_back(c);
        Int next_d = c * d - n;
        n = d;
        d = next_d;
    }
    cs.push_back(n);
    return cs;
}

} // namespace

ContinuedFraction cf_expand(const Slope& s, ExpansionStyle style) {
    if (s.is_infinite())
        throw std::invalid_argument("cf_expand: slope must be finite");

    if (style == ExpansionStyle::AlternatingNonnegative) {
        if (s.num() <= 0)
            throw std::invalid_argument(
                "cf_expand: alternating-nonnegative style requires a positive slope");
        std::vector<Int> bs = alternating_quotients(s.num(), s.den());
        std::size_t n = bs.size();
        ContinuedFraction cf;
        cf.coeffs.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            // bs[i] sits at position n - i; odd positions carry -b.
            bool odd_position = ((n - i) % 2) == 1;
            cf.coeffs.push_back(odd_position ? Int(-bs[i]) : bs[i]);
        }
        return cf;
    }

    ContinuedFraction cf;
    if (s.is_zero()) {
        cf.coeffs = {1, 1, 1};
        return cf;
    }
    // [c_k, ..., c_1] = -1/(c_k - ...) so expand -1/s in the negative form.
    Int n = -s.den();
    Int d = s.num();
    if (d < 0) {
        n = -n;
        d = -d;
    }
    cf.coeffs = negative_cf(n, d);
    if (cf.coeffs.size() % 2 == 0) {
        cf.coeffs.back() += 1;
        cf.coeffs.push_back(1);
    }
    return cf;
}

namespace {

void require_montesinos_domain(const Slope& s) {
    if (s.is_infinite() || s.num() < 0)
        throw std::invalid_argument(
            "montesinos: slope must be finite p/q with p, q >= 0");
}

} // namespace

MontesinosTriple montesinos_triple(const Slope& s) {
    require_montesinos_domain(s);
    const Int& p = s.num();
    const Int& q = s.den();
    return MontesinosTriple{Slope(1, 1), Slope(-q, p + q), Slope(-p, p + q)};
}

std::pair<ContinuedFraction, ContinuedFraction> montesinos_triple_cf(const Slope& s) {
    require_montesinos_domain(s);
    ContinuedFraction exp;
    if (s.num() == 0)
        exp.coeffs = {1, 1, 1};  // an expansion of 0
    else
        exp = cf_expand(s, ExpansionStyle::AlternatingNonnegative);

    ContinuedFraction minus_p;  // [1 - r_n, -r_{n-1}, ..., -r_1]
    minus_p.coeffs.reserve(exp.coeffs.size());
    minus_p.coeffs.push_back(1 - exp.coeffs.front());
    for (std::size_t i = 1; i < exp.coeffs.size(); ++i)
        minus_p.coeffs.push_back(-exp.coeffs[i]);

    ContinuedFraction minus_q;  // [1, r_n, ..., r_1]
    minus_q.coeffs.reserve(exp.coeffs.size() + 1);
    minus_q.coeffs.push_back(1);
    minus_q.coeffs.insert(minus_q.coeffs.end(), exp.coeffs.begin(), exp.coeffs.end());

    return {std::move(minus_p), std::move(minus_q)};
}

} // namespace lashlab
