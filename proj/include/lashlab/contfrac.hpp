#pragma once

#include <utility>
#include <vector>

#include "lashlab/slope.hpp"

namespace lashlab {

/// Integer coefficients (r_n, ..., r_1) of the continued fraction
///
///   [r_n, ..., r_1] = -1 / (r_n - 1/(r_{n-1} - 1/(... - 1/r_1)))
///
/// stored most-significant-first (coeffs.front() == r_n).
struct ContinuedFraction {
    std::vector<Int> coeffs;
};

enum class ExpansionStyle {
    /// Odd length n with coefficients (-b_n, b_{n-1}, ..., b_2, -b_1), all
    /// b_j >= 0; exists exactly for finite slopes > 0.
    AlternatingNonnegative,
    /// Any odd-length expansion of a finite slope; parity is fixed with the
    /// identity [r_n, ..., r_1] = [r_n, ..., r_1 + 1, 1].
    OddLength,
};

/// Evaluates a continued fraction in exact projective arithmetic.  A zero
/// denominator at any nesting level is the point at infinity and propagates
/// as x - inf = inf, -1/inf = 0; the function is total on integer sequences.
Slope cf_eval(const ContinuedFraction& cf);

/// Expands a finite slope into a coefficient sequence of the requested style.
/// The only contract is cf_eval(cf_expand(s, style)) == s.
ContinuedFraction cf_expand(const Slope& s, ExpansionStyle style);

/// The surgery coefficients (+1, -q/(p+q), -p/(p+q)) on (C_nu, C_mu,
/// C_lambda) equivalent to the framed surgery on a p/q-lashing.
struct MontesinosTriple {
    Slope nu;      // +1
    Slope mu;      // -q/(p+q)
    Slope lambda;  // -p/(p+q)
};

/// Requires s = p/q finite with p, q >= 0 coprime.
MontesinosTriple montesinos_triple(const Slope& s);

/// Continued fraction forms of the non-trivial triple entries: given an
/// internal expansion p/q = [r_n, ..., r_1], returns
///   first  = [1 - r_n, -r_{n-1}, ..., -r_1]   evaluating to -p/(p+q)
///   second = [1, r_n, ..., r_1]               evaluating to -q/(p+q)
std::pair<ContinuedFraction, ContinuedFraction> montesinos_triple_cf(const Slope& s);

} // namespace lashlab
