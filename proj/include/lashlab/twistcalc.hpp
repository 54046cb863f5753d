#pragma once

#include <vector>

#include "lashlab/contfrac.hpp"
#include "lashlab/slope.hpp"

namespace lashlab {

/// The class p*[mu] + q*[lambda] in H_1 of the once-punctured torus T of an
/// essential simple closed curve.  Coefficients must be coprime and not both
/// zero.  An unoriented curve is a class up to negation; the stored
/// representative is kept as given (the intersection formulas read it
/// verbatim) and canonical() fixes the sign.
class CurveClass {
public:
    CurveClass(Int mu_coeff, Int lambda_coeff);

    const Int& mu_coeff() const { return mu_; }
    const Int& lambda_coeff() const { return lambda_; }

    /// Negation representative with lambda_coeff >= 0, and mu_coeff = 1 when
    /// lambda_coeff = 0.
    CurveClass canonical() const;

    Slope slope() const { return Slope(mu_, lambda_); }

    /// Equality of unoriented classes, i.e. up to negation.
    friend bool operator==(const CurveClass& a, const CurveClass& b);
    friend bool operator!=(const CurveClass& a, const CurveClass& b) { return !(a == b); }

private:
    Int mu_;
    Int lambda_;
};

/// Twist exponents (r_n, ..., r_1), most-significant-first, read as the
/// composition phi_lambda^{r_n} o ... o phi_mu^{r_2} o phi_lambda^{r_1}
/// (rightmost acts first; odd positions twist along lambda).  Construction
/// normalizes to odd length by prepending a zero exponent; the empty
/// sequence becomes the identity word (0).
struct TwistWord {
    std::vector<Int> coeffs;

    TwistWord() : coeffs{0} {}
    explicit TwistWord(std::vector<Int> exps);
};

/// Integer 2x2 matrix [[a, b], [c, d]] acting on column vectors (mu, lambda).
struct Mat2 {
    Int a, b, c, d;

    friend bool operator==(const Mat2&, const Mat2&) = default;
    Int det() const { return a * d - b * c; }
};

/// Product of generator matrices phi_mu = [[1,1],[0,1]],
/// phi_lambda = [[1,0],[-1,1]] raised to the word's exponents.
Mat2 twist_matrix(const TwistWord& w);

/// Slope of twist_matrix(w) applied to mu = (1, 0); by the twist calculus
/// this equals cf_eval([r_n, ..., r_1]).
Slope twist_slope(const TwistWord& w);

/// The class of phi_L^N(K) = (p + N p', q + N q') for K = (p, q),
/// L = (p', q').  Requires |p q' - p' q| = 1; the result is automatically
/// primitive and is returned canonicalized.
CurveClass twist_family_slope(const CurveClass& K, const CurveClass& L, const Int& N);

/// Minimal geometric intersection numbers of the 2-handle attaching curve of
/// the n-fold twisted lashing with the three boundary curves of P.
struct IntersectionProfile {
    Int delta_mu;      // |q + s n|
    Int delta_lambda;  // |p + r n|
    Int delta_nu;      // sum, or sum - 2 when the signs are opposite
};

/// Requires |r q - p s| = 1 for K = (p, q), L = (r, s).  Zero counts as
/// matching either sign in the delta_nu branch.
IntersectionProfile intersection_profile(const CurveClass& K, const CurveClass& L,
                                         const Int& n);

/// Least N0 >= 0 such that for every N0 <= n <= search_bound the profile
/// entries are pairwise distinct and non-zero.  Also verifies that some entry
/// of (delta_mu, delta_lambda) is odd for every n in range.  Throws if no
/// such N0 exists at or below search_bound.
Int stability_threshold(const CurveClass& K, const CurveClass& L, const Int& search_bound);

} // namespace lashlab
