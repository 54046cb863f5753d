#include "lashlab/twistcalc.hpp"

#include <stdexcept>
#include <string>

namespace lashlab {

CurveClass::CurveClass(Int mu_coeff, Int lambda_coeff)
    : mu_(std::move(mu_coeff)), lambda_(std::move(lambda_coeff)) {
    if (mu_ == 0 && lambda_ == 0)
        throw std::invalid_argument("CurveClass: the zero class is not a curve");
    if (gcd_int(mu_, lambda_) != 1)
        throw std::invalid_argument(
            "CurveClass: coefficients of an essential simple closed curve are coprime");
}

CurveClass CurveClass::canonical() const {
    if (lambda_ < 0 || (lambda_ == 0 && mu_ < 0))
        return CurveClass(-mu_, -lambda_);
    return *this;
}

bool operator==(const CurveClass& a, const CurveClass& b) {
    CurveClass ca = a.canonical();
    CurveClass cb = b.canonical();
    return ca.mu_ == cb.mu_ && ca.lambda_ == cb.lambda_;
}

TwistWord::TwistWord(std::vector<Int> exps) : coeffs(std::move(exps)) {
    if (coeffs.empty())
        coeffs.push_back(0);
    else if (coeffs.size() % 2 == 0)
        coeffs.insert(coeffs.begin(), 0);  // harmless identity twist
}

Mat2 twist_matrix(const TwistWord& w) {
    // phi_lambda^r = [[1,0],[-r,1]], phi_mu^r = [[1,r],[0,1]] in closed form.
    Mat2 acc{1, 0, 0, 1};
    std::size_t n = w.coeffs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Int& r = w.coeffs[i];
        bool lambda_twist = ((n - i) % 2) == 1;  // position n-i from the right
        Mat2 g = lambda_twist ? Mat2{1, 0, -r, 1} : Mat2{1, r, 0, 1};
        // acc (applied later) stays on the left of g
        acc = Mat2{acc.a * g.a + acc.b * g.c, acc.a * g.b + acc.b * g.d,
                   acc.c * g.a + acc.d * g.c, acc.c * g.b + acc.d * g.d};
    }
    return acc;
}

Slope twist_slope(const TwistWord& w) {
    Mat2 m = twist_matrix(w);
    return Slope(m.a, m.c);  // image of mu = (1, 0)
}

namespace {

void require_unimodular(const CurveClass& K, const CurveClass& L, const char* who) {
    Int det = L.mu_coeff() * K.lambda_coeff() - K.mu_coeff() * L.lambda_coeff();
    if (det != 1 && det != -1)
        throw std::invalid_argument(std::string(who) +
                                    ": classes must intersect once, |r q - p s| = 1");
}

} // namespace

CurveClass twist_family_slope(const CurveClass& K, const CurveClass& L, const Int& N) {
    require_unimodular(K, L, "twist_family_slope");
    return CurveClass(K.mu_coeff() + N * L.mu_coeff(),
                      K.lambda_coeff() + N * L.lambda_coeff())
        .canonical();
}

IntersectionProfile intersection_profile(const CurveClass& K, const CurveClass& L,
                                         const Int& n) {
    require_unimodular(K, L, "intersection_profile");
    Int u = K.mu_coeff() + L.mu_coeff() * n;          // p + r n
    Int v = K.lambda_coeff() + L.lambda_coeff() * n;  // q + s n
    IntersectionProfile out;
    out.delta_mu = abs_int(v);
    out.delta_lambda = abs_int(u);
    bool opposite = (u > 0 && v < 0) || (u < 0 && v > 0);  // zero matches either sign
    out.delta_nu = out.delta_mu + out.delta_lambda - (opposite ? 2 : 0);
    return out;
}

Int stability_threshold(const CurveClass& K, const CurveClass& L, const Int& search_bound) {
    if (search_bound < 1)
        throw std::invalid_argument("stability_threshold: search_bound must be >= 1");
    require_unimodular(K, L, "stability_threshold");
    Int last_bad = -1;
    for (Int n = 0; n <= search_bound; ++n) {
        IntersectionProfile pr = intersection_profile(K, L, n);
        bool good = pr.delta_mu != 0 && pr.delta_lambda != 0 && pr.delta_nu != 0 &&
                    pr.delta_mu != pr.delta_lambda && pr.delta_mu != pr.delta_nu &&
                    pr.delta_lambda != pr.delta_nu;
        if (!good)
            last_bad = n;
        if (pr.delta_mu % 2 == 0 && pr.delta_lambda % 2 == 0)
            throw std::logic_error(
                "stability_threshold: coprime intersection numbers cannot both be even");
    }
    if (last_bad == search_bound)
        throw std::runtime_error(
            "stability_threshold: no stable index at or below the search bound; "
            "the bound is too small");
    return last_bad + 1;
}

} // namespace lashlab
