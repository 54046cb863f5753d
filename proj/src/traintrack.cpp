#include "lashlab/traintrack.hpp"

#include <stdexcept>

namespace lashlab {

LashingParams::LashingParams(std::vector<Int> a_, Int m_, Int p_, Int q_)
    : a(std::move(a_)), m(std::move(m_)), p(std::move(p_)), q(std::move(q_)) {
    if (a.empty())
        throw std::invalid_argument("LashingParams: need at least one twist coefficient");
    for (const Int& ai : a)
        if (ai < 0)
            throw std::invalid_argument("LashingParams: twist coefficients are non-negative");
    if (m < 0 || p < 0 || q < 0)
        throw std::invalid_argument("LashingParams: m, p, q are non-negative");
    if ((p == 0 && q == 0) || gcd_int(p, q) != 1)
        throw std::invalid_argument("LashingParams: p/q must be a slope, gcd(p, q) = 1");
}

TrackWeights weights(const LashingParams& params) {
    const Int& m = params.m;
    const Int& p = params.p;
    const Int& q = params.q;
    std::size_t n = params.a.size();

    TrackWeights w;
    w.xs.assign(n + 1, 0);
    w.ys.assign(n + 1, 0);
    w.xs[1] = (params.a[0] + 2) * (p + (m + 1) * (p + q));
    for (std::size_t i = 2; i <= n; ++i) {
        const Int& ai = params.a[i - 1];
        if (i % 2 == 0) {
            w.xs[i] = w.xs[i - 1];
            w.ys[i] = w.ys[i - 1] + ai * (w.xs[i - 1] - 2 * p - q);
        } else {
            w.xs[i] = w.xs[i - 1] + ai * (w.ys[i - 1] + p + (m + 1) * (p + q));
            w.ys[i] = w.ys[i - 1];
        }
    }
    return w;
}

std::pair<Int, Int> weights_closed_n3(const LashingParams& params) {
    if (params.a.size() != 3)
        throw std::invalid_argument("weights_closed_n3: requires exactly n = 3");
    const Int& a1 = params.a[0];
    const Int& a2 = params.a[1];
    const Int& a3 = params.a[2];
    const Int& m = params.m;
    const Int& p = params.p;
    const Int& q = params.q;
    Int x3 = ((a3 * a2 * (a1 + 2) + a3 + a1 + 2) * (m + 2) - 2 * a3 * a2) * p +
             ((a3 * a2 * (a1 + 2) + a3 + a1 + 2) * (m + 1) - a3 * a2) * q;
    Int y3 = (a2 * (a1 + 2) * (m + 2) - 2 * a2) * p + (a2 * (a1 + 2) * (m + 1) - a2) * q;
    return {std::move(x3), std::move(y3)};
}

Int lambda_alt(const LashingParams& params) {
    TrackWeights w = weights(params);
    const Int& x = w.xs.back();
    const Int& y = w.ys.back();
    const Int& m = params.m;
    const Int& p = params.p;
    const Int& q = params.q;
    return (3 + m) * p * p + m * q * q + x * x + x * y + (-4 * x - m * x - 2 * y) * p +
           (-x - m * x - y) * q + (1 + 2 * m) * p * q;
}

Int genus_formula(const LashingParams& params) {
    TrackWeights w = weights(params);
    const Int& x = w.xs.back();
    const Int& y = w.ys.back();
    const Int& m = params.m;
    const Int& p = params.p;
    const Int& q = params.q;
    return 1 + (5 + 2 * m) * p * p + (1 + 2 * m) * q * q - 2 * x + x * x + x * y +
           (4 + m - 4 * x - m * x - 2 * y) * p + (1 + m - x - m * x - y) * q +
           (4 + 4 * m) * p * q;
}

SwitchCondition switch_condition(const LashingParams& params) {
    TrackWeights w = weights(params);
    Int rhs = (params.m + 2) * (params.p + params.q) + 2 * params.p;
    SwitchCondition out;
    out.holds = w.xs.back() >= rhs;
    out.equality = w.xs.back() == rhs;
    out.m_and_a1_zero = params.m == 0 && params.a[0] == 0;
    return out;
}

Int strand_count_model(const LashingParams& params) {
    TrackWeights w = weights(params);
    return w.xs.back() - 2 * params.p - params.q;
}

} // namespace lashlab
