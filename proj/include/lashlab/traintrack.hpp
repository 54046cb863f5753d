#pragma once

#include <utility>
#include <vector>

#include "lashlab/bigint.hpp"

namespace lashlab {

/// Parameters of a p/q-lashing of the pair of pants P carried by the framed
/// train track: twist-region coefficients a = (a_1, ..., a_n) with n >= 1,
/// the extra twisting m, and the coprime lashing slope p/q (p, q >= 0).
struct LashingParams {
    std::vector<Int> a;
    Int m;
    Int p;
    Int q;

    LashingParams(std::vector<Int> a_, Int m_, Int p_, Int q_);
};

/// Branch weights (x_0, ..., x_n), (y_0, ..., y_n) of the carried lashing.
struct TrackWeights {
    std::vector<Int> xs;
    std::vector<Int> ys;
};

/// The weight recursion:
///   x_0 = y_0 = 0
///   x_1 = (a_1 + 2)(p + (m+1)(p+q)),  y_1 = 0
///   x_2k = x_{2k-1},                  y_2k = y_{2k-1} + a_2k (x_{2k-1} - 2p - q)
///   x_{2k+1} = x_2k + a_{2k+1} (y_2k + p + (m+1)(p+q)),   y_{2k+1} = y_2k
TrackWeights weights(const LashingParams& params);

/// Closed forms for (x_3, y_3); requires n = 3.  Must agree with weights().
std::pair<Int, Int> weights_closed_n3(const LashingParams& params);

/// Integral slope of the alternating surgery carried by the lashing.
Int lambda_alt(const LashingParams& params);

/// Verbatim evaluation of the closed-form genus polynomial.  The value is
/// reported as-is and is not used as the genus of record: on the published
/// parameter rows it exceeds the tabulated genus g by y_n + f(p, q, m) with
/// f(1,1,m) = 6 + 4m and f(1,2,m) = 12 + 9m, i.e. it does not reproduce the
/// table, while the lambda_alt polynomial reproduces every tabulated order.
Int genus_formula(const LashingParams& params);

/// The inequality x_n >= (m+2)(p+q) + 2p needed to braid the train track.
struct SwitchCondition {
    bool holds;
    bool equality;
    bool m_and_a1_zero;
};

SwitchCondition switch_condition(const LashingParams& params);

/// x_n - 2p - q: a conjectural model for the strand count of the braided
/// closure, consistent with both published braid profiles (12 and 29).
/// A value <= 0 would flag the model as inapplicable.
Int strand_count_model(const LashingParams& params);

} // namespace lashlab
