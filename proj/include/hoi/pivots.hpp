#pragma once

#include "hoi/model.hpp"

namespace hoi {

// Profile information j_p(psi) = j_pp - j_pl j_ll^{-1} j_lp at theta_psi.
Mat profile_information(const ModelSpec& model, const ConstrainedFit& cfit);

// Where the score statistic's normalizer j_p is evaluated.
enum class ScoreInfoAt { PsiHat, Psi };

struct FirstOrderPivots {
    double wald = 0.0;
    double score = 0.0;
    double r = 0.0;   // likelihood root (scalar interest only)
    double w = 0.0;   // likelihood ratio statistic, any interest dimension
};

// Wald, score and likelihood-root pivots for a scalar interest parameter;
// w = 2{l_p(psi_hat) - l_p(psi)} is filled for any interest dimension.
FirstOrderPivots first_order_pivots(const ModelSpec& model, const ModelFit& fit,
                                    const ConstrainedFit& cfit,
                                    ScoreInfoAt at = ScoreInfoAt::PsiHat);

} // namespace hoi
