#include "hoi/pivots.hpp"

#include <cmath>

namespace hoi {

Mat profile_information(const ModelSpec& model, const ConstrainedFit& cfit) {
    const auto& part = model.partition;
    return schur_complement(cfit.info_full, part.interest, part.nuisance, "j_ll(theta_psi)");
}

FirstOrderPivots first_order_pivots(const ModelSpec& model, const ModelFit& fit,
                                    const ConstrainedFit& cfit, ScoreInfoAt at) {
    const auto& part = model.partition;
    FirstOrderPivots out;

    double w = 2.0 * (fit.loglik - cfit.profile_loglik);
    if (w < -1e-8 * (1.0 + std::abs(fit.loglik)))
        throw Error("profile log likelihood exceeds the full maximum: bad constrained fit");
    out.w = std::max(0.0, w);

    if (part.d0() != 1) return out;   // wald/score/r are scalar-interest quantities

    const int ip = part.interest[0];
    const double psi_hat = fit.theta[ip];
    const double psi = cfit.psi[0];

    // j_p at the full fit (and optionally at theta_psi for the score statistic)
    ConstrainedFit at_hat;
    at_hat.info_full = fit.obs_info;
    double jp_hat = schur_complement(fit.obs_info, part.interest, part.nuisance,
                                     "j_ll(theta_hat)")(0, 0);
    double jp_score = jp_hat;
    if (at == ScoreInfoAt::Psi)
        jp_score = profile_information(model, cfit)(0, 0);

    out.wald = std::sqrt(jp_hat) * (psi_hat - psi);
    out.score = model.score(cfit.theta)[ip] / std::sqrt(jp_score);
    double sgn = (psi_hat >= psi) ? 1.0 : -1.0;
    out.r = sgn * std::sqrt(out.w);
    return out;
}

} // namespace hoi
