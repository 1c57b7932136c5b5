#include "hoi/qcorr.hpp"

#include <cmath>

namespace hoi {

namespace {

// sqrt(|j(theta_hat)| / |j_ll(theta_psi)|) as (sign, log) pieces.
std::pair<double, double> info_ratio(const ModelSpec& model, const ModelFit& fit,
                                     const ConstrainedFit& cfit) {
    auto [s1, ld1] = slogdet(fit.obs_info);
    if (s1 <= 0.0) throw SingularInfoError("j(theta_hat) not positive definite");
    Mat jll = submatrix(cfit.info_full, model.partition.nuisance, model.partition.nuisance);
    auto [s2, ld2] = slogdet(jll);
    if (s2 <= 0.0) throw SingularInfoError("j_ll(theta_psi) not positive definite");
    return {1.0, 0.5 * (ld1 - ld2)};
}

// det(M)/det(D) with M = D-like matrix whose interest column is replaced,
// combined with the information ratio.
double det_ratio_q(const Mat& numer, const Mat& denom, double log_info_ratio,
                   const char* what) {
    auto [sn, ln] = slogdet(numer);
    auto [sd, ld] = slogdet(denom);
    if (sd == 0.0) throw SingularInfoError(std::string(what) + ": denominator matrix singular");
    if (sn == 0.0) return 0.0;
    return sn * sd * std::exp(ln - ld + log_info_ratio);
}

} // namespace

double q_general(const QIngredients& ing, const ModelSpec& model,
                 const ModelFit& fit, const ConstrainedFit& cfit) {
    if (!ing.phi || !ing.phi_dtheta)
        throw UnsupportedVariantError("q_general: phi evaluators not supplied");
    if (model.partition.d0() != 1)
        throw ValidationError("q_general: scalar interest required");
    const int ip = model.partition.interest[0];

    Vec diff = ing.phi(fit.theta) - ing.phi(cfit.theta);
    Mat numer = ing.phi_dtheta(cfit.theta);   // lambda columns kept in place
    numer.col(ip) = diff;
    Mat denom = ing.phi_dtheta(fit.theta);
    auto [sgn, lir] = info_ratio(model, fit, cfit);
    (void)sgn;
    auto [sd, ld] = slogdet(denom);
    if (sd == 0.0)
        throw SingularInfoError("q_general: phi_dtheta(theta_hat) singular (degenerate reparametrization)");
    return det_ratio_q(numer, denom, lir, "q_general");
}

double q_sample_space(const QIngredients& ing, const ModelSpec& model,
                      const ModelFit& fit, const ConstrainedFit& cfit) {
    if (!ing.ell_samp || !ing.ell_mixed)
        throw UnsupportedVariantError("q_sample_space: sample-space evaluators not supplied");
    if (model.partition.d0() != 1)
        throw ValidationError("q_sample_space: scalar interest required");
    const int ip = model.partition.interest[0];

    Vec diff = ing.ell_samp(fit.theta) - ing.ell_samp(cfit.theta);
    Mat numer = ing.ell_mixed(cfit.theta);
    numer.col(ip) = diff;
    Mat denom = ing.ell_mixed(fit.theta);
    auto [sgn, lir] = info_ratio(model, fit, cfit);
    (void)sgn;
    return det_ratio_q(numer, denom, lir, "q_sample_space");
}

double q_skovgaard(const QIngredients& ing, const ModelSpec& model,
                   const ModelFit& fit, const ConstrainedFit& cfit) {
    if (!ing.cov_S || !ing.cov_Q || !ing.exp_info)
        throw UnsupportedVariantError("q_skovgaard: S/Q/expected-information evaluators not supplied");
    if (model.partition.d0() != 1)
        throw ValidationError("q_skovgaard: scalar interest required");
    const int ip = model.partition.interest[0];

    Mat S = ing.cov_S(fit.theta, cfit.theta);
    Vec Q = ing.cov_Q(fit.theta, cfit.theta);
    Mat numer = S;
    numer.col(ip) = Q;
    Mat ihat = ing.exp_info(fit.theta);
    auto [si, li] = slogdet(ihat);
    if (si <= 0.0) throw SingularInfoError("q_skovgaard: expected information singular");
    auto [sgn, lir] = info_ratio(model, fit, cfit);
    (void)sgn;
    auto [sn, ln] = slogdet(numer);
    if (sn == 0.0) return 0.0;
    return sn * std::exp(ln - li + lir);
}

double u_skovgaard(const QIngredients& ing, const ModelSpec& model,
                   const ModelFit& fit, const ConstrainedFit& cfit, double w) {
    const auto& part = model.partition;
    if (part.d0() == 1) {
        double r = ((fit.theta[part.interest[0]] >= cfit.psi[0]) ? 1.0 : -1.0) * std::sqrt(std::max(0.0, w));
        double q = q_skovgaard(ing, model, fit, cfit);
        if (q == 0.0) throw InvalidCorrectionError("u_skovgaard: q is zero");
        return r / q;
    }
    if (!ing.cov_S || !ing.cov_Q || !ing.exp_info)
        throw UnsupportedVariantError("u_skovgaard: S/Q/expected-information evaluators not supplied");

    Mat S = ing.cov_S(fit.theta, cfit.theta);
    Vec Q = ing.cov_Q(fit.theta, cfit.theta);
    Mat ihat = ing.exp_info(fit.theta);

    auto [ss, ls] = slogdet(S);
    auto [si, li] = slogdet(ihat);
    if (si <= 0.0) throw SingularInfoError("u_skovgaard: expected information singular");
    if (ss <= 0.0) throw InvalidCorrectionError("u_skovgaard: |S| not positive at this psi");

    Mat jll = submatrix(cfit.info_full, part.nuisance, part.nuisance);
    auto [s2, l2] = slogdet(jll);
    auto [s3, l3] = slogdet(fit.obs_info);
    if (s2 <= 0.0 || s3 <= 0.0) throw SingularInfoError("u_skovgaard: information not positive definite");

    // Profile information at the full fit and the displacement P = S^{-1} Q.
    Mat jp = schur_complement(fit.obs_info, part.interest, part.nuisance, "j_ll(theta_hat)");
    Vec P = Eigen::FullPivLU<Mat>(S).solve(Q);
    Vec Ppsi = subvector(P, part.interest);
    double quad = Ppsi.dot(jp * Ppsi);
    if (quad <= 0.0) throw InvalidCorrectionError("u_skovgaard: degenerate interest displacement");
    auto [sp, lp] = slogdet(jp);
    if (sp <= 0.0) throw SingularInfoError("u_skovgaard: profile information not positive definite");

    const double d0 = double(part.d0());
    double logu = (li - ls) + 0.5 * (l2 + lp - l3) + 0.5 * d0 * (std::log(w) - std::log(quad));
    return std::exp(logu);
}

} // namespace hoi
