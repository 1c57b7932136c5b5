#include "hoi/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace hoi {

ParamPartition ParamPartition::scalar(int d, int interest_index) {
    return block(d, {interest_index});
}

ParamPartition ParamPartition::block(int d, const std::vector<int>& interest_idx) {
    ParamPartition p;
    p.interest = interest_idx;
    for (int i = 0; i < d; ++i)
        if (std::find(interest_idx.begin(), interest_idx.end(), i) == interest_idx.end())
            p.nuisance.push_back(i);
    p.validate(d);
    return p;
}

void ParamPartition::validate(int d) const {
    if (interest.empty()) throw ValidationError("partition: empty interest block");
    std::vector<char> seen(d, 0);
    for (int i : interest) {
        if (i < 0 || i >= d || seen[i]) throw ValidationError("partition: bad interest index");
        seen[i] = 1;
    }
    for (int i : nuisance) {
        if (i < 0 || i >= d || seen[i]) throw ValidationError("partition: bad nuisance index");
        seen[i] = 1;
    }
    if (int(interest.size() + nuisance.size()) != d)
        throw ValidationError("partition: indices do not cover 1..d");
}

namespace {

struct NewtonResult {
    Vec theta;
    double loglik;
    bool converged;
    int iterations;
    std::string diagnostic;
};

// Newton iteration over theta[free]; other coordinates stay fixed.
NewtonResult newton(const ModelSpec& model, Vec theta,
                    const std::vector<int>& free, const NewtonOptions& opts) {
    if (!model.in_domain(theta))
        throw DomainError("start value outside the parameter domain");
    double ll = model.loglik(theta);
    if (!std::isfinite(ll))
        throw DomainError("log likelihood non-finite at the start value");

    const int k = int(free.size());
    int it = 0;
    std::string note;
    for (; it < opts.max_iter; ++it) {
        Vec g_full = model.score(theta);
        if (!g_full.allFinite())
            throw DomainError("score non-finite during iteration");
        Vec g = subvector(g_full, free);
        if (g.lpNorm<Eigen::Infinity>() <= opts.grad_tol)
            return {theta, ll, true, it, note};
        if (theta.norm() > opts.diverge_norm)
            return {theta, ll, false, it, "divergence suspected (parameter norm exploding)"};

        Mat h_full = model.obs_info(theta);
        if (!h_full.allFinite())
            throw DomainError("observed information non-finite during iteration");
        Mat h = submatrix(h_full, free, free);

        // Modified Newton: ridge until the (negated Hessian) is positive definite.
        double ridge = 0.0;
        Eigen::LLT<Mat> llt(h);
        while (llt.info() != Eigen::Success) {
            ridge = (ridge == 0.0) ? 1e-8 * (1.0 + h.diagonal().cwiseAbs().maxCoeff())
                                   : ridge * 10.0;
            llt.compute(h + ridge * Mat::Identity(k, k));
            if (ridge > 1e16) return {theta, ll, false, it, "information matrix irreparably indefinite"};
        }
        Vec step = llt.solve(g);

        double s = 1.0;
        bool accepted = false;
        for (int half = 0; half < opts.max_halvings; ++half) {
            Vec cand = theta;
            for (int j = 0; j < k; ++j) cand[free[j]] += s * step[j];
            if (model.in_domain(cand)) {
                double llc = model.loglik(cand);
                if (std::isfinite(llc) && llc >= ll - 1e-13) {
                    theta = cand;
                    ll = llc;
                    accepted = true;
                    break;
                }
            }
            s *= 0.5;
        }
        if (!accepted)
            return {theta, ll, false, it, "line search failed to improve the likelihood"};
    }
    return {theta, ll, false, it, "maximum iterations exceeded"};
}

} // namespace

ModelFit maximize_likelihood(const ModelSpec& model, const Vec& start,
                             const NewtonOptions& opts) {
    std::vector<int> all(model.dim);
    for (int i = 0; i < model.dim; ++i) all[i] = i;
    NewtonResult r = newton(model, start, all, opts);
    ModelFit fit;
    fit.theta = r.theta;
    fit.loglik = r.loglik;
    fit.obs_info = model.obs_info(r.theta);
    fit.converged = r.converged && is_positive_definite(fit.obs_info);
    if (r.converged && !fit.converged)
        fit.diagnostic = "stationary point is not a maximum";
    else
        fit.diagnostic = r.diagnostic;
    fit.iterations = r.iterations;
    return fit;
}

ConstrainedFit constrained_maximize(const ModelSpec& model, const Vec& psi,
                                    const Vec& nuisance_start,
                                    const NewtonOptions& opts) {
    const auto& part = model.partition;
    if (psi.size() != part.d0())
        throw ValidationError("constrained_maximize: psi has wrong dimension");
    Vec theta = Vec::Zero(model.dim);
    for (int i = 0; i < part.d0(); ++i) theta[part.interest[i]] = psi[i];
    for (std::size_t i = 0; i < part.nuisance.size(); ++i)
        theta[part.nuisance[i]] = nuisance_start[i];

    NewtonResult r = newton(model, theta, part.nuisance, opts);
    ConstrainedFit cf;
    cf.psi = psi;
    cf.theta = r.theta;
    cf.lambda = subvector(r.theta, part.nuisance);
    cf.profile_loglik = r.loglik;
    cf.info_full = model.obs_info(r.theta);
    cf.converged = r.converged;
    cf.iterations = r.iterations;
    return cf;
}

} // namespace hoi
