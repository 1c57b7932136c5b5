#pragma once

#include <functional>

#include "hoi/model.hpp"

namespace hoi {

enum class QVariant { CanonicalExpFam, TangentFrame, SampleSpaceExact, Skovgaard };

// Ingredients for the q correction, supplied per model class. Only the
// evaluators needed by the chosen variant must be set.
struct QIngredients {
    QVariant variant = QVariant::CanonicalExpFam;

    // Data-dependent reparametrization and its theta-Jacobian (d x d).
    std::function<Vec(const Vec&)> phi;
    std::function<Mat(const Vec&)> phi_dtheta;

    // Sample-space derivatives: l_{;that}(theta) (length d) and the mixed
    // matrix l_{theta;that}(theta) with rows indexed by the data direction
    // and columns by theta.
    std::function<Vec(const Vec&)> ell_samp;
    std::function<Mat(const Vec&)> ell_mixed;

    // Score covariances S(t1,t2), Q(t1,t2) and expected information i(t).
    std::function<Mat(const Vec&, const Vec&)> cov_S;
    std::function<Vec(const Vec&, const Vec&)> cov_Q;
    std::function<Mat(const Vec&)> exp_info;
};

// q from the reparametrization phi (scalar interest).
double q_general(const QIngredients& ing, const ModelSpec& model,
                 const ModelFit& fit, const ConstrainedFit& cfit);

// q from exact sample-space derivatives (scalar interest).
double q_sample_space(const QIngredients& ing, const ModelSpec& model,
                      const ModelFit& fit, const ConstrainedFit& cfit);

// q with the sample-space derivatives replaced by score-covariance
// approximations built from S, Q and the expected information.
double q_skovgaard(const QIngredients& ing, const ModelSpec& model,
                   const ModelFit& fit, const ConstrainedFit& cfit);

// Correction u for the adjusted likelihood ratio statistic w*. For scalar
// interest this reduces to r/q (the binding contract); for vector interest it
// substitutes the same covariance approximations into the determinant
// structure, normalized so that a quadratic log likelihood gives u = 1.
double u_skovgaard(const QIngredients& ing, const ModelSpec& model,
                   const ModelFit& fit, const ConstrainedFit& cfit, double w);

} // namespace hoi
