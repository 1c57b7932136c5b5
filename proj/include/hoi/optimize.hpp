#pragma once

#include "hoi/model.hpp"

namespace hoi {

struct NewtonOptions {
    double grad_tol = 1e-10;   // infinity norm of the (free) score
    int max_iter = 200;
    int max_halvings = 60;
    double diverge_norm = 1e8; // ||theta|| beyond which we declare divergence
};

// Newton's method with step halving on the free coordinates.
ModelFit maximize_likelihood(const ModelSpec& model, const Vec& start,
                             const NewtonOptions& opts = {});

// Maximize over the nuisance coordinates with the interest block fixed at psi.
ConstrainedFit constrained_maximize(const ModelSpec& model, const Vec& psi,
                                    const Vec& nuisance_start,
                                    const NewtonOptions& opts = {});

} // namespace hoi
