#pragma once

#include <functional>

#include "hoi/model.hpp"

namespace hoi {

enum class AdjustVariant { M1PStar, M2Tem, ExpFamCanonical };

// Adjusted profile log likelihood l_a(psi) = l_p(psi) + log M(psi) for a
// scalar interest parameter, with its maximizer and curvature-based SE.
struct AdjustedProfile {
    AdjustVariant variant = AdjustVariant::ExpFamCanonical;
    std::function<double(double)> la;   // psi -> l_a(psi)
    double psi_hat_a = 0.0;
    double se_a = 0.0;
    double la_max = 0.0;

    // Likelihood root based on l_a.
    double r_a(double psi) const;
};

// Maximize l_a by golden-section/parabolic search started around psi_hat with
// scale `se`; the SE comes from the finite-difference curvature at the
// maximum.
AdjustedProfile make_adjusted_profile(std::function<double(double)> la,
                                      double psi_hat, double se,
                                      AdjustVariant variant);

// Robust scalar maximizer (Brent); returns argmax of f on [lo, hi].
double brent_maximize(const std::function<double(double)>& f, double lo,
                      double hi, double tol = 1e-10, int max_iter = 200);

// Bisection root of a monotone function on [lo, hi].
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol, int max_iter = 200);

} // namespace hoi
