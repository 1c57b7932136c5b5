#pragma once

#include <map>

#include "hoi/special.hpp"
#include "hoi/errors.hpp"

namespace hoi {

// Default half-width of the singular zone around r = 0 in which the tail
// formulas are not evaluated directly (the profiler bridges across it).
inline constexpr double kSingularR = 0.25;

struct TailResult {
    double r = 0.0;
    double q = 0.0;
    double r_star = 0.0;
    double p_lr = 0.0;          // Phi(r) + phi(r)(1/r - 1/q)
    double p_bn = 0.0;          // Phi(r_star)
    bool p_lr_in_unit = true;   // whether p_lr landed inside (0,1)
    bool singular_zone = false; // |r| below the threshold: values not trustworthy
};

// Additive tail-area approximation. May fall outside (0,1); callers must
// consult TailResult.p_lr_in_unit, the value is never clamped.
double lugannani_rice(double r, double q);

// Modified likelihood root r + log(q/r)/r. Requires r and q of the same sign.
double barndorff_nielsen_rstar(double r, double q);

// Both tail approximations at once, with singular-zone flagging.
TailResult tail_pair(double r, double q, double singular_threshold = kSingularR);

// Adjusted likelihood ratio statistic w{1 - log(u)/w}^2 for vector interest.
double w_star(double w, double u);

// Discrete lattice distribution (support point -> probability).
struct Lattice {
    std::map<double, double> pmf;
    double cdf(double x) const;
    double prob_at(double x) const;
};

// pr(X < x) + pr(X = x)/2 for a lattice variable; x must be a support point.
double midp_significance(const Lattice& lattice, double x);

} // namespace hoi
