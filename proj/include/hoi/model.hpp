#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hoi/linalg.hpp"

namespace hoi {

// Open interval a coordinate must stay inside. Default: the whole line.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool contains(double x) const { return x > lo && x < hi; }
};

// Split of theta into interest (psi) and nuisance (lambda) coordinates.
struct ParamPartition {
    std::vector<int> interest;
    std::vector<int> nuisance;

    int dim() const { return int(interest.size() + nuisance.size()); }
    int d0() const { return int(interest.size()); }

    // Single scalar interest coordinate, everything else nuisance.
    static ParamPartition scalar(int d, int interest_index);
    // Interest block given by arbitrary indices.
    static ParamPartition block(int d, const std::vector<int>& interest_idx);
    void validate(int d) const;
};

// A parametric model given by its log likelihood and derivative evaluators.
// Evaluators must be pure functions of theta.
struct ModelSpec {
    int dim = 0;
    std::function<double(const Vec&)> loglik;
    std::function<Vec(const Vec&)> score;
    std::function<Mat(const Vec&)> obs_info;           // negated Hessian
    std::function<Mat(const Vec&)> exp_info;           // optional
    ParamPartition partition;
    std::vector<Interval> domain;                       // per-coordinate, may be empty
    std::vector<std::string> names;                     // optional labels

    bool in_domain(const Vec& theta) const {
        if (domain.empty()) return true;
        for (int i = 0; i < dim; ++i)
            if (!domain[i].contains(theta[i])) return false;
        return true;
    }
};

struct ModelFit {
    Vec theta;
    double loglik = 0.0;
    Mat obs_info;
    bool converged = false;
    int iterations = 0;
    std::string diagnostic;

    double se(int coord) const {
        Eigen::FullPivLU<Mat> lu(obs_info);
        return std::sqrt(lu.inverse()(coord, coord));
    }
};

struct ConstrainedFit {
    Vec psi;               // fixed interest values
    Vec lambda;            // constrained nuisance estimate
    Vec theta;             // full vector with psi and lambda in place
    double profile_loglik = 0.0;
    Mat info_full;         // observed information at theta_psi
    bool converged = false;
    int iterations = 0;

    Mat j_ll(const ParamPartition& part) const {
        return submatrix(info_full, part.nuisance, part.nuisance);
    }
};

} // namespace hoi
