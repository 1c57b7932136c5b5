#include "hoi/tail.hpp"

#include <cmath>

namespace hoi {

double lugannani_rice(double r, double q) {
    if (!std::isfinite(r) || !std::isfinite(q))
        throw InvalidCorrectionError("lugannani_rice: non-finite r or q");
    if (r == 0.0 || q == 0.0)
        throw SingularZoneError("lugannani_rice: r or q is zero");
    return norm_cdf(r) + norm_pdf(r) * (1.0 / r - 1.0 / q);
}

double barndorff_nielsen_rstar(double r, double q) {
    if (!std::isfinite(r) || !std::isfinite(q))
        throw InvalidCorrectionError("barndorff_nielsen: non-finite r or q");
    if (r * q <= 0.0)
        throw InvalidCorrectionError("barndorff_nielsen: r and q must have the same sign");
    return r + std::log(q / r) / r;
}

TailResult tail_pair(double r, double q, double singular_threshold) {
    TailResult t;
    t.r = r;
    t.q = q;
    t.singular_zone = std::abs(r) < singular_threshold;
    if (t.singular_zone)
        throw SingularZoneError("tail_pair: |r| inside the singular zone");
    t.r_star = barndorff_nielsen_rstar(r, q);
    t.p_bn = norm_cdf(t.r_star);
    t.p_lr = lugannani_rice(r, q);
    t.p_lr_in_unit = t.p_lr > 0.0 && t.p_lr < 1.0;
    return t;
}

double w_star(double w, double u) {
    if (w < 0.0) throw InvalidCorrectionError("w_star: negative w");
    if (w == 0.0) return 0.0;   // continuous limit
    if (u <= 0.0) throw InvalidCorrectionError("w_star: u must be positive");
    double t = 1.0 - std::log(u) / w;
    return w * t * t;
}

double Lattice::cdf(double x) const {
    double s = 0.0;
    for (const auto& [t, p] : pmf) {
        if (t > x + 1e-12) break;
        s += p;
    }
    return s;
}

double Lattice::prob_at(double x) const {
    for (const auto& [t, p] : pmf)
        if (std::abs(t - x) <= 1e-12) return p;
    return 0.0;
}

double midp_significance(const Lattice& lattice, double x) {
    double px = lattice.prob_at(x);
    if (px == 0.0) throw DomainError("midp: x is not a support point");
    return lattice.cdf(x) - 0.5 * px;
}

} // namespace hoi
