#include "hoi/adjusted.hpp"

#include <cmath>

namespace hoi {

double brent_maximize(const std::function<double(double)>& f, double lo,
                      double hi, double tol, int max_iter) {
    // Golden-section with parabolic steps on -f.
    const double gold = 0.3819660112501051;
    double a = lo, b = hi;
    double x = a + gold * (b - a), w = x, v = x;
    double fx = -f(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        double m = 0.5 * (a + b);
        double tol1 = tol * (std::abs(x) + 1.0) + 1e-15;
        if (std::abs(x - m) <= 2.0 * tol1 - 0.5 * (b - a)) break;
        double p = 0.0, q = 0.0, r = 0.0;
        bool parab = false;
        if (std::abs(e) > tol1) {
            r = (x - w) * (fx - fv);
            q = (x - v) * (fx - fw);
            p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            if (std::abs(p) < std::abs(0.5 * q * e) && p > q * (a - x) && p < q * (b - x)) {
                e = d;
                d = p / q;
                parab = true;
            }
        }
        if (!parab) {
            e = (x < m) ? b - x : a - x;
            d = gold * e;
        }
        double u = (std::abs(d) >= tol1) ? x + d : x + (d > 0 ? tol1 : -tol1);
        double fu = -f(u);
        if (fu <= fx) {
            if (u < x) b = x; else a = x;
            v = w; fv = fw; w = x; fw = fx; x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) { v = w; fv = fw; w = u; fw = fu; }
            else if (fu <= fv || v == x || v == w) { v = u; fv = fu; }
        }
    }
    return x;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol, int max_iter) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw Error("bisect: endpoints do not bracket a root");
    for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) { hi = mid; fhi = fm; }
        else { lo = mid; flo = fm; }
    }
    return 0.5 * (lo + hi);
}

double AdjustedProfile::r_a(double psi) const {
    double diff = la_max - la(psi);
    double sgn = (psi_hat_a >= psi) ? 1.0 : -1.0;
    return sgn * std::sqrt(std::max(0.0, 2.0 * diff));
}

AdjustedProfile make_adjusted_profile(std::function<double(double)> la,
                                      double psi_hat, double se,
                                      AdjustVariant variant) {
    AdjustedProfile ap;
    ap.variant = variant;
    ap.la = la;
    ap.psi_hat_a = brent_maximize(la, psi_hat - 3.0 * se, psi_hat + 3.0 * se, 1e-12);
    ap.la_max = la(ap.psi_hat_a);
    double h = se * 1e-2;
    double d2 = (la(ap.psi_hat_a + h) - 2.0 * ap.la_max + la(ap.psi_hat_a - h)) / (h * h);
    if (d2 >= 0.0) throw Error("adjusted profile: non-concave at its maximum");
    ap.se_a = 1.0 / std::sqrt(-d2);
    return ap;
}

} // namespace hoi
