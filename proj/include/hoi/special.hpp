#pragma once

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>

namespace hoi {

inline double norm_pdf(double x) {
    static const double c = 0.39894228040143267794;  // 1/sqrt(2 pi)
    return c * std::exp(-0.5 * x * x);
}

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

inline double norm_quantile(double p) {
    static const boost::math::normal_distribution<double> n01;
    return boost::math::quantile(n01, p);
}

inline double student_t_cdf(double x, double df) {
    boost::math::students_t_distribution<double> t(df);
    return boost::math::cdf(t, x);
}

inline double student_t_quantile(double p, double df) {
    boost::math::students_t_distribution<double> t(df);
    return boost::math::quantile(t, p);
}

inline double chisq_quantile(double p, double df) {
    boost::math::chi_squared_distribution<double> c(df);
    return boost::math::quantile(c, p);
}

inline double chisq_cdf(double x, double df) {
    boost::math::chi_squared_distribution<double> c(df);
    return boost::math::cdf(c, x);
}

} // namespace hoi
