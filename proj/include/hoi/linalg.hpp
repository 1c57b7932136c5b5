#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "hoi/errors.hpp"

namespace hoi {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Rows/columns of `m` restricted to the given index sets.
inline Mat submatrix(const Mat& m, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
    Mat out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = m(rows[i], cols[j]);
    return out;
}

inline Vec subvector(const Vec& v, const std::vector<int>& idx) {
    Vec out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) out(i) = v(idx[i]);
    return out;
}

// Signed log-determinant: (sign, log|det|).
inline std::pair<double, double> slogdet(const Mat& m) {
    Eigen::PartialPivLU<Mat> lu(m);
    const Mat& u = lu.matrixLU();
    double sign = lu.permutationP().determinant();
    double logabs = 0.0;
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        double d = u(i, i);
        if (d == 0.0) return {0.0, -std::numeric_limits<double>::infinity()};
        if (d < 0.0) sign = -sign;
        logabs += std::log(std::abs(d));
    }
    return {sign, logabs};
}

inline bool is_positive_definite(const Mat& m) {
    Eigen::LLT<Mat> llt(m);
    return llt.info() == Eigen::Success;
}

// Schur complement A - B D^{-1} C for the partition [[A, B], [C, D]] given by
// index sets; throws SingularInfoError naming `block` when D is singular.
inline Mat schur_complement(const Mat& m, const std::vector<int>& keep,
                            const std::vector<int>& out,
                            const std::string& block = "j_ll") {
    Mat a = submatrix(m, keep, keep);
    if (out.empty()) return a;
    Mat b = submatrix(m, keep, out);
    Mat d = submatrix(m, out, out);
    Eigen::FullPivLU<Mat> lu(d);
    if (!lu.isInvertible())
        throw SingularInfoError("singular information block: " + block);
    return a - b * lu.solve(submatrix(m, out, keep));
}

} // namespace hoi
