#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace fibra::numeric {

/// exp(tA) by scaling and squaring: tA is halved until its 1-norm is at most
/// 1/2, a degree-18 Taylor polynomial is evaluated there, and the result is
/// squared back. Throws NonSquare, NonFinite.
Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& a, double t);

/// One row of the exp-shift demo: the group section a(t) = exp(tA) over a
/// sampled point t of the real line, and the left shift it induces on a
/// vector section v, (a ⋆ v)(t) = a(t) v(t).
struct ShiftSample {
    double t = 0;
    Eigen::MatrixXd group_value;
    Eigen::VectorXd section_value;
    Eigen::VectorXd shifted_value;
};

/// Samples `grid` with a constant vector section `v`.
std::vector<ShiftSample> exp_shift(const Eigen::MatrixXd& a, std::span<const double> grid, const Eigen::VectorXd& v);

}  // namespace fibra::numeric
