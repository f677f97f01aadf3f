#include "fibra/matrix_exp.hpp"

#include "fibra/error.hpp"

#include <cmath>

namespace fibra::numeric {

namespace {

constexpr int kTaylorDegree = 18;
constexpr double kScaledNorm = 0.5;

}  // namespace

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& a, double t)
{
    if (a.rows() != a.cols()) {
        throw Error(ErrorKind::NonSquare, "matrix exponential needs a square matrix");
    }
    if (!a.allFinite() || !std::isfinite(t)) {
        throw Error(ErrorKind::NonFinite, "matrix exponential needs finite entries");
    }
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd scaled = t * a;
    const double norm = scaled.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > kScaledNorm) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNorm)));
        scaled /= std::ldexp(1.0, squarings);
    }
    // Horner form of Σ_{k≤d} B^k / k!.
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
    for (int k = kTaylorDegree; k >= 1; --k) {
        result = Eigen::MatrixXd::Identity(n, n) + (scaled * result) / static_cast<double>(k);
    }
    for (int i = 0; i < squarings; ++i) {
        result = result * result;
    }
    return result;
}

std::vector<ShiftSample> exp_shift(const Eigen::MatrixXd& a, std::span<const double> grid, const Eigen::VectorXd& v)
{
    if (v.size() != a.rows()) {
        throw Error(ErrorKind::NonSquare, "section vector does not match the matrix dimension");
    }
    std::vector<ShiftSample> out;
    for (double t : grid) {
        ShiftSample s;
        s.t = t;
        s.group_value = matrix_exp(a, t);
        s.section_value = v;
        s.shifted_value = s.group_value * v;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace fibra::numeric
