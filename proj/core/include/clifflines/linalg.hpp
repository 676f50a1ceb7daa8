#pragma once

#include <Eigen/Dense>

#include <vector>

namespace clifflines {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

using MatList = std::vector<Mat>;

// Largest absolute entry; 0 for an empty matrix.
inline double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_identity(const Mat& m, double tol) {
  return m.rows() == m.cols() &&
         max_abs(m - Mat::Identity(m.rows(), m.cols())) <= tol;
}

}  // namespace clifflines
