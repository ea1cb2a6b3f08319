#pragma once

#include <Eigen/Dense>

namespace kplane {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

}  // namespace kplane
