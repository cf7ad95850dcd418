#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace summ {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;
using IntVector = Eigen::VectorXi;

using Term = std::string;
using TermList = std::vector<Term>;

}  // namespace summ
