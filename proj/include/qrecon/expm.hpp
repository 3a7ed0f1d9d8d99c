// Copyright 2026 The qrecon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace qrecon {

/**
 * Matrix exponential by scaling and squaring with the degree-13 Pade
 * approximant (Higham 2005). The scaling exponent keeps ||A / 2^s||_1 below
 * theta_13, where the approximant is accurate to unit roundoff.
 */
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> expm(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  static constexpr double kTheta13 = 5.371920351148152;
  // Pade coefficients divided by b_0 so that exp(0) is exactly the identity.
  static constexpr double b[] = {1.0, 0.5, 0.12,
                                 0.018333333333333333, 0.0019927536231884057, 0.00016304347826086958,
                                 1.0351966873706003e-05, 5.175983436853002e-07, 2.0431513566525008e-08,
                                 6.306022705717595e-10, 1.48377004840414e-11, 2.529153491597966e-13,
                                 2.8101705462199623e-15, 1.5440497506703088e-17};

  const auto n = a.rows();
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > kTheta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  const Matrix x = a / Scalar(std::ldexp(1.0, squarings));

  const Matrix ident = Matrix::Identity(n, n);
  const Matrix x2 = x * x;
  const Matrix x4 = x2 * x2;
  const Matrix x6 = x4 * x2;
  const Matrix u_inner = x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * ident;
  const Matrix u = x * u_inner;
  const Matrix v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * ident;
  Matrix r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) r = (r * r).eval();
  return r;
}

}  // namespace qrecon
