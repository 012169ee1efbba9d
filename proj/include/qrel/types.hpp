#pragma once

#include <Eigen/Core>

namespace qrel {

// 64-bit floats throughout; small models, tight gradient checks.
using Scalar = double;
using Index = Eigen::Index;

template <class T, int Rows = Eigen::Dynamic, int Cols = Eigen::Dynamic>
using MatX = Eigen::Matrix<T, Rows, Cols>;

template <class T, int Rows = Eigen::Dynamic>
using VecX = Eigen::Matrix<T, Rows, 1>;

using Mat = MatX<Scalar>;
using Vec = VecX<Scalar>;

using MatRef = Eigen::Ref<Mat>;
using ConstMatRef = Eigen::Ref<const Mat>;
using VecRef = Eigen::Ref<Vec>;
using ConstVecRef = Eigen::Ref<const Vec>;

template <class Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    return m.allFinite();
}

}  // namespace qrel
