#pragma once

#include <Eigen/Dense>

namespace vnibcreg {

// Row-major to match the on-disk layout of every binary matrix format in
// this project.
template <class S>
using MatT = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class S>
using VecT = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatF = MatT<float>;
using MatD = MatT<double>;
using VecF = VecT<float>;
using VecD = VecT<double>;

template <class S>
bool all_finite(const MatT<S>& m) {
  return m.allFinite();
}

}  // namespace vnibcreg
