#pragma once

#include <qrel/errors.hpp>
#include <qrel/types.hpp>

namespace qrel::nn {

template <class Derived>
auto sigmoid(const Eigen::ArrayBase<Derived>& x) {
    // Branch-free stable form: exp(-|x|) never overflows.
    auto e = (-x.abs()).exp();
    return (x >= typename Derived::Scalar(0)).select(1 / (1 + e), e / (1 + e));
}

template <class T>
VecX<T> softmax(const VecX<T>& logits) {
    if (logits.size() == 0) throw InvalidInputError("softmax: empty logits vector");
    if (!logits.allFinite()) throw InvalidInputError("softmax: non-finite logits");
    VecX<T> shifted = (logits.array() - logits.maxCoeff()).exp();
    return shifted / shifted.sum();
}

}  // namespace qrel::nn
