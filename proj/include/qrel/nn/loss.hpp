#pragma once

#include <algorithm>
#include <cmath>

#include <qrel/errors.hpp>
#include <qrel/types.hpp>

namespace qrel::nn {

inline constexpr double kProbFloor = 1e-12;

// Weighted negative log-likelihood of the labelled class. Probabilities are
// clamped at kProbFloor before the log so confident mistakes stay finite.
inline double cross_entropy(ConstVecRef probs, Index label, double class_weight = 1.0) {
    if (label < 0 || label >= probs.size())
        throw InvalidInputError("cross_entropy: label out of range");
    return class_weight * -std::log(std::max(probs[label], kProbFloor));
}

// Gradient of cross_entropy(softmax(logits), label) w.r.t. the logits.
inline Vec softmax_xent_grad(ConstVecRef probs, Index label, double class_weight = 1.0) {
    if (label < 0 || label >= probs.size())
        throw InvalidInputError("softmax_xent_grad: label out of range");
    Vec g = probs * class_weight;
    g[label] -= class_weight;
    return g;
}

}  // namespace qrel::nn
