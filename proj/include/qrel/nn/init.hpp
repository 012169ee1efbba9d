#pragma once

#include <qrel/errors.hpp>
#include <qrel/rng.hpp>
#include <qrel/types.hpp>

namespace qrel::nn {

// N(0, std^2) weights, filled in storage order so a fixed seed pins the values.
inline Mat gaussian_init(Index rows, Index cols, double std, Rng& rng) {
    if (std <= 0.0) throw InvalidInputError("gaussian_init: std must be positive");
    if (rows <= 0 || cols <= 0) throw ShapeError("gaussian_init: degenerate shape");
    Mat m(rows, cols);
    double* p = m.data();
    for (Index k = 0; k < rows * cols; ++k) p[k] = rng.normal(0.0, std);
    return m;
}

inline Vec gaussian_init_vec(Index n, double std, Rng& rng) {
    Mat m = gaussian_init(n, 1, std, rng);
    return m.col(0);
}

}  // namespace qrel::nn
