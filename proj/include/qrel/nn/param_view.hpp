#pragma once

#include <string>
#include <vector>

#include <qrel/errors.hpp>
#include <qrel/types.hpp>

namespace qrel::nn {

// Named flat view over one parameter (or gradient) tensor. Optimizers,
// the gradient checker and checkpointing all iterate models through this.
struct ParamView {
    std::string name;
    double* data = nullptr;
    Index rows = 0;
    Index cols = 0;

    Index size() const { return rows * cols; }
};

inline ParamView view_of(const std::string& name, Mat& m) {
    return ParamView{name, m.data(), m.rows(), m.cols()};
}

inline ParamView view_of(const std::string& name, Vec& v) {
    return ParamView{name, v.data(), v.size(), 1};
}

inline void require_matched(const std::vector<ParamView>& a, const std::vector<ParamView>& b,
                            const char* what) {
    if (a.size() != b.size()) throw ShapeError(std::string(what) + ": tensor count mismatch");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].rows != b[k].rows || a[k].cols != b[k].cols)
            throw ShapeError(std::string(what) + ": shape mismatch for " + a[k].name);
    }
}

}  // namespace qrel::nn
