#pragma once

#include <functional>
#include <vector>

#include <qrel/nn/param_view.hpp>
#include <qrel/rng.hpp>
#include <qrel/types.hpp>

namespace qrel::nn {

struct GradCheckReport {
    double max_rel_err = 0.0;
    Index components_checked = 0;
    std::string worst_component;
};

// Central finite differences against analytic gradients. `loss` must
// recompute the scalar loss from the current parameter values each call.
// Tensors larger than max_per_tensor are spot-checked on a random subset
// (all components when rng is null or the tensor fits).
GradCheckReport grad_check(const std::function<double()>& loss,
                           const std::vector<ParamView>& params,
                           const std::vector<ParamView>& analytic, double eps = 1e-5,
                           Index max_per_tensor = 0, Rng* rng = nullptr);

}  // namespace qrel::nn
