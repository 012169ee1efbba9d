#include <qrel/nn/grad_check.hpp>

#include <algorithm>
#include <cmath>

#include <qrel/errors.hpp>

namespace qrel::nn {

GradCheckReport grad_check(const std::function<double()>& loss,
                           const std::vector<ParamView>& params,
                           const std::vector<ParamView>& analytic, double eps,
                           Index max_per_tensor, Rng* rng) {
    require_matched(params, analytic, "grad_check");
    if (eps <= 0) throw InvalidInputError("grad_check: eps must be positive");

    GradCheckReport report;
    for (std::size_t k = 0; k < params.size(); ++k) {
        const Index n = params[k].size();
        std::vector<Index> picks;
        if (max_per_tensor > 0 && n > max_per_tensor && rng) {
            picks.reserve(max_per_tensor);
            for (Index j = 0; j < max_per_tensor; ++j)
                picks.push_back(static_cast<Index>(rng->bounded(static_cast<std::uint64_t>(n))));
        } else {
            picks.resize(n);
            for (Index j = 0; j < n; ++j) picks[j] = j;
        }
        for (Index idx : picks) {
            double* slot = params[k].data + idx;
            const double saved = *slot;
            *slot = saved + eps;
            const double up = loss();
            *slot = saved - eps;
            const double down = loss();
            *slot = saved;
            const double numeric = (up - down) / (2.0 * eps);
            const double a = analytic[k].data[idx];

            double rel = 0.0;
            // Both effectively zero: finite-difference noise, not a defect.
            if (std::abs(a) > 1e-6 || std::abs(numeric) > 1e-6)
                rel = std::abs(a - numeric) / std::max(std::abs(a) + std::abs(numeric), 1e-8);
            if (rel > report.max_rel_err) {
                report.max_rel_err = rel;
                report.worst_component =
                    params[k].name + "[" + std::to_string(idx) + "]";
            }
            ++report.components_checked;
        }
    }
    return report;
}

}  // namespace qrel::nn
