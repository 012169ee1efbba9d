#pragma once

#include <string>
#include <vector>

#include <qrel/nn/param_view.hpp>
#include <qrel/types.hpp>

namespace qrel::nn {

enum class OptimizerKind { rmsprop, adadelta, sgd };

const char* optimizer_name(OptimizerKind k);
OptimizerKind optimizer_from_name(const std::string& name);

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::rmsprop;
    double learning_rate = 1e-3;
    double rho = 0.9;
    double epsilon = 1e-8;

    static OptimizerConfig rmsprop(double lr = 1e-3) { return {OptimizerKind::rmsprop, lr, 0.9, 1e-8}; }
    static OptimizerConfig adadelta(double lr = 1.0) { return {OptimizerKind::adadelta, lr, 0.95, 1e-6}; }
    static OptimizerConfig sgd(double lr) { return {OptimizerKind::sgd, lr, 0.0, 0.0}; }
};

// Per-parameter accumulator state. No momentum anywhere.
//   rmsprop:  acc <- rho acc + (1-rho) g^2 ;  p -= lr g / sqrt(acc + eps)
//   adadelta: acc_g as above; d = -sqrt(acc_u + eps)/sqrt(acc_g + eps) g;
//             acc_u <- rho acc_u + (1-rho) d^2 ;  p += lr d
class Optimizer {
public:
    explicit Optimizer(OptimizerConfig cfg) : cfg_(cfg) {
        if (cfg.epsilon < 0 || (cfg.kind != OptimizerKind::sgd && cfg.epsilon <= 0))
            throw InvalidInputError("Optimizer: epsilon must be positive");
    }

    const OptimizerConfig& config() const { return cfg_; }

    // Applies one update in place; initializes accumulators lazily on the
    // first call and pins them to the parameter shapes from then on.
    void step(const std::vector<ParamView>& params, const std::vector<ParamView>& grads);

private:
    OptimizerConfig cfg_;
    bool initialized_ = false;
    std::vector<Vec> acc_grad_;
    std::vector<Vec> acc_update_;
};

}  // namespace qrel::nn
