#include <qrel/nn/optimizer.hpp>

#include <qrel/errors.hpp>

namespace qrel::nn {

const char* optimizer_name(OptimizerKind k) {
    switch (k) {
        case OptimizerKind::rmsprop: return "rmsprop";
        case OptimizerKind::adadelta: return "adadelta";
        case OptimizerKind::sgd: return "sgd";
    }
    return "unknown";
}

OptimizerKind optimizer_from_name(const std::string& name) {
    if (name == "rmsprop") return OptimizerKind::rmsprop;
    if (name == "adadelta") return OptimizerKind::adadelta;
    if (name == "sgd") return OptimizerKind::sgd;
    throw ConfigError("unknown optimizer: " + name);
}

void Optimizer::step(const std::vector<ParamView>& params,
                     const std::vector<ParamView>& grads) {
    require_matched(params, grads, "optimizer_step");
    if (!initialized_) {
        acc_grad_.clear();
        acc_update_.clear();
        for (const auto& p : params) {
            acc_grad_.push_back(Vec::Zero(p.size()));
            if (cfg_.kind == OptimizerKind::adadelta) acc_update_.push_back(Vec::Zero(p.size()));
        }
        initialized_ = true;
    }
    if (acc_grad_.size() != params.size())
        throw ShapeError("optimizer_step: parameter set changed after initialization");

    for (std::size_t k = 0; k < params.size(); ++k) {
        Eigen::Map<Vec> p(params[k].data, params[k].size());
        Eigen::Map<const Vec> g(grads[k].data, grads[k].size());
        if (acc_grad_[k].size() != p.size())
            throw ShapeError("optimizer_step: shape mismatch for " + params[k].name);
        switch (cfg_.kind) {
            case OptimizerKind::sgd:
                p -= cfg_.learning_rate * g;
                break;
            case OptimizerKind::rmsprop: {
                acc_grad_[k].array() = cfg_.rho * acc_grad_[k].array() +
                                       (1.0 - cfg_.rho) * g.array().square();
                p.array() -= cfg_.learning_rate * g.array() /
                             (acc_grad_[k].array() + cfg_.epsilon).sqrt();
                break;
            }
            case OptimizerKind::adadelta: {
                acc_grad_[k].array() = cfg_.rho * acc_grad_[k].array() +
                                       (1.0 - cfg_.rho) * g.array().square();
                Vec delta = (-((acc_update_[k].array() + cfg_.epsilon).sqrt() /
                               (acc_grad_[k].array() + cfg_.epsilon).sqrt()) *
                             g.array())
                                .matrix();
                acc_update_[k].array() = cfg_.rho * acc_update_[k].array() +
                                         (1.0 - cfg_.rho) * delta.array().square();
                p += cfg_.learning_rate * delta;
                break;
            }
        }
    }
}

}  // namespace qrel::nn
