#pragma once

#include <string>
#include <vector>

#include <qrel/nn/param_view.hpp>
#include <qrel/rng.hpp>
#include <qrel/types.hpp>

namespace qrel::nn {

enum class Activation { tanh, sigmoid, relu };

const char* activation_name(Activation a);
Activation activation_from_name(const std::string& name);

// Fully connected stack: affine + activation per hidden layer, final layer
// affine only (logits). layer_dims includes input and output.
struct MlpParams {
    std::vector<Index> layer_dims;
    std::vector<Mat> W;  // W[l]: dims[l+1] x dims[l]
    std::vector<Vec> b;
    Activation hidden_activation = Activation::tanh;

    static MlpParams init(const std::vector<Index>& layer_dims, double std, Rng& rng,
                          Activation act = Activation::tanh);
    static MlpParams zeros(const std::vector<Index>& layer_dims,
                           Activation act = Activation::tanh);
    static MlpParams zeros_like(const MlpParams& p) {
        return zeros(p.layer_dims, p.hidden_activation);
    }

    Index n_layers() const { return static_cast<Index>(W.size()); }
    Index input_dim() const { return layer_dims.front(); }
    Index output_dim() const { return layer_dims.back(); }
    std::vector<ParamView> param_views(const std::string& prefix = "");
    void check_consistent() const;
};

struct MlpCache {
    std::vector<Vec> a;  // a[0] = x, a[l] = post-activation output of layer l
    std::vector<Vec> z;  // pre-activation per layer
};

Vec mlp_forward(const MlpParams& p, ConstVecRef x, MlpCache* cache = nullptr);

struct MlpGrads {
    MlpParams params;
    Vec input;
};

MlpGrads mlp_backward(const MlpParams& p, const MlpCache& cache, ConstVecRef d_logits);

}  // namespace qrel::nn
