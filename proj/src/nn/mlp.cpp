#include <qrel/nn/mlp.hpp>

#include <qrel/errors.hpp>
#include <qrel/nn/activations.hpp>
#include <qrel/nn/init.hpp>

namespace qrel::nn {

const char* activation_name(Activation a) {
    switch (a) {
        case Activation::tanh: return "tanh";
        case Activation::sigmoid: return "sigmoid";
        case Activation::relu: return "relu";
    }
    return "unknown";
}

Activation activation_from_name(const std::string& name) {
    if (name == "tanh") return Activation::tanh;
    if (name == "sigmoid") return Activation::sigmoid;
    if (name == "relu") return Activation::relu;
    throw ConfigError("unknown activation: " + name);
}

static void check_dims(const std::vector<Index>& dims) {
    if (dims.size() < 2) throw ShapeError("MlpParams: need at least input and output dims");
    for (Index d : dims)
        if (d <= 0) throw ShapeError("MlpParams: non-positive layer dim");
}

MlpParams MlpParams::init(const std::vector<Index>& layer_dims, double std, Rng& rng,
                          Activation act) {
    check_dims(layer_dims);
    MlpParams p;
    p.layer_dims = layer_dims;
    p.hidden_activation = act;
    for (std::size_t l = 0; l + 1 < layer_dims.size(); ++l) {
        p.W.push_back(gaussian_init(layer_dims[l + 1], layer_dims[l], std, rng));
        p.b.push_back(Vec::Zero(layer_dims[l + 1]));
    }
    return p;
}

MlpParams MlpParams::zeros(const std::vector<Index>& layer_dims, Activation act) {
    check_dims(layer_dims);
    MlpParams p;
    p.layer_dims = layer_dims;
    p.hidden_activation = act;
    for (std::size_t l = 0; l + 1 < layer_dims.size(); ++l) {
        p.W.push_back(Mat::Zero(layer_dims[l + 1], layer_dims[l]));
        p.b.push_back(Vec::Zero(layer_dims[l + 1]));
    }
    return p;
}

std::vector<ParamView> MlpParams::param_views(const std::string& prefix) {
    std::vector<ParamView> out;
    for (std::size_t l = 0; l < W.size(); ++l) {
        out.push_back(view_of(prefix + "W" + std::to_string(l), W[l]));
        out.push_back(view_of(prefix + "b" + std::to_string(l), b[l]));
    }
    return out;
}

void MlpParams::check_consistent() const {
    check_dims(layer_dims);
    if (W.size() + 1 != layer_dims.size() || b.size() != W.size())
        throw ShapeError("MlpParams: layer count mismatch");
    for (std::size_t l = 0; l < W.size(); ++l) {
        if (W[l].rows() != layer_dims[l + 1] || W[l].cols() != layer_dims[l] ||
            b[l].size() != layer_dims[l + 1])
            throw ShapeError("MlpParams: inconsistent layer " + std::to_string(l));
    }
}

static Vec apply_activation(Activation act, const Vec& z) {
    switch (act) {
        case Activation::tanh: return z.array().tanh();
        case Activation::sigmoid: return sigmoid(z.array());
        case Activation::relu: return z.cwiseMax(0.0);
    }
    throw ConfigError("unknown activation");
}

// derivative expressed from z and the activation value a
static Vec activation_grad(Activation act, const Vec& z, const Vec& a) {
    switch (act) {
        case Activation::tanh: return 1.0 - a.array().square();
        case Activation::sigmoid: return a.array() * (1.0 - a.array());
        case Activation::relu: return (z.array() > 0.0).cast<Scalar>();
    }
    throw ConfigError("unknown activation");
}

Vec mlp_forward(const MlpParams& p, ConstVecRef x, MlpCache* cache) {
    p.check_consistent();
    if (x.size() != p.input_dim())
        throw ShapeError("mlp_forward: input dim " + std::to_string(x.size()) + " != " +
                         std::to_string(p.input_dim()));
    const Index L = p.n_layers();
    if (cache) {
        cache->a.assign(static_cast<std::size_t>(L) + 1, Vec());
        cache->z.assign(static_cast<std::size_t>(L), Vec());
        cache->a[0] = x;
    }
    Vec a = x;
    for (Index l = 0; l < L; ++l) {
        Vec z = p.W[l] * a + p.b[l];
        a = (l + 1 < L) ? apply_activation(p.hidden_activation, z) : z;
        if (cache) {
            cache->z[l] = z;
            cache->a[l + 1] = a;
        }
    }
    return a;
}

MlpGrads mlp_backward(const MlpParams& p, const MlpCache& cache, ConstVecRef d_logits) {
    const Index L = p.n_layers();
    if (cache.a.size() != static_cast<std::size_t>(L) + 1)
        throw InvalidInputError("mlp_backward: no forward cache");
    if (d_logits.size() != p.output_dim())
        throw ShapeError("mlp_backward: upstream gradient dim mismatch");

    MlpGrads gr;
    gr.params = MlpParams::zeros_like(p);
    Vec dz = d_logits;
    for (Index l = L - 1; l >= 0; --l) {
        gr.params.W[l].noalias() = dz * cache.a[l].transpose();
        gr.params.b[l] = dz;
        Vec da = p.W[l].transpose() * dz;
        if (l > 0)
            dz = da.cwiseProduct(
                activation_grad(p.hidden_activation, cache.z[l - 1], cache.a[l]));
        else
            gr.input = da;
    }
    return gr;
}

}  // namespace qrel::nn
