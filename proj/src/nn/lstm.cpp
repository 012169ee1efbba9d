#include <qrel/nn/lstm.hpp>

#include <qrel/errors.hpp>
#include <qrel/nn/activations.hpp>
#include <qrel/nn/init.hpp>

namespace qrel::nn {

LstmParams LstmParams::init(Index input_dim, Index hidden_dim, double std, Rng& rng,
                            double forget_bias) {
    if (input_dim <= 0 || hidden_dim <= 0) throw ShapeError("LstmParams: non-positive dims");
    LstmParams p;
    p.input_dim = input_dim;
    p.hidden_dim = hidden_dim;
    p.W_i = gaussian_init(hidden_dim, input_dim, std, rng);
    p.W_f = gaussian_init(hidden_dim, input_dim, std, rng);
    p.W_o = gaussian_init(hidden_dim, input_dim, std, rng);
    p.W_g = gaussian_init(hidden_dim, input_dim, std, rng);
    p.U_i = gaussian_init(hidden_dim, hidden_dim, std, rng);
    p.U_f = gaussian_init(hidden_dim, hidden_dim, std, rng);
    p.U_o = gaussian_init(hidden_dim, hidden_dim, std, rng);
    p.U_g = gaussian_init(hidden_dim, hidden_dim, std, rng);
    p.b_i = Vec::Zero(hidden_dim);
    p.b_f = Vec::Constant(hidden_dim, forget_bias);
    p.b_o = Vec::Zero(hidden_dim);
    p.b_g = Vec::Zero(hidden_dim);
    return p;
}

LstmParams LstmParams::zeros(Index input_dim, Index hidden_dim) {
    if (input_dim <= 0 || hidden_dim <= 0) throw ShapeError("LstmParams: non-positive dims");
    LstmParams p;
    p.input_dim = input_dim;
    p.hidden_dim = hidden_dim;
    p.W_i = p.W_f = p.W_o = p.W_g = Mat::Zero(hidden_dim, input_dim);
    p.U_i = p.U_f = p.U_o = p.U_g = Mat::Zero(hidden_dim, hidden_dim);
    p.b_i = p.b_f = p.b_o = p.b_g = Vec::Zero(hidden_dim);
    return p;
}

std::vector<ParamView> LstmParams::param_views(const std::string& prefix) {
    return {
        view_of(prefix + "W_i", W_i), view_of(prefix + "W_f", W_f),
        view_of(prefix + "W_o", W_o), view_of(prefix + "W_g", W_g),
        view_of(prefix + "U_i", U_i), view_of(prefix + "U_f", U_f),
        view_of(prefix + "U_o", U_o), view_of(prefix + "U_g", U_g),
        view_of(prefix + "b_i", b_i), view_of(prefix + "b_f", b_f),
        view_of(prefix + "b_o", b_o), view_of(prefix + "b_g", b_g),
    };
}

void LstmParams::check_consistent() const {
    const Index h = hidden_dim, d = input_dim;
    auto bad = [&](const Mat& m, Index r, Index c) { return m.rows() != r || m.cols() != c; };
    if (h <= 0 || d <= 0 || bad(W_i, h, d) || bad(W_f, h, d) || bad(W_o, h, d) ||
        bad(W_g, h, d) || bad(U_i, h, h) || bad(U_f, h, h) || bad(U_o, h, h) ||
        bad(U_g, h, h) || b_i.size() != h || b_f.size() != h || b_o.size() != h ||
        b_g.size() != h)
        throw ShapeError("LstmParams: inconsistent dimensions");
}

Mat lstm_forward(const LstmParams& p, ConstMatRef inputs, LstmCache* cache, Index valid_len) {
    p.check_consistent();
    if (inputs.rows() != p.input_dim)
        throw ShapeError("lstm_forward: input dim " + std::to_string(inputs.rows()) +
                         " != " + std::to_string(p.input_dim));
    const Index T = valid_len < 0 ? inputs.cols() : valid_len;
    if (T <= 0 || T > inputs.cols()) throw InvalidInputError("lstm_forward: empty sequence");

    const Index h = p.hidden_dim;
    Mat I(h, T), F(h, T), O(h, T), G(h, T), C(h, T), H(h, T), TC(h, T);
    Vec h_prev = Vec::Zero(h);
    Vec c_prev = Vec::Zero(h);
    for (Index t = 0; t < T; ++t) {
        const auto x = inputs.col(t);
        I.col(t) = sigmoid((p.W_i * x + p.U_i * h_prev + p.b_i).array());
        F.col(t) = sigmoid((p.W_f * x + p.U_f * h_prev + p.b_f).array());
        O.col(t) = sigmoid((p.W_o * x + p.U_o * h_prev + p.b_o).array());
        G.col(t) = (p.W_g * x + p.U_g * h_prev + p.b_g).array().tanh();
        C.col(t) = F.col(t).cwiseProduct(c_prev) + I.col(t).cwiseProduct(G.col(t));
        TC.col(t) = C.col(t).array().tanh();
        H.col(t) = O.col(t).cwiseProduct(TC.col(t));
        h_prev = H.col(t);
        c_prev = C.col(t);
    }
    if (cache) {
        cache->inputs = inputs.leftCols(T);
        cache->i = I;
        cache->f = F;
        cache->o = O;
        cache->g = G;
        cache->c = C;
        cache->h = H;
        cache->tc = TC;
        cache->valid_len = T;
    }
    return H;
}

LstmGrads lstm_backward(const LstmParams& p, const LstmCache& cache, ConstVecRef d_h_final) {
    if (cache.valid_len <= 0) throw InvalidInputError("lstm_backward: no forward cache");
    const Index T = cache.valid_len;
    const Index h = p.hidden_dim;
    if (d_h_final.size() != h) throw ShapeError("lstm_backward: upstream gradient dim mismatch");

    LstmGrads gr;
    gr.params = LstmParams::zeros_like(p);
    gr.inputs = Mat::Zero(p.input_dim, cache.inputs.cols());

    Vec dh = d_h_final;
    Vec dc = Vec::Zero(h);
    for (Index t = T - 1; t >= 0; --t) {
        const auto it = cache.i.col(t);
        const auto ft = cache.f.col(t);
        const auto ot = cache.o.col(t);
        const auto gt = cache.g.col(t);
        const auto tct = cache.tc.col(t);
        const Vec c_prev = t > 0 ? Vec(cache.c.col(t - 1)) : Vec(Vec::Zero(h));
        const Vec h_prev = t > 0 ? Vec(cache.h.col(t - 1)) : Vec(Vec::Zero(h));

        Vec do_ = dh.cwiseProduct(tct);
        dc.array() += dh.array() * ot.array() * (1.0 - tct.array().square());

        Vec di = dc.cwiseProduct(gt);
        Vec df = dc.cwiseProduct(c_prev);
        Vec dg = dc.cwiseProduct(it);

        // pre-activation gradients through the gate nonlinearities
        Vec da_i = di.array() * it.array() * (1.0 - it.array());
        Vec da_f = df.array() * ft.array() * (1.0 - ft.array());
        Vec da_o = do_.array() * ot.array() * (1.0 - ot.array());
        Vec da_g = dg.array() * (1.0 - gt.array().square());

        const auto x = cache.inputs.col(t);
        gr.params.W_i.noalias() += da_i * x.transpose();
        gr.params.W_f.noalias() += da_f * x.transpose();
        gr.params.W_o.noalias() += da_o * x.transpose();
        gr.params.W_g.noalias() += da_g * x.transpose();
        gr.params.U_i.noalias() += da_i * h_prev.transpose();
        gr.params.U_f.noalias() += da_f * h_prev.transpose();
        gr.params.U_o.noalias() += da_o * h_prev.transpose();
        gr.params.U_g.noalias() += da_g * h_prev.transpose();
        gr.params.b_i += da_i;
        gr.params.b_f += da_f;
        gr.params.b_o += da_o;
        gr.params.b_g += da_g;

        gr.inputs.col(t) = p.W_i.transpose() * da_i + p.W_f.transpose() * da_f +
                           p.W_o.transpose() * da_o + p.W_g.transpose() * da_g;

        dh = p.U_i.transpose() * da_i + p.U_f.transpose() * da_f + p.U_o.transpose() * da_o +
             p.U_g.transpose() * da_g;
        dc = dc.cwiseProduct(ft);
    }
    return gr;
}

}  // namespace qrel::nn
