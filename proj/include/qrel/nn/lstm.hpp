#pragma once

#include <string>
#include <vector>

#include <qrel/nn/param_view.hpp>
#include <qrel/rng.hpp>
#include <qrel/types.hpp>

namespace qrel::nn {

// Standard forget-gate LSTM, no peepholes:
//   i,f,o = sigmoid(W x + U h + b)    g = tanh(W x + U h + b)
//   c_t = f . c_{t-1} + i . g         h_t = o . tanh(c_t)
// h_0 = c_0 = 0. The final hidden state is the sequence embedding.
struct LstmParams {
    Index input_dim = 0;
    Index hidden_dim = 0;
    Mat W_i, W_f, W_o, W_g;  // hidden x input
    Mat U_i, U_f, U_o, U_g;  // hidden x hidden
    Vec b_i, b_f, b_o, b_g;  // hidden

    // Gaussian weights; biases zero except the forget gate, which starts at
    // forget_bias so early BPTT does not wash out the cell state.
    static LstmParams init(Index input_dim, Index hidden_dim, double std, Rng& rng,
                           double forget_bias = 1.0);
    static LstmParams zeros(Index input_dim, Index hidden_dim);
    static LstmParams zeros_like(const LstmParams& p) { return zeros(p.input_dim, p.hidden_dim); }

    std::vector<ParamView> param_views(const std::string& prefix = "");
    void check_consistent() const;
};

// Per-step activations kept from the forward pass for BPTT.
struct LstmCache {
    Mat inputs;                   // input_dim x T
    Mat i, f, o, g, c, h, tc;     // hidden x T (tc = tanh(c))
    Index valid_len = 0;
};

// Runs the recurrence over the first valid_len columns of `inputs`
// (valid_len < 0 means the whole sequence). Returns all hidden states,
// hidden x valid_len; the last column is the embedding.
Mat lstm_forward(const LstmParams& p, ConstMatRef inputs, LstmCache* cache = nullptr,
                 Index valid_len = -1);

struct LstmGrads {
    LstmParams params;  // gradient for every weight and bias
    Mat inputs;         // input_dim x T; columns past valid_len stay zero
};

// Exact BPTT for a scalar loss whose gradient w.r.t. the final hidden state
// is d_h_final. Requires the cache produced by lstm_forward.
LstmGrads lstm_backward(const LstmParams& p, const LstmCache& cache, ConstVecRef d_h_final);

}  // namespace qrel::nn
