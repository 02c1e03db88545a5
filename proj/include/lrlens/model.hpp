#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lrlens/linalg.hpp"

namespace lrlens {

enum class LayerKind { dense, cola, sltrain, adapter };

std::string layer_kind_name(LayerKind k);
LayerKind layer_kind_from_name(const std::string& s);

// Decoder configuration. The architecture is fixed: token embedding, per
// layer {RMSNorm -> causal multi-head attention with rotary embedding ->
// residual; RMSNorm -> SwiGLU MLP -> residual}, final RMSNorm, untied head.
// layer_kind selects how the seven 2-D projections are parameterized.
struct ModelConfig {
    int64_t vocab_size = 512;
    int64_t d_model = 64;
    int64_t n_layers = 4;
    int64_t n_heads = 4;
    int64_t d_ff = 256;
    int64_t max_seq_len = 128;
    LayerKind layer_kind = LayerKind::dense;
    int64_t rank = 16;
    uint64_t seed = 1;
    double sltrain_density = 0.03;
    // Test hook: swap CoLA's SiLU for the identity.
    bool cola_identity_activation = false;
    // Widens probe/spectra scope to embedding and head tensors.
    bool include_embeddings = false;

    std::vector<std::string> validate() const; // returns violated constraints
    void validate_or_throw() const;
};

// Named tensors keyed by "embed", "head", "final_norm",
// "layers.<ii>.{attn_norm,mlp_norm}" and "layers.<ii>.W{q,k,v,o,up,gate,down}"
// (dense) or the same base with ".A"/".B"/".S"/".W" suffixes for factored
// kinds. std::map keeps iteration order deterministic.
using ParamSet = std::map<std::string, Matrix>;

struct Batch {
    int64_t rows = 0;
    int64_t seq_len = 0;
    std::vector<int32_t> tokens; // rows x seq_len, row-major

    int32_t tok(int64_t b, int64_t t) const { return tokens[static_cast<size_t>(b * seq_len + t)]; }
    int32_t& tok(int64_t b, int64_t t) { return tokens[static_cast<size_t>(b * seq_len + t)]; }
};

// Projection roles in layer order.
extern const char* const kProjectionRoles[7];

std::string layer_prefix(int64_t layer); // "layers.00" etc.

// Full key schema for a configuration, sorted.
std::vector<std::string> param_keys(const ModelConfig& cfg);
// Base projection keys ("layers.00.Wq", ...) common to all kinds.
std::vector<std::string> projection_base_keys(const ModelConfig& cfg);
// Native-space 2-D attention/MLP tensors eligible for perturbation and
// spectral probes (factors for factored kinds; embed/head when widened).
std::vector<std::string> eligible_probe_keys(const ModelConfig& cfg);

ParamSet init_params(const ModelConfig& cfg);

// Fixed sparse support for SLTrain, a pure function of (seed, key, shape).
Matrix sltrain_support_mask(uint64_t seed, const std::string& base_key, int64_t rows, int64_t cols,
                            double density);

void check_param_schema(const ParamSet& params, const ModelConfig& cfg);

// Mean next-token cross-entropy over all predicted positions.
double forward_loss(const ParamSet& params, const ModelConfig& cfg, const Batch& batch);

// Loss plus exact reverse-mode gradients with the same key schema as params.
std::pair<double, ParamSet> forward_grads(const ParamSet& params, const ModelConfig& cfg,
                                          const Batch& batch);

// Residual-stream activations: index 0 is the embedding output, index L the
// post-final-norm stream. Each matrix is (rows*seq_len) x d_model.
std::vector<Matrix> capture_hidden_states(const ParamSet& params, const ModelConfig& cfg,
                                          const Batch& batch);

// Full logits grid, (rows*seq_len) x vocab. Used by function-preservation
// checks; not part of the training path.
Matrix forward_logits(const ParamSet& params, const ModelConfig& cfg, const Batch& batch);

} // namespace lrlens
