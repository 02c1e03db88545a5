#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lrlens/corpus.hpp"
#include "lrlens/model.hpp"

namespace lrlens {

enum class Method { full_rank, galore, fira, cola, sltrain, relora };

std::string method_name(Method m);
Method method_from_name(const std::string& s);
LayerKind method_layer_kind(Method m);
const std::vector<Method>& all_methods();

struct TrainConfig {
    Method method = Method::full_rank;
    int64_t steps = 2000;
    int64_t batch_size = 8;
    double lr = 2e-3;
    double beta1 = 0.9;
    double beta2 = 0.99;
    double eps = 1e-8;
    int64_t rank = 16;           // projection rank for galore/fira
    int64_t galore_refresh = 200;
    double galore_scale = 0.25;
    int64_t relora_reset = 500;
    int64_t checkpoint_every = 400;
    uint64_t seed = 1;
    double warmup_frac = 0.1;    // linear warmup, then cosine to final_lr_frac
    double final_lr_frac = 0.1;
    bool fira_residual = true;   // test hook: false makes fira bit-identical to galore

    std::vector<std::string> validate() const;
    void validate_or_throw() const;
};

struct AdamSlot {
    Matrix m, v;
};

// Low-rank optimizer state for a projected tensor: moments live in the
// projected space, plus the projection basis and its refresh step.
struct ProjSlot {
    Matrix m, v;
    Matrix basis;            // (rows x r) when project_rows, else (cols x r)
    bool project_rows = true;
    int64_t last_refresh = -1;
};

struct OptimizerState {
    int64_t step = 0; // completed optimizer steps; bias correction uses step
    std::map<std::string, AdamSlot> adam;
    std::map<std::string, ProjSlot> proj;
};

OptimizerState init_optimizer(const ParamSet& params, const ModelConfig& mcfg, const TrainConfig& tcfg);

// Bias-corrected Adam delta for one tensor; the returned matrix is added to
// the parameter. t is the 1-based optimizer step.
Matrix adam_update(AdamSlot& slot, const Matrix& grad, double lr, double beta1, double beta2,
                   double eps, int64_t t);

// One optimizer step over all tensors according to tcfg.method. lr is the
// already-scheduled learning rate for this step.
void apply_update(ParamSet& params, const ParamSet& grads, OptimizerState& state, double lr,
                  const TrainConfig& tcfg, const ModelConfig& mcfg);

// Low-rank update for a single projected tensor (galore) and the full-rank
// residual variant (fira). Exposed for direct testing.
Matrix galore_step_tensor(ProjSlot& slot, const Matrix& grad, double lr, const TrainConfig& tcfg,
                          int64_t t);
Matrix fira_step_tensor(ProjSlot& slot, const Matrix& grad, double lr, const TrainConfig& tcfg,
                        int64_t t);

// ReLoRA merge-and-reset: W += B*A, A reinitialized from the seed stream,
// B zeroed, adapter moments cleared. cycle indexes the merge event.
void relora_cycle(ParamSet& params, OptimizerState& state, const ModelConfig& mcfg, int64_t cycle);

double lr_at_step(const TrainConfig& tcfg, int64_t step);

struct RunEntry {
    int64_t step = 0;
    std::string checkpoint_id;
    double train_loss = 0.0;
    double val_loss = 0.0;
};

struct RunRecord {
    std::string method;
    std::string size_label;
    ModelConfig model;
    TrainConfig train_config;
    std::vector<RunEntry> entries;
    bool aborted = false;
    std::string abort_reason;
};

// Receives the parameters at a checkpoint step and returns a checkpoint id
// (typically the file name it was saved under).
using CheckpointSink = std::function<std::string(const ParamSet&, int64_t step)>;

// Runs one pre-training regime. Checkpoints are emitted at step 0, every
// checkpoint_every steps, and the final step. On a numerical abort the
// partial record is returned with aborted=true.
RunRecord train(const TrainConfig& tcfg, const ModelConfig& mcfg, const Corpus& corpus,
                const Batch& valset, const CheckpointSink& sink, const std::string& size_label = "");

} // namespace lrlens
