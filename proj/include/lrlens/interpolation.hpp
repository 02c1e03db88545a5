#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrlens/checkpoint.hpp"
#include "lrlens/landscape.hpp" // LossFn
#include "lrlens/model.hpp"

namespace lrlens {

struct InterpCurve {
    std::vector<double> betas;  // mirror-symmetric uniform grid in [0, 1]
    std::vector<double> losses;
    std::string endpoint_a, endpoint_b;
    std::string method_a, method_b;
    int64_t step_a = 0, step_b = 0;
    std::string space = "dense"; // "dense" or "native"
};

struct BarrierResult {
    InterpCurve curve;
    double bh = 0.0;         // max interior loss minus mean endpoint loss
    double beta_argmax = 0.0;
};

// Uniform beta grid with betas[i] + betas[n-1-i] == 1 exactly, so a reversed
// interpolation evaluates bitwise-identical parameter points.
std::vector<double> uniform_betas(int64_t points);

// Loss along (1-beta)*a + beta*b. Both sets must share a schema.
InterpCurve interp_losses_fn(const ParamSet& a, const ParamSet& b, const LossFn& loss,
                             const std::vector<double>& betas);

BarrierResult barrier_height(InterpCurve curve);

struct CheckpointRef {
    int64_t step = 0;
    std::string id;
    std::string method;
    ParamSet params;
    ModelConfig cfg;
};

// Dense-space interpolation between two checkpoints (CoLA rejected).
InterpCurve interp_losses(const CheckpointRef& a, const CheckpointRef& b, const Batch& valset,
                          int64_t beta_points);

// Barriers between consecutive checkpoints of one run. CoLA runs interpolate
// natively in their own factor space (cross-method paths stay dense-only).
std::vector<BarrierResult> ccbh(const std::vector<CheckpointRef>& series, const Batch& valset,
                                int64_t beta_points);

// Barriers between two methods' checkpoints at shared steps; both sides are
// dense-materialized first.
std::vector<BarrierResult> imbh(const std::vector<CheckpointRef>& run_a,
                                const std::vector<CheckpointRef>& run_b, const Batch& valset,
                                int64_t beta_points);

} // namespace lrlens
