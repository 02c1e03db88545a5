#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lrlens/model.hpp"

namespace lrlens {

// Mean per-position Euclidean distance between two activation matrices.
double act_l2(const Matrix& a, const Matrix& b);

// Mean per-position cosine alignment; eps keeps zero rows harmless.
double act_cos(const Matrix& a, const Matrix& b, double eps = 1e-8);

// Linear centered kernel alignment between activation matrices (columns are
// centered internally). Invariant to orthogonal rotation and isotropic
// scaling of either side.
double linear_cka(const Matrix& a, const Matrix& b);

struct ActLayerMetrics {
    double l2 = 0.0;
    double cos = 0.0;
    double cka = 0.0;
};

struct ActReport {
    std::string ref_method, tgt_method, size_label;
    int64_t step = 0;
    std::vector<ActLayerMetrics> layers; // index 0 = embedding output, last = post-final-norm

    ActLayerMetrics layer_mean() const;
};

// Per-layer comparison of two checkpoints' hidden states on identical inputs.
ActReport act_compare(const ParamSet& ref_params, const ModelConfig& ref_cfg,
                      const ParamSet& tgt_params, const ModelConfig& tgt_cfg, const Batch& valset);

// Combined deviation score z = l2/mean_methods(l2) + (1-cos) + (1-cka),
// computed per layer across a set of methods at one step, then averaged over
// layers or taken at the last layer.
struct StackedDeviation {
    std::map<std::string, std::vector<double>> per_layer;
    std::map<std::string, double> layer_mean;
    std::map<std::string, double> last_layer;
};

StackedDeviation stacked_deviation(const std::map<std::string, ActReport>& by_method);

} // namespace lrlens
