#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lrlens/model.hpp"

namespace lrlens {

// Symmetric uniform perturbation grid {-a_max..0..+a_max} with num_offsets
// points on each side of zero.
struct PerturbGrid {
    double alpha_max = 0.5;
    int64_t num_offsets = 10;

    std::vector<double> points() const; // ascending, 2*num_offsets+1 values, exact 0 included
    void validate_or_throw() const;
};

// Loss values over the grid for D perturbation directions, with mean and
// population variance across directions at each offset. Non-finite probe
// losses are stored as +inf sentinels.
struct LandscapeCurve {
    std::vector<double> alphas;
    std::vector<std::vector<double>> losses; // D x alphas
    std::vector<double> mean_loss;
    std::vector<double> var_loss;
    std::vector<uint64_t> direction_seeds;
    int64_t directions = 0;

    void recompute_reductions();
};

struct ScalarResult {
    double value = 0.0;
    bool saturated = false; // an inf sentinel reached the reduction
};

using LossFn = std::function<double(const ParamSet&)>;

// Loss surface along independent Gaussian directions, one delta per eligible
// tensor, shared alpha. theta is never mutated. normalize_per_tensor rescales
// each delta to the Frobenius norm of the tensor it perturbs (off by default;
// the raw N(0, I) draw is the primary mode).
LandscapeCurve landscape_random_fn(const ParamSet& theta, const std::vector<std::string>& eligible,
                                   const LossFn& loss, const PerturbGrid& grid, int64_t directions,
                                   uint64_t seed, bool normalize_per_tensor = false);

// Mean loss elevation over symmetric offsets; larger means a sharper basin.
ScalarResult sharpness(const LandscapeCurve& curve);

// Across-direction variance averaged over offsets; larger means a more
// anisotropic basin.
ScalarResult direction_variance(const LandscapeCurve& curve);

struct PcaLandscape {
    LandscapeCurve curve; // single direction
    int64_t k = 1;
    std::map<std::string, double> sigma_k;  // per eligible tensor
    std::map<std::string, double> sigma_1;
    double sigma_k_mean = 0.0;
    double sigma_1_mean = 0.0;
};

// Perturbs every eligible tensor along its own sigma_k * u_k v_k^T direction
// with a shared alpha.
PcaLandscape landscape_pca_fn(const ParamSet& theta, const std::vector<std::string>& eligible,
                              const LossFn& loss, const PerturbGrid& grid, int64_t k);

// Model-bound wrappers evaluating the validation loss on valset.
LossFn val_loss_fn(const ModelConfig& cfg, const Batch& valset);
LandscapeCurve landscape_random(const ParamSet& params, const ModelConfig& cfg, const Batch& valset,
                                const PerturbGrid& grid, int64_t directions, uint64_t seed,
                                bool normalize_per_tensor = false);
PcaLandscape landscape_pca(const ParamSet& params, const ModelConfig& cfg, const Batch& valset,
                           const PerturbGrid& grid, int64_t k);

} // namespace lrlens
