#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lrlens/landscape.hpp"
#include "lrlens/model.hpp"
#include "lrlens/optim.hpp"

namespace lrlens {

constexpr const char* kToolVersion = "lrlens 0.1.0";

// Fully resolved experiment: per-size model configs and per-(size, method)
// training configs, plus metric-suite parameters. Built from a key-value
// config file with [section] headers and `include` directives.
struct ExperimentConfig {
    uint64_t seed = 0;
    std::string corpus_path;
    std::string output_dir;
    double val_fraction = 0.25;
    int64_t val_sequences = 64;

    std::vector<std::string> sizes;
    std::vector<Method> methods;
    std::map<std::string, ModelConfig> model_by_size;
    // train config resolved per (size, method)
    std::map<std::string, TrainConfig> train_by; // key: size + "/" + method

    PerturbGrid landscape_grid{0.5, 10};
    int64_t landscape_directions = 100;
    bool landscape_normalize = false;
    int64_t pca_k = 1;
    int64_t interp_beta_points = 11;
    double spectra_tau = 0.1;
    std::string activations_reference = "full_rank";

    const TrainConfig& train_for(const std::string& size, Method m) const;
    const ModelConfig& model_for(const std::string& size) const;

    // Sorted key=value dump of every resolved setting; the config hash is the
    // FNV-1a of this text.
    std::string canonical_text() const;
    std::string config_hash() const;
};

// Raw parse result: section-qualified keys to values, includes resolved.
std::map<std::string, std::string> parse_config_file(const std::string& path);

ExperimentConfig resolve_experiment_config(const std::map<std::string, std::string>& kv);
ExperimentConfig load_experiment_config(const std::string& path);

// Default config text for `lrlens config --print-defaults`.
std::string default_config_text();

} // namespace lrlens
