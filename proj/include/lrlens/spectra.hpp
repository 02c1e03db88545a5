#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lrlens/model.hpp"

namespace lrlens {

// Exponential of the entropy of the normalized spectrum; 1 for a collapsed
// spectrum, r for a uniform one. Values below 1e-12 * sigma_1 are zeroed
// before the entropy to keep log noise out.
double effective_rank(std::span<const double> sigma);

// Squared Frobenius over squared operator norm.
double stable_rank(std::span<const double> sigma);

struct GapResult {
    double value = 0.0;
    bool flagged = false; // single-value spectrum, gap defined as 1
};
// (sigma_1 - sigma_2) / sigma_1.
GapResult spectral_gap(std::span<const double> sigma);

// Count of singular values strictly above tau.
int64_t threshold_rank(std::span<const double> sigma, double tau = 0.1);

struct TensorSpectrum {
    std::string key;
    std::string role; // projection role ("Wq", "Wup.A", "embed", ...)
    int64_t rows = 0, cols = 0;
    std::vector<double> sigma;
    double eff_rank = 0.0;
    double stab_rank = 0.0;
    double gap = 0.0;
    int64_t thresh_rank = 0;
    bool degenerate = false;  // all-zero spectrum; rank metrics undefined
    bool gap_flagged = false;
};

struct SpectralReport {
    std::string method, size_label;
    std::string mode = "weights"; // "weights" or "deltas"
    int64_t step = 0;
    int64_t step_prev = -1; // deltas mode: the pair is (step_prev, step)
    double tau = 0.1;
    std::vector<TensorSpectrum> tensors;

    double mean(double TensorSpectrum::* field) const; // over non-degenerate tensors
};

TensorSpectrum tensor_spectrum(const std::string& key, const Matrix& m, double tau);

// The 2-D matrices spectral analysis runs on: dense-materialized projections
// for dense/sltrain/adapter checkpoints, native factors for cola.
std::map<std::string, Matrix> spectra_scope_tensors(const ParamSet& params, const ModelConfig& cfg);

SpectralReport spectral_report(const std::map<std::string, Matrix>& tensors, double tau);

std::string role_of_key(const std::string& key);

} // namespace lrlens
