#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace lrlens {

// The nine predictor inputs, in schema order; ties in the screen preserve
// this order.
extern const std::vector<std::string> kFeatureSchema;

struct FeatureMatrix {
    std::vector<std::string> feature_names;
    std::vector<std::vector<double>> rows; // row-major feature values
    std::vector<double> target;

    struct RowLabel {
        std::string method;
        std::string size;
        int64_t step = 0;
    };
    std::vector<RowLabel> labels;
    std::vector<std::string> degenerate_features; // constant columns

    int64_t n_rows() const { return static_cast<int64_t>(rows.size()); }
    int64_t n_features() const { return static_cast<int64_t>(feature_names.size()); }
};

struct FitResult {
    std::vector<double> coef;
    double intercept = 0.0;
    double r2 = 0.0; // in-sample
    std::vector<double> fold_predictions; // held-out prediction per row
    std::vector<std::string> fold_of_row;
    double pearson_holdout = 0.0;
    double spearman_holdout = 0.0;
};

// Ordinary least squares via normal equations with a ridge fallback
// (lambda = 1e-8) when the Gram matrix is singular.
FitResult fit_linear(const std::vector<std::vector<double>>& x, const std::vector<double>& y);

enum class CvScheme { loso, lomo };
CvScheme cv_scheme_from_name(const std::string& s);
std::string cv_scheme_name(CvScheme s);

// Leave-one-group-out CV; folds are size groups (loso) or methods (lomo).
// Standardization statistics come from training rows only, per fold.
FitResult cross_validate(const FeatureMatrix& fm, CvScheme scheme);

double pearson(std::span<const double> x, std::span<const double> y);
double spearman(std::span<const double> x, std::span<const double> y); // average ranks on ties

struct ScreenEntry {
    std::string feature;
    std::vector<double> rho_per_group;
    double median_abs_rho = 0.0;
};

// Keeps features whose per-group Spearman sign is identical across groups,
// ranked by |median rho| descending (stable on ties).
std::vector<ScreenEntry> sign_consistency_screen(
    const std::vector<std::pair<std::string, std::vector<double>>>& rho_table);

// Metric values keyed by (size, method, step); target keys drive the rows.
struct FeatureInputs {
    using Key = std::tuple<std::string, std::string, int64_t>;
    std::map<std::string, std::map<Key, double>> metrics; // feature name -> values
    std::map<Key, double> target;
};

FeatureMatrix build_features(const FeatureInputs& inputs);

// Synthetic planted-linear dataset used by predictor tests: y = X beta + b
// + noise with noise_frac of the signal's standard deviation.
FeatureMatrix planted_linear_dataset(int64_t n, int64_t n_features, double noise_frac, uint64_t seed,
                                     int64_t n_sizes, int64_t n_methods);

} // namespace lrlens
