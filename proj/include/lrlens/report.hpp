#pragma once

#include <string>
#include <vector>

#include "lrlens/config.hpp"

namespace lrlens {

// Output tree:
//   runs/<size>/<method>/{run.json, ckpt_<step>.lrl}
//   metrics/*.csv, metrics/*.json
//   predict/*.csv, predict/*.json
//   report/*.svg, manifest.json
std::string run_dir(const ExperimentConfig& exp, const std::string& size, Method m);

void cmd_train(const ExperimentConfig& exp);
void cmd_landscape(const ExperimentConfig& exp, const std::string& size_filter = "",
                   const std::string& method_filter = "");
void cmd_pca(const ExperimentConfig& exp, const std::string& size_filter = "",
             const std::string& method_filter = "");
void cmd_interp(const ExperimentConfig& exp, const std::string& size_filter = "");
void cmd_spectra(const ExperimentConfig& exp, const std::string& size_filter = "",
                 const std::string& method_filter = "");
void cmd_activations(const ExperimentConfig& exp, const std::string& size_filter = "",
                     const std::string& method_filter = "");

// scheme: "loso", "lomo" or "both". When features_csv is empty the features
// are assembled from the metric outputs and written alongside the fits.
void cmd_predict(const ExperimentConfig& exp, const std::string& target_csv,
                 const std::string& scheme, const std::string& features_csv = "");

// Renders the SVG bundle, validates CSV schemas and writes the manifest.
void cmd_report(const ExperimentConfig& exp, const std::string& schema_dir);

// Re-checks manifest hashes and CSV schemas; returns human-readable problems.
std::vector<std::string> verify_output(const std::string& out_dir, const std::string& schema_dir);

} // namespace lrlens
