#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lrlens/model.hpp"
#include "lrlens/optim.hpp"

namespace lrlens {

// On-disk layout (all integers little-endian):
//   magic "LRLENS\0" | u32 version | u64 header length | JSON header | payload
// The header carries the model config, method, step, seed and a tensor
// directory (name, rows, cols, byte offset into the payload). The payload is
// the tensors' raw 64-bit reals, contiguous in directory order.
constexpr uint32_t kCheckpointVersion = 1;

struct CheckpointMeta {
    ModelConfig model;
    std::string method = "full_rank";
    std::string size_label;
    int64_t step = 0;
    uint64_t seed = 0;
};

struct TensorInfo {
    std::string name;
    int64_t rows = 0;
    int64_t cols = 0;
    uint64_t offset = 0; // bytes from payload start
};

void save_checkpoint(const std::string& path, const ParamSet& params, const CheckpointMeta& meta);
std::pair<ParamSet, CheckpointMeta> load_checkpoint(const std::string& path);

// Parses the header without touching the payload.
CheckpointMeta inspect_checkpoint(const std::string& path, std::vector<TensorInfo>* directory = nullptr);

// Rewrites a factored/sparse parameter set in the common dense full-rank
// weight space: adapter composes W + B*A, sltrain composes B*A + S. CoLA has
// a nonlinearity between its factors and admits no dense equivalent.
std::pair<ParamSet, ModelConfig> materialize_dense(const ParamSet& params, const ModelConfig& cfg);

// RunRecord persistence (JSON).
void save_run_record(const std::string& path, const RunRecord& record);
RunRecord load_run_record(const std::string& path);

} // namespace lrlens
