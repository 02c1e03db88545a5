#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrlens/linalg.hpp"
#include "lrlens/model.hpp"

namespace lrlens {

// Byte-level corpus. Tokens are raw byte values (0..255); the tail fraction
// of the file is held out for validation sampling.
struct Corpus {
    std::vector<uint8_t> bytes;
    int64_t train_end = 0; // train tokens in [0, train_end), validation after

    int64_t size() const { return static_cast<int64_t>(bytes.size()); }
};

Corpus load_corpus(const std::string& path, double val_fraction = 0.25);
Corpus corpus_from_bytes(std::vector<uint8_t> bytes, double val_fraction = 0.25);

// Random training windows from the train region.
Batch sample_batch(const Corpus& corpus, int64_t rows, int64_t seq_len, SeededRng& rng);

// Fixed validation subset: `sequences` windows drawn once from the held-out
// region with the given seed.
Batch make_valset(const Corpus& corpus, int64_t sequences, int64_t seq_len, uint64_t seed);

} // namespace lrlens
