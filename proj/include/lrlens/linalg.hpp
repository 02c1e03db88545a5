#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lrlens/errors.hpp"

namespace lrlens {

// Dense row-major matrix of 64-bit reals. All numeric work in the toolkit
// runs through this type; operations keep a fixed summation order so that
// identical inputs give bitwise-identical outputs.
struct Matrix {
    int64_t rows = 0;
    int64_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int64_t r, int64_t c) : rows(r), cols(c), data(static_cast<size_t>(r * c), 0.0) {}

    double& at(int64_t i, int64_t j) { return data[static_cast<size_t>(i * cols + j)]; }
    double at(int64_t i, int64_t j) const { return data[static_cast<size_t>(i * cols + j)]; }

    int64_t size() const { return rows * cols; }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

    static Matrix identity(int64_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows_init);
};

bool is_finite(const Matrix& m);

Matrix transpose(const Matrix& m);
Matrix matmul(const Matrix& a, const Matrix& b);       // a * b
Matrix matmul_nt(const Matrix& a, const Matrix& b);    // a * b^T
Matrix matmul_tn(const Matrix& a, const Matrix& b);    // a^T * b
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);
Matrix hadamard(const Matrix& a, const Matrix& b);
void add_in_place(Matrix& a, const Matrix& b, double s = 1.0); // a += s * b
double frobenius_norm(const Matrix& m);
double dot(const Matrix& a, const Matrix& b); // elementwise, flattened
double max_abs_diff(const Matrix& a, const Matrix& b);

// Thin SVD. U is m x r, V is n x r with r = min(m, n); singular values are
// sorted descending. Columns of U and V are orthonormal; singular values
// below max(m, n) * eps * sigma_max are truncated to exact zero and the
// corresponding U/V columns completed to an orthonormal set.
struct SvdResult {
    Matrix u;
    std::vector<double> singular_values;
    Matrix v;
};

SvdResult svd(const Matrix& m);

// Counter-based deterministic RNG: xoshiro256** seeded through splitmix64,
// gaussians via the Marsaglia polar method. Stream identity depends only on
// the seed value, never on platform or call site.
class SeededRng {
public:
    static constexpr const char* kAlgorithm = "xoshiro256ss/polar-v1";

    explicit SeededRng(uint64_t seed);

    uint64_t seed() const { return seed_; }
    uint64_t next_u64();
    double uniform01(); // [0, 1)
    double normal();    // standard normal

    // Derives an independent child stream; results are a pure function of
    // (seed, stream), so parallel work keyed by stream index is
    // schedule-independent.
    static uint64_t derive_seed(uint64_t seed, uint64_t stream);
    SeededRng child(uint64_t stream) const { return SeededRng(derive_seed(seed_, stream)); }

private:
    uint64_t seed_;
    uint64_t state_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Matrix of i.i.d. standard-normal entries drawn from the given stream.
Matrix gaussian_direction(int64_t rows, int64_t cols, SeededRng& rng);

// FNV-1a, used to derive rng stream ids from tensor names.
uint64_t fnv1a64(const std::string& s);
uint64_t fnv1a64_bytes(const void* data, size_t len, uint64_t h = 0xCBF29CE484222325ULL);

} // namespace lrlens
