#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mp/field.hpp"

namespace mp {

/// Row-major dense integer matrix; entries are exact integers.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Exact rank over the given field.
std::size_t matrix_rank(const DenseMatrix& m, const FieldSpec& field);

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in 64-bit
/// arithmetic and restarts with arbitrary precision on overflow.
std::size_t rank_rational(const DenseMatrix& m);

/// Rank over GF(p), p prime.
std::size_t rank_mod_p(const DenseMatrix& m, std::uint32_t p);

}  // namespace mp
