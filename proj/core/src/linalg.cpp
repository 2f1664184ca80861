#include "mp/linalg.hpp"

#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace mp {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

// Checked arithmetic: int64 throws Overflow, BigInt never does.
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

template <typename T>
std::size_t bareiss_rank(std::vector<T> a, std::size_t rows, std::size_t cols) {
    auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
    T prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const T p = at(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const T f = at(i, c);
            if (f == 0) {
                // Row i still needs the common scaling by p / prev.
                if (p != prev) {
                    for (std::size_t j = c + 1; j < cols; ++j) {
                        if (at(i, j) != 0) at(i, j) = mul(p, at(i, j)) / prev;
                    }
                }
                continue;
            }
            for (std::size_t j = c + 1; j < cols; ++j) {
                at(i, j) = sub(mul(p, at(i, j)), mul(f, at(rank, j))) / prev;
            }
            at(i, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1u) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

std::size_t rank_rational(const DenseMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::int64_t> fast(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) fast[r * cols + c] = m(r, c);
    }
    try {
        return bareiss_rank(std::move(fast), rows, cols);
    } catch (const Overflow&) {
        std::vector<BigInt> big(rows * cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) big[r * cols + c] = m(r, c);
        }
        return bareiss_rank(std::move(big), rows, cols);
    }
}

std::size_t rank_mod_p(const DenseMatrix& m, std::uint32_t p) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    const std::int64_t sp = p;
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            a[r * cols + c] = static_cast<std::uint64_t>(((m(r, c) % sp) + sp) % sp);
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const std::uint64_t inv = pow_mod(at(rank, c), p - 2, p);
        for (std::size_t j = c; j < cols; ++j) at(rank, j) = at(rank, j) * inv % p;
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::uint64_t f = at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                at(i, j) = (at(i, j) + (p - f) * at(rank, j)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t matrix_rank(const DenseMatrix& m, const FieldSpec& field) {
    if (field.is_rational()) return rank_rational(m);
    return rank_mod_p(m, field.characteristic());
}

}  // namespace mp
