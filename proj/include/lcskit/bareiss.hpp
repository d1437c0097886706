#pragma once

#include <cstdint>
#include <vector>

#include "lcskit/numeric.hpp"

namespace lcskit {

// Raised by the fixed-width fast path when an intermediate value would not
// fit; callers rerun with BigInt entries.
class EliminationOverflow : public std::runtime_error {
public:
    EliminationOverflow() : std::runtime_error("int64 elimination overflow") {}
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw EliminationOverflow();
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw EliminationOverflow();
    return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
inline std::int64_t sub(std::int64_t a, std::int64_t b) { return checked_sub(a, b); }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

}  // namespace detail

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
// Deterministic pivoting: first nonzero entry in row-major order.
// Destroys `rows`.
template <class Int>
int bareiss_rank(std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    Int prev_pivot = Int(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t pivot_row = r;
        while (pivot_row < rows.size() && rows[pivot_row][c] == Int(0)) ++pivot_row;
        if (pivot_row == rows.size()) continue;
        std::swap(rows[r], rows[pivot_row]);
        const Int pivot = rows[r][c];
        for (size_t i = r + 1; i < rows.size(); ++i) {
            const Int factor = rows[i][c];
            for (size_t j = c; j < cols; ++j) {
                if (rows[i][j] == Int(0) && (factor == Int(0) || rows[r][j] == Int(0))) continue;
                Int num = detail::sub(detail::mul(pivot, rows[i][j]),
                                      detail::mul(factor, rows[r][j]));
                rows[i][j] = num / prev_pivot;  // exact (Bareiss)
            }
        }
        prev_pivot = pivot;
        ++r;
    }
    return static_cast<int>(r);
}

// int64 fast path with overflow detection, BigInt fallback.
int exact_rank(const std::vector<std::vector<std::int64_t>>& rows);

}  // namespace lcskit
