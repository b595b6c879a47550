#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace schurq {

/// Determinant by cofactor expansion along rows, memoized on the set of
/// unused columns. Needs +, -, * and is_zero() on the ring; about 2^n * n
/// ring products, no division. Zero entries prune the recursion.
template <class Ring>
Ring det_by_cofactor(const std::vector<std::vector<Ring>>& m, const Ring& zero, const Ring& one) {
    const size_t n = m.size();
    if (n == 0) return one;
    if (n > 24) throw std::invalid_argument("det_by_cofactor: matrix too large");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_by_cofactor: matrix not square");

    std::unordered_map<uint32_t, Ring> memo;
    auto rec = [&](auto&& self, uint32_t cols) -> const Ring& {
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        size_t row = n - static_cast<size_t>(__builtin_popcount(cols));
        Ring acc = zero;
        int sign = 1;
        for (size_t c = 0; c < n; ++c) {
            if (!(cols & (uint32_t{1} << c))) continue;
            if (!m[row][c].is_zero()) {
                Ring sub = cols == (uint32_t{1} << c) ? one : self(self, cols ^ (uint32_t{1} << c));
                Ring term = m[row][c] * sub;
                if (sign > 0)
                    acc += term;
                else
                    acc -= term;
            }
            sign = -sign;
        }
        return memo.emplace(cols, std::move(acc)).first->second;
    };
    uint32_t full = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    return rec(rec, full);
}

}  // namespace schurq
