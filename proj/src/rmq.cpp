#include "elspal/rmq.hpp"

#include <algorithm>
#include <bit>

namespace elspal {

RangeMin::RangeMin(std::vector<std::int32_t> values) : values_(std::move(values)) {
    const auto n = values_.size();
    masks_.assign(n, 0);
    std::vector<std::size_t> stack;
    stack.reserve(kBlock);
    for (std::size_t begin = 0; begin < n; begin += kBlock) {
        const auto end = std::min(n, begin + kBlock);
        stack.clear();
        std::uint64_t mask = 0;
        for (auto i = begin; i < end; ++i) {
            while (!stack.empty() && values_[stack.back()] > values_[i]) {
                mask &= ~(std::uint64_t{1} << (stack.back() - begin));
                stack.pop_back();
            }
            stack.push_back(i);
            mask |= std::uint64_t{1} << (i - begin);
            masks_[i] = mask;
        }
    }

    const auto blocks = (n + kBlock - 1) / kBlock;
    if (blocks == 0) return;
    table_.emplace_back(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        table_[0][b] = in_block(b * kBlock, std::min(n, (b + 1) * kBlock) - 1);
    }
    for (std::size_t k = 1; (std::size_t{1} << k) <= blocks; ++k) {
        const auto half = std::size_t{1} << (k - 1);
        const auto& prev = table_[k - 1];
        std::vector<std::int32_t> row(blocks - (std::size_t{1} << k) + 1);
        for (std::size_t b = 0; b < row.size(); ++b) row[b] = std::min(prev[b], prev[b + half]);
        table_.push_back(std::move(row));
    }
}

std::int32_t RangeMin::in_block(std::size_t a, std::size_t b) const noexcept {
    const auto begin = a - a % kBlock;
    const auto m = masks_[b] & (~std::uint64_t{0} << (a - begin));
    return values_[begin + static_cast<std::size_t>(std::countr_zero(m))];
}

std::int32_t RangeMin::min(std::size_t a, std::size_t b) const noexcept {
    const auto ba = a / kBlock;
    const auto bb = b / kBlock;
    if (ba == bb) return in_block(a, b);
    auto best = std::min(in_block(a, (ba + 1) * kBlock - 1), in_block(bb * kBlock, b));
    if (ba + 1 < bb) {
        const auto lo = ba + 1;
        const auto span = bb - lo;
        const auto k = static_cast<std::size_t>(std::bit_width(span) - 1);
        best = std::min({best, table_[k][lo], table_[k][bb - (std::size_t{1} << k)]});
    }
    return best;
}

std::size_t RangeMin::cell_count() const noexcept {
    std::size_t cells = values_.size() + 2 * masks_.size();
    for (const auto& row : table_) cells += row.size();
    return cells;
}

}  // namespace elspal
