#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace elspal {

/// Constant-time range-minimum over an immutable array in linear space.
///
/// Values are split into blocks of 64. Inside a block, each position keeps a
/// bitmask of the increasing-minimum stack ending there, so an in-block query
/// is one mask and one ctz. A sparse table covers block minima only, which is
/// (n / 64) log n words.
class RangeMin {
public:
    RangeMin() = default;
    explicit RangeMin(std::vector<std::int32_t> values);

    /// min(values[a..b]), inclusive, a <= b.
    std::int32_t min(std::size_t a, std::size_t b) const noexcept;

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const std::int32_t> values() const noexcept { return values_; }

    /// Number of 32-bit cells held (masks count as two).
    std::size_t cell_count() const noexcept;

private:
    static constexpr std::size_t kBlock = 64;

    std::int32_t in_block(std::size_t a, std::size_t b) const noexcept;

    std::vector<std::int32_t> values_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::vector<std::int32_t>> table_;  // table_[k][b] = min of blocks b..b+2^k-1
};

}  // namespace elspal
