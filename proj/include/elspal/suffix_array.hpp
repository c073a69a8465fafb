#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace elspal {

/// Suffix array of `s` by induced sorting (SA-IS). Symbols must lie in
/// [0, upper]. No terminator is required.
std::vector<std::int32_t> build_suffix_array(std::span<const std::int32_t> s, std::int32_t upper);

/// LCP array by the permuted-LCP (Phi) method: lcp[r] = lcp(suffix sa[r-1],
/// suffix sa[r]), lcp[0] = 0. Linear time; scans the text in order.
std::vector<std::int32_t> build_lcp_array(std::span<const std::int32_t> s, std::span<const std::int32_t> sa);

}  // namespace elspal
