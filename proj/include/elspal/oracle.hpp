#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace elspal {

struct OracleAnswer {
    std::int32_t length = 0;
    std::int32_t start = 0;  // 1-based witness start; 0 when the text is empty
    /// Maximal palindrome length per center2 in [2, 2n] (entry c - 2).
    std::vector<std::int32_t> per_center;
};

/// Longest palindromic substring by a standalone Manacher run.
OracleAnswer naive_lspal(std::string_view text);

/// Longest palindromic substring length by expanding around every center.
std::int32_t quadratic_lspal(std::string_view text);

/// T[1..i-1] X T[j+1..n].
std::string apply_edit(std::string_view text, std::int32_t i, std::int32_t j, std::string_view x);

/// naive_lspal of the materialised edited text.
OracleAnswer oracle_query(std::string_view text, std::int32_t i, std::int32_t j, std::string_view x);

bool is_palindrome(std::string_view s) noexcept;

}  // namespace elspal
