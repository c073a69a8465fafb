#pragma once

// Brute-force references shared by the test programs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elspal/counters.hpp"
#include "elspal/group_index.hpp"
#include "elspal/palindromes.hpp"

namespace brute {

inline std::string reversed(std::string_view s) { return std::string(s.rbegin(), s.rend()); }

inline std::int32_t lcp(std::string_view a, std::string_view b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<std::int32_t>(k);
}

/// rev(T[1..p]) for 1-based p.
inline std::string rev_prefix(std::string_view t, std::int32_t p) {
    return reversed(t.substr(0, static_cast<std::size_t>(p)));
}

inline std::string materialize(std::string_view t, const elspal::SplicedSuffix& z) {
    std::string out(z.block);
    if (z.tail <= static_cast<std::int32_t>(t.size())) out += t.substr(static_cast<std::size_t>(z.tail - 1));
    return out;
}

/// Lengths of all maximal palindromes ending at i (1-based), increasing.
inline std::vector<std::int32_t> maximal_ending_at(std::string_view t, std::int32_t i) {
    const auto n = static_cast<std::int32_t>(t.size());
    std::vector<std::int32_t> out;
    for (std::int32_t s = 1; s <= i; ++s) {
        const auto b = i - s + 1;
        const auto piece = t.substr(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(s));
        if (piece != reversed(piece)) continue;
        if (b > 1 && i < n && t[static_cast<std::size_t>(b - 2)] == t[static_cast<std::size_t>(i)]) continue;
        out.push_back(s);
    }
    return out;
}

/// Border lengths of s (proper, non-empty).
inline std::vector<std::int32_t> borders(std::string_view s) {
    std::vector<std::int32_t> out;
    for (std::size_t b = 1; b < s.size(); ++b) {
        if (s.substr(0, b) == s.substr(s.size() - b)) out.push_back(static_cast<std::int32_t>(b));
    }
    return out;
}

/// R_i[slot]: differences d_r whose seed (the first d_r characters of W_r) is
/// a prefix of the string at `slot`, including the root value 0.
inline std::vector<std::int32_t> r_set(std::string_view t, const elspal::GroupIndex::PositionView& v,
                                       std::int32_t slot) {
    const auto w = rev_prefix(t, v.prefix_end(slot));
    std::vector<std::int32_t> out;
    for (std::int32_t r = 0; r < v.m(); ++r) {
        const auto wr = rev_prefix(t, v.prefix_end(v.slot_of_group(r)));
        const auto d = v.groups()[static_cast<std::size_t>(r)].d;
        if (lcp(w, wr) >= d) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Largest d_x > 0 in R_i[slot] with d_x <= lcp, as a 0-based group index.
inline std::optional<std::int32_t> observation7(std::string_view t, const elspal::GroupIndex::PositionView& v,
                                                std::int32_t slot, std::int32_t lcp_wz) {
    const auto w = rev_prefix(t, v.prefix_end(slot));
    std::optional<std::int32_t> best;
    for (std::int32_t r = 0; r < v.m(); ++r) {
        const auto d = v.groups()[static_cast<std::size_t>(r)].d;
        if (d == 0 || d > lcp_wz) continue;
        const auto wr = rev_prefix(t, v.prefix_end(v.slot_of_group(r)));
        if (lcp(w, wr) >= d && (!best || d > v.groups()[static_cast<std::size_t>(*best)].d)) best = r;
    }
    return best;
}

}  // namespace brute
