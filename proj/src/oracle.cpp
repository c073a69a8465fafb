#include "elspal/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace elspal {

OracleAnswer naive_lspal(std::string_view text) {
    OracleAnswer out;
    const auto n = static_cast<std::int32_t>(text.size());
    if (n == 0) return out;
    // Interleave separators so every center is a character of s.
    std::string s(static_cast<std::size_t>(2 * n + 1), '\0');
    std::vector<char> sep(s.size(), 1);
    for (std::int32_t k = 0; k < n; ++k) {
        s[static_cast<std::size_t>(2 * k + 1)] = text[static_cast<std::size_t>(k)];
        sep[static_cast<std::size_t>(2 * k + 1)] = 0;
    }
    const auto m = static_cast<std::int32_t>(s.size());
    std::vector<std::int32_t> rad(static_cast<std::size_t>(m), 0);
    std::int32_t c = 0, r = 0;
    auto same = [&](std::int32_t a, std::int32_t b) {
        const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
        return sep[ua] == sep[ub] && (sep[ua] || s[ua] == s[ub]);
    };
    for (std::int32_t k = 0; k < m; ++k) {
        auto x = k < r ? std::min(r - k, rad[static_cast<std::size_t>(2 * c - k)]) : 0;
        while (k - x - 1 >= 0 && k + x + 1 < m && same(k - x - 1, k + x + 1)) ++x;
        rad[static_cast<std::size_t>(k)] = x;
        if (k + x > r) {
            c = k;
            r = k + x;
        }
    }
    // Position k of s is center2 = k + 1; its radius equals the palindrome length.
    out.per_center.assign(static_cast<std::size_t>(2 * n - 1), 0);
    for (std::int32_t c2 = 2; c2 <= 2 * n; ++c2) {
        const auto len = rad[static_cast<std::size_t>(c2 - 1)];
        out.per_center[static_cast<std::size_t>(c2 - 2)] = len;
        if (len > out.length) {
            out.length = len;
            out.start = (c2 - len + 1) / 2;
        }
    }
    return out;
}

std::int32_t quadratic_lspal(std::string_view text) {
    const auto n = static_cast<std::int64_t>(text.size());
    std::int64_t best = 0;
    for (std::int64_t c2 = 0; c2 <= 2 * (n - 1); ++c2) {
        auto lo = c2 / 2, hi = (c2 + 1) / 2;
        while (lo >= 0 && hi < n && text[static_cast<std::size_t>(lo)] == text[static_cast<std::size_t>(hi)]) {
            --lo;
            ++hi;
        }
        best = std::max(best, hi - lo - 1);
    }
    return static_cast<std::int32_t>(best);
}

std::string apply_edit(std::string_view text, std::int32_t i, std::int32_t j, std::string_view x) {
    const auto n = static_cast<std::int32_t>(text.size());
    if (i < 1 || i > n + 1 || j < i - 1 || j > n) throw std::out_of_range("edit interval out of range");
    std::string out;
    out.reserve(text.size() + x.size());
    out.append(text.substr(0, static_cast<std::size_t>(i - 1)));
    out.append(x);
    out.append(text.substr(static_cast<std::size_t>(j)));
    return out;
}

OracleAnswer oracle_query(std::string_view text, std::int32_t i, std::int32_t j, std::string_view x) {
    return naive_lspal(apply_edit(text, i, j, x));
}

bool is_palindrome(std::string_view s) noexcept { return std::equal(s.begin(), s.begin() + s.size() / 2, s.rbegin()); }

}  // namespace elspal
