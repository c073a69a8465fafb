#include "elspal/suffix_array.hpp"

#include <algorithm>

namespace elspal {

namespace {

using Vec = std::vector<std::int32_t>;

Vec sa_is(std::span<const std::int32_t> s, std::int32_t upper) {
    const auto n = static_cast<std::int32_t>(s.size());
    if (n == 0) return {};
    if (n == 1) return {0};
    if (n == 2) return s[0] < s[1] ? Vec{0, 1} : Vec{1, 0};

    Vec sa(n);
    // is_s[i]: suffix i is S-type (smaller than suffix i+1).
    std::vector<bool> is_s(n, false);
    for (std::int32_t i = n - 2; i >= 0; --i) {
        is_s[i] = (s[i] == s[i + 1]) ? is_s[i + 1] : (s[i] < s[i + 1]);
    }

    // Bucket heads: L-type suffixes of symbol c start at sum_l[c], S-type at sum_s[c].
    Vec sum_l(upper + 2, 0), sum_s(upper + 2, 0);
    for (std::int32_t i = 0; i < n; ++i) {
        if (!is_s[i]) {
            ++sum_s[s[i]];
        } else {
            ++sum_l[s[i] + 1];
        }
    }
    for (std::int32_t c = 0; c <= upper; ++c) {
        sum_s[c] += sum_l[c];
        if (c < upper) sum_l[c + 1] += sum_s[c];
    }

    auto induce = [&](const Vec& lms) {
        std::fill(sa.begin(), sa.end(), -1);
        Vec buf(sum_s.begin(), sum_s.end());
        for (auto d : lms) {
            if (d == n) continue;
            sa[buf[s[d]]++] = d;
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        sa[buf[s[n - 1]]++] = n - 1;
        for (std::int32_t i = 0; i < n; ++i) {
            const auto v = sa[i];
            if (v >= 1 && !is_s[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        for (std::int32_t i = n - 1; i >= 0; --i) {
            const auto v = sa[i];
            if (v >= 1 && is_s[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
        }
    };

    Vec lms_map(n + 1, -1);
    Vec lms;
    for (std::int32_t i = 1; i < n; ++i) {
        if (!is_s[i - 1] && is_s[i]) {
            lms_map[i] = static_cast<std::int32_t>(lms.size());
            lms.push_back(i);
        }
    }
    const auto m = static_cast<std::int32_t>(lms.size());
    induce(lms);
    if (m == 0) return sa;

    Vec sorted_lms;
    sorted_lms.reserve(m);
    for (auto v : sa) {
        if (lms_map[v] != -1) sorted_lms.push_back(v);
    }

    // Name LMS substrings; equal substrings share a name.
    Vec reduced(m);
    std::int32_t reduced_upper = 0;
    reduced[lms_map[sorted_lms[0]]] = 0;
    for (std::int32_t k = 1; k < m; ++k) {
        auto l = sorted_lms[k - 1];
        auto r = sorted_lms[k];
        const auto end_l = (lms_map[l] + 1 < m) ? lms[lms_map[l] + 1] : n;
        const auto end_r = (lms_map[r] + 1 < m) ? lms[lms_map[r] + 1] : n;
        bool same = true;
        if (end_l - l != end_r - r) {
            same = false;
        } else {
            while (l < end_l && s[l] == s[r]) {
                ++l;
                ++r;
            }
            if (l == n || s[l] != s[r]) same = false;
        }
        if (!same) ++reduced_upper;
        reduced[lms_map[sorted_lms[k]]] = reduced_upper;
    }

    const auto reduced_sa = sa_is(reduced, reduced_upper);
    for (std::int32_t k = 0; k < m; ++k) sorted_lms[k] = lms[reduced_sa[k]];
    induce(sorted_lms);
    return sa;
}

}  // namespace

std::vector<std::int32_t> build_suffix_array(std::span<const std::int32_t> s, std::int32_t upper) {
    return sa_is(s, upper);
}

std::vector<std::int32_t> build_lcp_array(std::span<const std::int32_t> s, std::span<const std::int32_t> sa) {
    const auto n = static_cast<std::int32_t>(s.size());
    if (n == 0) return {};
    // phi[i]: the suffix ranked just before suffix i; plcp[i]: their lcp.
    Vec phi(static_cast<std::size_t>(n));
    phi[static_cast<std::size_t>(sa[0])] = -1;
    for (std::int32_t r = 1; r < n; ++r) phi[static_cast<std::size_t>(sa[r])] = sa[r - 1];
    Vec& plcp = phi;
    std::int32_t k = 0;
    for (std::int32_t i = 0; i < n; ++i) {
        const auto j = phi[static_cast<std::size_t>(i)];
        if (j < 0) {
            k = 0;
            plcp[static_cast<std::size_t>(i)] = 0;
            continue;
        }
        while (i + k < n && j + k < n && s[i + k] == s[j + k]) ++k;
        plcp[static_cast<std::size_t>(i)] = k;
        if (k > 0) --k;
    }
    Vec lcp(static_cast<std::size_t>(n));
    for (std::int32_t r = 0; r < n; ++r) lcp[static_cast<std::size_t>(r)] = plcp[static_cast<std::size_t>(sa[r])];
    lcp[0] = 0;
    return lcp;
}

}  // namespace elspal
