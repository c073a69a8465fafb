#include "elspal/palindromes.hpp"

#include <algorithm>
#include <stdexcept>

namespace elspal {

namespace {

using Vec = std::vector<std::int32_t>;

std::int32_t end_of(std::int32_t center2, std::int32_t length) noexcept { return (center2 + length - 1) / 2; }
std::int32_t start_of(std::int32_t center2, std::int32_t length) noexcept { return (center2 - length + 1) / 2; }

// prefix[k] for k in [0, n]: two-pointer over the smallest center whose
// maximal palindrome still reaches k; truncating it symmetrically gives the
// longest palindromic suffix of T[1..k].
Vec prefix_table(std::span<const std::int32_t> lengths, std::int32_t n) {
    Vec best(static_cast<std::size_t>(n) + 1, 0);
    std::int32_t c = 2;
    for (std::int32_t k = 1; k <= n; ++k) {
        while (end_of(c, lengths[static_cast<std::size_t>(c - 2)]) < k) ++c;
        best[static_cast<std::size_t>(k)] = std::max(best[static_cast<std::size_t>(k - 1)], 2 * k - c + 1);
    }
    return best;
}

// suffix[k - 1] for k in [1, n + 1].
Vec suffix_table(std::span<const std::int32_t> lengths, std::int32_t n) {
    Vec best(static_cast<std::size_t>(n) + 1, 0);
    std::int32_t c = 2 * n;
    for (std::int32_t k = n; k >= 1; --k) {
        while (start_of(c, lengths[static_cast<std::size_t>(c - 2)]) > k) --c;
        best[static_cast<std::size_t>(k - 1)] = std::max(best[static_cast<std::size_t>(k)], c - 2 * k + 1);
    }
    return best;
}

void append_groups(std::span<const std::int32_t> increasing, std::vector<Group>& out) {
    std::int32_t prev = 0;
    std::int32_t prev_diff = -1;
    for (std::size_t j = 0; j < increasing.size(); ++j) {
        const auto len = increasing[j];
        const auto diff = j == 0 ? 0 : len - prev;
        if (j > 0 && diff == prev_diff) {
            ++out.back().t;
        } else {
            out.push_back(Group{len, diff, 1});
        }
        prev = len;
        prev_diff = diff;
    }
}

}  // namespace

std::vector<std::int32_t> maximal_palindrome_lengths(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("maximal_palindrome_lengths: text must be non-empty");
    const auto n = static_cast<std::int32_t>(text.size());
    // odd[i]: radius count of odd palindromes centred at i (0-based);
    // even[i]: half-length of the even palindrome centred between i - 1 and i.
    Vec odd(static_cast<std::size_t>(n)), even(static_cast<std::size_t>(n));
    for (std::int32_t i = 0, l = 0, r = -1; i < n; ++i) {
        std::int32_t k = (i > r) ? 1 : std::min(odd[static_cast<std::size_t>(l + r - i)], r - i + 1);
        while (i - k >= 0 && i + k < n && text[static_cast<std::size_t>(i - k)] == text[static_cast<std::size_t>(i + k)]) ++k;
        odd[static_cast<std::size_t>(i)] = k--;
        if (i + k > r) {
            l = i - k;
            r = i + k;
        }
    }
    for (std::int32_t i = 0, l = 0, r = -1; i < n; ++i) {
        std::int32_t k = (i > r) ? 0 : std::min(even[static_cast<std::size_t>(l + r - i + 1)], r - i + 1);
        while (i - k - 1 >= 0 && i + k < n &&
               text[static_cast<std::size_t>(i - k - 1)] == text[static_cast<std::size_t>(i + k)]) {
            ++k;
        }
        even[static_cast<std::size_t>(i)] = k--;
        if (i + k > r) {
            l = i - k - 1;
            r = i + k;
        }
    }
    Vec lengths(static_cast<std::size_t>(2 * n - 1));
    for (std::int32_t i = 0; i < n; ++i) {
        // odd centre at 1-based position i + 1 -> center2 = 2i + 2 -> slot 2i
        lengths[static_cast<std::size_t>(2 * i)] = 2 * odd[static_cast<std::size_t>(i)] - 1;
        // even centre between 1-based i and i + 1 -> center2 = 2i + 1 -> slot 2i - 1
        if (i > 0) lengths[static_cast<std::size_t>(2 * i - 1)] = 2 * even[static_cast<std::size_t>(i)];
    }
    return lengths;
}

std::vector<MaximalPalindrome> compute_maximal_palindromes(std::string_view text) {
    const auto lengths = maximal_palindrome_lengths(text);
    std::vector<MaximalPalindrome> out;
    out.reserve(lengths.size());
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        out.push_back(MaximalPalindrome{static_cast<std::int32_t>(k) + 2, lengths[k]});
    }
    return out;
}

std::vector<Group> group_lengths(std::span<const std::int32_t> increasing) {
    std::vector<Group> out;
    append_groups(increasing, out);
    return out;
}

PalindromeSets::PalindromeSets(std::string_view text)
    : n_(static_cast<std::int32_t>(text.size())), lengths_(maximal_palindrome_lengths(text)) {
    const auto n = static_cast<std::size_t>(n_);

    // Counting sort by end (resp. begin). Walking center2 downward lists the
    // palindromes ending at a fixed position by increasing length; walking it
    // upward does the same for a fixed begin position.
    Vec end_count(n + 2, 0), begin_count(n + 2, 0);
    for (std::int32_t c = 2; c <= 2 * n_; ++c) {
        const auto len = lengths_[static_cast<std::size_t>(c - 2)];
        if (len == 0) continue;
        ++end_count[static_cast<std::size_t>(end_of(c, len)) + 1];
        ++begin_count[static_cast<std::size_t>(start_of(c, len)) + 1];
    }
    for (std::size_t i = 1; i < n + 2; ++i) {
        end_count[i] += end_count[i - 1];
        begin_count[i] += begin_count[i - 1];
    }
    Vec by_end(static_cast<std::size_t>(end_count[n + 1]));
    Vec by_begin(by_end.size());
    {
        Vec fill(end_count.begin(), end_count.end());
        for (std::int32_t c = 2 * n_; c >= 2; --c) {
            const auto len = lengths_[static_cast<std::size_t>(c - 2)];
            if (len != 0) by_end[static_cast<std::size_t>(fill[static_cast<std::size_t>(end_of(c, len))]++)] = len;
        }
        std::copy(begin_count.begin(), begin_count.end(), fill.begin());
        for (std::int32_t c = 2; c <= 2 * n_; ++c) {
            const auto len = lengths_[static_cast<std::size_t>(c - 2)];
            if (len != 0) {
                by_begin[static_cast<std::size_t>(fill[static_cast<std::size_t>(start_of(c, len))]++)] = len;
            }
        }
    }

    auto group_buckets = [n](const Vec& flat, const Vec& count, Vec& offsets, std::vector<Group>& groups) {
        offsets.assign(n + 2, 0);
        for (std::size_t i = 1; i <= n; ++i) {
            offsets[i] = static_cast<std::int32_t>(groups.size());
            const auto lo = static_cast<std::size_t>(count[i]);
            const auto hi = static_cast<std::size_t>(count[i + 1]);
            append_groups(std::span<const std::int32_t>(flat).subspan(lo, hi - lo), groups);
        }
        offsets[n + 1] = static_cast<std::int32_t>(groups.size());
        offsets[0] = 0;
    };
    group_buckets(by_end, end_count, end_offsets_, end_groups_);
    group_buckets(by_begin, begin_count, begin_offsets_, begin_groups_);

    prefix_best_ = prefix_table(lengths_, n_);
    suffix_best_ = suffix_table(lengths_, n_);
}

std::size_t PalindromeSets::cell_count() const noexcept {
    return lengths_.size() + end_offsets_.size() + begin_offsets_.size() + 3 * (end_groups_.size() + begin_groups_.size()) +
           prefix_best_.size() + suffix_best_.size();
}

std::vector<std::int32_t> longest_pal_in_every_prefix(std::string_view text) {
    const auto lengths = maximal_palindrome_lengths(text);
    auto table = prefix_table(lengths, static_cast<std::int32_t>(text.size()));
    table.erase(table.begin());
    return table;
}

std::vector<std::int32_t> longest_pal_in_every_suffix(std::string_view text) {
    const auto lengths = maximal_palindrome_lengths(text);
    auto table = suffix_table(lengths, static_cast<std::int32_t>(text.size()));
    table.pop_back();
    return table;
}

}  // namespace elspal
