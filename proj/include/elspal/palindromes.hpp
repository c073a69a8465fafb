#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace elspal {

/// The maximal palindrome at one center. `center2` is twice the center, so
/// center2 = start + end for a non-empty palindrome T[start..end] (1-based).
struct MaximalPalindrome {
    std::int32_t center2 = 0;
    std::int32_t length = 0;

    std::int32_t start() const noexcept { return (center2 - length + 1) / 2; }
    std::int32_t end() const noexcept { return (center2 + length - 1) / 2; }

    friend bool operator==(const MaximalPalindrome&, const MaximalPalindrome&) = default;
};

/// Manacher. Entry c - 2 holds the length of the maximal palindrome with
/// center2 = c, for c in [2, 2n]; odd c give even (possibly zero) lengths.
std::vector<std::int32_t> maximal_palindrome_lengths(std::string_view text);

/// All 2n - 1 maximal palindromes ordered by center.
std::vector<MaximalPalindrome> compute_maximal_palindromes(std::string_view text);

/// Arithmetic progression <s, d, t> of palindrome lengths sharing one end
/// (or one begin) position.
struct Group {
    std::int32_t s = 0;
    std::int32_t d = 0;
    std::int32_t t = 0;

    /// s(j) = s + (j - 1) d for 1 <= j <= t.
    std::int32_t member(std::int32_t j) const noexcept { return s + (j - 1) * d; }
    std::int32_t shortest() const noexcept { return s; }
    std::int32_t longest() const noexcept { return s + (t - 1) * d; }
    bool contains(std::int32_t len) const noexcept {
        if (len < s || len > longest()) return false;
        return d == 0 ? len == s : (len - s) % d == 0;
    }

    friend bool operator==(const Group&, const Group&) = default;
};

/// Split increasing lengths into maximal runs of equal difference-to-previous
/// (the first length has difference 0, so it always forms its own group).
std::vector<Group> group_lengths(std::span<const std::int32_t> increasing);

/// Maximal palindromes bucketed by end and by begin position and grouped into
/// arithmetic progressions, plus longest-palindrome-in-prefix/suffix tables.
class PalindromeSets {
public:
    explicit PalindromeSets(std::string_view text);

    std::int32_t size() const noexcept { return n_; }

    /// Groups G_1..G_m of MaxPalE(i), common differences strictly increasing.
    std::span<const Group> by_end(std::int32_t i) const noexcept { return bucket(end_offsets_, end_groups_, i); }
    /// Groups of MaxPalB(i).
    std::span<const Group> by_begin(std::int32_t i) const noexcept {
        return bucket(begin_offsets_, begin_groups_, i);
    }

    /// Length of the maximal palindrome with the given center2 in [2, 2n].
    std::int32_t length_at(std::int32_t center2) const noexcept {
        return lengths_[static_cast<std::size_t>(center2 - 2)];
    }
    std::span<const std::int32_t> lengths() const noexcept { return lengths_; }

    /// Longest palindrome inside T[1..k], k in [0, n].
    std::int32_t longest_prefix_pal(std::int32_t k) const noexcept { return prefix_best_[static_cast<std::size_t>(k)]; }
    /// Longest palindrome inside T[k..n], k in [1, n + 1].
    std::int32_t longest_suffix_pal(std::int32_t k) const noexcept {
        return suffix_best_[static_cast<std::size_t>(k - 1)];
    }
    std::span<const std::int32_t> longest_prefix_table() const noexcept { return prefix_best_; }
    std::span<const std::int32_t> longest_suffix_table() const noexcept { return suffix_best_; }

    std::int32_t longest() const noexcept { return prefix_best_.back(); }
    std::size_t total_end_groups() const noexcept { return end_groups_.size(); }
    std::size_t cell_count() const noexcept;

private:
    static std::span<const Group> bucket(const std::vector<std::int32_t>& offsets, const std::vector<Group>& groups,
                                         std::int32_t i) noexcept {
        const auto lo = static_cast<std::size_t>(offsets[static_cast<std::size_t>(i)]);
        const auto hi = static_cast<std::size_t>(offsets[static_cast<std::size_t>(i) + 1]);
        return std::span<const Group>(groups).subspan(lo, hi - lo);
    }

    std::int32_t n_ = 0;
    std::vector<std::int32_t> lengths_;
    std::vector<std::int32_t> end_offsets_;  // n + 2 entries, index 0 unused
    std::vector<Group> end_groups_;
    std::vector<std::int32_t> begin_offsets_;
    std::vector<Group> begin_groups_;
    std::vector<std::int32_t> prefix_best_;  // n + 1 entries
    std::vector<std::int32_t> suffix_best_;  // n + 1 entries
};

/// Entry k - 1 = longest palindrome fully inside T[1..k].
std::vector<std::int32_t> longest_pal_in_every_prefix(std::string_view text);
/// Entry k - 1 = longest palindrome fully inside T[k..n].
std::vector<std::int32_t> longest_pal_in_every_suffix(std::string_view text);

}  // namespace elspal
