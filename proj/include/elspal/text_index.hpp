#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elspal/rmq.hpp"

namespace elspal {

/// Longest-common-extension oracle over a static text T of length n.
///
/// Built over the integer string T $ rev(T) # with $ = 0, # = 1 and every
/// byte b mapped to b + 2. Any LCE variant is the LCP of two suffixes of that
/// string, i.e. one range-minimum over its LCP array.
///
/// Public positions are 1-based. After construction the index is immutable
/// and safe to share between threads.
///
/// mirror_of() gives the index of rev(T) without building anything new:
/// every LCE on rev(T) is an LCE on T with the operand roles swapped, so the
/// mirror shares the suffix structures and only remaps positions.
class TextIndex {
public:
    explicit TextIndex(std::string_view text);

    static TextIndex mirror_of(const TextIndex& forward);
    bool is_mirror() const noexcept { return mirrored_; }

    std::int32_t size() const noexcept { return n_; }
    std::string_view text() const noexcept { return text_; }
    /// T[i], 1-based, unchecked.
    char at(std::int32_t i) const noexcept { return text_[static_cast<std::size_t>(i - 1)]; }

    /// lcp(T[i..n], T[j..n]). i == j yields n - i + 1.
    std::int32_t right_lce(std::int32_t i, std::int32_t j) const;
    /// lcp(rev(T[1..i]), rev(T[1..j])). i == j yields i.
    std::int32_t left_lce(std::int32_t i, std::int32_t j) const;
    /// lcp(rev(T[1..i]), T[j..n]) for i < j.
    std::int32_t out_lce(std::int32_t i, std::int32_t j) const;

    // Unchecked variants used on hot paths. Empty operands are allowed and
    // yield 0: p in [0, n] names rev(T[1..p]), q in [1, n + 1] names T[q..n].
    std::int32_t rev_fwd(std::int32_t p, std::int32_t q) const noexcept;
    std::int32_t rev_rev(std::int32_t p, std::int32_t q) const noexcept;
    std::int32_t fwd_fwd(std::int32_t p, std::int32_t q) const noexcept;

    /// Rank of rev(T[1..p]) among all suffixes of the combined string, p >= 1.
    std::int32_t rev_prefix_rank(std::int32_t p) const noexcept {
        return core_->rank[static_cast<std::size_t>(rev_start(p))];
    }
    /// LCP of the suffixes ranked r1 and r2.
    std::int32_t lcp_of_ranks(std::int32_t r1, std::int32_t r2) const noexcept;

    /// Suffix structures of the combined string built from the forward text
    /// (shared with the mirror).
    std::span<const std::int32_t> combined() const noexcept { return core_->combined; }
    std::span<const std::int32_t> sa() const noexcept { return core_->sa; }
    std::span<const std::int32_t> rank() const noexcept { return core_->rank; }
    std::span<const std::int32_t> lcp() const noexcept { return core_->rmq.values(); }
    const RangeMin& rmq() const noexcept { return core_->rmq; }

    /// Cells owned by this object; a mirror owns only its text.
    std::size_t cell_count() const noexcept;

private:
    struct Core {
        std::vector<std::int32_t> combined;
        std::vector<std::int32_t> sa;
        std::vector<std::int32_t> rank;
        RangeMin rmq;
    };

    TextIndex() = default;

    // Offsets in the combined string of T[q..n] and rev(T[1..p]) for this
    // orientation. For the mirror, R[q..] = rev(T[1..n-q+1]) and
    // rev(R[1..p]) = T[n-p+1..n].
    std::int32_t fwd_start(std::int32_t q) const noexcept { return mirrored_ ? n_ + q : q - 1; }
    std::int32_t rev_start(std::int32_t p) const noexcept { return mirrored_ ? n_ - p : 2 * n_ - p + 1; }
    std::int32_t suffix_lcp(std::int32_t a, std::int32_t b) const noexcept;

    std::string text_;
    std::int32_t n_ = 0;
    bool mirrored_ = false;
    std::shared_ptr<const Core> core_;
};

}  // namespace elspal
