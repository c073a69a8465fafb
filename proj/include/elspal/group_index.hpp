#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "elspal/counters.hpp"
#include "elspal/palindromes.hpp"
#include "elspal/text_index.hpp"

namespace elspal {

/// Result of searching a position's reversed-prefix strings for Z.
struct WMatch {
    std::int32_t slot = 0;  // sorted slot holding W
    std::int32_t lcp = 0;   // lcp(W, Z)
};

/// Per-position search structures over the groups G_1..G_m ending at i.
///
/// For group r the string W_r = rev(T[1..i - |L_{r-1}|]) (W_1 = rev(T[1..i]))
/// starts with rev(u_r v_r). The W strings are kept in lexicographic order
/// ("slots") with their adjacent LCPs, and a tree over the slots records, on
/// the path to each leaf, the differences d_r whose seed rev(u_r v_r) is a
/// prefix of that slot's string. Node r of the tree belongs to group r; group
/// 0 (d = 0) is the root.
///
/// Holds pointers to the TextIndex and PalindromeSets it was built from; both
/// must outlive it.
class GroupIndex {
public:
    GroupIndex(const TextIndex& text, const PalindromeSets& sets);

    GroupIndex(const GroupIndex&) = delete;
    GroupIndex& operator=(const GroupIndex&) = delete;

    class PositionView {
    public:
        std::int32_t position() const noexcept { return pos_; }
        std::int32_t m() const noexcept { return static_cast<std::int32_t>(groups_.size()); }
        std::span<const Group> groups() const noexcept { return groups_; }

        std::int32_t group_of_slot(std::int32_t j) const noexcept { return at(owner_->slot_group_, j); }
        std::int32_t slot_of_group(std::int32_t r) const noexcept { return at(owner_->group_slot_, r); }
        /// W at slot j is rev(T[1..prefix_end(j)]).
        std::int32_t prefix_end(std::int32_t j) const noexcept { return at(owner_->slot_prefix_, j); }
        /// lcp of the strings at slots j - 1 and j; 0 for j = 0.
        std::int32_t lcp(std::int32_t j) const noexcept { return at(owner_->slot_lcp_, j); }
        /// d of the group whose W sits at slot j.
        std::int32_t diff(std::int32_t j) const noexcept { return groups_[static_cast<std::size_t>(group_of_slot(j))].d; }

        std::int32_t leaf_parent(std::int32_t j) const noexcept { return at(owner_->leaf_parent_, j); }
        std::int32_t node_parent(std::int32_t r) const noexcept { return at(owner_->node_parent_, r); }
        std::int32_t node_depth(std::int32_t r) const noexcept { return at(owner_->node_depth_, r); }
        std::int32_t node_value(std::int32_t r) const noexcept { return groups_[static_cast<std::size_t>(r)].d; }
        /// Maximal slot interval [lo, hi] covered by node r.
        std::int32_t node_lo(std::int32_t r) const noexcept { return at(owner_->node_lo_, r); }
        std::int32_t node_hi(std::int32_t r) const noexcept { return at(owner_->node_hi_, r); }
        std::int32_t height() const noexcept { return height_; }
        std::int32_t jump_levels() const noexcept { return levels_; }
        /// Ancestor 2^k levels above node r (clamped at the root).
        std::int32_t jump(std::int32_t k, std::int32_t r) const noexcept {
            return owner_->jumps_[static_cast<std::size_t>(jump_base_ + k * m() + r)];
        }

        /// Node values from the root down to leaf j.
        std::vector<std::int32_t> path_values(std::int32_t j) const;

    private:
        friend class GroupIndex;
        std::int32_t at(const std::vector<std::int32_t>& v, std::int32_t j) const noexcept {
            return v[static_cast<std::size_t>(base_ + j)];
        }

        const GroupIndex* owner_ = nullptr;
        std::int32_t pos_ = 0;
        std::int32_t base_ = 0;
        std::int32_t jump_base_ = 0;
        std::int32_t levels_ = 0;
        std::int32_t height_ = 0;
        std::span<const Group> groups_;
    };

    PositionView at(std::int32_t i) const;

    /// Slot whose W has the longest common prefix with Z, by LCP-accelerated
    /// binary search. Matching character comparisons never revisit a block
    /// offset, so they total at most |z.block|.
    WMatch find_w(std::int32_t i, const SplicedSuffix& z, OpCounters& counters) const;

    /// Group index (0-based) of G_k: the largest d_x with rev(u_x v_x) a
    /// prefix of the W at `slot` and d_x <= lcp. Binary search on the root
    /// path through jump pointers. std::nullopt when only d = 0 qualifies.
    std::optional<std::int32_t> find_g_k(std::int32_t i, std::int32_t slot, std::int32_t lcp,
                                         OpCounters& counters) const;

    /// Same answer by walking parent pointers; for cross-checking.
    std::optional<std::int32_t> find_g_k_walk(std::int32_t i, std::int32_t slot, std::int32_t lcp) const;

    std::size_t total_slots() const noexcept { return slot_group_.size(); }
    std::size_t total_tree_nodes() const noexcept { return slot_group_.size() * 2; }
    std::size_t total_jump_pointers() const noexcept { return jumps_.size(); }
    std::size_t cell_count() const noexcept;

private:
    const TextIndex* text_;
    const PalindromeSets* sets_;

    std::vector<std::int32_t> offset_;       // n + 2
    std::vector<std::int32_t> jump_offset_;  // n + 2
    std::vector<std::int32_t> height_;       // n + 1, tree height per position
    std::vector<std::int32_t> slot_group_;
    std::vector<std::int32_t> group_slot_;
    std::vector<std::int32_t> slot_prefix_;
    std::vector<std::int32_t> slot_lcp_;
    std::vector<std::int32_t> leaf_parent_;
    std::vector<std::int32_t> node_parent_;
    std::vector<std::int32_t> node_depth_;
    std::vector<std::int32_t> node_lo_;
    std::vector<std::int32_t> node_hi_;
    std::vector<std::int32_t> jumps_;
};

}  // namespace elspal
