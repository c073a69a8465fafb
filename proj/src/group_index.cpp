#include "elspal/group_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace elspal {

namespace {

// Slot intervals merged bottom-up; each set is a contiguous slot range whose
// current top node is `top` (>= 0 a tree node, < 0 the leaf -(slot + 1)).
struct SlotSets {
    std::vector<std::int32_t> parent, lo, hi, top;

    void reset(std::int32_t m) {
        parent.resize(static_cast<std::size_t>(m));
        lo.resize(static_cast<std::size_t>(m));
        hi.resize(static_cast<std::size_t>(m));
        top.resize(static_cast<std::size_t>(m));
        for (std::int32_t j = 0; j < m; ++j) {
            const auto k = static_cast<std::size_t>(j);
            parent[k] = j;
            lo[k] = j;
            hi[k] = j;
            top[k] = -(j + 1);
        }
    }

    std::int32_t find(std::int32_t j) {
        auto root = j;
        while (parent[static_cast<std::size_t>(root)] != root) root = parent[static_cast<std::size_t>(root)];
        while (parent[static_cast<std::size_t>(j)] != root) {
            const auto next = parent[static_cast<std::size_t>(j)];
            parent[static_cast<std::size_t>(j)] = root;
            j = next;
        }
        return root;
    }
};

}  // namespace

GroupIndex::GroupIndex(const TextIndex& text, const PalindromeSets& sets) : text_(&text), sets_(&sets) {
    const auto n = text.size();
    if (sets.size() != n) throw std::invalid_argument("GroupIndex: index and palindrome sets disagree on length");

    offset_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (std::int32_t i = 1; i <= n; ++i) {
        offset_[static_cast<std::size_t>(i) + 1] =
            offset_[static_cast<std::size_t>(i)] + static_cast<std::int32_t>(sets.by_end(i).size());
    }
    const auto total = static_cast<std::size_t>(offset_.back());

    // Slots of position i: its m reversed prefixes in rank order. The ranks
    // belong to prefixes ending at or shortly before i, so sorting the few
    // entries of each position locally stays cache-friendly.
    slot_group_.assign(total, 0);
    group_slot_.assign(total, 0);
    slot_prefix_.assign(total, 0);
    slot_lcp_.assign(total, 0);
    std::vector<std::pair<std::int32_t, std::int32_t>> order;  // (rank, group)
    for (std::int32_t i = 1; i <= n; ++i) {
        const auto groups = sets.by_end(i);
        const auto base = static_cast<std::size_t>(offset_[static_cast<std::size_t>(i)]);
        order.clear();
        for (std::size_t r = 0; r < groups.size(); ++r) {
            const auto p = r == 0 ? i : i - groups[r - 1].longest();
            order.emplace_back(text.rev_prefix_rank(p), static_cast<std::int32_t>(r));
            group_slot_[base + r] = p;  // prefix end, until the slot is known
        }
        std::sort(order.begin(), order.end());
        for (std::size_t slot = 0; slot < order.size(); ++slot) {
            const auto r = static_cast<std::size_t>(order[slot].second);
            slot_group_[base + slot] = static_cast<std::int32_t>(r);
            slot_prefix_[base + slot] = group_slot_[base + r];
        }
        for (std::size_t slot = 0; slot < order.size(); ++slot) {
            group_slot_[base + static_cast<std::size_t>(slot_group_[base + slot])] = static_cast<std::int32_t>(slot);
            slot_lcp_[base + slot] =
                slot == 0 ? 0 : text.rev_rev(slot_prefix_[base + slot - 1], slot_prefix_[base + slot]);
        }
    }

    leaf_parent_.assign(total, -1);
    node_parent_.assign(total, -1);
    node_depth_.assign(total, 0);
    node_lo_.assign(total, 0);
    node_hi_.assign(total, 0);
    height_.assign(static_cast<std::size_t>(n) + 1, 0);
    jump_offset_.assign(static_cast<std::size_t>(n) + 2, 0);

    SlotSets sets_scratch;
    std::vector<std::int32_t> levels_of(static_cast<std::size_t>(n) + 1, 0);
    for (std::int32_t i = 1; i <= n; ++i) {
        const auto groups = sets.by_end(i);
        const auto m = static_cast<std::int32_t>(groups.size());
        const auto base = offset_[static_cast<std::size_t>(i)];
        auto cell = [base](std::vector<std::int32_t>& v, std::int32_t k) -> std::int32_t& {
            return v[static_cast<std::size_t>(base + k)];
        };
        if (m == 0) continue;
        sets_scratch.reset(m);

        auto attach = [&](std::int32_t top, std::int32_t node) {
            if (top < 0) {
                cell(leaf_parent_, -top - 1) = node;
            } else {
                cell(node_parent_, top) = node;
            }
        };

        // Differences strictly increase with r, so r = m-1..0 is decreasing d.
        for (auto r = m - 1; r >= 0; --r) {
            const auto d = groups[static_cast<std::size_t>(r)].d;
            const auto own = sets_scratch.find(cell(group_slot_, r));
            attach(sets_scratch.top[static_cast<std::size_t>(own)], r);
            auto lo = sets_scratch.lo[static_cast<std::size_t>(own)];
            auto hi = sets_scratch.hi[static_cast<std::size_t>(own)];
            auto merged = own;
            while (lo > 0 && cell(slot_lcp_, lo) >= d) {
                const auto left = sets_scratch.find(lo - 1);
                attach(sets_scratch.top[static_cast<std::size_t>(left)], r);
                lo = sets_scratch.lo[static_cast<std::size_t>(left)];
                sets_scratch.parent[static_cast<std::size_t>(left)] = merged;
            }
            while (hi < m - 1 && cell(slot_lcp_, hi + 1) >= d) {
                const auto right = sets_scratch.find(hi + 1);
                attach(sets_scratch.top[static_cast<std::size_t>(right)], r);
                hi = sets_scratch.hi[static_cast<std::size_t>(right)];
                sets_scratch.parent[static_cast<std::size_t>(right)] = merged;
            }
            sets_scratch.lo[static_cast<std::size_t>(merged)] = lo;
            sets_scratch.hi[static_cast<std::size_t>(merged)] = hi;
            sets_scratch.top[static_cast<std::size_t>(merged)] = r;
            cell(node_lo_, r) = lo;
            cell(node_hi_, r) = hi;
        }

        std::int32_t height = 0;
        for (std::int32_t r = 0; r < m; ++r) {
            const auto p = cell(node_parent_, r);
            cell(node_depth_, r) = p < 0 ? 0 : cell(node_depth_, p) + 1;
            height = std::max(height, cell(node_depth_, r) + 1);
        }
        height_[static_cast<std::size_t>(i)] = height;
        levels_of[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(std::bit_width(static_cast<std::uint32_t>(height)));
    }

    for (std::int32_t i = 1; i <= n; ++i) {
        const auto m = offset_[static_cast<std::size_t>(i) + 1] - offset_[static_cast<std::size_t>(i)];
        jump_offset_[static_cast<std::size_t>(i) + 1] =
            jump_offset_[static_cast<std::size_t>(i)] + m * levels_of[static_cast<std::size_t>(i)];
    }
    jumps_.assign(static_cast<std::size_t>(jump_offset_.back()), 0);
    for (std::int32_t i = 1; i <= n; ++i) {
        const auto base = offset_[static_cast<std::size_t>(i)];
        const auto m = offset_[static_cast<std::size_t>(i) + 1] - base;
        const auto jb = jump_offset_[static_cast<std::size_t>(i)];
        const auto levels = levels_of[static_cast<std::size_t>(i)];
        for (std::int32_t r = 0; r < m; ++r) {
            const auto p = node_parent_[static_cast<std::size_t>(base + r)];
            jumps_[static_cast<std::size_t>(jb + r)] = p < 0 ? r : p;
        }
        for (std::int32_t k = 1; k < levels; ++k) {
            for (std::int32_t r = 0; r < m; ++r) {
                const auto mid = jumps_[static_cast<std::size_t>(jb + (k - 1) * m + r)];
                jumps_[static_cast<std::size_t>(jb + k * m + r)] = jumps_[static_cast<std::size_t>(jb + (k - 1) * m + mid)];
            }
        }
    }
}

GroupIndex::PositionView GroupIndex::at(std::int32_t i) const {
    if (i < 1 || i > text_->size()) throw std::out_of_range("GroupIndex::at: position out of range");
    PositionView v;
    v.owner_ = this;
    v.pos_ = i;
    v.base_ = offset_[static_cast<std::size_t>(i)];
    v.groups_ = sets_->by_end(i);
    v.jump_base_ = jump_offset_[static_cast<std::size_t>(i)];
    v.height_ = height_[static_cast<std::size_t>(i)];
    v.levels_ = v.groups_.empty() ? 0 : (jump_offset_[static_cast<std::size_t>(i) + 1] - v.jump_base_) / v.m();
    return v;
}

std::vector<std::int32_t> GroupIndex::PositionView::path_values(std::int32_t j) const {
    std::vector<std::int32_t> out;
    for (auto x = leaf_parent(j); x >= 0; x = node_parent(x)) out.push_back(node_value(x));
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

enum class Order { less, equal, greater };

struct Extension {
    std::int32_t lcp;
    Order order;  // of W relative to Z
};

// lcp(rev(T[1..p]), Z) and the order of the two, continuing from a known
// common prefix of length k.
Extension extend_against(const TextIndex& text, std::int32_t p, const SplicedSuffix& z, std::int32_t k,
                         OpCounters& counters) {
    const auto block = static_cast<std::int32_t>(z.block.size());
    const auto n = text.size();
    while (k < block) {
        if (k >= p) return {k, Order::less};
        const auto a = static_cast<unsigned char>(text.at(p - k));
        const auto b = static_cast<unsigned char>(z.block[static_cast<std::size_t>(k)]);
        if (a != b) {
            ++counters.mismatches;
            return {k, a < b ? Order::less : Order::greater};
        }
        ++counters.matches;
        ++k;
    }
    auto q = z.tail + (k - block);
    ++counters.lce;
    k += text.rev_fwd(p - k, q);
    q = z.tail + (k - block);
    const bool w_done = k >= p;
    const bool z_done = q > n;
    if (w_done && z_done) return {k, Order::equal};
    if (w_done) return {k, Order::less};
    if (z_done) return {k, Order::greater};
    ++counters.mismatches;
    const auto a = static_cast<unsigned char>(text.at(p - k));
    const auto b = static_cast<unsigned char>(text.at(q));
    return {k, a < b ? Order::less : Order::greater};
}

}  // namespace

WMatch GroupIndex::find_w(std::int32_t i, const SplicedSuffix& z, OpCounters& counters) const {
    const auto view = at(i);
    const auto m = view.m();
    if (m == 0) throw std::invalid_argument("find_w: no groups end at this position");

    // Invariant: W[lo] < Z < W[hi] with lo = -1 and hi = m as virtual bounds.
    std::int32_t lo = -1, hi = m;
    std::int32_t lcp_lo = 0, lcp_hi = 0;
    while (hi - lo > 1) {
        const auto mid = lo + (hi - lo) / 2;
        ++counters.probes;
        const auto pm = view.prefix_end(mid);
        std::int32_t start;
        if (lcp_lo >= lcp_hi) {
            std::int32_t x = 0;
            if (lo >= 0) {
                ++counters.lce;
                x = text_->rev_rev(view.prefix_end(lo), pm);
            }
            if (x > lcp_lo) {
                lo = mid;
                continue;
            }
            if (x < lcp_lo) {
                hi = mid;
                lcp_hi = x;
                continue;
            }
            start = lcp_lo;
        } else {
            std::int32_t x = 0;
            if (hi < m) {
                ++counters.lce;
                x = text_->rev_rev(view.prefix_end(hi), pm);
            }
            if (x > lcp_hi) {
                hi = mid;
                continue;
            }
            if (x < lcp_hi) {
                lo = mid;
                lcp_lo = x;
                continue;
            }
            start = lcp_hi;
        }
        const auto ext = extend_against(*text_, pm, z, start, counters);
        if (ext.order == Order::equal) return {mid, ext.lcp};
        if (ext.order == Order::less) {
            lo = mid;
            lcp_lo = ext.lcp;
        } else {
            hi = mid;
            lcp_hi = ext.lcp;
        }
    }
    if (lo < 0) return {hi, lcp_hi};
    if (hi >= m) return {lo, lcp_lo};
    return lcp_lo >= lcp_hi ? WMatch{lo, lcp_lo} : WMatch{hi, lcp_hi};
}

std::optional<std::int32_t> GroupIndex::find_g_k(std::int32_t i, std::int32_t slot, std::int32_t lcp,
                                                 OpCounters& counters) const {
    const auto view = at(i);
    if (slot < 0 || slot >= view.m()) throw std::out_of_range("find_g_k: slot out of range");
    auto x = view.leaf_parent(slot);
    ++counters.probes;
    if (view.node_value(x) > lcp) {
        // Climb to the shallowest ancestor still above lcp, then step to its parent.
        for (auto k = view.jump_levels() - 1; k >= 0; --k) {
            const auto y = view.jump(k, x);
            ++counters.probes;
            if (view.node_value(y) > lcp) x = y;
        }
        x = view.node_parent(x);
    }
    if (x < 0 || view.node_value(x) == 0) return std::nullopt;
    return x;
}

std::optional<std::int32_t> GroupIndex::find_g_k_walk(std::int32_t i, std::int32_t slot, std::int32_t lcp) const {
    const auto view = at(i);
    if (slot < 0 || slot >= view.m()) throw std::out_of_range("find_g_k_walk: slot out of range");
    auto x = view.leaf_parent(slot);
    while (x >= 0 && view.node_value(x) > lcp) x = view.node_parent(x);
    if (x < 0 || view.node_value(x) == 0) return std::nullopt;
    return x;
}

std::size_t GroupIndex::cell_count() const noexcept {
    return offset_.size() + jump_offset_.size() + height_.size() + slot_group_.size() + group_slot_.size() +
           slot_prefix_.size() + slot_lcp_.size() + leaf_parent_.size() + node_parent_.size() + node_depth_.size() +
           node_lo_.size() + node_hi_.size() + jumps_.size();
}

}  // namespace elspal
