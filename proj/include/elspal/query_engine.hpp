#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elspal/counters.hpp"
#include "elspal/group_index.hpp"
#include "elspal/palindromes.hpp"
#include "elspal/text_index.hpp"

namespace elspal {

/// All structures for one orientation of the text.
struct SideIndex {
    explicit SideIndex(TextIndex index) : text(std::move(index)), sets(text.text()), groups(text, sets) {}

    SideIndex(const SideIndex&) = delete;
    SideIndex& operator=(const SideIndex&) = delete;

    TextIndex text;
    PalindromeSets sets;
    GroupIndex groups;

    std::size_t cell_count() const noexcept { return text.cell_count() + sets.cell_count() + groups.cell_count(); }
};

enum class EditCase { identical, case1, case2 };

/// A block edit T' = T[1..ib-1] X T[ie+1..n] in normalised form.
struct EditContext {
    std::int32_t n = 0;           // |T|
    std::int32_t ib = 1;          // first replaced position
    std::int32_t ie = 0;          // last replaced position; ie = ib - 1 is an insertion
    std::string_view x;           // replacement block
    std::int32_t ell = 0;         // |X|
    std::int32_t ell_replaced = 0;  // ie - ib + 1
    std::int32_t j1 = 0;          // lcp(T[ib..n], X T[ie+1..n])
    std::int32_t j2 = 0;          // lcp(rev(T[1..ie]), rev(T[1..ib-1] X))
    std::int32_t pb = 1;          // ib + j1: first position where T and T' differ
    std::int32_t pe = 0;          // ie - j2: T[pe+1..n] is a common suffix
    std::int32_t h = 1;           // first mismatch from the left (= pb)
    std::int32_t l = 1;           // first mismatch from the right in the reversals (= n + 1 - pe)
    EditCase kind = EditCase::case1;
    std::int32_t new_size = 0;    // |T'|
    SplicedSuffix z;              // T'[h..] as X-part plus a T suffix

    /// Last position of the changed middle in T' coordinates.
    std::int32_t pe_new() const noexcept { return pe + ell - ell_replaced; }
    /// T'[q], 1-based.
    char edited_at(std::string_view text, std::int32_t q) const noexcept;
};

/// A palindrome of T' found by one candidate family; start is 1-based in T'.
struct Candidate {
    std::int32_t length = 0;
    std::int32_t start = 0;
};

struct Witness {
    std::int32_t start = 0;  // 1-based in T'
    std::int32_t length = 0;
};

struct QueryStats {
    OpCounters normalize;
    OpCounters end_side;
    OpCounters begin_side;
    OpCounters block;
    std::int32_t end_m = 0;  // groups at the end-side anchor
    std::int32_t begin_m = 0;
    std::int32_t end_height = 0;  // tree height at the end-side anchor
    std::int32_t begin_height = 0;
    bool end_fast = false;  // fast path (find_w + find_g_k) taken
    bool begin_fast = false;

    OpCounters total() const noexcept {
        OpCounters t = normalize;
        t += end_side;
        t += begin_side;
        t += block;
        return t;
    }
};

struct QueryAnswer {
    std::int32_t length = 0;
    std::optional<Witness> witness;
    QueryStats stats;
};

struct QueryOptions {
    bool witness = false;
    /// Evaluate every group with the closed form instead of only G_m, G_{m-1}, G'_k.
    bool paranoid = false;
    /// Positions with at most this many groups skip find_w / find_g_k.
    std::int32_t small_m = 3;
};

/// Extensions of palindromes ending at `anchor` in T, against the edited
/// suffix Z that follows them in T'.
///
/// Palindromes may be supplied in any order. The scan remembers the last
/// palindrome that extended (tau) and reuses it through a leftward LCE, so
/// each X offset takes part in at most one matching character comparison.
class ExtensionScanner {
public:
    ExtensionScanner(const TextIndex& text, std::int32_t anchor, const SplicedSuffix& z, OpCounters& counters)
        : text_(text), anchor_(anchor), z_(z), counters_(counters) {}

    /// lcp(rev(T[1..anchor - s]), Z).
    std::int32_t extension(std::int32_t s);

    /// Start from a known lcp(rev(T[1..prefix_end]), Z), e.g. the one found by find_w.
    void seed(std::int32_t prefix_end, std::int32_t lcp) noexcept {
        if (lcp > tau_) {
            tau_ = lcp;
            tau_len_ = anchor_ - prefix_end;
        }
    }

private:
    std::int32_t extend_from(std::int32_t p, std::int32_t k);

    const TextIndex& text_;
    std::int32_t anchor_;
    SplicedSuffix z_;
    OpCounters& counters_;
    std::int32_t tau_ = 0;
    std::int32_t tau_len_ = 0;
};

/// Extensions of palindromes (lengths `candidates`, ending at `anchor`) in T'.
std::vector<std::int32_t> batched_extension_scan(const TextIndex& text, std::int32_t anchor,
                                                 const SplicedSuffix& z, std::span<const std::int32_t> candidates,
                                                 OpCounters& counters);

/// Inputs for the closed-form best member of one group.
struct GroupExtensionParams {
    Group group;
    std::int32_t alpha = 0;  // extension of the shortest member
    std::int32_t beta = 0;   // extension of the longest member
    std::optional<std::int32_t> h;  // 1-based member with s_h + alpha = s_t + beta
    std::int32_t gamma = 0;  // extension of s_h
};

struct GroupBest {
    std::int32_t member = 1;  // 1-based j*
    std::int32_t length = 0;  // Ext(s_{j*})
};

/// Ext(s_j) = s_j + 2 min(alpha, beta + (t - j) d) for j != h, Ext(s_h) = s_h + 2 gamma.
GroupBest best_in_group(const GroupExtensionParams& params);

/// Member index h with s_h + alpha = s_t + beta, if any.
std::optional<std::int32_t> crossover_member(const Group& g, std::int32_t alpha, std::int32_t beta);

/// Preprocessed text answering longest-palindrome-after-block-edit queries.
class Elspal {
public:
    explicit Elspal(std::string_view text);

    std::int32_t size() const noexcept { return forward_->text.size(); }
    std::string_view text() const noexcept { return forward_->text.text(); }
    const SideIndex& forward() const noexcept { return *forward_; }
    const SideIndex& mirrored() const noexcept { return *mirrored_; }
    std::size_t cell_count() const noexcept { return forward_->cell_count() + mirrored_->cell_count(); }

    /// Longest palindromic substring length of T[1..i-1] X T[j+1..n].
    /// Valid intervals: 1 <= i <= n + 1, i - 1 <= j <= n.
    QueryAnswer query(std::int32_t i, std::int32_t j, std::string_view x, const QueryOptions& options = {}) const;

    EditContext normalize_edit(std::int32_t i, std::int32_t j, std::string_view x) const;
    EditContext normalize_edit(std::int32_t i, std::int32_t j, std::string_view x, OpCounters& counters) const;

    /// Palindromes of T ending at h - 1, extended into T'.
    Candidate extended_candidate_end(const EditContext& edit, const QueryOptions& options, OpCounters& counters,
                                     QueryStats* stats = nullptr) const;
    /// Palindromes of T beginning at pe + 1, extended into T'.
    Candidate extended_candidate_begin(const EditContext& edit, const QueryOptions& options, OpCounters& counters,
                                       QueryStats* stats = nullptr) const;
    /// Palindromes lying wholly in T'[1..h-1] or in the common suffix.
    Candidate unchanged_shortened_candidate(const EditContext& edit) const;
    /// Palindromes centred in the changed middle, including its two junctions.
    /// `paranoid` extends every window-filling palindrome with its own LCE.
    Candidate block_center_candidate(const EditContext& edit, OpCounters& counters, bool paranoid = false) const;

private:
    struct SideResult {
        Candidate best;
        std::int32_t m = 0;
        std::int32_t height = 0;
        bool fast = false;
    };
    SideResult extended_on_side(const SideIndex& side, std::int32_t anchor, const SplicedSuffix& z,
                                const QueryOptions& options, OpCounters& counters) const;

    std::unique_ptr<SideIndex> forward_;
    std::unique_ptr<SideIndex> mirrored_;
};

}  // namespace elspal
