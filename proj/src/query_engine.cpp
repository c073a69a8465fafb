#include "elspal/query_engine.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>

namespace elspal {

namespace {

std::int32_t end_of(std::int32_t center2, std::int32_t length) noexcept { return (center2 + length - 1) / 2; }
std::int32_t start_of(std::int32_t center2, std::int32_t length) noexcept { return (center2 - length + 1) / 2; }

// T'[h..] for an edit with the given j1/j2, as X[from..to) followed by T[tail..].
// The trailing min(j2, ...) characters of the X-part equal T just before
// ie + 1, so they are folded into the tail.
SplicedSuffix make_z(std::string_view x, std::int32_t ie, std::int32_t j1, std::int32_t j2) {
    const auto ell = static_cast<std::int32_t>(x.size());
    if (j1 >= ell) return SplicedSuffix{std::string_view{}, ie + 1 + (j1 - ell)};
    const auto len = ell - j1;
    const auto trim = std::min(j2, len);
    return SplicedSuffix{x.substr(static_cast<std::size_t>(j1), static_cast<std::size_t>(len - trim)), ie + 1 - trim};
}

void check_group(const Group& g) {
    if (g.t < 1) throw std::invalid_argument("group must have at least one member");
    if (g.d < 0) throw std::invalid_argument("group difference must be non-negative");
    if (g.t >= 2 && g.d == 0) throw std::invalid_argument("group with two or more members needs d >= 1");
}

// Smallest k in [lo, hi] with table[k] == value, for a non-decreasing table.
std::int32_t first_reaching(std::span<const std::int32_t> table, std::int32_t lo, std::int32_t hi, std::int32_t value) {
    const auto begin = table.begin() + lo;
    const auto end = table.begin() + hi + 1;
    return static_cast<std::int32_t>(std::lower_bound(begin, end, value) - table.begin());
}

}  // namespace

char EditContext::edited_at(std::string_view text, std::int32_t q) const noexcept {
    if (q < ib) return text[static_cast<std::size_t>(q - 1)];
    if (q < ib + ell) return x[static_cast<std::size_t>(q - ib)];
    return text[static_cast<std::size_t>(q - ell + ell_replaced - 1)];
}

// ---------------------------------------------------------------------------
// Batched extension scan

std::int32_t ExtensionScanner::extend_from(std::int32_t p, std::int32_t k) {
    const auto block = static_cast<std::int32_t>(z_.block.size());
    while (k < block) {
        if (k >= p) return k;
        if (text_.at(p - k) != z_.block[static_cast<std::size_t>(k)]) {
            ++counters_.mismatches;
            return k;
        }
        ++counters_.matches;
        ++k;
    }
    ++counters_.lce;
    return k + text_.rev_fwd(p - k, z_.tail + (k - block));
}

std::int32_t ExtensionScanner::extension(std::int32_t s) {
    const auto p = anchor_ - s;
    if (p <= 0) return 0;
    if (tau_ == 0) {
        const auto lambda = extend_from(p, 0);
        if (lambda > 0) {
            tau_ = lambda;
            tau_len_ = s;
        }
        return lambda;
    }
    ++counters_.lce;
    const auto delta = text_.rev_rev(p, anchor_ - tau_len_);
    if (delta < tau_) return delta;
    if (delta > tau_) return tau_;
    const auto lambda = extend_from(p, tau_);
    tau_ = lambda;
    tau_len_ = s;
    return lambda;
}

std::vector<std::int32_t> batched_extension_scan(const TextIndex& text, std::int32_t anchor,
                                                 const SplicedSuffix& z, std::span<const std::int32_t> candidates,
                                                 OpCounters& counters) {
    ExtensionScanner scan(text, anchor, z, counters);
    std::vector<std::int32_t> out;
    out.reserve(candidates.size());
    for (auto s : candidates) out.push_back(scan.extension(s));
    return out;
}

// ---------------------------------------------------------------------------
// Closed form inside one group

std::optional<std::int32_t> crossover_member(const Group& g, std::int32_t alpha, std::int32_t beta) {
    check_group(g);
    const auto diff = alpha - beta;
    if (g.t == 1) return diff == 0 ? std::optional<std::int32_t>{1} : std::nullopt;
    if (diff < 0 || diff % g.d != 0) return std::nullopt;
    const auto q = diff / g.d;
    if (q > g.t - 1) return std::nullopt;
    return g.t - q;
}

GroupBest best_in_group(const GroupExtensionParams& params) {
    const auto& g = params.group;
    check_group(g);
    if (params.alpha < 0 || params.beta < 0 || params.gamma < 0) {
        throw std::invalid_argument("extensions must be non-negative");
    }
    if (params.h && (*params.h < 1 || *params.h > g.t)) throw std::invalid_argument("crossover member out of range");
    if (g.t == 1) return GroupBest{1, g.s + 2 * params.beta};

    // The end members are known exactly; the closed form is only needed in
    // between (it can undercount them when a member is maximal because it
    // touches the text boundary rather than by a mismatch).
    auto closed_form = [&](std::int32_t j) {
        if (j == 1) return g.s + 2 * params.alpha;
        if (j == g.t) return g.longest() + 2 * params.beta;
        return g.member(j) + 2 * std::min(params.alpha, params.beta + (g.t - j) * g.d);
    };
    // s_j + 2 min(alpha, beta + (t - j) d) rises while the alpha term binds
    // and falls after, so the maximum sits next to j = t - (alpha - beta) / d.
    std::array<std::int32_t, 4> probe{1, g.t, g.t, g.t};
    if (params.alpha >= params.beta) {
        const auto steps = (params.alpha - params.beta + g.d - 1) / g.d;
        probe[2] = std::clamp(g.t - steps, 1, g.t);
        probe[3] = std::clamp(g.t - steps + 1, 1, g.t);
    }
    GroupBest best{0, -1};
    for (auto j : probe) {
        if (params.h && j == *params.h) continue;
        const auto len = closed_form(j);
        if (len > best.length) best = GroupBest{j, len};
    }
    if (params.h) {
        const auto len = g.member(*params.h) + 2 * params.gamma;
        if (len >= best.length) best = GroupBest{*params.h, len};
    }
    return best;
}

// ---------------------------------------------------------------------------
// Engine

Elspal::Elspal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Elspal: text must be non-empty");
    forward_ = std::make_unique<SideIndex>(TextIndex(text));
    mirrored_ = std::make_unique<SideIndex>(TextIndex::mirror_of(forward_->text));
}

EditContext Elspal::normalize_edit(std::int32_t i, std::int32_t j, std::string_view x) const {
    OpCounters scratch;
    return normalize_edit(i, j, x, scratch);
}

EditContext Elspal::normalize_edit(std::int32_t i, std::int32_t j, std::string_view x, OpCounters& counters) const {
    const auto& t = forward_->text;
    const auto n = t.size();
    if (i < 1 || i > n + 1 || j < i - 1 || j > n) {
        throw std::out_of_range("edit interval [" + std::to_string(i) + ", " + std::to_string(j) +
                                "] is invalid for a text of length " + std::to_string(n));
    }
    if (x.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max() / 4)) {
        throw std::length_error("replacement block too long");
    }
    EditContext e;
    e.n = n;
    e.ib = i;
    e.ie = j;
    e.x = x;
    e.ell = static_cast<std::int32_t>(x.size());
    e.ell_replaced = j - i + 1;
    e.new_size = n - e.ell_replaced + e.ell;

    // j1: naive against X, then one rightward LCE once X is exhausted.
    std::int32_t k = 0;
    while (k < e.ell && i + k <= n) {
        if (t.at(i + k) != x[static_cast<std::size_t>(k)]) {
            ++counters.mismatches;
            break;
        }
        ++counters.matches;
        ++k;
    }
    if (k == e.ell) {
        ++counters.lce;
        k += t.fwd_fwd(i + e.ell, j + 1);
    }
    e.j1 = k;

    // j2: naive only over X[j1..]; X[..j1) equals T[i..i+j1), so the rest of
    // X is one leftward LCE on T, followed by one more once X is exhausted.
    const auto known = std::min(e.j1, e.ell);
    k = 0;
    while (k < e.ell - known && j - k >= 1) {
        if (t.at(j - k) != x[static_cast<std::size_t>(e.ell - 1 - k)]) {
            ++counters.mismatches;
            break;
        }
        ++counters.matches;
        ++k;
    }
    if (k == e.ell - known && known > 0 && j - k >= 1) {
        ++counters.lce;
        k += std::min(known, t.rev_rev(j - k, i + known - 1));
    }
    if (k == e.ell) {
        ++counters.lce;
        k += t.rev_rev(j - e.ell, i - 1);
    }
    e.j2 = k;

    e.pb = e.ib + e.j1;
    e.pe = e.ie - e.j2;
    e.h = e.pb;
    e.l = n + 1 - e.pe;
    if (e.ell == e.ell_replaced && e.j1 >= n - i + 1) {
        e.kind = EditCase::identical;
    } else {
        e.kind = (e.j1 == 0 && e.j2 == 0) ? EditCase::case1 : EditCase::case2;
    }
    e.z = make_z(x, j, e.j1, e.j2);
    return e;
}

Elspal::SideResult Elspal::extended_on_side(const SideIndex& side, std::int32_t anchor, const SplicedSuffix& z,
                                            const QueryOptions& options, OpCounters& counters) const {
    SideResult result;
    if (anchor < 1) return result;
    const auto groups = side.sets.by_end(anchor);
    const auto m = static_cast<std::int32_t>(groups.size());
    result.m = m;
    if (m == 0) return result;

    ExtensionScanner scan(side.text, anchor, z, counters);
    auto offer = [&](std::int32_t s, std::int32_t ext) {
        const auto len = s + 2 * ext;
        if (len > result.best.length) result.best = Candidate{len, anchor - s + 1 - ext};
    };
    auto evaluate = [&](const Group& g) {
        ++counters.groups;
        if (g.t == 1) {
            offer(g.s, scan.extension(g.s));
            return;
        }
        GroupExtensionParams params{g, scan.extension(g.shortest()), scan.extension(g.longest()), std::nullopt, 0};
        params.h = crossover_member(g, params.alpha, params.beta);
        if (params.h) params.gamma = scan.extension(g.member(*params.h));
        const auto best = best_in_group(params);
        offer(g.member(best.member), (best.length - g.member(best.member)) / 2);
    };

    if (options.paranoid || m <= options.small_m) {
        for (const auto& g : groups) evaluate(g);
        return result;
    }

    result.fast = true;
    const auto view = side.groups.at(anchor);
    result.height = view.height();
    const auto w = side.groups.find_w(anchor, z, counters);
    const auto k = side.groups.find_g_k(anchor, w.slot, w.lcp, counters);
    scan.seed(view.prefix_end(w.slot), w.lcp);

    if (k) {
        // G'_k adds u v u and u, found among the members below S_k.
        const auto& gk = groups[static_cast<std::size_t>(*k)];
        const auto u = gk.s % gk.d;
        for (auto len : {u, u + gk.d}) {
            if (len <= 0 || gk.contains(len)) continue;
            [[maybe_unused]] const auto it = std::upper_bound(groups.begin(), groups.begin() + *k, len,
                                             [](std::int32_t v, const Group& g) { return v < g.s; });
            assert(it != groups.begin() && std::prev(it)->contains(len));
            ++counters.extras;
            offer(len, scan.extension(len));
        }
        if (*k < m - 2) evaluate(gk);
    }
    if (m >= 2) evaluate(groups[static_cast<std::size_t>(m - 2)]);
    evaluate(groups[static_cast<std::size_t>(m - 1)]);
    return result;
}

Candidate Elspal::extended_candidate_end(const EditContext& edit, const QueryOptions& options, OpCounters& counters,
                                         QueryStats* stats) const {
    const auto r = extended_on_side(*forward_, edit.h - 1, edit.z, options, counters);
    if (stats) {
        stats->end_m = r.m;
        stats->end_height = r.height;
        stats->end_fast = r.fast;
    }
    return r.best;
}

Candidate Elspal::extended_candidate_begin(const EditContext& edit, const QueryOptions& options,
                                           OpCounters& counters, QueryStats* stats) const {
    const auto n = edit.n;
    const std::string rx(edit.x.rbegin(), edit.x.rend());
    // Mirror image: rev(T') = rev(T)[1..n-ie] rev(X) rev(T)[n-ib+2..n]; the
    // roles of j1 and j2 swap.
    const auto z = make_z(rx, n + 1 - edit.ib, edit.j2, edit.j1);
    const auto r = extended_on_side(*mirrored_, n - edit.pe, z, options, counters);
    if (stats) {
        stats->begin_m = r.m;
        stats->begin_height = r.height;
        stats->begin_fast = r.fast;
    }
    Candidate out = r.best;
    if (out.length > 0) out.start = edit.new_size - (r.best.start + r.best.length - 1) + 1;
    return out;
}

Candidate Elspal::unchanged_shortened_candidate(const EditContext& edit) const {
    const auto& sets = forward_->sets;
    const auto n = edit.n;
    const auto pre_end = std::clamp(edit.h - 1, 0, n);
    const auto suf_begin = std::clamp(edit.pe + 1, 1, n + 1);
    const auto pre = sets.longest_prefix_pal(pre_end);
    const auto suf = sets.longest_suffix_pal(suf_begin);
    if (pre == 0 && suf == 0) return {};
    if (pre >= suf) {
        const auto k = first_reaching(sets.longest_prefix_table(), 0, pre_end, pre);
        return Candidate{pre, k - pre + 1};
    }
    // Non-increasing table: the last k >= suf_begin still holding `suf`.
    const auto table = sets.longest_suffix_table();
    std::int32_t lo = suf_begin, hi = n;
    while (lo < hi) {
        const auto mid = lo + (hi - lo + 1) / 2;
        if (table[static_cast<std::size_t>(mid - 1)] == suf) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return Candidate{suf, lo + edit.ell - edit.ell_replaced};
}

Candidate Elspal::block_center_candidate(const EditContext& edit, OpCounters& counters, bool paranoid) const {
    const auto n_new = edit.new_size;
    if (n_new == 0) return {};
    const auto h = edit.h;
    const auto e_new = edit.pe_new();
    const auto first = std::max(2 * h - 1, 2);
    const auto last = std::min(2 * e_new + 1, 2 * n_new);
    if (first > last) return {};

    const auto& t = forward_->text;
    const auto& sets = forward_->sets;
    const auto text = t.text();
    const auto span = std::max(0, e_new - h + 1);
    const auto wl = std::max(1, h - span - 1);
    const auto wr = std::min(n_new, e_new + span + 1);
    const auto shift = edit.ell_replaced - edit.ell;  // T' position q > e_new is T position q + shift

    // Manacher over the window T'[wl..wr]; len[c - 2 wl] is the window-maximal
    // length at center2 c. Centres left of the middle reuse T's palindromes, so
    // character comparisons only happen with the right arm at h or beyond.
    std::vector<std::int32_t> len(static_cast<std::size_t>(last - 2 * wl + 1), 0);
    std::int32_t reach = wl - 1, reach_center = 2 * wl;
    std::vector<std::int32_t> at_left, at_right;
    Candidate best;
    for (auto c = 2 * wl; c <= last; ++c) {
        std::int32_t cur = (c % 2 == 0) ? 1 : 0;
        bool exact = false;
        const auto left_clip = c - 2 * wl + 1;
        if (c <= 2 * h - 2) {
            const auto in_t = sets.length_at(c);
            if (end_of(c, in_t) <= h - 2) {
                cur = std::min(in_t, left_clip);
                exact = true;
            } else {
                cur = std::max(cur, std::min(2 * (h - 1) - c + 1, left_clip));
            }
        }
        if (!exact && 2 * reach >= c) {
            const auto mirror = len[static_cast<std::size_t>(2 * reach_center - c - 2 * wl)];
            const auto bound = 2 * reach - c + 1;
            if (mirror < bound) {
                cur = mirror;
                exact = true;
            } else {
                cur = std::max(cur, bound);
            }
        }
        if (!exact) {
            auto s = start_of(c, cur) - 1;
            auto e = end_of(c, cur) + 1;
            while (s >= wl && e <= wr) {
                if (edit.edited_at(text, s) != edit.edited_at(text, e)) {
                    ++counters.mismatches;
                    break;
                }
                ++counters.matches;
                cur += 2;
                --s;
                ++e;
            }
        }
        len[static_cast<std::size_t>(c - 2 * wl)] = cur;
        if (end_of(c, cur) > reach) {
            reach = end_of(c, cur);
            reach_center = c;
        }
        if (c < first) continue;

        const auto lo = start_of(c, cur);
        const auto hi = end_of(c, cur);
        if (cur > 0 && lo == wl && wl > 1) {
            at_left.push_back(cur);
        } else if (cur > 0 && hi == wr && wr < n_new) {
            at_right.push_back(cur);
        } else if (cur > best.length) {
            best = Candidate{cur, lo};
        }
    }

    // Palindromes filling the window up to an edge have both arms in
    // unchanged text beyond it and continue by an outward LCE on T. Those
    // sharing an edge are nested, so their lengths form a few arithmetic
    // groups and each group needs at most three LCEs.
    auto finish = [&](std::vector<std::int32_t>& lengths, auto&& ext, auto&& start) {
        std::sort(lengths.begin(), lengths.end());
        auto offer = [&](std::int32_t l, std::int32_t e) {
            if (l + 2 * e > best.length) best = Candidate{l + 2 * e, start(l, e)};
        };
        auto lce = [&](std::int32_t l) {
            ++counters.lce;
            return ext(l);
        };
        if (paranoid) {
            for (auto l : lengths) offer(l, lce(l));
            return;
        }
        for (const auto& g : group_lengths(lengths)) {
            if (g.t == 1) {
                offer(g.s, lce(g.s));
                continue;
            }
            GroupExtensionParams params{g, lce(g.shortest()), lce(g.longest()), std::nullopt, 0};
            params.h = crossover_member(g, params.alpha, params.beta);
            if (params.h) params.gamma = lce(g.member(*params.h));
            const auto b = best_in_group(params);
            const auto l = g.member(b.member);
            offer(l, (b.length - l) / 2);
        }
    };
    finish(
        at_left, [&](std::int32_t l) { return t.rev_fwd(wl - 1, wl + l + shift); },
        [&](std::int32_t, std::int32_t e) { return wl - e; });
    finish(
        at_right, [&](std::int32_t l) { return t.rev_fwd(wr - l, wr + 1 + shift); },
        [&](std::int32_t l, std::int32_t e) { return wr - l + 1 - e; });
    return best;
}

QueryAnswer Elspal::query(std::int32_t i, std::int32_t j, std::string_view x, const QueryOptions& options) const {
    QueryAnswer answer;
    auto& stats = answer.stats;
    const auto edit = normalize_edit(i, j, x, stats.normalize);
    Candidate best;

    if (edit.kind == EditCase::identical) {
        const auto& sets = forward_->sets;
        const auto len = sets.longest();
        const auto k = first_reaching(sets.longest_prefix_table(), 0, edit.n, len);
        best = Candidate{len, k - len + 1};
    } else if (edit.new_size == 0) {
        best = {};
    } else if (edit.ib == 1 && edit.ie == edit.n) {
        const auto lengths = maximal_palindrome_lengths(x);
        const auto it = std::max_element(lengths.begin(), lengths.end());
        const auto c = static_cast<std::int32_t>(it - lengths.begin()) + 2;
        best = Candidate{*it, start_of(c, *it)};
    } else {
        auto consider = [&best](const Candidate& c) {
            if (c.length > best.length) best = c;
        };
        consider(unchanged_shortened_candidate(edit));
        consider(block_center_candidate(edit, stats.block, options.paranoid));
        consider(extended_candidate_end(edit, options, stats.end_side, &stats));
        consider(extended_candidate_begin(edit, options, stats.begin_side, &stats));
    }

    answer.length = best.length;
    if (options.witness) answer.witness = Witness{best.length > 0 ? best.start : 0, best.length};
    return answer;
}

}  // namespace elspal
