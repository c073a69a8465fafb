#include "elspal/text_index.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "elspal/suffix_array.hpp"

namespace elspal {

namespace {

constexpr std::int32_t kDollar = 0;
constexpr std::int32_t kHash = 1;
constexpr std::int32_t kUpper = 257;

std::int32_t symbol(char c) noexcept { return static_cast<std::int32_t>(static_cast<unsigned char>(c)) + 2; }

}  // namespace

TextIndex::TextIndex(std::string_view text) : text_(text) {
    if (text.empty()) throw std::invalid_argument("TextIndex: text must be non-empty");
    if (text.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max() / 4)) {
        throw std::length_error("TextIndex: text too long for 32-bit positions");
    }
    n_ = static_cast<std::int32_t>(text.size());
    auto core = std::make_shared<Core>();
    const auto total = static_cast<std::size_t>(2 * n_ + 2);
    auto& combined = core->combined;
    combined.reserve(total);
    for (char c : text_) combined.push_back(symbol(c));
    combined.push_back(kDollar);
    for (auto it = text_.rbegin(); it != text_.rend(); ++it) combined.push_back(symbol(*it));
    combined.push_back(kHash);

    core->sa = build_suffix_array(combined, kUpper);
    core->rank.assign(total, 0);
    for (std::size_t r = 0; r < total; ++r) core->rank[static_cast<std::size_t>(core->sa[r])] = static_cast<std::int32_t>(r);
    core->rmq = RangeMin(build_lcp_array(combined, core->sa));
    core_ = std::move(core);
}

TextIndex TextIndex::mirror_of(const TextIndex& forward) {
    TextIndex m;
    m.text_.assign(forward.text_.rbegin(), forward.text_.rend());
    m.n_ = forward.n_;
    m.mirrored_ = !forward.mirrored_;
    m.core_ = forward.core_;
    return m;
}

std::int32_t TextIndex::lcp_of_ranks(std::int32_t r1, std::int32_t r2) const noexcept {
    if (r1 > r2) std::swap(r1, r2);
    return core_->rmq.min(static_cast<std::size_t>(r1) + 1, static_cast<std::size_t>(r2));
}

std::int32_t TextIndex::suffix_lcp(std::int32_t a, std::int32_t b) const noexcept {
    return lcp_of_ranks(core_->rank[static_cast<std::size_t>(a)], core_->rank[static_cast<std::size_t>(b)]);
}

std::int32_t TextIndex::rev_fwd(std::int32_t p, std::int32_t q) const noexcept {
    if (p <= 0 || q > n_) return 0;
    return suffix_lcp(rev_start(p), fwd_start(q));
}

std::int32_t TextIndex::rev_rev(std::int32_t p, std::int32_t q) const noexcept {
    if (p <= 0 || q <= 0) return 0;
    if (p == q) return p;
    return suffix_lcp(rev_start(p), rev_start(q));
}

std::int32_t TextIndex::fwd_fwd(std::int32_t p, std::int32_t q) const noexcept {
    if (p > n_ || q > n_) return 0;
    if (p == q) return n_ - p + 1;
    return suffix_lcp(fwd_start(p), fwd_start(q));
}

std::int32_t TextIndex::right_lce(std::int32_t i, std::int32_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw std::out_of_range("right_lce: positions must lie in [1, " + std::to_string(n_) + "]");
    }
    return fwd_fwd(i, j);
}

std::int32_t TextIndex::left_lce(std::int32_t i, std::int32_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw std::out_of_range("left_lce: positions must lie in [1, " + std::to_string(n_) + "]");
    }
    return rev_rev(i, j);
}

std::int32_t TextIndex::out_lce(std::int32_t i, std::int32_t j) const {
    if (i < 1 || j > n_ || i >= j) {
        throw std::out_of_range("out_lce: requires 1 <= i < j <= " + std::to_string(n_));
    }
    return rev_fwd(i, j);
}

std::size_t TextIndex::cell_count() const noexcept {
    // text bytes count as a quarter cell each
    if (mirrored_) return text_.size() / 4;
    return text_.size() / 4 + core_->combined.size() + core_->sa.size() + core_->rank.size() + core_->rmq.cell_count();
}

}  // namespace elspal
