#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "../brute.hpp"
#include "elspal/suffix_array.hpp"
#include "elspal/text_index.hpp"

using elspal::TextIndex;

namespace {

std::int32_t naive_right(std::string_view t, std::int32_t i, std::int32_t j) {
    return brute::lcp(t.substr(static_cast<std::size_t>(i - 1)), t.substr(static_cast<std::size_t>(j - 1)));
}
std::int32_t naive_left(std::string_view t, std::int32_t i, std::int32_t j) {
    return brute::lcp(brute::rev_prefix(t, i), brute::rev_prefix(t, j));
}
std::int32_t naive_out(std::string_view t, std::int32_t i, std::int32_t j) {
    return brute::lcp(brute::rev_prefix(t, i), t.substr(static_cast<std::size_t>(j - 1)));
}

std::string random_text(std::mt19937_64& rng, std::int32_t n, int sigma) {
    std::string s;
    for (std::int32_t k = 0; k < n; ++k) s += static_cast<char>('a' + static_cast<int>(rng() % static_cast<unsigned>(sigma)));
    return s;
}

void check_all_pairs(const TextIndex& idx, std::string_view t) {
    const auto n = static_cast<std::int32_t>(t.size());
    for (std::int32_t i = 1; i <= n; ++i) {
        for (std::int32_t j = 1; j <= n; ++j) {
            REQUIRE(idx.right_lce(i, j) == naive_right(t, i, j));
            REQUIRE(idx.left_lce(i, j) == naive_left(t, i, j));
            if (i < j) REQUIRE(idx.out_lce(i, j) == naive_out(t, i, j));
        }
    }
    for (std::int32_t p = 0; p <= n; ++p) {
        for (std::int32_t q = 0; q <= n; ++q) {
            const auto fwd_q = t.substr(static_cast<std::size_t>(std::min(q, n)));
            REQUIRE(idx.rev_fwd(p, q + 1) == brute::lcp(brute::rev_prefix(t, p), fwd_q));
            REQUIRE(idx.rev_rev(p, q) == brute::lcp(brute::rev_prefix(t, p), brute::rev_prefix(t, q)));
            REQUIRE(idx.fwd_fwd(p + 1, q + 1) == brute::lcp(t.substr(static_cast<std::size_t>(p)), fwd_q));
        }
    }
}

}  // namespace

TEST_CASE("worked LCE values") {
    const TextIndex idx("abaab");
    CHECK(idx.right_lce(1, 4) == 2);
    CHECK(idx.right_lce(2, 2) == 4);
    CHECK(idx.right_lce(1, 2) == 0);
    CHECK(idx.left_lce(5, 2) == 2);  // "baaba" vs "ba"
    CHECK(idx.left_lce(3, 3) == 3);
    CHECK(idx.out_lce(3, 4) == 2);
    CHECK(idx.out_lce(2, 4) == 0);

    CHECK(TextIndex("aaaa").left_lce(2, 4) == 2);
    CHECK(TextIndex("aa").out_lce(1, 2) == 1);
}

TEST_CASE("suffix array and LCP array match sorting") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const auto n = static_cast<std::int32_t>(1 + rng() % 40);
        const auto t = random_text(rng, n, 1 + static_cast<int>(rng() % 3));
        std::vector<std::int32_t> s(t.begin(), t.end());
        for (auto& c : s) c -= 'a' - 1;
        const auto sa = elspal::build_suffix_array(s, 4);
        const auto lcp = elspal::build_lcp_array(s, sa);
        REQUIRE(sa.size() == t.size());
        for (std::size_t r = 1; r < sa.size(); ++r) {
            const auto a = std::string_view(t).substr(static_cast<std::size_t>(sa[r - 1]));
            const auto b = std::string_view(t).substr(static_cast<std::size_t>(sa[r]));
            REQUIRE(a < b);
            REQUIRE(lcp[r] == brute::lcp(a, b));
        }
        CHECK(lcp[0] == 0);
    }
}

TEST_CASE("every LCE variant matches the naive definition") {
    std::mt19937_64 rng(11);
    for (const char* t : {"a", "ab", "aaaa", "abaab", "abcabcab", "accbaaabaaabaaab"}) check_all_pairs(TextIndex(t), t);
    for (int round = 0; round < 60; ++round) {
        const auto t = random_text(rng, static_cast<std::int32_t>(1 + rng() % 30), 2);
        check_all_pairs(TextIndex(t), t);
    }
}

TEST_CASE("mirror answers LCE queries on the reversed text") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 60; ++round) {
        const auto t = random_text(rng, static_cast<std::int32_t>(1 + rng() % 30), 1 + static_cast<int>(rng() % 3));
        const TextIndex forward(t);
        const auto mirror = TextIndex::mirror_of(forward);
        CHECK(mirror.is_mirror());
        const auto r = brute::reversed(t);
        CHECK(mirror.text() == r);
        check_all_pairs(mirror, r);
    }
}

TEST_CASE("mirror owns only its text") {
    const TextIndex forward("abaababaab");
    const auto mirror = TextIndex::mirror_of(forward);
    CHECK(mirror.cell_count() < forward.cell_count());
    CHECK(mirror.sa().data() == forward.sa().data());
}
