#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "elspal/query_engine.hpp"

namespace elspal {

enum class TextFamily { random, unary, fib, period4, alternating, fig2 };

/// Parses "random", "unary", "fib", "period4", "alternating" or "fig2".
TextFamily parse_family(std::string_view name);
std::string_view family_name(TextFamily family) noexcept;

/// Text of length n from the family; `sigma` is the alphabet size for random
/// text, `noise` the per-character chance of a random letter for the others.
std::string make_text(TextFamily family, std::int32_t n, std::mt19937_64& rng, std::int32_t sigma = 2,
                      double noise = 0.0);

/// The string Y of the reference instance and its continuation Z.
inline constexpr std::string_view kFig2Y = "accbaaabaaabaaabaaabaaabaaabaa";
inline constexpr std::string_view kFig2Z = "abaaabaaabccc";

/// Per-query operation bounds. Matching comparisons are charged per side:
/// normalisation + block-centred window + that side's scan and find_w.
struct CounterCheck {
    std::int64_t matches_end = 0;
    std::int64_t matches_begin = 0;
    std::int64_t matches_total = 0;
    std::int64_t lce = 0;
    std::int64_t match_bound = 0;  // 3 l + 24
    std::vector<std::string> violations;
};

CounterCheck check_counters(const QueryStats& stats, std::int32_t ell);

/// ceil(log2(v)) for v >= 1.
std::int32_t ceil_log2(std::int64_t v) noexcept;

struct SuiteReport {
    std::int64_t texts = 0;
    std::int64_t queries = 0;
    std::int64_t mismatches = 0;           // fast path vs oracle
    std::int64_t paranoid_mismatches = 0;  // paranoid path vs oracle
    std::int64_t witness_failures = 0;
    std::int64_t counter_violations = 0;
    std::int64_t fast_sides = 0;           // sides that took find_w / find_g_k
    std::int64_t max_total_matches_excess = 0;  // max over queries of both-sides matches - (3 l + 24)
    std::int64_t max_lce = 0;
    std::vector<std::string> failures;     // first few, human readable

    bool ok() const noexcept {
        return mismatches == 0 && paranoid_mismatches == 0 && witness_failures == 0 && counter_violations == 0;
    }
    void merge(const SuiteReport& o);
};

struct SuiteOptions {
    bool paranoid = true;  // also run the paranoid path
    bool counters = true;  // check per-query operation bounds
    std::int32_t small_m = QueryOptions{}.small_m;
    std::size_t max_failures = 10;
};

/// Checks one query against the oracle (and optionally the paranoid path).
void check_query(const Elspal& engine, std::int32_t i, std::int32_t j, std::string_view x, const SuiteOptions& options,
                 SuiteReport& report);

/// Every binary text with 1 <= n <= max_n, every interval including
/// insertions, every X over {a, b} with |X| <= max_ell.
SuiteReport exhaustive_suite(std::int32_t max_n, std::int32_t max_ell, const SuiteOptions& options);

/// `texts` random or structured texts of length up to max_n with
/// `queries_per_text` edits each, |X| <= max_ell.
SuiteReport random_suite(std::int64_t texts, std::int32_t queries_per_text, std::uint64_t seed, std::int32_t max_n,
                         std::int32_t max_ell, const SuiteOptions& options);

}  // namespace elspal
