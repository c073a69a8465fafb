#include "elspal/suites.hpp"

#include <algorithm>
#include <sstream>
#include <limits>
#include <stdexcept>

#include "elspal/oracle.hpp"

namespace elspal {

namespace {

std::string fibonacci_word(std::int32_t n) {
    std::string a = "b", b = "a";
    while (static_cast<std::int32_t>(b.size()) < n) {
        auto c = b + a;
        a = std::move(b);
        b = std::move(c);
    }
    b.resize(static_cast<std::size_t>(n));
    return b;
}

std::string random_palindrome(std::mt19937_64& rng, std::int32_t len, std::int32_t sigma) {
    std::string p(static_cast<std::size_t>(len), 'a');
    std::uniform_int_distribution<int> letter(0, sigma - 1);
    for (std::int32_t k = 0; k < (len + 1) / 2; ++k) {
        const auto c = static_cast<char>('a' + letter(rng));
        p[static_cast<std::size_t>(k)] = c;
        p[static_cast<std::size_t>(len - 1 - k)] = c;
    }
    return p;
}

// Edits that tend to create long matches against the text or its mirror
// image, so that j1 / j2 and the extension scans have work to do.
std::string make_block(std::string_view t, std::int32_t i, std::int32_t ell, std::mt19937_64& rng,
                       std::int32_t sigma) {
    const auto n = static_cast<std::int32_t>(t.size());
    std::uniform_int_distribution<int> letter(0, sigma - 1);
    std::uniform_int_distribution<int> mode_dist(0, 4);
    std::uniform_int_distribution<int> pct(0, 99);
    std::string x;
    x.reserve(static_cast<std::size_t>(ell));
    const auto mode = mode_dist(rng);
    for (std::int32_t k = 0; k < ell; ++k) {
        char c = static_cast<char>('a' + letter(rng));
        if (mode == 1) c = t[static_cast<std::size_t>((i - 1 + k) % n)];
        if (mode == 2) c = t[static_cast<std::size_t>(((i - 2 - k) % n + n) % n)];
        if (mode == 3 && pct(rng) < 90) c = t[static_cast<std::size_t>(((n - i - k) % n + n) % n)];
        if (mode == 4) c = t[static_cast<std::size_t>(std::abs((i - 1 + k) % n))];
        if (mode != 0 && pct(rng) < 3) c = static_cast<char>('a' + letter(rng));
        x.push_back(c);
    }
    if (mode == 4 && ell > 0) std::reverse(x.begin(), x.end());
    return x;
}

}  // namespace

TextFamily parse_family(std::string_view name) {
    if (name == "random") return TextFamily::random;
    if (name == "unary") return TextFamily::unary;
    if (name == "fib") return TextFamily::fib;
    if (name == "period4") return TextFamily::period4;
    if (name == "alternating") return TextFamily::alternating;
    if (name == "fig2") return TextFamily::fig2;
    throw std::invalid_argument("unknown text family: " + std::string(name));
}

std::string_view family_name(TextFamily family) noexcept {
    switch (family) {
        case TextFamily::random: return "random";
        case TextFamily::unary: return "unary";
        case TextFamily::fib: return "fib";
        case TextFamily::period4: return "period4";
        case TextFamily::alternating: return "alternating";
        case TextFamily::fig2: return "fig2";
    }
    return "random";
}

std::string make_text(TextFamily family, std::int32_t n, std::mt19937_64& rng, std::int32_t sigma, double noise) {
    if (n < 0) throw std::invalid_argument("text length must be non-negative");
    if (sigma < 1 || sigma > 26) throw std::invalid_argument("alphabet size must be in [1, 26]");
    std::uniform_int_distribution<int> letter(0, sigma - 1);
    std::string t;
    t.reserve(static_cast<std::size_t>(n));
    switch (family) {
        case TextFamily::random:
            for (std::int32_t k = 0; k < n; ++k) t.push_back(static_cast<char>('a' + letter(rng)));
            return t;
        case TextFamily::unary: t.assign(static_cast<std::size_t>(n), 'a'); break;
        case TextFamily::fib: t = fibonacci_word(n); break;
        case TextFamily::period4:
            for (std::int32_t k = 0; k < n; ++k) t.push_back("aaab"[k % 4]);
            break;
        case TextFamily::alternating:
            for (std::int32_t k = 0; k < n; ++k) t.push_back("ab"[k % 2]);
            break;
        case TextFamily::fig2: {
            // A short random head, then (u v)^k u with palindromic u and v.
            std::uniform_int_distribution<int> short_len(1, 3);
            const auto u = random_palindrome(rng, short_len(rng), std::max(sigma, 2));
            const auto v = random_palindrome(rng, short_len(rng), std::max(sigma, 2));
            std::uniform_int_distribution<int> head_len(0, 4);
            for (auto k = head_len(rng); k > 0; --k) t.push_back(static_cast<char>('a' + letter(rng)));
            while (static_cast<std::int32_t>(t.size()) < n) t += u + v;
            t.resize(static_cast<std::size_t>(n));
            break;
        }
    }
    if (noise > 0) {
        std::bernoulli_distribution flip(noise);
        for (auto& c : t) {
            if (flip(rng)) c = static_cast<char>('a' + letter(rng));
        }
    }
    return t;
}

std::int32_t ceil_log2(std::int64_t v) noexcept {
    std::int32_t r = 0;
    while ((std::int64_t{1} << r) < v) ++r;
    return r;
}

CounterCheck check_counters(const QueryStats& stats, std::int32_t ell) {
    CounterCheck c;
    c.match_bound = 3 * static_cast<std::int64_t>(ell) + 24;
    const auto shared = stats.normalize.matches + stats.block.matches;
    c.matches_end = shared + stats.end_side.matches;
    c.matches_begin = shared + stats.begin_side.matches;
    c.matches_total = shared + stats.end_side.matches + stats.begin_side.matches;
    c.lce = stats.total().lce;

    auto fail = [&c](const std::string& what, std::int64_t value, std::int64_t bound) {
        c.violations.push_back(what + " = " + std::to_string(value) + " > " + std::to_string(bound));
    };
    if (c.matches_end > c.match_bound) fail("matches (end side)", c.matches_end, c.match_bound);
    if (c.matches_begin > c.match_bound) fail("matches (begin side)", c.matches_begin, c.match_bound);
    if (c.lce > 48) fail("lce", c.lce, 48);

    auto side = [&](const char* name, const OpCounters& o, std::int32_t m, std::int32_t height) {
        const auto probe_bound = 4 * ceil_log2(m + 1) + 2 * ceil_log2(height + 1);
        if (o.probes > probe_bound) fail(std::string("probes (") + name + ")", o.probes, probe_bound);
        if (o.groups > 3) fail(std::string("groups (") + name + ")", o.groups, 3);
        if (o.extras > 2) fail(std::string("extras (") + name + ")", o.extras, 2);
    };
    side("end", stats.end_side, stats.end_m, stats.end_height);
    side("begin", stats.begin_side, stats.begin_m, stats.begin_height);
    return c;
}

void SuiteReport::merge(const SuiteReport& o) {
    texts += o.texts;
    queries += o.queries;
    mismatches += o.mismatches;
    paranoid_mismatches += o.paranoid_mismatches;
    witness_failures += o.witness_failures;
    counter_violations += o.counter_violations;
    fast_sides += o.fast_sides;
    max_total_matches_excess = std::max(max_total_matches_excess, o.max_total_matches_excess);
    max_lce = std::max(max_lce, o.max_lce);
    for (const auto& f : o.failures) {
        if (failures.size() < 10) failures.push_back(f);
    }
}

void check_query(const Elspal& engine, std::int32_t i, std::int32_t j, std::string_view x, const SuiteOptions& options,
                 SuiteReport& report) {
    ++report.queries;
    const auto edited = apply_edit(engine.text(), i, j, x);
    const auto want = naive_lspal(edited).length;

    QueryOptions q;
    q.witness = true;
    q.small_m = options.small_m;
    const auto got = engine.query(i, j, x, q);
    report.fast_sides += static_cast<int>(got.stats.end_fast) + static_cast<int>(got.stats.begin_fast);

    auto describe = [&](const std::string& what) {
        if (report.failures.size() >= options.max_failures) return;
        std::ostringstream os;
        os << what << ": T=\"" << (engine.size() <= 80 ? std::string(engine.text()) : std::string("<long>"))
           << "\" n=" << engine.size() << " i=" << i << " j=" << j << " X=\"" << x << "\"";
        report.failures.push_back(os.str());
    };

    if (got.length != want) {
        ++report.mismatches;
        describe("length " + std::to_string(got.length) + " != oracle " + std::to_string(want));
    }
    const auto& w = *got.witness;
    const bool witness_ok =
        w.length == got.length &&
        (w.length == 0 || (w.start >= 1 && w.start + w.length - 1 <= static_cast<std::int32_t>(edited.size()) &&
                           is_palindrome(std::string_view(edited).substr(static_cast<std::size_t>(w.start - 1),
                                                                         static_cast<std::size_t>(w.length)))));
    if (!witness_ok) {
        ++report.witness_failures;
        describe("bad witness start=" + std::to_string(w.start) + " length=" + std::to_string(w.length));
    }
    if (options.paranoid) {
        q.paranoid = true;
        q.witness = false;
        const auto slow = engine.query(i, j, x, q).length;
        if (slow != want) {
            ++report.paranoid_mismatches;
            describe("paranoid " + std::to_string(slow) + " != oracle " + std::to_string(want));
        }
    }
    if (options.counters) {
        const auto ell = static_cast<std::int32_t>(x.size());
        const auto c = check_counters(got.stats, ell);
        report.max_total_matches_excess = std::max(report.max_total_matches_excess, c.matches_total - c.match_bound);
        report.max_lce = std::max(report.max_lce, c.lce);
        if (!c.violations.empty()) {
            ++report.counter_violations;
            describe("counter bound: " + c.violations.front());
        }
    }
}

SuiteReport exhaustive_suite(std::int32_t max_n, std::int32_t max_ell, const SuiteOptions& options) {
    SuiteReport report;
    report.max_total_matches_excess = std::numeric_limits<std::int64_t>::min();
    std::vector<std::string> blocks{""};
    for (std::int32_t len = 1; len <= max_ell; ++len) {
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            std::string x;
            for (std::int32_t k = 0; k < len; ++k) x.push_back((bits >> k) & 1u ? 'b' : 'a');
            blocks.push_back(std::move(x));
        }
    }
    for (std::int32_t n = 1; n <= max_n; ++n) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::string t;
            for (std::int32_t k = 0; k < n; ++k) t.push_back((bits >> k) & 1u ? 'b' : 'a');
            const Elspal engine(t);
            ++report.texts;
            for (std::int32_t i = 1; i <= n + 1; ++i) {
                for (std::int32_t j = i - 1; j <= n; ++j) {
                    for (const auto& x : blocks) check_query(engine, i, j, x, options, report);
                }
            }
        }
    }
    return report;
}

SuiteReport random_suite(std::int64_t texts, std::int32_t queries_per_text, std::uint64_t seed, std::int32_t max_n,
                         std::int32_t max_ell, const SuiteOptions& options) {
    SuiteReport report;
    report.max_total_matches_excess = std::numeric_limits<std::int64_t>::min();
    std::mt19937_64 rng(seed);
    constexpr TextFamily families[] = {TextFamily::random,  TextFamily::random,      TextFamily::unary,
                                       TextFamily::fib,     TextFamily::alternating, TextFamily::period4,
                                       TextFamily::fig2};
    constexpr std::int32_t sigmas[] = {2, 3, 26};
    std::uniform_int_distribution<std::size_t> pick_family(0, std::size(families) - 1);
    std::uniform_int_distribution<std::size_t> pick_sigma(0, std::size(sigmas) - 1);
    std::uniform_int_distribution<std::int32_t> pick_n(1, max_n);
    std::uniform_int_distribution<std::int32_t> small_n(1, std::min(max_n, 64));
    std::uniform_int_distribution<int> pct(0, 99);
    for (std::int64_t c = 0; c < texts; ++c) {
        const auto family = families[pick_family(rng)];
        const auto sigma = sigmas[pick_sigma(rng)];
        const auto n = pct(rng) < 30 ? small_n(rng) : pick_n(rng);
        const double noise = (family != TextFamily::random && pct(rng) < 50) ? 0.01 : 0.0;
        const auto t = make_text(family, n, rng, family == TextFamily::random ? sigma : 2, noise);
        const Elspal engine(t);
        ++report.texts;
        for (std::int32_t q = 0; q < queries_per_text; ++q) {
            const auto i = std::uniform_int_distribution<std::int32_t>(1, n + 1)(rng);
            const auto j = std::uniform_int_distribution<std::int32_t>(i - 1, std::min(n, i - 1 + (pct(rng) < 70 ? 8 : n)))(rng);
            const auto ell = std::uniform_int_distribution<std::int32_t>(0, pct(rng) < 60 ? std::min(6, max_ell) : max_ell)(rng);
            const auto x = make_block(t, i, ell, rng, family == TextFamily::random ? sigma : 2);
            check_query(engine, i, j, x, options, report);
        }
    }
    return report;
}

}  // namespace elspal
