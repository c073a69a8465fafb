#include "elspal/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elspal/oracle.hpp"
#include "elspal/query_engine.hpp"
#include "elspal/suites.hpp"

namespace elspal {

namespace {

std::optional<std::int32_t> parse_int(std::string_view s) {
    std::int32_t v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
    return v;
}

struct QueryFlags {
    std::string text_path;
    std::string text_literal;
    std::string queries_path;
    bool from_stdin = false;
    bool witness = false;
    bool check = false;
    bool stats = false;
    bool paranoid = false;
    bool strict = false;
    unsigned threads = 0;
};

struct LineResult {
    std::size_t line = 0;
    std::string output;
    std::string error;
    std::string stats;
    bool mismatch = false;
};

int run_query(const QueryFlags& flags, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string text;
    if (!flags.text_path.empty()) {
        text = read_text_file(flags.text_path);
    } else {
        text = flags.text_literal;
    }
    if (text.empty()) {
        err << "error: the text must be non-empty\n";
        return 2;
    }

    std::vector<std::pair<std::size_t, std::string>> lines;
    auto slurp = [&lines](std::istream& s) {
        std::string line;
        std::size_t no = 0;
        while (std::getline(s, line)) {
            ++no;
            if (line.empty() || line == "\r") continue;
            lines.emplace_back(no, std::move(line));
        }
    };
    if (flags.from_stdin) {
        slurp(in);
    } else {
        std::ifstream f(flags.queries_path, std::ios::binary);
        if (!f) {
            err << "error: cannot read queries file " << flags.queries_path << "\n";
            return 2;
        }
        slurp(f);
    }

    const Elspal engine(text);
    QueryOptions options;
    options.witness = flags.witness;
    options.paranoid = flags.paranoid;

    std::vector<LineResult> results(lines.size());
    auto work = [&](std::size_t k) {
        auto& r = results[k];
        r.line = lines[k].first;
        auto parsed = parse_query_line(lines[k].second);
        if (auto* msg = std::get_if<std::string>(&parsed)) {
            r.error = *msg;
            return;
        }
        const auto& q = std::get<QueryRecord>(parsed);
        try {
            const auto a = engine.query(q.i, q.j, q.x, options);
            r.output = std::to_string(a.length);
            if (a.witness) r.output += "\t" + std::to_string(a.witness->start);
            if (flags.check) {
                const auto want = oracle_query(text, q.i, q.j, q.x).length;
                if (want != a.length) {
                    r.mismatch = true;
                    r.error = "check failed: got " + std::to_string(a.length) + ", oracle " + std::to_string(want);
                }
            }
            if (flags.stats) {
                const auto t = a.stats.total();
                const nlohmann::json j = {{"cmp", t.matches + t.mismatches},
                                          {"matches", t.matches},
                                          {"lce", t.lce},
                                          {"probes", t.probes},
                                          {"groups", t.groups}};
                r.stats = j.dump();
            }
        } catch (const std::exception& e) {
            r.error = e.what();
        }
    };

    // Workers take lines round-robin; output is written afterwards in input order.
    auto threads = flags.threads ? flags.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, lines.size() / 64)));
    if (threads <= 1) {
        for (std::size_t k = 0; k < lines.size(); ++k) work(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (auto k = next.fetch_add(1); k < lines.size(); k = next.fetch_add(1)) work(k);
            });
        }
    }

    bool failed_check = false;
    bool bad_line = false;
    for (const auto& r : results) {
        if (!r.output.empty() && !(r.mismatch && flags.strict)) out << r.output << "\n";
        if (!r.stats.empty()) err << r.stats << "\n";
        if (!r.error.empty()) {
            err << "line " << r.line << ": " << r.error << "\n";
            if (r.mismatch) {
                failed_check = true;
            } else {
                bad_line = true;
                if (flags.strict) return 2;
            }
        }
    }
    out.flush();
    if (failed_check) return 1;
    return bad_line && flags.strict ? 2 : 0;
}

void print_report(std::ostream& out, std::string_view name, const SuiteReport& r) {
    out << name << ": texts=" << r.texts << " queries=" << r.queries << " mismatches=" << r.mismatches
        << " paranoid_mismatches=" << r.paranoid_mismatches << " witness_failures=" << r.witness_failures
        << " counter_violations=" << r.counter_violations << " fast_sides=" << r.fast_sides << "\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
}

int run_selftest(std::int32_t max_n, std::int64_t random_cases, std::uint64_t seed, std::ostream& out) {
    const SuiteOptions options;
    const auto exhaustive = exhaustive_suite(max_n, 2, options);
    print_report(out, "exhaustive", exhaustive);
    const auto random = random_suite(random_cases, 5, seed, 2000, 64, options);
    print_report(out, "random", random);
    const bool ok = exhaustive.ok() && random.ok();
    out << (ok ? "selftest: PASS" : "selftest: FAIL") << "\n";
    return ok ? 0 : 1;
}

int run_bench(const std::string& family_name_arg, std::int32_t n, std::int32_t ell, std::int32_t reps,
              std::uint64_t seed, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    std::mt19937_64 rng(seed);
    const auto family = parse_family(family_name_arg);
    const auto text = make_text(family, n, rng, family == TextFamily::random ? 2 : 2);

    const auto t0 = clock::now();
    const Elspal engine(text);
    const auto build_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();

    out << "family,n,ell,rep,build_ns,query_ns,cells,length,cmp,matches,lce,probes,groups,extras,end_m,"
           "end_height,end_fast\n";
    std::uniform_int_distribution<std::int32_t> pos(1, n);
    std::uniform_int_distribution<int> letter(0, 1);
    for (std::int32_t r = 0; r < reps; ++r) {
        const auto i = pos(rng);
        const auto j = std::min(n, i + ell - 1);
        std::string x;
        for (std::int32_t k = 0; k < ell; ++k) x.push_back(static_cast<char>('a' + letter(rng)));
        const auto q0 = clock::now();
        const auto a = engine.query(i, j, x);
        const auto query_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - q0).count();
        const auto t = a.stats.total();
        out << family_name(family) << ',' << n << ',' << ell << ',' << r << ',' << build_ns << ',' << query_ns << ','
            << engine.cell_count() << ',' << a.length << ',' << t.matches + t.mismatches << ',' << t.matches << ','
            << t.lce << ',' << t.probes << ',' << t.groups << ',' << t.extras << ',' << a.stats.end_m << ','
            << a.stats.end_height << ',' << (a.stats.end_fast ? 1 : 0) << '\n';
    }
    return 0;
}

}  // namespace

std::variant<QueryRecord, std::string> parse_query_line(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto t1 = line.find('\t');
    if (t1 == std::string_view::npos) return std::string("expected i<TAB>j<TAB>X");
    const auto t2 = line.find('\t', t1 + 1);
    const auto i_str = line.substr(0, t1);
    const auto j_str = t2 == std::string_view::npos ? line.substr(t1 + 1) : line.substr(t1 + 1, t2 - t1 - 1);
    const auto i = parse_int(i_str);
    const auto j = parse_int(j_str);
    if (!i) return "invalid i: '" + std::string(i_str) + "'";
    if (!j) return "invalid j: '" + std::string(j_str) + "'";
    QueryRecord r{*i, *j, {}};
    if (t2 != std::string_view::npos) r.x = std::string(line.substr(t2 + 1));
    return r;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read text file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    auto s = ss.str();
    if (!s.empty() && s.back() == '\n') {
        s.pop_back();
        if (!s.empty() && s.back() == '\r') s.pop_back();
    }
    return s;
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Longest palindromic substring after a block edit"};
    app.require_subcommand(1);

    QueryFlags qf;
    auto* query = app.add_subcommand("query", "answer i<TAB>j<TAB>X edits of a text");
    auto* text_opt = query->add_option("--text", qf.text_path, "file holding the text (one trailing newline dropped)");
    auto* string_opt = query->add_option("--string", qf.text_literal, "the text given inline");
    text_opt->excludes(string_opt);
    auto* queries_opt = query->add_option("--queries", qf.queries_path, "TSV file of queries");
    auto* stdin_flag = query->add_flag("--stdin", qf.from_stdin, "read queries from standard input");
    queries_opt->excludes(stdin_flag);
    query->add_flag("--witness", qf.witness, "also print the 1-based start of a longest palindrome");
    query->add_flag("--check", qf.check, "compare every answer with the brute-force oracle");
    query->add_flag("--stats", qf.stats, "write per-query operation counts as JSON lines to stderr");
    query->add_flag("--paranoid", qf.paranoid, "evaluate every palindrome group");
    query->add_flag("--strict", qf.strict, "stop at the first malformed or invalid query");
    query->add_option("--threads", qf.threads, "worker threads (default: hardware concurrency)");

    std::int32_t max_n = 10;
    std::int64_t random_cases = 1000;
    std::uint64_t seed = 1;
    auto* selftest = app.add_subcommand("selftest", "exhaustive and randomized comparison with the oracle");
    selftest->add_option("--max-n", max_n, "longest text in the exhaustive suite")->check(CLI::Range(1, 16));
    selftest->add_option("--random-cases", random_cases, "texts in the randomized suite (5 edits each)")
        ->check(CLI::NonNegativeNumber);
    selftest->add_option("--seed", seed, "random seed");

    std::string family = "random";
    std::int32_t bench_n = 1 << 16, bench_ell = 8, reps = 100;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "CSV of per-query counters and timings");
    bench->add_option("--family", family, "unary|random|fib|period4")
        ->check(CLI::IsMember({"unary", "random", "fib", "period4", "alternating", "fig2"}));
    bench->add_option("--n", bench_n, "text length")->check(CLI::Range(1, 1 << 26));
    bench->add_option("--ell", bench_ell, "block length")->check(CLI::Range(0, 1 << 20));
    bench->add_option("--reps", reps, "queries")->check(CLI::NonNegativeNumber);
    bench->add_option("--seed", bench_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*query) {
            if (qf.text_path.empty() && !*string_opt) {
                err << "error: query needs --text or --string\n";
                return 2;
            }
            if (qf.queries_path.empty() && !qf.from_stdin) {
                err << "error: query needs --queries or --stdin\n";
                return 2;
            }
            return run_query(qf, in, out, err);
        }
        if (*selftest) return run_selftest(max_n, random_cases, seed, out);
        return run_bench(family, bench_n, bench_ell, reps, bench_seed, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace elspal
