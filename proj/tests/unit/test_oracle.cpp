#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "elspal/oracle.hpp"

TEST_CASE("known answers") {
    CHECK(elspal::naive_lspal("abaab").length == 4);
    CHECK(elspal::naive_lspal("abaab").start == 2);
    CHECK(elspal::naive_lspal("aaaa").length == 4);
    CHECK(elspal::naive_lspal("").length == 0);
    CHECK(elspal::naive_lspal("").start == 0);
    CHECK(elspal::naive_lspal("abc").length == 1);
    CHECK(elspal::quadratic_lspal("abaab") == 4);
}

TEST_CASE("edits") {
    CHECK(elspal::apply_edit("abaab", 3, 3, "") == "abab");
    CHECK(elspal::apply_edit("abaab", 3, 2, "xy") == "abxyaab");
    CHECK(elspal::apply_edit("aaaa", 5, 4, "a") == "aaaaa");
    CHECK_THROWS_AS(elspal::apply_edit("abc", 3, 4, ""), std::out_of_range);
    CHECK_THROWS_AS(elspal::apply_edit("abc", 3, 1, ""), std::out_of_range);
    CHECK(elspal::oracle_query("abaab", 3, 3, "bb").length == 5);
}

TEST_CASE("Manacher equals quadratic expansion on every binary text up to 12") {
    for (int n = 0; n <= 12; ++n) {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::string t;
            for (int k = 0; k < n; ++k) t += (mask >> k & 1) ? 'b' : 'a';
            const auto a = elspal::naive_lspal(t);
            REQUIRE(a.length == elspal::quadratic_lspal(t));
            if (n > 0) {
                REQUIRE(elspal::is_palindrome(std::string_view(t).substr(static_cast<std::size_t>(a.start - 1),
                                                                          static_cast<std::size_t>(a.length))));
            }
        }
    }
}

TEST_CASE("palindrome predicate") {
    CHECK(elspal::is_palindrome(""));
    CHECK(elspal::is_palindrome("abba"));
    CHECK_FALSE(elspal::is_palindrome("ab"));
}
