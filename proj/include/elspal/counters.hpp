#pragma once

#include <cstdint>
#include <string_view>

namespace elspal {

/// Operation counts accumulated by one part of a query.
struct OpCounters {
    std::int64_t matches = 0;     // matching naive character comparisons
    std::int64_t mismatches = 0;  // failing naive character comparisons
    std::int64_t lce = 0;         // LCE queries on the original text
    std::int64_t probes = 0;      // binary-search probes (find_w and tree path)
    std::int64_t groups = 0;      // palindrome groups evaluated
    std::int64_t extras = 0;      // single extra members evaluated (u v u, u)

    OpCounters& operator+=(const OpCounters& o) noexcept {
        matches += o.matches;
        mismatches += o.mismatches;
        lce += o.lce;
        probes += o.probes;
        groups += o.groups;
        extras += o.extras;
        return *this;
    }
};

/// A virtual string `block` followed by T[tail..n] of some text T (tail may
/// be n + 1, meaning no tail). Used for the edited suffix Z; never materialised.
struct SplicedSuffix {
    std::string_view block;
    std::int32_t tail = 1;
};

}  // namespace elspal
