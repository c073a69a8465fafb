#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace elspal {

struct QueryRecord {
    std::int32_t i = 0;
    std::int32_t j = 0;
    std::string x;
};

/// Parses "i<TAB>j<TAB>X"; X runs verbatim to the end of the line (a
/// trailing '\r' is dropped). A missing third field means X is empty.
/// Returns an error message on malformed input.
std::variant<QueryRecord, std::string> parse_query_line(std::string_view line);

/// Whole file as bytes, minus one trailing "\n" or "\r\n".
std::string read_text_file(const std::string& path);

/// Entry point of the elspal executable. Exit codes: 0 success, 1 a --check
/// mismatch or failed self-test, 2 usage or I/O errors.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace elspal
