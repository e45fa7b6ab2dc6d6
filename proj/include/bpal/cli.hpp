#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bpal/block_palindrome.hpp"
#include "bpal/text.hpp"

namespace bpal::cli {

/// Entry point behind the binary: factorize | enumerate | count | selftest |
/// bench. Returns the process exit code (0 ok, 1 verification failure,
/// 2 usage error).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// One selftest unit: fast paths against the oracles on a single text.
/// Writes a diagnostic with both outputs to diag on the first mismatch.
bool selftest_check_text(const Text& text, std::ostream& diag);

/// Item-by-item report comparison used by the selftest.
bool reports_match(const MbpReport& actual, const MbpReport& expected);

}  // namespace bpal::cli
