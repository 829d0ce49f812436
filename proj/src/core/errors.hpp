#pragma once

#include <stdexcept>
#include <string>

namespace haarmom {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

/// Resource limits for the exhaustive code paths.
struct Budget {
    int max_n = 8;                       // half-degree guard for monomials
    long direct_pairs = 4'000'000;       // stabilizer pair enumeration cap
    long gram_lists = 8'000'000;         // index-list contraction cap
    long parabolic_threshold = 1 << 14;  // below this, summation is done pairwise
};

}  // namespace haarmom
