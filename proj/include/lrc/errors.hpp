#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

/// A solver or oracle refused because its configured budget would be exceeded.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Schema or syntax error in an input file, with a positional hint.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lrc
