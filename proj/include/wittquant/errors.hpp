#pragma once

#include <stdexcept>
#include <string>

namespace wittquant {

/// Violated precondition on a public operation (mismatched moduli,
/// inverting a non-unit, insufficient valuation, ...).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Internal invariant failure.  Seeing this means a bug in the library,
/// not bad input; exact divisions in the Witt structure recursion throw
/// this instead of rounding.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Malformed textual input to one of the element grammars.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wittquant
