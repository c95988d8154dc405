#pragma once

#include <stdexcept>
#include <string>

namespace khovlab {

/// Resource guard tripped (enumeration too large, precision exhausted, ...).
/// The CLI maps this to exit code 3.
class guard_error : public std::runtime_error {
  public:
    explicit guard_error(const std::string &what) : std::runtime_error(what) {}
};

/// Operands live in different ambient dimensions.
class dimension_error : public std::invalid_argument {
  public:
    explicit dimension_error(const std::string &what)
        : std::invalid_argument(what) {}
};

/// Hull spec is not full-dimensional; its Ehrhart data is degenerate.
class degenerate_error : public std::invalid_argument {
  public:
    explicit degenerate_error(const std::string &what)
        : std::invalid_argument(what) {}
};

} // namespace khovlab
