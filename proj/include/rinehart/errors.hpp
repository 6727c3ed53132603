#ifndef RINEHART_ERRORS_HPP
#define RINEHART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rinehart {

/// Bad input or violated precondition. The CLI maps this to exit code 2.
class user_error : public std::runtime_error {
public:
    explicit user_error(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant. The CLI maps this to exit code 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace rinehart

#endif
