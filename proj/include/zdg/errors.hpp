#ifndef ZDG_ERRORS_HPP
#define ZDG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdg {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument violates an operation's precondition.
class invalid_parameter : public error {
public:
    explicit invalid_parameter(const std::string& what) : error(what) {}
};

/// Malformed ring-spec text. Carries the byte offset of the first bad character.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Multiplicative inverse of zero requested.
class divide_by_zero : public error {
public:
    explicit divide_by_zero(const std::string& what) : error(what) {}
};

/// A configured enumeration budget would be exceeded.
class resource_limit : public error {
public:
    explicit resource_limit(const std::string& what) : error(what) {}
};

/// An internal consistency check failed; indicates a defect, not a user error.
class internal_error : public error {
public:
    explicit internal_error(const std::string& what) : error(what) {}
};

/// Output file could not be written.
class io_error : public error {
public:
    explicit io_error(const std::string& what) : error(what) {}
};

} // namespace zdg

#endif // ZDG_ERRORS_HPP
