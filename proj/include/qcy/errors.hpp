#ifndef QCY_ERRORS_HPP
#define QCY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcy {

/// Malformed textual input. `position` is the byte offset of the offending
/// character in the input string.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class closure_cap_exceeded : public std::runtime_error {
public:
    explicit closure_cap_exceeded(std::size_t cap)
        : std::runtime_error("group closure exceeded cap of " + std::to_string(cap)) {}
};

class non_integer_entry : public std::runtime_error {
public:
    explicit non_integer_entry(const std::string& msg) : std::runtime_error(msg) {}
};

class not_eigenvector : public std::runtime_error {
public:
    explicit not_eigenvector(const std::string& msg) : std::runtime_error(msg) {}
};

class no_matching_character : public std::runtime_error {
public:
    explicit no_matching_character(const std::string& msg) : std::runtime_error(msg) {}
};

class catalog_mismatch : public std::runtime_error {
public:
    explicit catalog_mismatch(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qcy

#endif
