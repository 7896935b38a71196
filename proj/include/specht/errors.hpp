#ifndef SPECHT_ERRORS_HPP
#define SPECHT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specht {

// Raised when a computed quantity contradicts an independent prediction
// (non-integer scalar product, rank != character-theoretic multiplicity, ...).
class consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a configurable cap (group element count, character table degree)
// would be exceeded.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse failure carrying the offending position in the input text.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& msg, std::size_t position)
        : std::invalid_argument(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace specht

#endif
