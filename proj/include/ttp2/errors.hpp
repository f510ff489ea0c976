#ifndef TTP2_ERRORS_HPP
#define TTP2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ttp2 {

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct unsupported_size_error : std::runtime_error {
  explicit unsupported_size_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a cross-checked internal identity fails (test hook; should never
// fire on a correct build).
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace ttp2

#endif  // TTP2_ERRORS_HPP
