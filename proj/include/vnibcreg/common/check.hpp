#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace vnibcreg {
namespace detail {

template <class... Args>
std::string str_cat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace detail

/// Error thrown by every contract violation in the library.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

}  // namespace vnibcreg

#define VNIB_CHECK(cond, ...)                                              \
  do {                                                                     \
    if (!(cond)) {                                                         \
      throw ::vnibcreg::Error(::vnibcreg::detail::str_cat(__VA_ARGS__));   \
    }                                                                      \
  } while (0)

#define VNIB_FAIL(...) \
  throw ::vnibcreg::Error(::vnibcreg::detail::str_cat(__VA_ARGS__))
