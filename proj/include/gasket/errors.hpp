#ifndef GASKET_ERRORS_HPP
#define GASKET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gasket {

// Requested size/depth exceeds a configured guard. CLI maps this to exit code 3.
class guard_error : public std::runtime_error {
  public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation detected an internal numeric inconsistency (singular orbit,
// failed exact identity, substitution violation). CLI maps this to exit code 4.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gasket

#endif
