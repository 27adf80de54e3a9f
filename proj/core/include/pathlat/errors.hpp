#ifndef PATHLAT_ERRORS_HPP
#define PATHLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pathlat {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidUnitsError : Error {
  explicit InvalidUnitsError(const std::string& what) : Error(what) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

struct CapExceededError : Error {
  explicit CapExceededError(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

struct CausticError : Error {
  explicit CausticError(const std::string& what) : Error(what) {}
};

}  // namespace pathlat

#endif
