#pragma once

#include <stdexcept>
#include <string>

namespace pegraph {

enum class ErrorKind {
  invalid_parameter,
  not_nilpotent,
  parse_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void invalid_parameter(const std::string& what) {
  throw Error(ErrorKind::invalid_parameter, what);
}

}  // namespace pegraph
