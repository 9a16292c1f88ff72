#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

enum class errc {
  parse_error,
  io_error,
  unsupported_order,
  too_many_squares,
  infeasible_degree_sequence,
  parameter_constraint,
  unknown_fixture,
  cap_exceeded,
  enumeration_infeasible,
  pattern_space_too_large,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lrc
