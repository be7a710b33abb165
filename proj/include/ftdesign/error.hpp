#pragma once

#include <stdexcept>
#include <string>

namespace ftd
{

/// Failure categories shared by the C++ core and the C API.
enum class ErrorCode
{
  invalid_argument = 1,
  parse_error = 2,
  not_a_design = 3,
  not_an_automorphism = 4,
  budget_exhausted = 5,
  io_error = 6,
  internal = 7,
};

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, std::string const &what)
  : std::runtime_error(what), _code(code)
  {}

  ErrorCode code() const noexcept
  { return _code; }

private:
  ErrorCode _code;
};

[[noreturn]] inline void fail(ErrorCode code, std::string const &what)
{ throw Error(code, what); }

} // namespace ftd
